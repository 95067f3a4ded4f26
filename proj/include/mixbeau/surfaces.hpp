#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "mixbeau/beauville.hpp"

namespace mixbeau {

/// Raised when 1 - sum 1/ord_i <= 0; the invariants are then meaningless.
class DegenerateSignature : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct SurfaceInvariants {
  std::size_t order_h = 0;
  std::array<std::uint64_t, 3> orders{};  // ord t0, ord t1, ord t0 t1
  std::uint64_t nu = 0;                   // product of the three orders
  std::int64_t genus = 0;                 // g(C_T)
  std::int64_t euler = 0;                 // e(S)
  std::int64_t chi = 0;                   // chi(S)
  std::int64_t k_squared = 0;             // K_S^2
};

/// Riemann-Hurwitz genus and the Zeuthen-Segre Euler number in exact
/// arithmetic. Both expressions for e(S) are evaluated and must agree, and
/// every invariant must be an integer; otherwise std::logic_error.
SurfaceInvariants invariants_from_orders(std::size_t order_h, const std::array<std::uint64_t, 3>& orders);

/// Orders computed in H_k. Requires condition (A).
SurfaceInvariants invariants(const BeauvilleTriple& u);

}  // namespace mixbeau
