#pragma once

// Data-parallel kernels. Each has a serial reference that fixes the
// contract; the OpenMP variant must return identical results for any
// thread count.

#include <cstdint>
#include <map>
#include <optional>
#include <span>

#include "mixbeau/band.hpp"
#include "mixbeau/element_store.hpp"

namespace mixbeau::kernels {

/// Seeds `store` with the identity and closes it under left multiplication
/// by `mult`. Returns false if the store would grow past `budget`.
bool closure_serial(ElementStore& store, std::span<const GroupElement> mult, std::size_t budget);
bool closure_omp(ElementStore& store, std::span<const GroupElement> mult, std::size_t budget);

/// Per first-diagonal class of h: first diagonal of h*g0 and the vanish count
/// and leading diagonal of (h*g0)^2.
struct SquareClass {
  DiagTriple coset_first;
  int square_vanish = 0;
  DiagTriple square_lead;
  bool consistent = true;  // every h in the class gave the same data
  std::size_t count = 0;
  friend bool operator==(const SquareClass&, const SquareClass&) = default;
};

struct SquareSweep {
  std::size_t checked = 0;
  std::size_t squares_in_sigma = 0;
  /// Canonically smallest g = h*g0 whose square lies in the target set.
  std::optional<GroupElement> min_offender;
  std::map<DiagTriple, SquareClass> classes;
  friend bool operator==(const SquareSweep&, const SquareSweep&) = default;
};

/// Squares g = h*g0 for every h in `coset_base` and tests membership in `sigma`.
SquareSweep square_sweep_serial(const ElementStore& coset_base, const GroupElement& g0,
                                const ElementStore& sigma);
SquareSweep square_sweep_omp(const ElementStore& coset_base, const GroupElement& g0,
                             const ElementStore& sigma);

struct ConjugationSweep {
  std::size_t checked = 0;
  std::size_t failing = 0;
  /// Canonically smallest g with g S g^{-1} meeting S outside the identity.
  std::optional<GroupElement> min_failing;
  friend bool operator==(const ConjugationSweep&, const ConjugationSweep&) = default;
};

/// For every element g of `group` not in `exclude`, tests whether
/// g S g^{-1} and S share a non-identity element, S = `sigma`.
ConjugationSweep conjugation_sweep_serial(const ElementStore& group, const ElementStore& exclude,
                                          const ElementStore& sigma);
ConjugationSweep conjugation_sweep_omp(const ElementStore& group, const ElementStore& exclude,
                                       const ElementStore& sigma);

/// Threads used by the OpenMP kernels; 0 keeps the runtime default.
void set_thread_count(int n);
int thread_count();

}  // namespace mixbeau::kernels
