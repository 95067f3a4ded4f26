#pragma once

// Elements of the truncated band groups: upper unitriangular block matrices
// with 3x3 blocks over F_2, every upper diagonal periodic with period 3,
// truncated after the k-th upper diagonal.

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mixbeau/f2mat.hpp"

namespace mixbeau {

/// Largest supported truncation level.
inline constexpr int kMaxLevel = 32;

/// One upper diagonal: the three period-3 blocks [A_1, A_2, A_3].
struct DiagTriple {
  std::array<F2Mat3, 3> blocks{};

  static constexpr DiagTriple of(unsigned a, unsigned b, unsigned c) {
    return DiagTriple{{F2Mat3{a}, F2Mat3{b}, F2Mat3{c}}};
  }

  /// Block for row i (1-based, any integer); block(i) == block(i + 3).
  constexpr F2Mat3 block(long i) const {
    long r = (i - 1) % 3;
    if (r < 0) r += 3;
    return blocks[static_cast<std::size_t>(r)];
  }

  constexpr bool is_zero() const {
    return blocks[0].is_zero() && blocks[1].is_zero() && blocks[2].is_zero();
  }

  friend constexpr bool operator==(const DiagTriple&, const DiagTriple&) = default;
  friend constexpr auto operator<=>(const DiagTriple&, const DiagTriple&) = default;
};

DiagTriple triple_add(const DiagTriple& a, const DiagTriple& b);

/// "[A,B,C]"
std::string format_triple(const DiagTriple& t);

/// An element of G_k stored densely: k diagonals, zero-filled.
///
/// Diagonal j (1-based) at row phase p (0-based) is block 3(j-1)+p. The
/// entry at block row r, block column r+j is diag(j).block(r).
class GroupElement {
 public:
  GroupElement() = default;

  static GroupElement identity(int k);
  /// Missing diagonals are zero; diagonals beyond k are dropped.
  static GroupElement from_diagonals(int k, std::span<const DiagTriple> diags);

  int level() const { return k_; }
  DiagTriple diag(int j) const;
  void set_diag(int j, const DiagTriple& t);

  /// Number of leading all-zero diagonals; equals level() for the identity.
  int vanish_count() const;
  bool is_identity() const { return vanish_count() == k_; }

  /// Image in G_{k'} for k' <= k.
  GroupElement truncated(int k) const;

  std::span<const std::uint16_t> raw() const { return {raw_.data(), std::size_t(3 * k_)}; }
  std::span<std::uint16_t> raw_mut() { return {raw_.data(), std::size_t(3 * k_)}; }

  friend bool operator==(const GroupElement& a, const GroupElement& b);
  /// Canonical order: level, then diagonals lexicographically.
  friend std::strong_ordering operator<=>(const GroupElement& a, const GroupElement& b);

 private:
  explicit GroupElement(int k) : k_(k) {}

  int k_ = 0;
  std::array<std::uint16_t, 3 * kMaxLevel> raw_{};
};

GroupElement elem_identity(int k);

/// Generic band product: c_d(i) = sum_{j=0..d} a_j(i) b_{d-j}(i+j), a_0 = b_0 = 1.
GroupElement elem_mul(const GroupElement& a, const GroupElement& b);

/// Inverse, solved one diagonal at a time.
GroupElement elem_inv(const GroupElement& a);

GroupElement elem_pow(const GroupElement& a, std::uint64_t n);

/// by * a * by^{-1}
GroupElement conjugate(const GroupElement& a, const GroupElement& by);

inline GroupElement operator*(const GroupElement& a, const GroupElement& b) { return elem_mul(a, b); }

struct SquareForm {
  int vanish;
  DiagTriple c1;
  DiagTriple c2;
};

/// Closed form for the leading part of a^2: vanish count 2l+1 and
/// c1(i) = a1(i) a1(l+i+1), c2(i) = a1(i) a2(l+i+1) + a2(i) a1(l+i+2).
SquareForm square_closed_form(const GroupElement& a);

/// c2(i) = a2(i) + b1(i) a1(i+1) + a1(i) b1(l+i+1).
DiagTriple conj_second_diagonal(const DiagTriple& a1, const DiagTriple& a2, const DiagTriple& b1,
                                int vanish);

struct ConjForm {
  DiagTriple a1;
  DiagTriple c2;
};

/// Leading two diagonals of b^{-1} a b where b has first diagonal b1.
ConjForm conj_closed_form(const GroupElement& a, const DiagTriple& b1);

/// For a with vanish count la and b with vanish count lb >= la, both products
/// ab and ba agree with a + b on diagonals la+1 .. la+lb+1. Returns those
/// diagonals (clipped to the level).
std::vector<DiagTriple> product_prefix_closed_form(const GroupElement& a, const GroupElement& b);

struct LeadingPair {
  int vanish;
  DiagTriple lead;
  DiagTriple second;  // zero when it lies beyond the truncation
  bool second_survives;
};

LeadingPair first_two_diagonals(const GroupElement& a);

// Text and byte formats.

/// "M_l([A,B,C],...)" listing diagonals l+1..k; the identity prints as
/// M_0 with k zero triples.
std::string format_element(const GroupElement& g);
/// Inverse of format_element; the level is l plus the number of triples.
GroupElement parse_element(std::string_view text);

/// Canonical bytes: level as u16 LE, then 3k blocks as u16 LE.
std::vector<std::uint8_t> serialize(const GroupElement& g);
GroupElement deserialize(std::span<const std::uint8_t> bytes);
std::uint64_t canonical_hash(const GroupElement& g);

namespace detail {

/// out = a * b on raw block arrays of level k. out must not alias a or b.
void mul_raw(int k, const std::uint16_t* a, const std::uint16_t* b, std::uint16_t* out);

}  // namespace detail

}  // namespace mixbeau
