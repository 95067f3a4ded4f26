#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <stdexcept>

namespace mixbeau {

/// A 3x3 matrix over F_2 packed into 9 bits.
///
/// Entry u_ij (1-based) lives at bit 8 - (3(i-1) + (j-1)), so u_11 is the
/// most significant bit and row i occupies a 3-bit field whose high bit is
/// column 1. The zero matrix is 0 and the identity is 273.
class F2Mat3 {
 public:
  static constexpr std::uint16_t kMask = 0x1ff;

  constexpr F2Mat3() = default;
  constexpr explicit F2Mat3(unsigned bits) : bits_(static_cast<std::uint16_t>(bits)) {
    if (bits > kMask) throw std::out_of_range("F2Mat3: encoding must be in [0, 511]");
  }

  static constexpr F2Mat3 zero() { return F2Mat3{}; }
  static constexpr F2Mat3 identity() { return F2Mat3{273u}; }

  /// Builds from entries; row-major, entries taken mod 2.
  static constexpr F2Mat3 from_entries(const std::array<std::array<int, 3>, 3>& u) {
    unsigned bits = 0;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        if (u[i][j] & 1) bits |= 1u << (8 - (3 * i + j));
    return F2Mat3{bits};
  }

  constexpr std::array<std::array<int, 3>, 3> entries() const {
    std::array<std::array<int, 3>, 3> u{};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) u[i][j] = (bits_ >> (8 - (3 * i + j))) & 1;
    return u;
  }

  constexpr std::uint16_t bits() const { return bits_; }
  constexpr bool is_zero() const { return bits_ == 0; }

  /// Row i (0-based) as a 3-bit field, column 1 in the high bit.
  constexpr unsigned row(int i) const { return (bits_ >> (6 - 3 * i)) & 7u; }

  friend constexpr bool operator==(F2Mat3, F2Mat3) = default;
  friend constexpr auto operator<=>(F2Mat3, F2Mat3) = default;

 private:
  std::uint16_t bits_ = 0;
};

namespace detail {

// row_product[r][b] = (row vector r) * b, as a 3-bit row.
struct RowProductTable {
  std::array<std::array<std::uint8_t, 512>, 8> v{};
  constexpr RowProductTable() {
    for (unsigned r = 0; r < 8; ++r)
      for (unsigned b = 0; b < 512; ++b) {
        unsigned acc = 0;
        if (r & 4u) acc ^= (b >> 6) & 7u;
        if (r & 2u) acc ^= (b >> 3) & 7u;
        if (r & 1u) acc ^= b & 7u;
        v[r][b] = static_cast<std::uint8_t>(acc);
      }
  }
};

inline constexpr RowProductTable kRowProduct{};

}  // namespace detail

/// Entrywise sum over F_2.
constexpr F2Mat3 mat_add(F2Mat3 a, F2Mat3 b) { return F2Mat3{unsigned(a.bits() ^ b.bits())}; }

/// Product over F_2, three lookups in a 4 KiB row table.
constexpr F2Mat3 mat_mul(F2Mat3 a, F2Mat3 b) {
  const auto& t = detail::kRowProduct.v;
  const unsigned bb = b.bits();
  return F2Mat3{(unsigned(t[a.row(0)][bb]) << 6) | (unsigned(t[a.row(1)][bb]) << 3) |
                unsigned(t[a.row(2)][bb])};
}

// Raw 9-bit kernels used by the hot loops; no range checks.
inline std::uint16_t raw_mul(std::uint16_t a, std::uint16_t b) {
  const auto& t = detail::kRowProduct.v;
  return static_cast<std::uint16_t>((t[(a >> 6) & 7u][b] << 6) | (t[(a >> 3) & 7u][b] << 3) |
                                    t[a & 7u][b]);
}

}  // namespace mixbeau
