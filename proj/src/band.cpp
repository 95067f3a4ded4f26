#include "mixbeau/band.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <stdexcept>

namespace mixbeau {

namespace {

void check_level(int k) {
  if (k < 1 || k > kMaxLevel)
    throw std::invalid_argument("truncation level must be in [1, " + std::to_string(kMaxLevel) +
                                "], got " + std::to_string(k));
}

F2Mat3 mul(F2Mat3 a, F2Mat3 b) { return mat_mul(a, b); }
F2Mat3 add(F2Mat3 a, F2Mat3 b) { return mat_add(a, b); }

}  // namespace

DiagTriple triple_add(const DiagTriple& a, const DiagTriple& b) {
  return DiagTriple{{add(a.blocks[0], b.blocks[0]), add(a.blocks[1], b.blocks[1]),
                     add(a.blocks[2], b.blocks[2])}};
}

std::string format_triple(const DiagTriple& t) {
  return "[" + std::to_string(t.blocks[0].bits()) + "," + std::to_string(t.blocks[1].bits()) + "," +
         std::to_string(t.blocks[2].bits()) + "]";
}

GroupElement GroupElement::identity(int k) {
  check_level(k);
  return GroupElement(k);
}

GroupElement GroupElement::from_diagonals(int k, std::span<const DiagTriple> diags) {
  GroupElement g = identity(k);
  const int n = std::min<int>(k, static_cast<int>(diags.size()));
  for (int j = 1; j <= n; ++j) g.set_diag(j, diags[std::size_t(j - 1)]);
  return g;
}

DiagTriple GroupElement::diag(int j) const {
  if (j < 1 || j > k_) throw std::out_of_range("diagonal index out of range");
  const std::size_t o = std::size_t(3 * (j - 1));
  return DiagTriple{{F2Mat3{raw_[o]}, F2Mat3{raw_[o + 1]}, F2Mat3{raw_[o + 2]}}};
}

void GroupElement::set_diag(int j, const DiagTriple& t) {
  if (j < 1 || j > k_) throw std::out_of_range("diagonal index out of range");
  const std::size_t o = std::size_t(3 * (j - 1));
  for (std::size_t p = 0; p < 3; ++p) raw_[o + p] = t.blocks[p].bits();
}

int GroupElement::vanish_count() const {
  for (int j = 0; j < k_; ++j)
    if (raw_[3 * j] | raw_[3 * j + 1] | raw_[3 * j + 2]) return j;
  return k_;
}

GroupElement GroupElement::truncated(int k) const {
  if (k > k_) throw std::invalid_argument("cannot truncate to a higher level");
  GroupElement g = identity(k);
  std::copy_n(raw_.begin(), 3 * k, g.raw_.begin());
  return g;
}

bool operator==(const GroupElement& a, const GroupElement& b) {
  return a.k_ == b.k_ && std::equal(a.raw_.begin(), a.raw_.begin() + 3 * a.k_, b.raw_.begin());
}

std::strong_ordering operator<=>(const GroupElement& a, const GroupElement& b) {
  if (auto c = a.k_ <=> b.k_; c != 0) return c;
  return std::lexicographical_compare_three_way(a.raw_.begin(), a.raw_.begin() + 3 * a.k_,
                                                b.raw_.begin(), b.raw_.begin() + 3 * b.k_);
}

GroupElement elem_identity(int k) { return GroupElement::identity(k); }

namespace detail {

void mul_raw(int k, const std::uint16_t* a, const std::uint16_t* b, std::uint16_t* out) {
  for (int d = 1; d <= k; ++d) {
    const int od = 3 * (d - 1);
    for (int p = 0; p < 3; ++p) {
      // j = 0 and j = d contribute the identity-block terms.
      std::uint16_t acc = a[od + p] ^ b[od + p];
      for (int j = 1; j < d; ++j) {
        const std::uint16_t aj = a[3 * (j - 1) + p];
        if (aj == 0) continue;
        const std::uint16_t bj = b[3 * (d - j - 1) + (p + j) % 3];
        if (bj == 0) continue;
        acc ^= raw_mul(aj, bj);
      }
      out[od + p] = acc;
    }
  }
}

}  // namespace detail

GroupElement elem_mul(const GroupElement& a, const GroupElement& b) {
  if (a.level() != b.level())
    throw std::invalid_argument("elem_mul: mismatched truncation levels " +
                                std::to_string(a.level()) + " and " + std::to_string(b.level()));
  GroupElement c = GroupElement::identity(a.level());
  detail::mul_raw(a.level(), a.raw().data(), b.raw().data(), c.raw_mut().data());
  return c;
}

GroupElement elem_inv(const GroupElement& a) {
  // a * b = 1 gives b_d(i) = sum_{j=1..d} a_j(i) b_{d-j}(i+j), b_0 = 1.
  const int k = a.level();
  GroupElement b = GroupElement::identity(k);
  auto ar = a.raw();
  auto br = b.raw_mut();
  for (int d = 1; d <= k; ++d) {
    for (int p = 0; p < 3; ++p) {
      std::uint16_t acc = ar[std::size_t(3 * (d - 1) + p)];
      for (int j = 1; j < d; ++j) {
        const std::uint16_t aj = ar[std::size_t(3 * (j - 1) + p)];
        if (aj == 0) continue;
        acc ^= raw_mul(aj, br[std::size_t(3 * (d - j - 1) + (p + j) % 3)]);
      }
      br[std::size_t(3 * (d - 1) + p)] = acc;
    }
  }
  return b;
}

GroupElement elem_pow(const GroupElement& a, std::uint64_t n) {
  GroupElement result = GroupElement::identity(a.level());
  GroupElement base = a;
  while (n) {
    if (n & 1u) result = elem_mul(result, base);
    n >>= 1;
    if (n) base = elem_mul(base, base);
  }
  return result;
}

GroupElement conjugate(const GroupElement& a, const GroupElement& by) {
  return elem_mul(elem_mul(by, a), elem_inv(by));
}

SquareForm square_closed_form(const GroupElement& a) {
  if (a.is_identity()) throw std::invalid_argument("square_closed_form: identity input");
  const int l = a.vanish_count();
  const DiagTriple a1 = a.diag(l + 1);
  const DiagTriple a2 = l + 2 <= a.level() ? a.diag(l + 2) : DiagTriple{};
  SquareForm s{2 * l + 1, {}, {}};
  for (long i = 1; i <= 3; ++i) {
    s.c1.blocks[std::size_t(i - 1)] = mul(a1.block(i), a1.block(l + i + 1));
    s.c2.blocks[std::size_t(i - 1)] =
        add(mul(a1.block(i), a2.block(l + i + 1)), mul(a2.block(i), a1.block(l + i + 2)));
  }
  return s;
}

DiagTriple conj_second_diagonal(const DiagTriple& a1, const DiagTriple& a2, const DiagTriple& b1,
                                int vanish) {
  DiagTriple c2;
  for (long i = 1; i <= 3; ++i)
    c2.blocks[std::size_t(i - 1)] =
        add(add(a2.block(i), mul(b1.block(i), a1.block(i + 1))), mul(a1.block(i), b1.block(vanish + i + 1)));
  return c2;
}

ConjForm conj_closed_form(const GroupElement& a, const DiagTriple& b1) {
  if (a.is_identity()) throw std::invalid_argument("conj_closed_form: identity input");
  const int l = a.vanish_count();
  const DiagTriple a1 = a.diag(l + 1);
  const DiagTriple a2 = l + 2 <= a.level() ? a.diag(l + 2) : DiagTriple{};
  return {a1, conj_second_diagonal(a1, a2, b1, l)};
}

std::vector<DiagTriple> product_prefix_closed_form(const GroupElement& a, const GroupElement& b) {
  if (a.level() != b.level()) throw std::invalid_argument("mismatched truncation levels");
  const int la = a.vanish_count();
  const int lb = b.vanish_count();
  if (lb < la) throw std::invalid_argument("product_prefix_closed_form: need vanish(b) >= vanish(a)");
  std::vector<DiagTriple> out;
  for (int d = la + 1; d <= std::min(a.level(), la + lb + 1); ++d)
    out.push_back(triple_add(a.diag(d), b.diag(d)));
  return out;
}

LeadingPair first_two_diagonals(const GroupElement& a) {
  if (a.is_identity()) throw std::invalid_argument("first_two_diagonals: identity input");
  const int l = a.vanish_count();
  LeadingPair r{l, a.diag(l + 1), {}, l + 2 <= a.level()};
  if (r.second_survives) r.second = a.diag(l + 2);
  return r;
}

std::string format_element(const GroupElement& g) {
  const int l = g.is_identity() ? 0 : g.vanish_count();
  std::string s = "M_" + std::to_string(l) + "(";
  for (int j = l + 1; j <= g.level(); ++j) {
    if (j > l + 1) s += ",";
    s += format_triple(g.diag(j));
  }
  return s + ")";
}

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view s) : s_(s) {}

  void skip_ws() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool peek(char c) {
    skip_ws();
    return i_ < s_.size() && s_[i_] == c;
  }
  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++i_;
  }
  unsigned number() {
    skip_ws();
    unsigned v = 0;
    auto [ptr, ec] = std::from_chars(s_.data() + i_, s_.data() + s_.size(), v);
    if (ec != std::errc{}) fail("expected a number");
    i_ = std::size_t(ptr - s_.data());
    return v;
  }
  bool at_end() {
    skip_ws();
    return i_ == s_.size();
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("parse_element: " + what + " at offset " + std::to_string(i_) +
                                " in \"" + std::string(s_) + "\"");
  }

 private:
  std::string_view s_;
  std::size_t i_ = 0;
};

}  // namespace

GroupElement parse_element(std::string_view text) {
  Cursor c(text);
  c.expect('M');
  c.expect('_');
  const unsigned l = c.number();
  c.expect('(');
  std::vector<DiagTriple> tail;
  if (!c.peek(')')) {
    do {
      c.expect('[');
      DiagTriple t;
      for (std::size_t p = 0; p < 3; ++p) {
        if (p) c.expect(',');
        const unsigned v = c.number();
        if (v > F2Mat3::kMask) c.fail("block value above 511");
        t.blocks[p] = F2Mat3{v};
      }
      c.expect(']');
      tail.push_back(t);
    } while (c.peek(',') && (c.expect(','), true));
  }
  c.expect(')');
  if (!c.at_end()) c.fail("trailing characters");
  const int k = static_cast<int>(l + tail.size());
  GroupElement g = GroupElement::identity(k);
  for (std::size_t i = 0; i < tail.size(); ++i) g.set_diag(static_cast<int>(l + i + 1), tail[i]);
  return g;
}

std::vector<std::uint8_t> serialize(const GroupElement& g) {
  std::vector<std::uint8_t> out;
  out.reserve(2 + 6 * std::size_t(g.level()));
  auto put16 = [&](unsigned v) {
    out.push_back(std::uint8_t(v & 0xff));
    out.push_back(std::uint8_t(v >> 8));
  };
  put16(unsigned(g.level()));
  for (auto b : g.raw()) put16(b);
  return out;
}

GroupElement deserialize(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 2) throw std::invalid_argument("deserialize: truncated header");
  auto get16 = [&](std::size_t at) { return unsigned(bytes[at]) | (unsigned(bytes[at + 1]) << 8); };
  const int k = int(get16(0));
  GroupElement g = GroupElement::identity(k);
  if (bytes.size() != 2 + 6 * std::size_t(k)) throw std::invalid_argument("deserialize: bad length");
  auto raw = g.raw_mut();
  for (std::size_t i = 0; i < raw.size(); ++i) {
    const unsigned v = get16(2 + 2 * i);
    if (v > F2Mat3::kMask) throw std::invalid_argument("deserialize: block value above 511");
    raw[i] = std::uint16_t(v);
  }
  return g;
}

std::uint64_t canonical_hash(const GroupElement& g) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (auto byte : serialize(g)) {
    h ^= byte;
    h *= 0x100000001b3ull;
  }
  return h;
}

}  // namespace mixbeau
