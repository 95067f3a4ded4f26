#include <random>

#include "doctest.h"
#include "mixbeau/band.hpp"
#include "support.hpp"

using namespace mixbeau;
using testsupport::random_element;

namespace {

// Diagonal d of a product straight from the block definition, without the
// library's raw kernel: sum over j of a_j(i) b_{d-j}(i+j), a_0 = b_0 = 1.
DiagTriple reference_product_diag(const GroupElement& a, const GroupElement& b, int d) {
  DiagTriple out;
  for (long i = 1; i <= 3; ++i) {
    F2Mat3 acc = mat_add(a.diag(d).block(i), b.diag(d).block(i));
    for (int j = 1; j < d; ++j) acc = mat_add(acc, mat_mul(a.diag(j).block(i), b.diag(d - j).block(i + j)));
    out.blocks[std::size_t(i - 1)] = acc;
  }
  return out;
}

}  // namespace

TEST_CASE("product matches the block-level definition") {
  std::mt19937_64 rng(1);
  for (int k = 1; k <= 10; ++k)
    for (int n = 0; n < 200; ++n) {
      const auto a = random_element(rng, k), b = random_element(rng, k);
      const auto c = a * b;
      for (int d = 1; d <= k; ++d) REQUIRE(c.diag(d) == reference_product_diag(a, b, d));
    }
}

TEST_CASE("group laws") {
  std::mt19937_64 rng(2);
  for (int k = 1; k <= 12; ++k)
    for (int n = 0; n < 300; ++n) {
      const auto a = random_element(rng, k), b = random_element(rng, k), c = random_element(rng, k);
      const auto e = elem_identity(k);
      REQUIRE((a * b) * c == a * (b * c));
      REQUIRE(a * e == a);
      REQUIRE(e * a == a);
      REQUIRE(a * elem_inv(a) == e);
      REQUIRE(elem_inv(a) * a == e);
      REQUIRE(elem_inv(a * b) == elem_inv(b) * elem_inv(a));
      REQUIRE(elem_pow(a, 5) == a * a * a * a * a);
      REQUIRE(elem_pow(a, 0) == e);
    }
}

TEST_CASE("truncation is a homomorphism") {
  std::mt19937_64 rng(3);
  for (int k = 2; k <= 12; ++k)
    for (int n = 0; n < 200; ++n) {
      const auto a = random_element(rng, k), b = random_element(rng, k);
      for (int kk = 1; kk < k; ++kk) {
        REQUIRE((a * b).truncated(kk) == a.truncated(kk) * b.truncated(kk));
        REQUIRE(elem_inv(a).truncated(kk) == elem_inv(a.truncated(kk)));
      }
    }
  CHECK_THROWS_AS(elem_identity(3).truncated(4), std::invalid_argument);
}

TEST_CASE("mismatched levels are rejected") {
  CHECK_THROWS_AS(elem_identity(3) * elem_identity(4), std::invalid_argument);
}

TEST_CASE("vanish count and identity") {
  std::mt19937_64 rng(4);
  CHECK(elem_identity(5).vanish_count() == 5);
  CHECK(elem_identity(5).is_identity());
  for (int l = 0; l < 6; ++l) CHECK(random_element(rng, 6, l).vanish_count() == l);
}

TEST_CASE("leading diagonals of a product add") {
  std::mt19937_64 rng(10);
  for (int k = 3; k <= 8; ++k)
    for (int n = 0; n < 1000; ++n) {
      std::uniform_int_distribution<int> dl(0, k - 1);
      int la = dl(rng), lb = dl(rng);
      if (lb < la) std::swap(la, lb);
      const auto a = random_element(rng, k, la), b = random_element(rng, k, lb);
      const auto pre = product_prefix_closed_form(a, b);
      REQUIRE(pre.size() == std::size_t(std::min(k, la + lb + 1) - la));
      const auto ab = a * b, ba = b * a;
      for (std::size_t i = 0; i < pre.size(); ++i) {
        const int d = la + 1 + int(i);
        REQUIRE(ab.diag(d) == pre[i]);
        REQUIRE(ba.diag(d) == pre[i]);
      }
      for (int d = 1; d <= la; ++d) REQUIRE(ab.diag(d).is_zero());
    }
}

TEST_CASE("the additive range of a product is sharp") {
  // The stated range la+1..la+lb+1 is sharp: diagonal la+lb+2 picks up a product term.
  std::mt19937_64 rng(11);
  int differ = 0;
  for (int n = 0; n < 200; ++n) {
    const auto a = random_element(rng, 8, 1), b = random_element(rng, 8, 2);
    if ((a * b).diag(5) != triple_add(a.diag(5), b.diag(5))) ++differ;
  }
  CHECK(differ > 0);
}

TEST_CASE("closed form of squares") {
  std::mt19937_64 rng(12);
  for (int k = 3; k <= 8; ++k)
    for (int n = 0; n < 1000; ++n) {
      std::uniform_int_distribution<int> dl(0, (k - 2) / 2);
      const int l = dl(rng);
      const auto a = random_element(rng, k, l);
      const auto s = square_closed_form(a);
      const auto sq = a * a;
      REQUIRE(s.vanish == 2 * l + 1);
      for (int d = 1; d <= std::min(k, 2 * l + 1); ++d) REQUIRE(sq.diag(d).is_zero());
      if (2 * l + 2 <= k) REQUIRE(sq.diag(2 * l + 2) == s.c1);
      if (2 * l + 3 <= k) REQUIRE(sq.diag(2 * l + 3) == s.c2);
    }
}

TEST_CASE("second diagonal under conjugation") {
  std::mt19937_64 rng(13);
  for (int k = 3; k <= 8; ++k)
    for (int n = 0; n < 1000; ++n) {
      std::uniform_int_distribution<int> dl(0, k - 2);
      const int l = dl(rng);
      const auto a = random_element(rng, k, l);
      const auto b = random_element(rng, k, 0);
      const auto c = elem_inv(b) * a * b;
      const auto f = conj_closed_form(a, b.diag(1));
      REQUIRE(c.vanish_count() == l);
      REQUIRE(c.diag(l + 1) == f.a1);
      REQUIRE(c.diag(l + 2) == f.c2);
    }
}

TEST_CASE("first two diagonals") {
  const auto g = GroupElement::from_diagonals(
      4, std::vector<DiagTriple>{DiagTriple{}, DiagTriple::of(1, 2, 3), DiagTriple::of(4, 5, 6)});
  const auto lp = first_two_diagonals(g);
  CHECK(lp.vanish == 1);
  CHECK(lp.lead == DiagTriple::of(1, 2, 3));
  CHECK(lp.second == DiagTriple::of(4, 5, 6));
  CHECK(lp.second_survives);
  const auto top = first_two_diagonals(g.truncated(2));
  CHECK_FALSE(top.second_survives);
  CHECK(top.second.is_zero());
  CHECK_THROWS(first_two_diagonals(elem_identity(3)));
}

TEST_CASE("text format") {
  const auto g = GroupElement::from_diagonals(
      3, std::vector<DiagTriple>{DiagTriple{}, DiagTriple::of(28, 235, 129), DiagTriple::of(1, 0, 511)});
  CHECK(format_element(g) == "M_1([28,235,129],[1,0,511])");
  CHECK(parse_element("M_1([28,235,129],[1,0,511])") == g);
  CHECK(parse_element(" M_1( [28, 235, 129] , [1,0,511] ) ") == g);
  CHECK(format_element(elem_identity(2)) == "M_0([0,0,0],[0,0,0])");
  CHECK(parse_element("M_0([0,0,0],[0,0,0])") == elem_identity(2));
  CHECK_THROWS(parse_element("M_1([1,2,512])"));
  CHECK_THROWS(parse_element("M_1([1,2])"));
  CHECK_THROWS(parse_element("X_1([1,2,3])"));
  CHECK_THROWS(parse_element("M_0([1,2,3]) trailing"));

  std::mt19937_64 rng(5);
  for (int n = 0; n < 500; ++n) {
    const int k = 1 + int(rng() % 10);
    const auto a = random_element(rng, k, int(rng() % std::uint64_t(k)));
    REQUIRE(parse_element(format_element(a)) == a);
  }
}

TEST_CASE("canonical bytes") {
  std::mt19937_64 rng(6);
  for (int n = 0; n < 500; ++n) {
    const int k = 1 + int(rng() % 12);
    const auto a = random_element(rng, k);
    const auto bytes = serialize(a);
    REQUIRE(bytes.size() == std::size_t(2 + 6 * k));
    REQUIRE(deserialize(bytes) == a);
    REQUIRE(canonical_hash(a) == canonical_hash(deserialize(bytes)));
  }
  const auto g = GroupElement::from_diagonals(1, std::vector<DiagTriple>{DiagTriple::of(1, 256, 511)});
  CHECK(serialize(g) == std::vector<std::uint8_t>{1, 0, 1, 0, 0, 1, 0xff, 1});
}

TEST_CASE("canonical order") {
  const auto a = GroupElement::from_diagonals(2, std::vector<DiagTriple>{DiagTriple::of(0, 0, 1)});
  const auto b = GroupElement::from_diagonals(2, std::vector<DiagTriple>{DiagTriple::of(0, 1, 0)});
  CHECK(elem_identity(2) < a);
  CHECK(a < b);
  CHECK(elem_identity(5) > b);
}
