#include <algorithm>
#include <set>

#include "doctest.h"
#include "mixbeau/beauville.hpp"
#include "printed_schemes.hpp"

using namespace mixbeau;

namespace {

std::set<GroupElement> brute_sigma(const GroupElement& x, const EnumeratedGroup& h) {
  std::set<GroupElement> out;
  const auto n = element_order(x);
  for (std::uint32_t i = 0; i < h.order(); ++i) {
    const auto g = h.element(i);
    for (std::uint64_t e = 0; e < n; ++e) out.insert(conjugate(elem_pow(x, e), g));
  }
  return out;
}

std::set<GroupElement> as_set(const ElementStore& s) {
  std::set<GroupElement> out;
  for (std::uint32_t i = 0; i < s.size(); ++i) out.insert(s.element(i));
  return out;
}

bool conditions_hold(const BeauvilleTriple& u) {
  return check_a(u) && check_b(u, coset_representative(u)).holds && check_c(u).holds;
}

}  // namespace

TEST_CASE("spherical systems") {
  const auto gs = make_generators(5);
  const auto s = spherical_systems(gs);
  CHECK(s.x0 * s.x1 * s.x == elem_identity(5));
  CHECK(s.y0 * s.y1 * s.y == elem_identity(5));
  CHECK(s.y0 == gs.x[2] * s.x0 * elem_inv(gs.x[2]));
  CHECK(s.y.diag(1) == DiagTriple::of(28, 235, 129));
  CHECK(s.y.diag(2) == DiagTriple::of(58, 3, 445));
  CHECK(&s.by_name("y1") == &s.y1);
  CHECK_THROWS(s.by_name("z"));
}

TEST_CASE("Sigma sets match the brute-force orbit at k = 3") {
  const auto u = standard_triple(3);
  const auto st = sigma_t(u.t0, u.t1, *u.h);
  CHECK(as_set(st.s0.members) == brute_sigma(u.t0, *u.h));
  CHECK(as_set(st.s1.members) == brute_sigma(u.t1, *u.h));
  CHECK(as_set(st.sx.members) == brute_sigma(elem_inv(u.t0 * u.t1), *u.h));
  CHECK(st.s0.size() == 19);
  CHECK(st.s1.size() == 19);
  CHECK(st.sx.size() == 19);
  CHECK(st.all.size() == 55);
}

TEST_CASE("Sigma sets are invariant under conjugation within H") {
  for (int k : {3, 4, 5}) {
    const auto u = standard_triple(k);
    const auto st = sigma_t(u.t0, u.t1, *u.h);
    for (const auto* s : {&st.s0, &st.s1, &st.sx})
      for (std::uint32_t i = 0; i < s->size(); ++i) {
        const auto m = s->members.element(i);
        for (const auto& g : u.h->generators()) {
          REQUIRE(s->contains(conjugate(m, g.value)));
          REQUIRE(s->contains(conjugate(m, elem_inv(g.value))));
        }
      }
  }
  const auto u = standard_triple(3);
  CHECK_THROWS_AS(sigma(make_generators(3).x[2], *u.h), std::invalid_argument);
}

TEST_CASE("condition (A)") {
  for (int k = 2; k <= 5; ++k) CHECK(check_a(standard_triple(k)));
  auto u = standard_triple(3);
  u.t1 = u.t0;
  CHECK_FALSE(check_a(u));
}

TEST_CASE("condition (B) at k = 3, 4, 5") {
  const auto b3 = check_b(standard_triple(3), make_generators(3).x[2]);
  CHECK(b3.holds);
  CHECK_FALSE(b3.witness);
  CHECK(b3.pairs.size() == 9);
  for (const auto& p : b3.pairs) CHECK(p.size == 1);

  const auto b4 = check_b(standard_triple(4), make_generators(4).x[2]);
  CHECK_FALSE(b4.holds);
  REQUIRE(b4.witness);
  const auto x = spherical_systems(make_generators(4)).x;
  CHECK(*b4.witness == elem_pow(x, 4));
  CHECK(*b4.witness == elem_pow(spherical_systems(make_generators(4)).y, 4));
  CHECK(format_element(*b4.witness) == "M_3([28,235,129])");
  CHECK(b4.witness_pair == "x,y");

  CHECK(check_b(standard_triple(5), make_generators(5).x[2]).holds);
  const auto u = standard_triple(3);
  CHECK_THROWS_AS(check_b(u, u.t0), std::invalid_argument);
}

TEST_CASE("(B) and (B') agree over every element outside H") {
  for (int k : {3, 4}) {
    const auto u = standard_triple(k);
    const auto bp = check_b_prime(u);
    const auto serial = check_b_prime(u, std::size_t{1} << 28, Backend::serial);
    CHECK(bp.sweep == serial.sweep);
    CHECK(bp.sweep.checked == u.g->order() - u.h->order());
    for (std::uint32_t i = 0; i < u.g->order(); ++i) {
      const auto g = u.g->element(i);
      if (u.h->contains(g)) continue;
      REQUIRE(check_b(u, g).holds == bp.holds);
    }
    CHECK(bp.holds == (k == 3));
  }
  CHECK_THROWS_AS(check_b_prime(standard_triple(4), 1000), BudgetExceeded);
}

TEST_CASE("condition (C) and the squares table") {
  const auto expected = expected_square_leads();
  const std::set<DiagTriple> want(expected.begin(), expected.end());
  for (int k = 2; k <= 6; ++k) {
    const auto u = standard_triple(k);
    const auto c = check_c(u);
    CHECK(c.holds);
    CHECK_FALSE(c.offender);
    CHECK(c.checked == u.h->order());
    if (k >= 3) {
      CHECK(c.squares_vanish_one);
      CHECK(c.leading_disjoint);
      REQUIRE(c.table.size() == 4);
      std::set<DiagTriple> got;
      for (const auto& r : c.table) {
        CHECK(r.consistent);
        CHECK(r.square_vanish == 1);
        got.insert(r.square_lead);
      }
      CHECK(got == want);
      for (const auto& t : want) CHECK(c.sigma_leads_vanish_one.count(t) == 0);
    }
  }
  const auto serial = check_c(standard_triple(4), Backend::serial);
  const auto par = check_c(standard_triple(4), Backend::parallel);
  CHECK(serial.checked == par.checked);
  CHECK(serial.table.size() == par.table.size());
  CHECK_THROWS(check_c(standard_triple(1)));
}

TEST_CASE("conjugation schemes reproduce the printed arrays") {
  for (const auto& p : testsupport::printed_schemes()) {
    CAPTURE(p.family);
    CAPTURE(regime_name(p.regime));
    const auto s = standard_scheme(p.family, p.regime);
    CHECK(s.closed);
    CHECK(s.involutive);
    for (int sq = 0; sq < 2; ++sq)
      for (int j = 0; j < 4; ++j) CHECK(s.squares[std::size_t(sq)].n[std::size_t(j)] == p.nodes[std::size_t(4 * sq + j)]);
  }
  CHECK(standard_schemes().size() == 12);
  CHECK_THROWS(standard_scheme("y", Regime::base));
}

TEST_CASE("scheme edges agree with conjugation in the group") {
  const int k = 8;
  const auto gs = make_generators(k);
  const auto sys = spherical_systems(gs);
  const std::pair<const char*, std::uint64_t> cases[] = {{"x", 1}, {"x", 3}, {"x", 2}, {"x", 4},
                                                         {"y0", 1}, {"y1", 3}, {"y1", 2}, {"y0", 4}};
  for (const auto& [name, t] : cases) {
    const auto a = elem_pow(sys.by_name(name), t);
    const auto l = a.vanish_count();
    for (int gi : {0, 1})
      for (const auto& b : {gs.x[gi], elem_inv(gs.x[gi])}) {
        const auto c = elem_inv(b) * a * b;
        REQUIRE(c.diag(l + 1) == a.diag(l + 1));
        REQUIRE(c.diag(l + 2) == conj_second_diagonal(a.diag(l + 1), a.diag(l + 2), b.diag(1), l));
      }
  }
}

TEST_CASE("t(n)") {
  CHECK(t_of(1) == 1);
  CHECK(t_of(3) == 3);
  CHECK(t_of(5) == 1);
  CHECK(t_of(7) == 3);
  CHECK(t_of(2) == 2);
  CHECK(t_of(12) == 4);
  CHECK(t_of(40) == 8);
  CHECK_THROWS(t_of(0));
}

TEST_CASE("power forms for every generator") {
  for (int k = 3; k <= 8; ++k)
    for (const char* g : {"x0", "x1", "x", "y0", "y1", "y"}) {
      CAPTURE(k);
      CAPTURE(g);
      PowerReport rep;
      REQUIRE_NOTHROW(rep = verify_power_forms(g, k));
      CHECK(rep.rows.size() == rep.order);
      CHECK(rep.rows.back().identity);
    }
  const auto x5 = verify_power_forms("x", 5);
  CHECK(x5.order == 8);
  CHECK(x5.rows[1].lead == DiagTriple::of(51, 89, 196));
  CHECK(x5.rows[1].second == DiagTriple{});
  CHECK(x5.rows[1].vanish == 1);
  CHECK(x5.rows[3].vanish == 3);
}

TEST_CASE("2-power exponents vanish to 2^r - 1, not 2^(r-2) + 1") {
  const auto x = spherical_systems(make_generators(16)).x;
  for (int r = 1; r <= 4; ++r) {
    const auto p = elem_pow(x, std::uint64_t{1} << r);
    CHECK(p.vanish_count() == (1 << r) - 1);
    if (r % 2 == 0) CHECK(p.vanish_count() != (1 << (r - 2)) + 1);
  }
}

TEST_CASE("transformations preserve the conditions") {
  const auto u = standard_triple(3);
  CHECK(conditions_hold(u));
  for (auto kind : {TransformKind::iota, TransformKind::sigma3, TransformKind::sigma4}) {
    const auto v = transform(u, kind);
    CHECK(conditions_hold(v));
  }
  const auto v = transform(u, TransformKind::sigma4);
  CHECK(v.t0 == u.t0);
  CHECK(v.t1 == elem_inv(u.t0) * elem_inv(u.t1));
}

TEST_CASE("reality automorphism at k = 3") {
  const auto u = standard_triple(3);
  const auto images = reality_automorphism_images(3);
  const auto s = transform(u, TransformKind::sigma_psi, images);
  const auto i = transform(u, TransformKind::iota);
  CHECK(same_triple(s, i));
  CHECK(s.t0 == elem_inv(u.t0));
  CHECK(s.t1 == elem_inv(u.t1));
  CHECK(conditions_hold(s));
  const auto gs = make_generators(3);
  const std::vector<GroupElement> bad(3, gs.x[0]);
  CHECK_THROWS_AS(transform(u, TransformKind::sigma_psi, bad), std::invalid_argument);
}
