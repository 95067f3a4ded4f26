#include "mixbeau/beauville.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <sstream>

namespace mixbeau {

const GroupElement& SphericalSystems::by_name(std::string_view name) const {
  if (name == "x0") return x0;
  if (name == "x1") return x1;
  if (name == "x") return x;
  if (name == "y0") return y0;
  if (name == "y1") return y1;
  if (name == "y") return y;
  throw std::invalid_argument("unknown element name '" + std::string(name) +
                              "' (expected x0, x1, x, y0, y1 or y)");
}

SphericalSystems spherical_systems(const GeneratorSet& gens) {
  SphericalSystems s;
  s.x0 = gens.x[0];
  s.x1 = gens.x[1];
  s.x = elem_inv(elem_mul(s.x0, s.x1));
  const GroupElement& x2 = gens.x[2];
  s.y0 = conjugate(s.x0, x2);
  s.y1 = conjugate(s.x1, x2);
  s.y = elem_inv(elem_mul(s.y0, s.y1));
  return s;
}

BeauvilleTriple standard_triple(int k, std::size_t budget,
                                const std::optional<std::filesystem::path>& cache_dir) {
  const auto gens = make_generators(k);
  BeauvilleTriple u;
  u.k = k;
  u.g = cached_closure({{"x0", gens.x[0]}, {"x1", gens.x[1]}, {"x2", gens.x[2]}}, k, budget, cache_dir);
  u.h = cached_closure({{"x0", gens.x[0]}, {"x1", gens.x[1]}}, k, budget, cache_dir);
  u.t0 = gens.x[0];
  u.t1 = gens.x[1];
  return u;
}

namespace {

bool same_set(const EnumeratedGroup& a, const EnumeratedGroup& b) {
  if (a.order() != b.order() || a.level() != b.level()) return false;
  for (std::uint32_t i = 0; i < a.order(); ++i)
    if (!b.store().find_packed(a.store().key(i).data())) return false;
  return true;
}

ElementStore conjugated(const ElementStore& s, const GroupElement& by) {
  ElementStore out(s.level(), s.size());
  const GroupElement inv = elem_inv(by);
  for (std::uint32_t i = 0; i < s.size(); ++i) out.insert(elem_mul(elem_mul(by, s.element(i)), inv));
  return out;
}

}  // namespace

bool same_triple(const BeauvilleTriple& a, const BeauvilleTriple& b) {
  return a.k == b.k && a.t0 == b.t0 && a.t1 == b.t1 && same_set(*a.g, *b.g) && same_set(*a.h, *b.h);
}

GroupElement coset_representative(const BeauvilleTriple& u) {
  for (const auto& gen : u.g->generators())
    if (!u.h->contains(gen.value)) return gen.value;
  throw std::logic_error("coset_representative: every generator of G lies in H");
}

SigmaSet sigma(const GroupElement& x, const EnumeratedGroup& h) {
  if (!h.contains(x)) throw std::invalid_argument("sigma: " + format_element(x) + " is not in H");
  std::vector<GroupElement> conj;
  for (const auto& s : h.generators()) {
    conj.push_back(s.value);
    conj.push_back(elem_inv(s.value));
  }
  SigmaSet out{x, ElementStore(x.level())};
  std::deque<std::uint32_t> queue;
  GroupElement p = GroupElement::identity(x.level());
  do {
    if (auto [idx, fresh] = out.members.insert(p); fresh) queue.push_back(idx);
    p = elem_mul(p, x);
  } while (!p.is_identity());

  while (!queue.empty()) {
    const GroupElement m = out.members.element(queue.front());
    queue.pop_front();
    for (std::size_t i = 0; i < conj.size(); i += 2) {
      // s m s^{-1}, with the paired inverse at i + 1
      for (std::size_t j : {i, i + 1}) {
        const GroupElement c = elem_mul(elem_mul(conj[j], m), conj[j ^ 1]);
        if (auto [idx, fresh] = out.members.insert(c); fresh) queue.push_back(idx);
      }
    }
  }
  return out;
}

SigmaT sigma_t(const GroupElement& t0, const GroupElement& t1, const EnumeratedGroup& h) {
  SigmaT st{sigma(t0, h), sigma(t1, h), sigma(elem_inv(elem_mul(t0, t1)), h), ElementStore(t0.level())};
  for (const SigmaSet* s : {&st.s0, &st.s1, &st.sx})
    for (std::uint32_t i = 0; i < s->members.size(); ++i) st.all.insert_packed(s->members.key(i).data());
  return st;
}

std::vector<GroupElement> sorted_members(const ElementStore& s) {
  std::vector<GroupElement> out;
  out.reserve(s.size());
  for (std::uint32_t i = 0; i < s.size(); ++i) out.push_back(s.element(i));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<GroupElement> intersection(const ElementStore& a, const ElementStore& b) {
  const ElementStore& small = a.size() <= b.size() ? a : b;
  const ElementStore& large = a.size() <= b.size() ? b : a;
  std::vector<GroupElement> out;
  for (std::uint32_t i = 0; i < small.size(); ++i)
    if (large.find_packed(small.key(i).data())) out.push_back(small.element(i));
  std::sort(out.begin(), out.end());
  return out;
}

bool check_a(const BeauvilleTriple& u) {
  const auto sub = closure({{"t0", u.t0}, {"t1", u.t1}}, u.k, u.h->order() + 1);
  return sub->order() == u.h->order();
}

BVerdict check_b(const BeauvilleTriple& u, const GroupElement& g0) {
  if (!u.g->contains(g0)) throw std::invalid_argument("check_b: g0 is not in G");
  if (u.h->contains(g0)) throw std::invalid_argument("check_b: g0 must lie outside H");
  const SigmaT st = sigma_t(u.t0, u.t1, *u.h);
  const ElementStore c0 = conjugated(st.s0.members, g0);
  const ElementStore c1 = conjugated(st.s1.members, g0);
  const ElementStore cx = conjugated(st.sx.members, g0);

  struct Pair {
    const char* label;
    const ElementStore* lhs;
    const ElementStore* rhs;
  };
  const Pair pairs[] = {
      {"x,y", &st.sx.members, &cx},   {"x0,y0", &st.s0.members, &c0}, {"x1,y1", &st.s1.members, &c1},
      {"x0,y1", &st.s0.members, &c1}, {"x0,y", &st.s0.members, &cx},  {"x1,y0", &st.s1.members, &c0},
      {"x1,y", &st.s1.members, &cx},  {"x,y0", &st.sx.members, &c0},  {"x,y1", &st.sx.members, &c1},
  };

  BVerdict v;
  v.g0 = g0;
  v.holds = true;
  for (const auto& p : pairs) {
    const auto common = intersection(*p.lhs, *p.rhs);
    v.pairs.push_back({p.label, common.size()});
    if (common.size() > 1 && v.holds) {
      v.holds = false;
      v.witness_pair = p.label;
      for (const auto& e : common)
        if (!e.is_identity()) {
          v.witness = e;
          break;
        }
    }
  }
  return v;
}

BPrimeVerdict check_b_prime(const BeauvilleTriple& u, std::size_t work_budget, Backend backend) {
  const SigmaT st = sigma_t(u.t0, u.t1, *u.h);
  const std::size_t outside = u.g->order() - u.h->order();
  if (outside * st.all.size() > work_budget) throw BudgetExceeded(work_budget, u.k);
  BPrimeVerdict v;
  v.sweep = backend == Backend::serial
                ? kernels::conjugation_sweep_serial(u.g->store(), u.h->store(), st.all)
                : kernels::conjugation_sweep_omp(u.g->store(), u.h->store(), st.all);
  v.holds = v.sweep.failing == 0;
  return v;
}

std::array<DiagTriple, 4> expected_square_leads() {
  return {DiagTriple::of(41, 67, 222), DiagTriple::of(14, 147, 100), DiagTriple::of(20, 137, 126),
          DiagTriple::of(61, 202, 160)};
}

CVerdict check_c(const BeauvilleTriple& u, Backend backend) {
  if (u.k < 2) throw std::invalid_argument("check_c: needs k >= 2");
  const GroupElement g0 = coset_representative(u);
  const SigmaT st = sigma_t(u.t0, u.t1, *u.h);
  const auto sweep = backend == Backend::serial ? kernels::square_sweep_serial(u.h->store(), g0, st.all)
                                                : kernels::square_sweep_omp(u.h->store(), g0, st.all);
  CVerdict v;
  v.checked = sweep.checked;
  v.holds = sweep.squares_in_sigma == 0;
  v.offender = sweep.min_offender;
  for (std::uint32_t i = 0; i < st.all.size(); ++i) {
    const GroupElement m = st.all.element(i);
    if (m.vanish_count() == 1) v.sigma_leads_vanish_one.insert(m.diag(2));
  }
  v.squares_vanish_one = true;
  v.leading_disjoint = true;
  for (const auto& [h_first, cls] : sweep.classes) {
    v.table.push_back({h_first, cls.coset_first, cls.square_vanish, cls.square_lead, cls.consistent});
    v.squares_vanish_one = v.squares_vanish_one && cls.consistent && cls.square_vanish == 1;
    if (v.sigma_leads_vanish_one.count(cls.square_lead)) v.leading_disjoint = false;
  }
  return v;
}

// Conjugation schemes.

ConjScheme conj_scheme(const DiagTriple& a1, const std::array<DiagTriple, 2>& seeds, int vanish,
                       const DiagTriple& b_x0, const DiagTriple& b_x1) {
  auto by_x0 = [&](const DiagTriple& a2) { return conj_second_diagonal(a1, a2, b_x0, vanish); };
  auto by_x1 = [&](const DiagTriple& a2) { return conj_second_diagonal(a1, a2, b_x1, vanish); };

  ConjScheme s;
  s.a1 = a1;
  s.vanish = vanish;
  s.closed = true;
  s.involutive = true;
  for (int q = 0; q < 2; ++q) {
    auto& n = s.squares[std::size_t(q)].n;
    n[0] = seeds[std::size_t(q)];
    n[1] = by_x0(n[0]);
    n[2] = by_x1(n[0]);
    n[3] = by_x1(n[1]);
    s.closed = s.closed && by_x0(n[2]) == n[3];
    for (const auto& node : n)
      s.involutive = s.involutive && by_x0(by_x0(node)) == node && by_x1(by_x1(node)) == node;
    s.edges.push_back({q, 0, 1, "Conj(x0^±1)"});
    s.edges.push_back({q, 0, 2, "Conj(x1^±1)"});
    s.edges.push_back({q, 1, 3, "Conj(x1^±1)"});
    s.edges.push_back({q, 2, 3, "Conj(x0^±1)"});
  }
  return s;
}

const char* regime_name(Regime r) {
  switch (r) {
    case Regime::base: return "base";
    case Regime::cube: return "cube";
    case Regime::odd: return "odd";
    case Regime::even: return "even";
  }
  return "?";
}

std::optional<Regime> parse_regime(std::string_view s) {
  for (Regime r : {Regime::base, Regime::cube, Regime::odd, Regime::even})
    if (s == regime_name(r)) return r;
  return std::nullopt;
}

namespace {

// Seeds need diagonals up to 2^2 - 1 + 2 = 5.
constexpr int kSchemeLevel = 6;

std::uint64_t regime_exponent(Regime r) {
  switch (r) {
    case Regime::base: return 1;
    case Regime::cube: return 3;
    case Regime::odd: return 2;
    case Regime::even: return 4;
  }
  return 1;
}

std::string power_label(std::string_view g, Regime r) {
  const std::string s(g);
  switch (r) {
    case Regime::base: return s;
    case Regime::cube: return s + "^3";
    case Regime::odd: return s + "^(2^r), r odd";
    case Regime::even: return s + "^(2^r), r even";
  }
  return s;
}

}  // namespace

ConjScheme standard_scheme(std::string_view family, Regime regime) {
  const auto gens = make_generators(kSchemeLevel);
  const auto sys = spherical_systems(gens);
  std::string yname;
  if (family == "x") yname = "y";
  else if (family == "x0") yname = "y0";
  else if (family == "x1") yname = "y1";
  else throw std::invalid_argument("standard_scheme: family must be x, x0 or x1");

  const std::uint64_t t = regime_exponent(regime);
  const auto px = first_two_diagonals(elem_pow(sys.by_name(family), t));
  const auto py = first_two_diagonals(elem_pow(sys.by_name(yname), t));
  if (px.vanish != py.vanish || px.lead != py.lead)
    throw std::logic_error("standard_scheme: leading data of the pair differ");
  ConjScheme s = conj_scheme(px.lead, {px.second, py.second}, px.vanish, gens.x[0].diag(1), gens.x[1].diag(1));
  s.label = "(" + power_label(family, regime) + ", " + power_label(yname, regime) + ")";
  return s;
}

std::vector<ConjScheme> standard_schemes() {
  std::vector<ConjScheme> out;
  for (const char* f : {"x", "x0", "x1"})
    for (Regime r : {Regime::base, Regime::cube, Regime::odd, Regime::even}) out.push_back(standard_scheme(f, r));
  return out;
}

// Power forms.

std::uint64_t t_of(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("t_of: n must be positive");
  if (n & 1u) return n & 3u;
  return n & (~n + 1);
}

std::array<PowerForm, 4> printed_power_forms(std::string_view gen) {
  using T = DiagTriple;
  auto forms = [](T a1, T base2, T cube2, T odd1, T odd2, T even2) {
    return std::array<PowerForm, 4>{PowerForm{Regime::base, a1, base2}, PowerForm{Regime::cube, a1, cube2},
                                    PowerForm{Regime::odd, odd1, odd2}, PowerForm{Regime::even, a1, even2}};
  };
  const T ax = T::of(28, 235, 129), a0 = T::of(11, 11, 11), a1 = T::of(23, 224, 138);
  const T z{};
  if (gen == "x") return forms(ax, T::of(29, 211, 263), T::of(46, 138, 451), T::of(51, 89, 196), z, z);
  if (gen == "y")
    return forms(ax, T::of(58, 3, 445), T::of(9, 90, 377), T::of(51, 89, 196), T::of(0, 157, 106),
                 T::of(39, 208, 186));
  if (gen == "x0") return forms(a0, T::of(17, 17, 17), T::of(11, 11, 11), T::of(26, 26, 26), z, z);
  if (gen == "y0")
    return forms(a0, T::of(44, 219, 177), T::of(54, 193, 171), T::of(26, 26, 26), T::of(0, 157, 106),
                 T::of(61, 202, 160));
  if (gen == "x1") return forms(a1, T::of(59, 136, 495), T::of(28, 88, 341), T::of(39, 208, 186), z, z);
  if (gen == "y1")
    return forms(a1, T::of(33, 146, 501), T::of(6, 66, 335), T::of(39, 208, 186), T::of(0, 106, 247),
                 T::of(26, 26, 26));
  throw std::invalid_argument("printed_power_forms: unknown generator '" + std::string(gen) + "'");
}

namespace {

std::optional<Regime> regime_for_vanish(int l) {
  if (l == 0) return std::nullopt;
  const auto m = std::uint64_t(l) + 1;
  if (!std::has_single_bit(m)) return std::nullopt;
  const int r = std::countr_zero(m);
  return r % 2 ? Regime::odd : Regime::even;
}

Regime predicted_regime(std::uint64_t t) {
  if (t == 1) return Regime::base;
  if (t == 3) return Regime::cube;
  return std::countr_zero(t) % 2 ? Regime::odd : Regime::even;
}

}  // namespace

PowerReport verify_power_forms(std::string_view gen, int k) {
  const auto sys = spherical_systems(make_generators(k));
  const GroupElement g = sys.by_name(gen);
  const auto forms = printed_power_forms(gen);
  PowerReport rep;
  rep.gen = std::string(gen);
  rep.k = k;
  rep.order = element_order(g);

  auto fail = [&](std::uint64_t n, const std::string& why) {
    throw std::runtime_error("power form check failed for " + rep.gen + "^" + std::to_string(n) +
                             " at k = " + std::to_string(k) + ": " + why);
  };

  GroupElement p = GroupElement::identity(k);
  for (std::uint64_t n = 1; n <= rep.order; ++n) {
    p = elem_mul(p, g);
    PowerRow row{n, t_of(n), p.is_identity(), 0, {}, {}, false, std::nullopt};
    const Regime want = predicted_regime(row.t);
    const std::uint64_t want_vanish = row.t & 1u ? 0 : row.t - 1;
    const bool want_identity = want_vanish >= std::uint64_t(k);
    if (row.identity != want_identity)
      fail(n, row.identity ? "unexpected identity" : "expected identity since t(n) > k");
    if (!row.identity) {
      const auto lp = first_two_diagonals(p);
      row.vanish = lp.vanish;
      row.lead = lp.lead;
      row.second = lp.second;
      row.second_survives = lp.second_survives;
      int matches = 0;
      for (const auto& f : forms) {
        const bool vanish_ok = (f.regime == Regime::base || f.regime == Regime::cube)
                                   ? lp.vanish == 0
                                   : regime_for_vanish(lp.vanish) == f.regime;
        if (vanish_ok && lp.lead == f.lead && (!lp.second_survives || lp.second == f.second)) {
          ++matches;
          row.matched = f.regime;
        }
      }
      if (matches != 1) fail(n, "matched " + std::to_string(matches) + " printed forms");
      if (row.matched != want || std::uint64_t(lp.vanish) != want_vanish)
        fail(n, std::string("matched form ") + regime_name(*row.matched) + " at vanish count " +
                    std::to_string(lp.vanish) + " but t(n) predicts " + regime_name(want));
    }
    rep.rows.push_back(row);
  }
  return rep;
}

// Transformations.

BeauvilleTriple transform(const BeauvilleTriple& u, TransformKind kind, std::span<const GroupElement> psi_images) {
  BeauvilleTriple v = u;
  switch (kind) {
    case TransformKind::iota:
      v.t0 = elem_inv(u.t0);
      v.t1 = elem_inv(u.t1);
      break;
    case TransformKind::sigma3:
      v.t0 = u.t1;
      v.t1 = u.t0;
      break;
    case TransformKind::sigma4:
      v.t1 = elem_mul(elem_inv(u.t0), elem_inv(u.t1));
      break;
    case TransformKind::sigma_psi: {
      const HomVerdict hv = check_hom_extends(*u.g, psi_images);
      if (!hv.homomorphism || !hv.bijective)
        throw std::invalid_argument("transform: images do not define an automorphism of G");
      v.t0 = hv.apply(*u.g, u.t0);
      v.t1 = hv.apply(*u.g, u.t1);
      std::vector<LabeledElement> hgens;
      for (const auto& s : u.h->generators()) hgens.push_back({"psi(" + s.label + ")", hv.apply(*u.g, s.value)});
      v.h = closure(std::move(hgens), u.k, u.h->order());
      break;
    }
  }
  return v;
}

std::vector<GroupElement> reality_automorphism_images(int k) {
  const auto gens = make_generators(k);
  const GroupElement x0i = elem_inv(gens.x[0]);
  return {x0i, elem_inv(gens.x[1]), elem_mul(elem_mul(x0i, gens.x[2]), gens.x[0])};
}

std::vector<ImagePair> forbidden_image_pairs(int k) {
  const auto gens = make_generators(k);
  const GroupElement& x0 = gens.x[0];
  const GroupElement& x1 = gens.x[1];
  const GroupElement x0i = elem_inv(x0), x1i = elem_inv(x1), x1x0 = elem_mul(x1, x0);
  return {{"(x0^-1, x1^-1)", x0i, x1i}, {"(x1 x0, x0^-1)", x1x0, x0i}, {"(x1^-1, x1 x0)", x1i, x1x0},
          {"(x1^-1, x0^-1)", x1i, x0i}, {"(x0^-1, x1 x0)", x0i, x1x0}, {"(x1 x0, x1^-1)", x1x0, x1i}};
}

}  // namespace mixbeau
