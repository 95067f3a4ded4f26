#include "mixbeau/cli.hpp"

#include <chrono>
#include <cstdio>
#include <sstream>

#include "mixbeau/kernels.hpp"
#include "mixbeau/report.hpp"
#include "mixbeau/surfaces.hpp"

namespace mixbeau::cli {

using nlohmann::json;

std::optional<Format> parse_format(std::string_view s) {
  if (s == "text") return Format::text;
  if (s == "json") return Format::json;
  if (s == "csv") return Format::csv;
  return std::nullopt;
}

bool is_power_of_two(int k) { return k > 0 && (k & (k - 1)) == 0; }

namespace {

int last_k(const RunConfig& cfg) { return cfg.k_max.value_or(cfg.k); }

void apply_threads(const RunConfig& cfg) { kernels::set_thread_count(cfg.threads); }

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string subscript(int n) {
  static const char* digits[] = {"₀", "₁", "₂", "₃", "₄", "₅", "₆", "₇", "₈", "₉"};
  std::string s;
  for (char c : std::to_string(n)) s += digits[c - '0'];
  return s;
}

std::optional<std::string> name_as_power(const GroupElement& w, int k) {
  const auto sys = spherical_systems(make_generators(k));
  for (const char* name : {"x", "x0", "x1", "y", "y0", "y1"}) {
    const GroupElement& g = sys.by_name(name);
    GroupElement p = g;
    for (std::uint64_t n = 1; !p.is_identity(); ++n, p = elem_mul(p, g))
      if (p == w) return std::string(name) + "^" + std::to_string(n);
  }
  return std::nullopt;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

BeauvilleReport verify(int k, const RunConfig& cfg) {
  if (k < 2) throw std::invalid_argument("verify needs k >= 2");
  apply_threads(cfg);
  const auto t0 = std::chrono::steady_clock::now();
  BeauvilleReport r;
  r.k = k;
  r.power_of_two = is_power_of_two(k);
  const BeauvilleTriple u = standard_triple(k, cfg.budget, cfg.cache_dir);
  r.order_g = u.g->order();
  r.order_h = u.h->order();
  r.condition_a = check_a(u);
  r.condition_b = check_b(u, make_generators(k).x[2]);
  if (r.condition_b.witness) r.witness_power = name_as_power(*r.condition_b.witness, k);
  if (cfg.bprime) r.condition_b_prime = check_b_prime(u);
  r.condition_c = check_c(u);
  const bool c_ok = r.condition_c.holds && r.condition_c.squares_vanish_one && r.condition_c.leading_disjoint;
  r.as_predicted = (r.condition_a && r.condition_b.holds && c_ok) ||
                   (r.power_of_two && r.condition_a && !r.condition_b.holds && c_ok);
  if (r.condition_b_prime && r.condition_b_prime->holds != r.condition_b.holds) r.as_predicted = false;
  if (cfg.timings)
    r.elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

json report_to_json(const BeauvilleReport& r) {
  json j;
  j["k"] = r.k;
  j["power_of_two"] = r.power_of_two;
  j["order_G"] = r.order_g;
  j["order_H"] = r.order_h;
  j["conditionA"] = r.condition_a;
  json b;
  b["verdict"] = r.condition_b.holds;
  b["g0"] = format_element(r.condition_b.g0);
  if (r.condition_b.witness) {
    b["witness"] = format_element(*r.condition_b.witness);
    b["witness_pair"] = r.condition_b.witness_pair;
    b["witness_power"] = r.witness_power ? json(*r.witness_power) : json(nullptr);
  }
  json pairs = json::object();
  for (const auto& p : r.condition_b.pairs) pairs[p.label] = p.size;
  b["intersection_sizes"] = pairs;
  j["conditionB"] = b;
  if (r.condition_b_prime) {
    const auto& s = r.condition_b_prime->sweep;
    j["conditionBprime"] = {{"verdict", r.condition_b_prime->holds}, {"checked", s.checked}, {"failing", s.failing}};
  }
  j["conditionC"] = r.condition_c.holds;
  j["conditionC_detail"] = {{"squares", r.condition_c.checked},
                            {"vanish_count_one", r.condition_c.squares_vanish_one},
                            {"leading_disjoint", r.condition_c.leading_disjoint}};
  j["as_predicted"] = r.as_predicted;
  j["elapsed"] = r.elapsed ? json(*r.elapsed) : json(nullptr);
  return j;
}

CommandResult cmd_verify(const RunConfig& cfg) {
  std::ostringstream os;
  json all = json::array();
  bool ok = true;
  if (cfg.format == Format::csv) os << "k,order_G,order_H,A,B,C,witness,as_predicted\n";
  for (int k = cfg.k; k <= last_k(cfg); ++k) {
    const auto r = verify(k, cfg);
    ok = ok && r.as_predicted;
    const std::string wit = r.condition_b.witness ? format_element(*r.condition_b.witness) : "";
    switch (cfg.format) {
      case Format::json: all.push_back(report_to_json(r)); break;
      case Format::csv:
        os << k << "," << r.order_g << "," << r.order_h << "," << r.condition_a << "," << r.condition_b.holds << ","
           << r.condition_c.holds << ",\"" << wit << "\"," << r.as_predicted << "\n";
        break;
      case Format::text: {
        os << "# mixed structure check u_k = (G_k, H_k, (x0, x1))\n";
        os << "k = " << k << (r.power_of_two ? " (a power of 2: (B) expected to fail)" : "") << "\n";
        os << "  |G_k| = " << r.order_g << ", |H_k| = " << r.order_h << "\n";
        os << "  (A)  x0, x1 generate H_k: " << yes_no(r.condition_a) << "\n";
        os << "  (B)  g0 = x2: " << (r.condition_b.holds ? "holds" : "fails");
        if (r.condition_b.witness)
          os << ", witness " << (r.witness_power ? *r.witness_power + " = " : "") << wit << " in Sigma("
             << r.condition_b.witness_pair << ") pair";
        os << "\n";
        if (r.condition_b_prime)
          os << "  (B') all g in G\\H: " << (r.condition_b_prime->holds ? "holds" : "fails") << " ("
             << r.condition_b_prime->sweep.failing << " of " << r.condition_b_prime->sweep.checked
             << " fail)\n";
        os << "  (C)  no square of G\\H in Sigma(T): " << (r.condition_c.holds ? "holds" : "fails") << " ("
           << r.condition_c.checked << " squares, vanish count 1: " << yes_no(r.condition_c.squares_vanish_one)
           << ", leading diagonals disjoint: " << yes_no(r.condition_c.leading_disjoint) << ")\n";
        os << "  verdict: "
           << (r.condition_a && r.condition_b.holds && r.condition_c.holds ? "mixed Beauville structure"
                                                                           : "not a mixed Beauville structure")
           << (r.as_predicted ? " (as predicted)" : " (UNEXPECTED)") << "\n";
        if (r.elapsed) {
          char buf[64];
          std::snprintf(buf, sizeof buf, "  elapsed: %.3f s\n", *r.elapsed);
          os << buf;
        }
        break;
      }
    }
  }
  if (cfg.format == Format::json) os << dump(cfg.k_max ? all : all[0]);
  return {os.str(), ok ? 0 : 1};
}

CommandResult cmd_orders(const RunConfig& cfg) {
  apply_threads(cfg);
  const auto rows = group_order_ladder(cfg.k, last_k(cfg), cfg.budget);
  std::ostringstream os;
  auto log2 = [](std::size_t n) { return std::bit_width(n) - 1; };
  switch (cfg.format) {
    case Format::json: {
      json j = json::array();
      for (const auto& r : rows) j.push_back({{"k", r.k}, {"order", r.order}, {"log2_order", log2(r.order)}, {"ratio", *r.ratio}});
      os << dump(j);
      break;
    }
    case Format::csv:
      os << "k,order,log2_order,ratio\n";
      for (const auto& r : rows) os << r.k << "," << r.order << "," << log2(r.order) << "," << *r.ratio << "\n";
      break;
    case Format::text:
      os << "# order ladder of G_k: |G_k| and |G_{k+1}|/|G_k|\n";
      os << "k\t|G_k|\tlog2\tratio\n";
      for (const auto& r : rows) os << r.k << "\t" << r.order << "\t" << log2(r.order) << "\t" << *r.ratio << "\n";
      break;
  }
  return {os.str(), 0};
}

CommandResult cmd_powers(const RunConfig& cfg) {
  std::vector<std::string> gens;
  if (cfg.gen == "all") gens = {"x0", "x1", "x", "y0", "y1", "y"};
  else gens = {cfg.gen};
  std::ostringstream os;
  json all = json::array();
  if (cfg.format == Format::csv) os << "gen,k,n,t,identity,vanish,lead,second,form\n";
  for (int k = cfg.k; k <= last_k(cfg); ++k)
    for (const auto& g : gens) {
      const auto rep = verify_power_forms(g, k);
      if (cfg.format == Format::text)
        os << "# power forms of " << g << " at k = " << k << " (order " << rep.order << ")\n"
           << "n\tt(n)\tform\tl\tleading\tsecond\n";
      for (const auto& r : rep.rows) {
        const std::string form = r.matched ? regime_name(*r.matched) : "identity";
        const std::string second = r.identity ? "" : (r.second_survives ? format_triple(r.second) : "(truncated)");
        const std::string lead = r.identity ? "" : format_triple(r.lead);
        switch (cfg.format) {
          case Format::text:
            os << r.n << "\t" << r.t << "\t" << form << "\t" << (r.identity ? "-" : std::to_string(r.vanish)) << "\t"
               << lead << "\t" << second << "\n";
            break;
          case Format::csv:
            os << g << "," << k << "," << r.n << "," << r.t << "," << r.identity << "," << r.vanish << ",\"" << lead
               << "\",\"" << second << "\"," << form << "\n";
            break;
          case Format::json:
            all.push_back({{"gen", g}, {"k", k}, {"n", r.n}, {"t", r.t}, {"identity", r.identity},
                           {"vanish", r.vanish}, {"lead", r.identity ? json(nullptr) : triple_to_json(r.lead)},
                           {"second", r.identity || !r.second_survives ? json(nullptr) : triple_to_json(r.second)},
                           {"form", form}});
            break;
        }
      }
    }
  if (cfg.format == Format::json) os << dump(all);
  return {os.str(), 0};
}

CommandResult cmd_schemes(const RunConfig& cfg) {
  std::vector<std::string> families;
  if (cfg.pair == "all") families = {"x", "x0", "x1"};
  else if (cfg.pair == "x,y") families = {"x"};
  else if (cfg.pair == "x0,y0") families = {"x0"};
  else if (cfg.pair == "x1,y1") families = {"x1"};
  else throw std::invalid_argument("--pair must be x,y | x0,y0 | x1,y1 | all");
  std::vector<Regime> regimes;
  if (cfg.regime == "all") regimes = {Regime::base, Regime::cube, Regime::odd, Regime::even};
  else if (auto r = parse_regime(cfg.regime)) regimes = {*r};
  else throw std::invalid_argument("--regime must be base | cube | odd | even | all");

  std::ostringstream os;
  json all = json::array();
  bool ok = true;
  for (const auto& f : families)
    for (Regime r : regimes) {
      const auto s = standard_scheme(f, r);
      ok = ok && s.closed && s.involutive;
      if (cfg.format == Format::json) {
        all.push_back(scheme_to_json(s));
      } else {
        os << "# conjugation scheme of second diagonals\n" << scheme_to_text(s) << "\n";
      }
    }
  if (cfg.format == Format::json) os << dump(all);
  return {os.str(), ok ? 0 : 1};
}

CommandResult cmd_surface(const RunConfig& cfg) {
  std::ostringstream os;
  json all = json::array();
  const char* header = "k,order_G,order_H,ord_x0,ord_x1,ord_x,nu,genus,euler,chi,K2";
  if (cfg.format == Format::csv) os << header << "\n";
  if (cfg.format == Format::text) os << "# surface invariants of u_k\n" << header << "\n";
  apply_threads(cfg);
  for (int k = cfg.k; k <= last_k(cfg); ++k) {
    const auto u = standard_triple(k, cfg.budget, cfg.cache_dir);
    const auto s = invariants(u);
    if (cfg.format == Format::json) {
      all.push_back({{"k", k}, {"order_G", u.g->order()}, {"order_H", u.h->order()}, {"ord_x0", s.orders[0]},
                     {"ord_x1", s.orders[1]}, {"ord_x", s.orders[2]}, {"nu", s.nu}, {"genus", s.genus},
                     {"euler", s.euler}, {"chi", s.chi}, {"K2", s.k_squared}});
    } else {
      os << k << "," << u.g->order() << "," << u.h->order() << "," << s.orders[0] << "," << s.orders[1] << ","
         << s.orders[2] << "," << s.nu << "," << s.genus << "," << s.euler << "," << s.chi << "," << s.k_squared
         << "\n";
    }
  }
  if (cfg.format == Format::json) os << dump(all);
  return {os.str(), 0};
}

CommandResult cmd_homcheck(const RunConfig& cfg) {
  apply_threads(cfg);
  std::ostringstream os;
  json all = json::array();
  bool ok = true;
  for (int k = cfg.k; k <= last_k(cfg); ++k) {
    if (cfg.psi) {
      const auto u = standard_triple(k, cfg.budget, cfg.cache_dir);
      const auto images = reality_automorphism_images(k);
      const auto hv = check_hom_extends(*u.g, images);
      const bool automorphism = hv.homomorphism && hv.bijective;
      bool iota_eq = false, back = false;
      if (automorphism) {
        const auto iu = transform(u, TransformKind::iota);
        const auto su = transform(u, TransformKind::sigma_psi, images);
        iota_eq = same_triple(iu, su);
        back = same_triple(transform(iu, TransformKind::sigma_psi, images), u);
      }
      const bool real = automorphism && iota_eq && back;
      ok = ok && real;
      const std::string u_k = "u" + subscript(k);
      if (cfg.format == Format::json) {
        all.push_back({{"k", k}, {"automorphism", automorphism}, {"iota_equals_sigma_psi", iota_eq},
                       {"sigma_psi_iota_is_identity", back}, {"real", real}});
      } else {
        os << "# reality automorphism x0 -> x0^-1, x1 -> x1^-1, x2 -> x0^-1 x2 x0 of G_k, k = " << k << "\n";
        os << "automorphism: " << yes_no(automorphism) << "; ι(" << u_k << ")=σ_ψ(" << u_k
           << "): " << yes_no(iota_eq) << "; S(" << u_k << ") " << (real ? "real" : "reality not established")
           << "\n";
      }
    } else {
      const auto h = enumerate_h(k, cfg.budget);
      bool none = true;
      json rows = json::array();
      if (cfg.format != Format::json)
        os << "# endomorphisms of H_k from the six image pairs, k = " << k << " (|H_k| = " << h->order() << ")\n";
      for (const auto& p : forbidden_image_pairs(k)) {
        const auto hv = check_hom_extends(*h, std::array{p.image0, p.image1});
        none = none && !hv.homomorphism;
        if (cfg.format == Format::json) {
          rows.push_back({{"pair", p.label}, {"homomorphism", hv.homomorphism}, {"bijective", hv.bijective}});
        } else {
          os << p.label << ": homomorphism " << yes_no(hv.homomorphism) << "\n";
        }
      }
      ok = ok && none;
      if (cfg.format == Format::json) all.push_back({{"k", k}, {"order_H", h->order()}, {"pairs", rows}, {"none_extends", none}});
      else os << "none extends: " << yes_no(none) << "\n";
    }
  }
  if (cfg.format == Format::json) os << dump(all);
  return {os.str(), ok ? 0 : 1};
}

CommandResult cmd_sigma(const RunConfig& cfg) {
  apply_threads(cfg);
  std::ostringstream os;
  json all = json::array();
  for (int k = cfg.k; k <= last_k(cfg); ++k) {
    const auto u = standard_triple(k, cfg.budget, cfg.cache_dir);
    const auto st = sigma_t(u.t0, u.t1, *u.h);
    const auto b = check_b(u, make_generators(k).x[2]);
    if (cfg.format == Format::json) {
      json pairs = json::object();
      for (const auto& p : b.pairs) pairs[p.label] = p.size;
      all.push_back({{"k", k}, {"sigma_x0", st.s0.size()}, {"sigma_x1", st.s1.size()}, {"sigma_x", st.sx.size()},
                     {"sigma_T", st.all.size()}, {"intersections", pairs}});
    } else {
      os << "# Sigma sets of T = (x0, x1) in H_k, k = " << k << "\n";
      os << "|Sigma(x0)| = " << st.s0.size() << ", |Sigma(x1)| = " << st.s1.size() << ", |Sigma(x)| = " << st.sx.size()
         << ", |Sigma(T)| = " << st.all.size() << "\n";
      os << "intersection sizes with x2-conjugates (identity included):";
      for (const auto& p : b.pairs) os << " " << p.label << "=" << p.size;
      os << "\n";
    }
  }
  if (cfg.format == Format::json) os << dump(all);
  return {os.str(), 0};
}

}  // namespace mixbeau::cli
