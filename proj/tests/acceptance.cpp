// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "mixbeau/beauville.hpp"
#include "mixbeau/cli.hpp"
#include "mixbeau/surfaces.hpp"
#include "printed_schemes.hpp"
#include "support.hpp"

using namespace mixbeau;
using testsupport::random_element;

namespace {

struct Check {
  std::ostringstream notes;
  bool ok = true;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes << "\n    failed: " << what;
    }
  }
};

int failures = 0;

void run(int id, const char* title, const std::function<void(Check&)>& body) {
  Check c;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.ok = false;
    c.notes << "\n    exception: " << e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("%s  criterion %2d: %s (%.1f s)%s\n", c.ok ? "PASS" : "FAIL", id, title, secs, c.notes.str().c_str());
  std::fflush(stdout);
  if (!c.ok) ++failures;
}

std::string k_str(const char* what, int k) { return std::string(what) + " at k = " + std::to_string(k); }

}  // namespace

int main() {
  run(1, "|G_3| = 256 and |H_3| = 128 by closure in under a second", [](Check& c) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto g = enumerate_g(3);
    const auto h = enumerate_h(3);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    c.expect(g->order() == 256, "|G_3| = " + std::to_string(g->order()));
    c.expect(h->order() == 128, "|H_3| = " + std::to_string(h->order()));
    c.expect(secs < 1.0, "took " + std::to_string(secs) + " s");
  });

  run(2, "order ratios |G_{k+1}|/|G_k| = 8,8,4,8,8 for k = 3..7", [](Check& c) {
    const auto rows = group_order_ladder(3, 7);
    const std::size_t want[] = {8, 8, 4, 8, 8};
    c.expect(rows.size() == 5, "five rows");
    for (std::size_t i = 0; i < rows.size() && i < 5; ++i)
      c.expect(rows[i].ratio == want[i], k_str("ratio", rows[i].k));
  });

  run(3, "(A),(B),(C) hold for k = 3,5,6,7; only (B) fails for k = 4,8 with witness x^k = y^k",
      [](Check& c) {
        for (int k = 2; k <= 8; ++k) {
          const auto u = standard_triple(k);
          const auto sys = spherical_systems(make_generators(k));
          const bool a = check_a(u);
          const auto b = check_b(u, make_generators(k).x[2]);
          const auto cc = check_c(u);
          c.expect(cc.holds, k_str("(C)", k));
          if (k < 3) continue;
          c.expect(a, k_str("(A)", k));
          if (cli::is_power_of_two(k)) {
            c.expect(!b.holds, k_str("(B) should fail", k));
            c.expect(b.witness && *b.witness == elem_pow(sys.x, std::uint64_t(k)), k_str("witness x^k", k));
            c.expect(elem_pow(sys.x, std::uint64_t(k)) == elem_pow(sys.y, std::uint64_t(k)), k_str("x^k = y^k", k));
          } else {
            c.expect(b.holds, k_str("(B)", k));
          }
        }
      });

  run(4, "closed forms for products, squares and conjugates equal generic multiplication on 1000 random elements per k = 3..8",
      [](Check& c) {
        std::mt19937_64 rng(2024);
        for (int k = 3; k <= 8; ++k) {
          std::size_t bad = 0;
          for (int n = 0; n < 1000; ++n) {
            std::uniform_int_distribution<int> dl(0, k - 1);
            int la = dl(rng), lb = dl(rng);
            if (lb < la) std::swap(la, lb);
            const auto a = random_element(rng, k, la), b = random_element(rng, k, lb);
            const auto pre = product_prefix_closed_form(a, b);
            const auto ab = a * b, ba = b * a;
            for (std::size_t i = 0; i < pre.size(); ++i)
              if (ab.diag(la + 1 + int(i)) != pre[i] || ba.diag(la + 1 + int(i)) != pre[i]) ++bad;

            const int l = int(rng() % std::uint64_t((k - 2) / 2 + 1));
            const auto s = random_element(rng, k, l);
            const auto sf = square_closed_form(s);
            const auto sq = s * s;
            if (sq.vanish_count() < 2 * l + 1) ++bad;
            if (2 * l + 2 <= k && sq.diag(2 * l + 2) != sf.c1) ++bad;
            if (2 * l + 3 <= k && sq.diag(2 * l + 3) != sf.c2) ++bad;

            const int lc = int(rng() % std::uint64_t(k - 1));
            const auto x = random_element(rng, k, lc), g = random_element(rng, k, 0);
            const auto conj = elem_inv(g) * x * g;
            const auto cf = conj_closed_form(x, g.diag(1));
            if (conj.diag(lc + 1) != cf.a1 || conj.diag(lc + 2) != cf.c2) ++bad;
          }
          c.expect(bad == 0, k_str("mismatches", k) + ": " + std::to_string(bad));
        }
      });

  run(5, "every power of x0, x1, x, y0, y1, y matches exactly one printed form for k = 3..8", [](Check& c) {
    for (int k = 3; k <= 8; ++k)
      for (const char* g : {"x0", "x1", "x", "y0", "y1", "y"}) {
        try {
          verify_power_forms(g, k);
        } catch (const std::exception& e) {
          c.expect(false, e.what());
        }
      }
    const auto x = verify_power_forms("x", 8);
    c.expect(x.rows[1].lead == DiagTriple::of(51, 89, 196) && x.rows[1].second.is_zero(), "x^2 form");
  });

  run(6, "all twelve conjugation arrays reproduced from the second-diagonal orbit", [](Check& c) {
    for (const auto& p : testsupport::printed_schemes()) {
      const auto s = standard_scheme(p.family, p.regime);
      bool same = s.closed && s.involutive;
      for (int i = 0; i < 8; ++i) same = same && s.squares[std::size_t(i / 4)].n[std::size_t(i % 4)] == p.nodes[std::size_t(i)];
      c.expect(same, std::string(p.family) + " " + regime_name(p.regime));
    }
  });

  run(7, "squares of G \\ H lead with the four printed triples at vanish count 1, disjoint from Sigma(T)",
      [](Check& c) {
        const auto e = expected_square_leads();
        const std::set<DiagTriple> want(e.begin(), e.end());
        for (int k = 3; k <= 7; ++k) {
          const auto cv = check_c(standard_triple(k));
          std::set<DiagTriple> got;
          bool consistent = true;
          for (const auto& r : cv.table) {
            got.insert(r.square_lead);
            consistent = consistent && r.consistent && r.square_vanish == 1;
          }
          c.expect(got == want, k_str("leading triples", k));
          c.expect(consistent && cv.squares_vanish_one, k_str("vanish count 1", k));
          c.expect(cv.leading_disjoint, k_str("disjoint from Sigma(T)", k));
        }
      });

  run(8, "psi is an automorphism of G_3 with sigma_psi(u_3) = iota(u_3); no image pair extends on H_5..H_7",
      [](Check& c) {
        const auto u = standard_triple(3);
        const auto images = reality_automorphism_images(3);
        const auto hv = check_hom_extends(*u.g, images);
        c.expect(hv.homomorphism && hv.bijective, "psi automorphism");
        c.expect(same_triple(transform(u, TransformKind::sigma_psi, images), transform(u, TransformKind::iota)),
                 "sigma_psi(u_3) = iota(u_3)");
        for (int k : {5, 6, 7}) {
          const auto h = enumerate_h(k);
          for (const auto& p : forbidden_image_pairs(k))
            c.expect(!check_hom_extends(*h, std::array{p.image0, p.image1}).homomorphism,
                     k_str(p.label.c_str(), k) + " extends");
        }
      });

  run(9, "surface invariants of u_3: g = 17, e = 8, chi = 2, K^2 = 16", [](Check& c) {
    const auto s = invariants(standard_triple(3));
    c.expect(s.genus == 17, "genus " + std::to_string(s.genus));
    c.expect(s.euler == 8, "e " + std::to_string(s.euler));
    c.expect(s.chi == 2 && 4 * s.chi == s.euler, "chi");
    c.expect(s.k_squared == 16 && s.k_squared == 8 * s.chi, "K^2");
    c.expect(std::has_single_bit(s.nu), "nu a power of two");
  });

  run(10, "group laws, truncation, Sigma invariance, (B) vs (B'), thread-count determinism", [](Check& c) {
    std::mt19937_64 rng(99);
    bool laws = true, trunc = true;
    for (int k = 1; k <= 10; ++k)
      for (int n = 0; n < 500; ++n) {
        const auto a = random_element(rng, k), b = random_element(rng, k), d = random_element(rng, k);
        laws = laws && (a * b) * d == a * (b * d) && a * elem_inv(a) == elem_identity(k);
        for (int kk = 1; kk < k; ++kk) trunc = trunc && (a * b).truncated(kk) == a.truncated(kk) * b.truncated(kk);
      }
    c.expect(laws, "associativity and inverses");
    c.expect(trunc, "truncation homomorphism");

    for (int k = 3; k <= 5; ++k) {
      const auto u = standard_triple(k);
      const auto st = sigma_t(u.t0, u.t1, *u.h);
      bool inv = true;
      for (std::uint32_t i = 0; i < st.all.size(); ++i)
        for (const auto& g : u.h->generators()) inv = inv && st.contains(conjugate(st.all.element(i), g.value));
      c.expect(inv, k_str("Sigma invariance", k));
    }

    const auto u3 = standard_triple(3);
    const auto bp = check_b_prime(u3);
    bool agree = bp.sweep.checked == 128;
    for (std::uint32_t i = 0; i < u3.g->order(); ++i) {
      const auto g = u3.g->element(i);
      if (!u3.h->contains(g)) agree = agree && check_b(u3, g).holds == bp.holds;
    }
    c.expect(agree && bp.holds, "(B) and (B') over G_3 \\ H_3");

    cli::RunConfig cfg;
    cfg.k = 3;
    cfg.k_max = 6;
    cfg.format = cli::Format::json;
    std::string first;
    for (int t : {1, 2, 4}) {
      cfg.threads = t;
      const auto out = cli::cmd_verify(cfg).out;
      if (first.empty()) first = out;
      c.expect(out == first, "verify output with " + std::to_string(t) + " threads");
    }
    kernels::set_thread_count(0);
  });

  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
