#pragma once

#include <array>
#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mixbeau/band.hpp"
#include "mixbeau/groups.hpp"
#include "mixbeau/kernels.hpp"

namespace mixbeau {

/// The spherical systems (x0, x1, x = (x0 x1)^{-1}) and their x2-conjugates
/// (y0, y1, y); the y's are computed, never typed in.
struct SphericalSystems {
  GroupElement x0, x1, x, y0, y1, y;

  const GroupElement& by_name(std::string_view name) const;
};

SphericalSystems spherical_systems(const GeneratorSet& gens);

/// A candidate mixed structure (G, H, T = (t0, t1)).
struct BeauvilleTriple {
  int k = 0;
  GroupPtr g;
  GroupPtr h;
  GroupElement t0, t1;
};

/// u_k = (G_k, H_k, (x0, x1)). Optional cache directory for the enumerations.
BeauvilleTriple standard_triple(int k, std::size_t budget = kDefaultBudget,
                                const std::optional<std::filesystem::path>& cache_dir = std::nullopt);

/// Same level, same G and H element sets, same T.
bool same_triple(const BeauvilleTriple& a, const BeauvilleTriple& b);

/// First generator of G outside H.
GroupElement coset_representative(const BeauvilleTriple& u);

/// All H-conjugates of all powers of `base` (identity included).
struct SigmaSet {
  GroupElement base;
  ElementStore members;

  bool contains(const GroupElement& g) const { return members.contains(g); }
  std::size_t size() const { return members.size(); }
};

/// Orbit closure of the cyclic group <x> under conjugation by H's
/// generators and their inverses. Throws std::invalid_argument if x is not in H.
SigmaSet sigma(const GroupElement& x, const EnumeratedGroup& h);

struct SigmaT {
  SigmaSet s0, s1, sx;  // Sigma(t0), Sigma(t1), Sigma((t0 t1)^{-1})
  ElementStore all;     // union

  bool contains(const GroupElement& g) const { return all.contains(g); }
};

SigmaT sigma_t(const GroupElement& t0, const GroupElement& t1, const EnumeratedGroup& h);

/// Canonically sorted members.
std::vector<GroupElement> sorted_members(const ElementStore& s);
/// Members of a and b, identity included.
std::vector<GroupElement> intersection(const ElementStore& a, const ElementStore& b);

bool check_a(const BeauvilleTriple& u);

struct PairIntersection {
  std::string label;  // e.g. "x,y": Sigma(x) against g0 Sigma(x) g0^{-1}
  std::size_t size;   // identity included
};

struct BVerdict {
  bool holds = false;
  GroupElement g0;
  std::optional<GroupElement> witness;
  std::string witness_pair;
  std::vector<PairIntersection> pairs;
};

/// g0 Sigma(T) g0^{-1} against Sigma(T), examined per component pair in the
/// order (x,y), (x0,y0), (x1,y1), then the six cross pairs. The witness is the
/// canonically smallest non-identity element of the first non-trivial pair.
/// Throws std::invalid_argument if g0 lies in H.
BVerdict check_b(const BeauvilleTriple& u, const GroupElement& g0);

struct BPrimeVerdict {
  bool holds = false;
  kernels::ConjugationSweep sweep;
};

/// The same test for every g in G \ H. Refuses (BudgetExceeded) when
/// |G \ H| * |Sigma(T)| exceeds `work_budget`.
BPrimeVerdict check_b_prime(const BeauvilleTriple& u, std::size_t work_budget = std::size_t{1} << 28,
                            Backend backend = Backend::parallel);

struct SquareRow {
  DiagTriple h_first;      // first diagonal of h
  DiagTriple coset_first;  // first diagonal of h * g0
  int square_vanish;
  DiagTriple square_lead;
  bool consistent;
};

struct CVerdict {
  bool holds = false;          // no (h g0)^2 lies in Sigma(T)
  bool squares_vanish_one = false;
  bool leading_disjoint = false;  // vs. leading diagonals of Sigma(T) at vanish count 1
  std::size_t checked = 0;
  std::optional<GroupElement> offender;
  std::vector<SquareRow> table;
  std::set<DiagTriple> sigma_leads_vanish_one;
};

/// Squares every g = h * g0, h in H, g0 = coset_representative(u). Requires k >= 2.
CVerdict check_c(const BeauvilleTriple& u, Backend backend = Backend::parallel);

/// The four leading diagonals of squares of elements outside H.
std::array<DiagTriple, 4> expected_square_leads();

// Conjugation schemes.

struct SchemeSquare {
  /// n[0] seed, n[1] = Conj(x0)(n[0]), n[2] = Conj(x1)(n[0]), n[3] = Conj(x1)(n[1]).
  std::array<DiagTriple, 4> n;
};

struct SchemeEdge {
  int square;
  int from, to;
  std::string label;  // "Conj(x0^±1)" or "Conj(x1^±1)"
};

struct ConjScheme {
  std::string label;
  DiagTriple a1;
  int vanish = 0;
  std::array<SchemeSquare, 2> squares;
  std::vector<SchemeEdge> edges;
  bool closed = false;      // Conj(x0)(n[2]) == n[3] in both squares
  bool involutive = false;  // both maps are involutions on every node
};

/// Orbit of the second diagonals of an (x^t, y^t) pair under the second-
/// diagonal conjugation maps with conjugators' first diagonals b_x0, b_x1.
ConjScheme conj_scheme(const DiagTriple& a1, const std::array<DiagTriple, 2>& seeds, int vanish,
                       const DiagTriple& b_x0 = DiagTriple::of(11, 11, 11),
                       const DiagTriple& b_x1 = DiagTriple::of(23, 224, 138));

enum class Regime { base, cube, odd, even };

const char* regime_name(Regime r);
std::optional<Regime> parse_regime(std::string_view s);

/// Pair families: "x" for (x, y), "x0" for (x0, y0), "x1" for (x1, y1).
/// Seeds are read off computed powers x^t, y^t with t = 1, 3, 2, 4.
ConjScheme standard_scheme(std::string_view family, Regime regime);

/// All twelve: families x, x0, x1 times the four regimes.
std::vector<ConjScheme> standard_schemes();

// Power forms.

/// t(n): 2 a_1 + a_0 for odd n, otherwise the lowest power of two in n.
std::uint64_t t_of(std::uint64_t n);

struct PowerForm {
  Regime regime;
  DiagTriple lead;
  DiagTriple second;
};

/// The four printed forms for one of x0, x1, x, y0, y1, y.
std::array<PowerForm, 4> printed_power_forms(std::string_view gen);

struct PowerRow {
  std::uint64_t n;
  std::uint64_t t;
  bool identity;
  int vanish;
  DiagTriple lead, second;
  bool second_survives;
  std::optional<Regime> matched;  // unset for identity powers
};

struct PowerReport {
  std::string gen;
  int k = 0;
  std::uint64_t order = 0;
  std::vector<PowerRow> rows;
};

/// Classifies gen^n for n = 1..ord(gen) against the printed forms; every
/// non-identity power must match exactly the form predicted by t(n).
/// Throws std::runtime_error on a classification failure.
PowerReport verify_power_forms(std::string_view gen, int k);

// Structure transformations.

enum class TransformKind { iota, sigma3, sigma4, sigma_psi };

/// iota: T -> T^{-1}; sigma3: (c, a) -> (a, c); sigma4: (c, a) -> (c, c^{-1} a^{-1});
/// sigma_psi: apply the automorphism of G given by generator images.
/// Throws std::invalid_argument when the images do not define an automorphism.
BeauvilleTriple transform(const BeauvilleTriple& u, TransformKind kind,
                          std::span<const GroupElement> psi_images = {});

/// Generator images x0 -> x0^{-1}, x1 -> x1^{-1}, x2 -> x0^{-1} x2 x0.
std::vector<GroupElement> reality_automorphism_images(int k);

/// (x0^{-1}, x1^{-1}), (x1 x0, x0^{-1}), (x1^{-1}, x1 x0),
/// (x1^{-1}, x0^{-1}), (x0^{-1}, x1 x0), (x1 x0, x1^{-1}).
struct ImagePair {
  std::string label;
  GroupElement image0, image1;
};
std::vector<ImagePair> forbidden_image_pairs(int k);

}  // namespace mixbeau
