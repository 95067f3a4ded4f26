#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "mixbeau/band.hpp"
#include "mixbeau/element_store.hpp"

namespace mixbeau {

/// Default enumeration budget; G_8 has exactly this many elements.
inline constexpr std::size_t kDefaultBudget = std::size_t{1} << 22;

class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(std::size_t budget, int level)
      : std::runtime_error("enumeration of level " + std::to_string(level) +
                           " exceeds the budget of " + std::to_string(budget) + " elements"),
        budget_(budget),
        level_(level) {}
  std::size_t budget() const { return budget_; }
  int level() const { return level_; }

 private:
  std::size_t budget_;
  int level_;
};

/// The seven generators x_0..x_6 at level k. x_0, x_1, x_2 are the band
/// constants; x_{i+3} = (x_i x_{i+1})^{-1} for i = 0..3.
struct GeneratorSet {
  int k = 0;
  std::array<GroupElement, 7> x;

  /// x = (x_0 x_1)^{-1}, which is x_3.
  const GroupElement& x_prod_inv() const { return x[3]; }
};

/// Throws std::logic_error if any of the seven relations x_i x_{i+1} x_{i+3} = 1 fails.
GeneratorSet make_generators(int k);

/// The printed band constants of x_0, x_1, x_2 (five diagonals each).
std::span<const DiagTriple> generator_constants(int i);

struct LabeledElement {
  std::string label;
  GroupElement value;
};

enum class Backend { serial, parallel };

/// A fully enumerated finite group. Immutable once built.
class EnumeratedGroup {
 public:
  EnumeratedGroup(std::vector<LabeledElement> gens, ElementStore elements);

  int level() const { return store_.level(); }
  std::size_t order() const { return store_.size(); }
  const std::vector<LabeledElement>& generators() const { return gens_; }

  bool contains(const GroupElement& g) const { return store_.contains(g); }
  std::optional<std::uint32_t> index_of(const GroupElement& g) const { return store_.find(g); }
  GroupElement element(std::uint32_t i) const { return store_.element(i); }
  const ElementStore& store() const { return store_; }

  /// Hash of the level and the generators' canonical encodings.
  std::uint64_t fingerprint() const;

 private:
  std::vector<LabeledElement> gens_;
  ElementStore store_;
};

using GroupPtr = std::shared_ptr<const EnumeratedGroup>;

std::uint64_t generator_fingerprint(int k, std::span<const LabeledElement> gens);

/// Breadth-first closure from the identity under left multiplication by the
/// generators and their inverses. The discovery order depends only on the
/// generator order; both backends produce identical stores.
GroupPtr closure(std::vector<LabeledElement> gens, int k, std::size_t budget = kDefaultBudget,
                 Backend backend = Backend::parallel);

/// G_k = <x_0, x_1, x_2> and H_k = <x_0, x_1>.
GroupPtr enumerate_g(int k, std::size_t budget = kDefaultBudget, Backend backend = Backend::parallel);
GroupPtr enumerate_h(int k, std::size_t budget = kDefaultBudget, Backend backend = Backend::parallel);

struct LadderRow {
  int k;
  std::size_t order;
  std::optional<std::size_t> ratio;  // |G_{k+1}| / |G_k|
};

/// Rows k_min..k_max; enumerates up to G_{k_max+1} so every row has a ratio.
std::vector<LadderRow> group_order_ladder(int k_min, int k_max, std::size_t budget = kDefaultBudget);

/// Least n >= 1 with g^n = 1.
std::uint64_t element_order(const GroupElement& g);

struct HomVerdict {
  bool homomorphism = false;
  bool bijective = false;
  /// image[i] = index in G of the image of element i; filled when homomorphism.
  std::vector<std::uint32_t> image;
  /// First inconsistent Cayley edge when not a homomorphism.
  std::optional<std::string> conflict;

  GroupElement apply(const EnumeratedGroup& g, const GroupElement& x) const;
};

/// Decides whether generator i -> images[i] extends to an endomorphism of G
/// by propagating images along a breadth-first Cayley traversal and checking
/// every generator edge. Throws std::invalid_argument if an image is not in G.
HomVerdict check_hom_extends(const EnumeratedGroup& g, std::span<const GroupElement> images);

/// A word in the generators: letter +i means generator i-1, -i its inverse.
struct Relator {
  std::string name;
  std::vector<int> letters;
};

/// r1, r2, r3 in (x_0, x_1, x_2).
std::vector<Relator> g_relators();
/// r3, r4, r5 in (x_0, x_1).
std::vector<Relator> h_relators();

GroupElement evaluate_word(std::span<const int> letters, std::span<const GroupElement> gens);

// Binary cache of enumerated groups.
//   header: magic "MXBGRP01", u32 level, u64 order, u64 fingerprint,
//           u32 generator count, then each generator as canonical bytes
//           preceded by a u16 label length and the label
//   body:   order elements as 3k u16 LE blocks, sorted in canonical order
void save_group(const EnumeratedGroup& g, const std::filesystem::path& path);
GroupPtr load_group(const std::filesystem::path& path);

/// closure() with reuse of a cache file keyed by (level, generator fingerprint).
GroupPtr cached_closure(std::vector<LabeledElement> gens, int k, std::size_t budget,
                        const std::optional<std::filesystem::path>& cache_dir);

}  // namespace mixbeau
