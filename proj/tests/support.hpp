#pragma once

#include <random>
#include <vector>

#include "mixbeau/band.hpp"

namespace testsupport {

inline mixbeau::DiagTriple random_triple(std::mt19937_64& rng) {
  std::uniform_int_distribution<unsigned> d(0, 511);
  return mixbeau::DiagTriple::of(d(rng), d(rng), d(rng));
}

/// Random element of level k whose first `vanish` diagonals are zero and
/// whose next diagonal is non-zero.
inline mixbeau::GroupElement random_element(std::mt19937_64& rng, int k, int vanish = 0) {
  std::vector<mixbeau::DiagTriple> diags(static_cast<std::size_t>(k));
  for (int j = vanish; j < k; ++j) diags[std::size_t(j)] = random_triple(rng);
  if (vanish < k)
    while (diags[std::size_t(vanish)].is_zero()) diags[std::size_t(vanish)] = random_triple(rng);
  return mixbeau::GroupElement::from_diagonals(k, diags);
}

}  // namespace testsupport
