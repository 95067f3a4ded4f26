#pragma once

#include <algorithm>
#include <tuple>

#include "mixbeau/kernels.hpp"

namespace mixbeau::kernels::detail {

inline void keep_min(std::optional<GroupElement>& slot, const std::optional<GroupElement>& cand) {
  if (cand && (!slot || *cand < *slot)) slot = cand;
}

inline void merge_class(SquareClass& into, const SquareClass& from) {
  const auto a = std::tie(into.coset_first, into.square_vanish, into.square_lead);
  const auto b = std::tie(from.coset_first, from.square_vanish, from.square_lead);
  if (a != b) {
    into.consistent = false;
    if (b < a) {
      into.coset_first = from.coset_first;
      into.square_vanish = from.square_vanish;
      into.square_lead = from.square_lead;
    }
  }
  into.consistent = into.consistent && from.consistent;
  into.count += from.count;
}

// Commutative and associative, so the merged result is schedule independent.
inline void merge(SquareSweep& into, const SquareSweep& from) {
  into.checked += from.checked;
  into.squares_in_sigma += from.squares_in_sigma;
  keep_min(into.min_offender, from.min_offender);
  for (const auto& [key, cls] : from.classes) {
    auto [it, fresh] = into.classes.try_emplace(key, cls);
    if (!fresh) merge_class(it->second, cls);
  }
}

inline void merge(ConjugationSweep& into, const ConjugationSweep& from) {
  into.checked += from.checked;
  into.failing += from.failing;
  keep_min(into.min_failing, from.min_failing);
}

// One h of the square sweep, shared by both backends.
inline void square_one(const GroupElement& h, const GroupElement& g0, const ElementStore& sigma,
                       SquareSweep& acc) {
  const GroupElement g = elem_mul(h, g0);
  const GroupElement sq = elem_mul(g, g);
  ++acc.checked;
  if (sigma.contains(sq)) {
    ++acc.squares_in_sigma;
    keep_min(acc.min_offender, g);
  }
  SquareClass cls;
  cls.coset_first = g.diag(1);
  cls.square_vanish = sq.vanish_count();
  if (!sq.is_identity()) cls.square_lead = sq.diag(cls.square_vanish + 1);
  cls.count = 1;
  auto [it, fresh] = acc.classes.try_emplace(h.diag(1), cls);
  if (!fresh) merge_class(it->second, cls);
}

// One g of the conjugation sweep; `members` excludes the identity.
inline bool conjugates_meet(const GroupElement& g, std::span<const GroupElement> members,
                            const ElementStore& sigma) {
  const GroupElement ginv = elem_inv(g);
  for (const auto& m : members) {
    const GroupElement c = elem_mul(elem_mul(g, m), ginv);
    if (!c.is_identity() && sigma.contains(c)) return true;
  }
  return false;
}

inline std::vector<GroupElement> non_identity_members(const ElementStore& s) {
  std::vector<GroupElement> out;
  out.reserve(s.size());
  for (std::uint32_t i = 0; i < s.size(); ++i) {
    GroupElement e = s.element(i);
    if (!e.is_identity()) out.push_back(e);
  }
  return out;
}

}  // namespace mixbeau::kernels::detail
