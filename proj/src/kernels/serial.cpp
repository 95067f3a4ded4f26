#include "merge.hpp"

namespace mixbeau::kernels {

bool closure_serial(ElementStore& store, std::span<const GroupElement> mult, std::size_t budget) {
  const int k = store.level();
  store.insert(GroupElement::identity(k));
  std::uint16_t cur[3 * kMaxLevel];
  std::uint16_t prod[3 * kMaxLevel];
  std::uint64_t key[words_for_level(kMaxLevel)];
  for (std::uint32_t i = 0; i < store.size(); ++i) {
    unpack_raw(k, store.key(i).data(), cur);
    for (const auto& s : mult) {
      mixbeau::detail::mul_raw(k, s.raw().data(), cur, prod);
      pack_raw(k, prod, key);
      if (store.insert_packed(key).second && store.size() > budget) return false;
    }
  }
  return true;
}

SquareSweep square_sweep_serial(const ElementStore& coset_base, const GroupElement& g0,
                                const ElementStore& sigma) {
  SquareSweep acc;
  for (std::uint32_t i = 0; i < coset_base.size(); ++i)
    detail::square_one(coset_base.element(i), g0, sigma, acc);
  return acc;
}

ConjugationSweep conjugation_sweep_serial(const ElementStore& group, const ElementStore& exclude,
                                          const ElementStore& sigma) {
  const auto members = detail::non_identity_members(sigma);
  ConjugationSweep acc;
  for (std::uint32_t i = 0; i < group.size(); ++i) {
    const GroupElement g = group.element(i);
    if (exclude.contains(g)) continue;
    ++acc.checked;
    if (detail::conjugates_meet(g, members, sigma)) {
      ++acc.failing;
      detail::keep_min(acc.min_failing, g);
    }
  }
  return acc;
}

}  // namespace mixbeau::kernels
