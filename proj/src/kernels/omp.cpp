#include <omp.h>

#include <vector>

#include "merge.hpp"

namespace mixbeau::kernels {

namespace {
int g_threads = 0;

int active_threads() { return g_threads > 0 ? g_threads : omp_get_max_threads(); }

// Frontier elements expanded per parallel pass; bounds the candidate buffer.
constexpr std::size_t kChunk = std::size_t{1} << 16;
}  // namespace

void set_thread_count(int n) { g_threads = n; }
int thread_count() { return active_threads(); }

bool closure_omp(ElementStore& store, std::span<const GroupElement> mult, std::size_t budget) {
  const int k = store.level();
  const std::size_t w = std::size_t(store.words());
  const std::size_t m = mult.size();
  store.insert(GroupElement::identity(k));
  std::vector<std::uint64_t> buf;

  // Levels are contiguous index ranges; candidates are inserted in
  // (frontier index, generator) order, matching the serial queue exactly.
  std::size_t lo = 0;
  std::size_t hi = store.size();
  while (lo < hi) {
    for (std::size_t base = lo; base < hi; base += kChunk) {
      const std::size_t n = std::min(kChunk, hi - base);
      buf.resize(n * m * w);
      const ElementStore& view = store;
      std::uint64_t* out = buf.data();
#pragma omp parallel for schedule(static) num_threads(active_threads())
      for (std::ptrdiff_t i = 0; i < std::ptrdiff_t(n); ++i) {
        std::uint16_t cur[3 * kMaxLevel];
        std::uint16_t prod[3 * kMaxLevel];
        unpack_raw(k, view.key(std::uint32_t(base + std::size_t(i))).data(), cur);
        for (std::size_t s = 0; s < m; ++s) {
          mixbeau::detail::mul_raw(k, mult[s].raw().data(), cur, prod);
          pack_raw(k, prod, out + (std::size_t(i) * m + s) * w);
        }
      }
      for (std::size_t c = 0; c < n * m; ++c)
        if (store.insert_packed(buf.data() + c * w).second && store.size() > budget) return false;
    }
    lo = hi;
    hi = store.size();
  }
  return true;
}

SquareSweep square_sweep_omp(const ElementStore& coset_base, const GroupElement& g0,
                             const ElementStore& sigma) {
  const int nt = active_threads();
  std::vector<SquareSweep> partial(std::size_t(nt > 0 ? nt : 1));
#pragma omp parallel num_threads(nt)
  {
    SquareSweep& acc = partial[std::size_t(omp_get_thread_num())];
#pragma omp for schedule(static)
    for (std::ptrdiff_t i = 0; i < std::ptrdiff_t(coset_base.size()); ++i)
      detail::square_one(coset_base.element(std::uint32_t(i)), g0, sigma, acc);
  }
  SquareSweep total;
  for (const auto& p : partial) detail::merge(total, p);
  return total;
}

ConjugationSweep conjugation_sweep_omp(const ElementStore& group, const ElementStore& exclude,
                                       const ElementStore& sigma) {
  const auto members = detail::non_identity_members(sigma);
  const int nt = active_threads();
  std::vector<ConjugationSweep> partial(std::size_t(nt > 0 ? nt : 1));
#pragma omp parallel num_threads(nt)
  {
    ConjugationSweep& acc = partial[std::size_t(omp_get_thread_num())];
#pragma omp for schedule(dynamic, 64)
    for (std::ptrdiff_t i = 0; i < std::ptrdiff_t(group.size()); ++i) {
      const GroupElement g = group.element(std::uint32_t(i));
      if (exclude.contains(g)) continue;
      ++acc.checked;
      if (detail::conjugates_meet(g, members, sigma)) {
        ++acc.failing;
        detail::keep_min(acc.min_failing, g);
      }
    }
  }
  ConjugationSweep total;
  for (const auto& p : partial) detail::merge(total, p);
  return total;
}

}  // namespace mixbeau::kernels
