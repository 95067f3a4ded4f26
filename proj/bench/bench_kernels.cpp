// Serial reference kernels against their OpenMP variants.

#include <benchmark/benchmark.h>

#include "mixbeau/beauville.hpp"
#include "mixbeau/kernels.hpp"

using namespace mixbeau;

namespace {

std::vector<GroupElement> g_multipliers(int k) {
  const auto gs = make_generators(k);
  std::vector<GroupElement> m;
  for (int i = 0; i < 3; ++i) {
    m.push_back(gs.x[i]);
    m.push_back(elem_inv(gs.x[i]));
  }
  return m;
}

template <bool Parallel>
void BM_Closure(benchmark::State& state) {
  const int k = int(state.range(0));
  const auto mult = g_multipliers(k);
  std::size_t order = 0;
  for (auto _ : state) {
    ElementStore store(k);
    if constexpr (Parallel) kernels::closure_omp(store, mult, kDefaultBudget);
    else kernels::closure_serial(store, mult, kDefaultBudget);
    order = store.size();
  }
  state.counters["elements"] = double(order);
  state.SetItemsProcessed(std::int64_t(state.iterations()) * std::int64_t(order));
}

struct Fixture {
  BeauvilleTriple u;
  SigmaT st;
  GroupElement g0;
  explicit Fixture(int k)
      : u(standard_triple(k)), st(sigma_t(u.t0, u.t1, *u.h)), g0(coset_representative(u)) {}
};

template <bool Parallel>
void BM_SquareSweep(benchmark::State& state) {
  const Fixture f(int(state.range(0)));
  for (auto _ : state) {
    auto r = Parallel ? kernels::square_sweep_omp(f.u.h->store(), f.g0, f.st.all)
                      : kernels::square_sweep_serial(f.u.h->store(), f.g0, f.st.all);
    benchmark::DoNotOptimize(r.checked);
  }
  state.SetItemsProcessed(std::int64_t(state.iterations()) * std::int64_t(f.u.h->order()));
}

template <bool Parallel>
void BM_ConjugationSweep(benchmark::State& state) {
  const Fixture f(int(state.range(0)));
  for (auto _ : state) {
    auto r = Parallel ? kernels::conjugation_sweep_omp(f.u.g->store(), f.u.h->store(), f.st.all)
                      : kernels::conjugation_sweep_serial(f.u.g->store(), f.u.h->store(), f.st.all);
    benchmark::DoNotOptimize(r.failing);
  }
}

}  // namespace

BENCHMARK(BM_Closure<false>)->Name("closure/serial")->DenseRange(4, 6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Closure<true>)->Name("closure/omp")->DenseRange(4, 6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SquareSweep<false>)->Name("square_sweep/serial")->DenseRange(5, 7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SquareSweep<true>)->Name("square_sweep/omp")->DenseRange(5, 7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ConjugationSweep<false>)->Name("conjugation_sweep/serial")->DenseRange(3, 5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ConjugationSweep<true>)->Name("conjugation_sweep/omp")->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
