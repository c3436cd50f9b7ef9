#include <benchmark/benchmark.h>

#include <random>

#include "agt/cardinal.hpp"
#include "agt/fg_group.hpp"
#include "agt/finite_group.hpp"
#include "agt/intmat.hpp"
#include "agt/parse.hpp"
#include "agt/topo_invariants.hpp"

namespace {

void BM_SubgroupLattice(benchmark::State& state) {
  std::vector<long long> orders(static_cast<size_t>(state.range(0)), 2);
  agt::FiniteGroup g(orders, 1 << 20);
  for (auto _ : state) {
    auto subs = agt::all_subgroups(g);
    benchmark::DoNotOptimize(subs.size());
  }
  state.SetLabel(std::to_string(agt::all_subgroups(g).size()) + " subgroups");
}
BENCHMARK(BM_SubgroupLattice)->DenseRange(3, 6);

void BM_KernelFibers(benchmark::State& state) {
  agt::FiniteGroup g({2, 4, 8});
  for (auto _ : state) {
    auto fibers = agt::kernel_fiber_map(g);
    benchmark::DoNotOptimize(fibers.size());
  }
}
BENCHMARK(BM_KernelFibers);

void BM_Snf(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(12345);
  agt::intmat::Mat m;
  for (int i = 0; i < n; ++i) {
    agt::intmat::Row row;
    for (int j = 0; j < n; ++j)
      row.push_back(agt::Int(static_cast<long long>(rng() % 200) - 100));
    m.push_back(std::move(row));
  }
  for (auto _ : state) {
    auto d = agt::intmat::snf_diagonal(m);
    benchmark::DoNotOptimize(d.size());
  }
}
BENCHMARK(BM_Snf)->DenseRange(2, 8, 2);

void BM_EnumerateIndex(benchmark::State& state) {
  agt::FgGroup z3{3, {}};
  agt::Int m(state.range(0));
  for (auto _ : state) {
    auto subs = agt::enumerate_finite_index(z3, m);
    benchmark::DoNotOptimize(subs.size());
  }
}
BENCHMARK(BM_EnumerateIndex)->Arg(8)->Arg(12)->Arg(16);

void BM_CardinalCmp(benchmark::State& state) {
  agt::Cardinal a = agt::exp2(agt::sup({agt::card_aleph(1), agt::continuum()}));
  agt::Cardinal b = agt::sup({agt::exp2(agt::card_aleph(2)),
                              agt::exp2(agt::exp2(agt::aleph0()))});
  for (auto _ : state) {
    benchmark::DoNotOptimize(agt::cmp(a, b, agt::CardinalMode::Zfc));
    benchmark::DoNotOptimize(agt::cmp(a, b, agt::CardinalMode::Gch));
  }
}
BENCHMARK(BM_CardinalCmp);

void BM_Csize(benchmark::State& state) {
  agt::StructuredGroup g = agt::parse_group("Z+Z(8)^(c)+T(3)+J(5)");
  for (auto _ : state) {
    benchmark::DoNotOptimize(agt::csize(g));
  }
}
BENCHMARK(BM_Csize);

}  // namespace

BENCHMARK_MAIN();
