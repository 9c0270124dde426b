#include <benchmark/benchmark.h>

#include "galcluster/chains.hpp"
#include "galcluster/constructions.hpp"
#include "galcluster/group_ops.hpp"
#include "galcluster/magnification.hpp"

using namespace galcluster;

namespace {

PermGroup symmetric(unsigned n) {
  std::vector<Point> cycle(n);
  for (unsigned i = 0; i < n; ++i) cycle[i] = (i + 1) % n;
  return PermGroup(n, {parse_permutation("(1 2)", n), Permutation::from_images(cycle)});
}

// Fresh handle each iteration so the lazy element table is rebuilt.
void BM_EnumerateSymmetric(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    const PermGroup g = symmetric(n);
    benchmark::DoNotOptimize(g.order());
  }
}
BENCHMARK(BM_EnumerateSymmetric)->Arg(5)->Arg(6)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_EnumeratePsl2(benchmark::State& state) {
  const auto p = static_cast<unsigned>(state.range(0));
  const auto m = build_psl2_max(p);
  for (auto _ : state) {
    const PermGroup g(m.group().degree(), {m.group().generators().begin(), m.group().generators().end()});
    benchmark::DoNotOptimize(g.order());
  }
}
BENCHMARK(BM_EnumeratePsl2)->Arg(13)->Arg(19)->Arg(29)->Unit(benchmark::kMillisecond);

void BM_Normalizer(benchmark::State& state) {
  const auto m = build_sn_tuple(static_cast<unsigned>(state.range(0)), 2);
  m.group().order();
  m.subgroup().order();
  for (auto _ : state) benchmark::DoNotOptimize(normalizer(m.rel()).order());
}
BENCHMARK(BM_Normalizer)->Arg(5)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_NormalClosure(benchmark::State& state) {
  const auto m = build_borel(static_cast<unsigned>(state.range(0)), 1);
  m.group().order();
  for (auto _ : state) benchmark::DoNotOptimize(normal_closure(m.rel()).order());
}
BENCHMARK(BM_NormalClosure)->Arg(13)->Arg(19)->Arg(31)->Unit(benchmark::kMillisecond);

void BM_NormalSubgroups(benchmark::State& state) {
  const FamilySpec specs[] = {family::SnTuple{5, 1}, family::Psl2Max{13}, family::SnTuple{7, 1},
                              family::AnSquare{5}};
  const auto m = build(specs[state.range(0)]);
  m.group().order();
  state.SetLabel(format_family(specs[state.range(0)]));
  for (auto _ : state) benchmark::DoNotOptimize(normal_subgroups(m.group()).size());
}
BENCHMARK(BM_NormalSubgroups)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_CosetAction(benchmark::State& state) {
  const auto m = build_psl2_borel_image(13, 3);
  m.group().order();
  for (auto _ : state) benchmark::DoNotOptimize(CosetAction(m.rel()).degree());
}
BENCHMARK(BM_CosetAction)->Unit(benchmark::kMillisecond);

void BM_FullReportDeciders(benchmark::State& state) {
  for (auto _ : state) {
    const auto m = build_borel(19, 3);
    benchmark::DoNotOptimize(is_general_primitive(m));
    benchmark::DoNotOptimize(chains_coincide(m).has_value());
  }
}
BENCHMARK(BM_FullReportDeciders)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
