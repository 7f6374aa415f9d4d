#include <benchmark/benchmark.h>

#include <polydyn/discrim.hpp>
#include <polydyn/fungraph.hpp>
#include <polydyn/parse.hpp>

using namespace polydyn;

namespace {

void BM_DiscRecursive(benchmark::State& state) {
  const RatPoly phi = parse_poly("x^2-2");
  const unsigned n = static_cast<unsigned>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(disc_tower_recursive(phi, n).value);
}
BENCHMARK(BM_DiscRecursive)->DenseRange(2, 6);

void BM_DiscDirect(benchmark::State& state) {
  const RatPoly phi = parse_poly("x^2-2");
  const unsigned n = static_cast<unsigned>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(disc_tower_direct(phi, n).value);
}
BENCHMARK(BM_DiscDirect)->DenseRange(2, 4);

void BM_DiscAt(benchmark::State& state) {
  const RatPoly phi = parse_poly("x^2-2");
  const unsigned n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(disc_at(phi, n, Rat(1)));
}
BENCHMARK(BM_DiscAt)->DenseRange(4, 10, 2);

void BM_DegreeTable(benchmark::State& state) {
  const PrimePoly fbar = reduce_poly(parse_poly("x^2+8"), Int(13));
  const unsigned long n_max = static_cast<unsigned long>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(degree_table(fbar, 11, n_max).rows.size());
}
BENCHMARK(BM_DegreeTable)->DenseRange(2, 10, 4);

void BM_BuildGraph(benchmark::State& state) {
  const Int p(13);
  const unsigned k = static_cast<unsigned>(state.range(0));
  const PrimePoly fbar = reduce_poly(parse_poly("x^2+8"), p);
  for (auto _ : state) {
    auto F = make_field(p, k);
    benchmark::DoNotOptimize(build_graph(F, fbar).size);
  }
}
BENCHMARK(BM_BuildGraph)->DenseRange(1, 5);

void BM_PathCount(benchmark::State& state) {
  auto F = make_field(Int(13), 4);
  const auto G = build_graph(F, reduce_poly(parse_poly("x^2+8"), Int(13)));
  const unsigned long n = static_cast<unsigned long>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(path_count(G, n, 11));
}
BENCHMARK(BM_PathCount)->DenseRange(1, 7, 2);

void BM_Crosscheck(benchmark::State& state) {
  const PrimePoly fbar = reduce_poly(parse_poly("x^2+8"), Int(13));
  const unsigned jobs = static_cast<unsigned>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(
        splitting_crosscheck(fbar, 11, 6, 3, jobs).all_match);
}
BENCHMARK(BM_Crosscheck)->Arg(1)->Arg(2)->Arg(4);

}  // namespace

int main(int argc, char** argv) {
  benchmark::Initialize(&argc, argv);
  if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
  benchmark::RunSpecifiedBenchmarks();
  benchmark::Shutdown();
  return 0;
}
