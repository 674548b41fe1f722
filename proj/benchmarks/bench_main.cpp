#include <benchmark/benchmark.h>

#include <complex>
#include <vector>

#include "cmod/moduli.hpp"
#include "cmod/pencil.hpp"
#include "cmod/resultant.hpp"
#include "cmod/roots.hpp"
#include "cmod/singular.hpp"
#include "cmod/weierstrass.hpp"
#include "corpus.hpp"

namespace {

using namespace cmod;

constexpr std::uint64_t kSeed = 20240917;
constexpr double kTol = 1e-8;

// One corpus curve of degree d (positive or negative), generated once.
const testkit::CorpusCurve& curve_of_degree(int d, bool positive) {
  static std::vector<testkit::CorpusCurve> pos = testkit::positives(kSeed, 250);
  static std::vector<testkit::CorpusCurve> neg = testkit::negatives(kSeed + 1, 250);
  for (const auto& c : positive ? pos : neg)
    if (c.d == d) return c;
  return (positive ? pos : neg).front();
}

void BM_ComplexRoots(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  testkit::Gen g(kSeed);
  UnivariatePoly f = g.poly(n, 20);
  for (auto _ : state) benchmark::DoNotOptimize(complex_roots(f, kTol));
}
BENCHMARK(BM_ComplexRoots)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_Discriminant(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  testkit::Gen g(kSeed + 1);
  UnivariatePoly f = g.poly(n, 20);
  for (auto _ : state) benchmark::DoNotOptimize(discriminant(f));
}
BENCHMARK(BM_Discriminant)->Arg(4)->Arg(8)->Arg(12);

void BM_Decide(benchmark::State& state) {
  const auto& c = curve_of_degree(static_cast<int>(state.range(0)), state.range(1) != 0);
  const Point3 p{1, 0, 0};
  for (auto _ : state) benchmark::DoNotOptimize(decide(reduce(setup(c.curve, p))));
}
BENCHMARK(BM_Decide)->ArgsProduct({{4, 6, 8}, {0, 1}});

void BM_Oracle(benchmark::State& state) {
  const auto& c = curve_of_degree(static_cast<int>(state.range(0)), true);
  const PencilSetup s = setup(c.curve, {1, 0, 0});
  for (auto _ : state) benchmark::DoNotOptimize(constant_moduli_oracle(s, 12, kSeed, kTol));
}
BENCHMARK(BM_Oracle)->Arg(4)->Arg(6)->Arg(8);

void BM_SpecialLines(benchmark::State& state) {
  const auto& c = curve_of_degree(static_cast<int>(state.range(0)), state.range(1) != 0);
  const PencilSetup s = setup(c.curve, {1, 0, 0});
  for (auto _ : state) benchmark::DoNotOptimize(special_lines(s, kTol));
}
BENCHMARK(BM_SpecialLines)->ArgsProduct({{4, 6}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_TLocus(benchmark::State& state) {
  const auto& c = curve_of_degree(static_cast<int>(state.range(0)), true);
  const PencilSetup s = setup(c.curve, {1, 0, 0});
  for (auto _ : state) benchmark::DoNotOptimize(t_locus(s, 12, kSeed, kTol));
}
BENCHMARK(BM_TLocus)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_SingularPoints(benchmark::State& state) {
  const auto& c = curve_of_degree(static_cast<int>(state.range(0)), true);
  for (auto _ : state) benchmark::DoNotOptimize(singular_points(c.curve, kTol));
}
BENCHMARK(BM_SingularPoints)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
