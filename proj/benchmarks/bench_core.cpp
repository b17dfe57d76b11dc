#include <benchmark/benchmark.h>

#include <random>

#include "cn/cell_complex.hpp"
#include "cn/circle.hpp"
#include "cn/map_io.hpp"
#include "cn/smith.hpp"
#include "cn/weights.hpp"

namespace {

cn::PLMultimap fixture(const char* name) {
  return cn::load_map(std::string(CN_FIXTURE_DIR) + "/" + name);
}

void BM_Homology(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cn::homology(n));
}
BENCHMARK(BM_Homology)->DenseRange(2, 12, 2);

void BM_CheckIdentification(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cn::check_identification(n));
  state.SetItemsProcessed(state.iterations() * ((std::int64_t{1} << (n + 1)) - 1));
}
BENCHMARK(BM_CheckIdentification)->Arg(8)->Arg(12)->Arg(16);

void BM_SmithNormalForm(benchmark::State& state) {
  const auto size = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> entry(-9, 9);
  cn::BigMatrix m(size, std::vector<cn::BigInt>(size));
  for (auto& row : m) {
    for (auto& v : row) v = entry(rng);
  }
  for (auto _ : state) benchmark::DoNotOptimize(cn::smith_normal_form(m));
}
BENCHMARK(BM_SmithNormalForm)->Arg(4)->Arg(8)->Arg(16);

void BM_SolvePositive(benchmark::State& state, const char* name) {
  auto sys = cn::balance_constraints(fixture(name));
  for (auto _ : state) benchmark::DoNotOptimize(cn::solve_positive(sys));
}
BENCHMARK_CAPTURE(BM_SolvePositive, fork, "fork.json");
BENCHMARK_CAPTURE(BM_SolvePositive, two_loops, "two_loops.json");
BENCHMARK_CAPTURE(BM_SolvePositive, union123, "union123.json");

void BM_Validate(benchmark::State& state) {
  auto f = fixture("fork.json");
  for (auto _ : state) benchmark::DoNotOptimize(cn::validate(f));
}
BENCHMARK(BM_Validate);

void BM_Hausdorff(benchmark::State& state) {
  const auto size = static_cast<std::size_t>(state.range(0));
  std::vector<cn::CirclePoint> a;
  std::vector<cn::CirclePoint> b;
  for (std::size_t i = 0; i < size; ++i) {
    a.emplace_back(cn::Rational(static_cast<std::int64_t>(2 * i + 1)) /
                   cn::Rational(static_cast<std::int64_t>(4 * size)));
    b.emplace_back(cn::Rational(static_cast<std::int64_t>(i)) /
                   cn::Rational(static_cast<std::int64_t>(size + 1)));
  }
  cn::Configuration ca(a);
  cn::Configuration cb(b);
  for (auto _ : state) benchmark::DoNotOptimize(cn::hausdorff_distance(ca, cb));
}
BENCHMARK(BM_Hausdorff)->Arg(5)->Arg(50);

}  // namespace

BENCHMARK_MAIN();
