// Serial reference kernels against the OpenMP ones on the workloads the
// Fine interior computation generates. Thread count follows OMP_NUM_THREADS.

#include <benchmark/benchmark.h>

#include <random>

#include "finepoly/kernels.hpp"
#include "finepoly/polytope.hpp"

using namespace finepoly;

namespace {

std::vector<RationalVector> random_points(std::size_t n, std::size_t d, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> num(-40, 40), den(1, 6);
  std::vector<RationalVector> out(n);
  for (auto& p : out)
    for (std::size_t i = 0; i < d; ++i) p.push_back(Rational(num(rng), den(rng)));
  for (auto& p : out)
    for (auto& c : p) c.canonicalize();
  return out;
}

std::vector<LatticeVector> random_normals(std::size_t n, std::size_t d, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> c(-9, 9);
  std::vector<LatticeVector> out(n);
  for (auto& v : out)
    for (std::size_t i = 0; i < d; ++i) v.emplace_back(c(rng));
  return out;
}

template <bool Parallel>
void BM_MinPairings(benchmark::State& state) {
  auto pts = random_points(40, 3, 1);
  auto normals = random_normals(static_cast<std::size_t>(state.range(0)), 3, 2);
  for (auto _ : state) {
    auto r = Parallel ? min_pairings(pts, normals) : reference::min_pairings(pts, normals);
    benchmark::DoNotOptimize(r);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <bool Parallel>
void BM_MostViolated(benchmark::State& state) {
  auto pts = random_points(20, 3, 3);
  auto normals = random_normals(static_cast<std::size_t>(state.range(0)), 3, 4);
  std::vector<Rational> thresholds(normals.size(), Rational(0));
  for (auto _ : state) {
    auto r = Parallel ? most_violated(pts, normals, thresholds, 12)
                      : reference::most_violated(pts, normals, thresholds, 12);
    benchmark::DoNotOptimize(r);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

// lattice points of a dilated cross-polytope
template <bool Parallel>
void BM_BoxLatticePoints(benchmark::State& state) {
  const long k = state.range(0);
  IntegerInequalities ineq;
  for (int s = 0; s < 8; ++s) {
    LatticeVector n{Integer(s & 1 ? 1 : -1), Integer(s & 2 ? 1 : -1), Integer(s & 4 ? 1 : -1)};
    ineq.normals.push_back(n);
    ineq.offsets.push_back(Integer(-k));
  }
  LatticeVector lo(3, Integer(-k)), hi(3, Integer(k));
  for (auto _ : state) {
    auto r = Parallel ? box_lattice_points(ineq, lo, hi) : reference::box_lattice_points(ineq, lo, hi);
    benchmark::DoNotOptimize(r);
  }
}

template <bool Parallel>
void BM_BoxViolations(benchmark::State& state) {
  std::vector<RationalVector> p_pts{{0, 0, 0}, {3, 0, 0}, {1, 3, 0}, {2, 0, 3}};
  std::vector<RationalVector> x_pts{{Rational(4, 3), 1, 1}, {Rational(5, 3), 1, 1}};
  const std::int64_t radius = state.range(0);
  for (auto _ : state) {
    auto r = Parallel ? box_violations(p_pts, x_pts, radius, 12) : reference::box_violations(p_pts, x_pts, radius, 12);
    benchmark::DoNotOptimize(r);
  }
  const std::int64_t side = 2 * radius + 1;
  state.SetItemsProcessed(state.iterations() * side * side * side);
}

}  // namespace

BENCHMARK(BM_MinPairings<false>)->Arg(1000)->Arg(20000);
BENCHMARK(BM_MinPairings<true>)->Arg(1000)->Arg(20000);
BENCHMARK(BM_MostViolated<false>)->Arg(1000)->Arg(20000);
BENCHMARK(BM_MostViolated<true>)->Arg(1000)->Arg(20000);
BENCHMARK(BM_BoxLatticePoints<false>)->Arg(10)->Arg(30);
BENCHMARK(BM_BoxLatticePoints<true>)->Arg(10)->Arg(30);
BENCHMARK(BM_BoxViolations<false>)->Arg(4)->Arg(10);
BENCHMARK(BM_BoxViolations<true>)->Arg(4)->Arg(10);

BENCHMARK_MAIN();
