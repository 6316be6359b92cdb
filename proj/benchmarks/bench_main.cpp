#include <benchmark/benchmark.h>

#include <vector>

#include "copack/copositivity.hpp"
#include "copack/corpus.hpp"
#include "copack/graphs.hpp"
#include "copack/kernels.hpp"
#include "copack/kissing.hpp"
#include "copack/lp.hpp"
#include "copack/rng.hpp"
#include "copack/symmat.hpp"

namespace {

copack::Symmat random_symmetric(int n, uint64_t seed) {
  copack::Rng rng(seed);
  copack::Symmat m(n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) m.set(i, j, rng.uniform(-1.0, 1.0));
  return m;
}

void BM_EigSym(benchmark::State& state) {
  const auto m = random_symmetric(static_cast<int>(state.range(0)), 11);
  for (auto _ : state) benchmark::DoNotOptimize(copack::eig_sym(m));
}
BENCHMARK(BM_EigSym)->Arg(8)->Arg(16)->Arg(32);

void BM_SolveLpDense(benchmark::State& state) {
  copack::Rng rng(17);
  copack::LpProblem p(12);
  for (int j = 0; j < 12; ++j) {
    p.objective[j] = rng.uniform(-1.0, 1.0);
    p.lower[j] = -2.0;
    p.upper[j] = 2.0;
  }
  for (int i = 0; i < 30; ++i) {
    std::vector<double> a(12);
    for (auto& v : a) v = rng.uniform(-1.0, 1.0);
    p.add_row(std::move(a), copack::Sense::Le, rng.uniform(1.0, 3.0));
  }
  for (auto _ : state) benchmark::DoNotOptimize(copack::solve_lp(p));
}
BENCHMARK(BM_SolveLpDense);

void BM_SolveLpTallGrid(benchmark::State& state) {
  // Delsarte-shaped instance: few nonnegative variables, thousands of rows.
  const int d = 10;
  copack::JacobiBasis basis(8, d);
  copack::LpProblem p(d + 1);
  for (int k = 0; k <= d; ++k) {
    p.lower[k] = 0.0;
    p.objective[k] = 1.0;
  }
  const int grid = static_cast<int>(state.range(0));
  for (int j = 0; j < grid; ++j) {
    const double s = -1.0 + 1.5 * static_cast<double>(j) / (grid - 1);
    std::vector<double> row(d + 1);
    for (int k = 0; k <= d; ++k) row[k] = basis.eval(k, s);
    p.add_row(std::move(row), copack::Sense::Le, -1.0);
  }
  for (auto _ : state) benchmark::DoNotOptimize(copack::solve_lp(p));
}
BENCHMARK(BM_SolveLpTallGrid)->Arg(2000)->Arg(20000);

void BM_IsCopositiveExact(benchmark::State& state) {
  const auto g = copack::gnp_graph(static_cast<int>(state.range(0)), 0.4, 23);
  const auto k = copack::dkp_matrix(g, copack::alpha(g) + 0.25);
  for (auto _ : state) benchmark::DoNotOptimize(copack::is_copositive_exact(k));
}
BENCHMARK(BM_IsCopositiveExact)->Arg(8)->Arg(10)->Arg(12);

void BM_RefuteGrid(benchmark::State& state) {
  const auto m = random_symmetric(5, 31);
  for (auto _ : state)
    benchmark::DoNotOptimize(copack::refute_copositive_grid(m, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_RefuteGrid)->Arg(50)->Arg(100);

void BM_JacobiEval(benchmark::State& state) {
  copack::JacobiBasis basis(8, 24);
  double t = -1.0;
  for (auto _ : state) {
    t = t >= 1.0 ? -1.0 : t + 1e-3;
    benchmark::DoNotOptimize(basis.eval(24, t));
  }
}
BENCHMARK(BM_JacobiEval);

void BM_ConfigEnergy(benchmark::State& state) {
  copack::Rng rng(37);
  const int n = static_cast<int>(state.range(0));
  std::vector<std::vector<double>> pts(n);
  for (auto& p : pts) p = rng.unit_vector(3);
  copack::PointConfig config(3, std::move(pts));
  copack::PolyKernel kernel(3, {0.1, -0.7, 0.3, 0.2, -0.4});
  for (auto _ : state) benchmark::DoNotOptimize(copack::config_energy(kernel, config));
}
BENCHMARK(BM_ConfigEnergy)->Arg(8)->Arg(32);

void BM_SeparateSphere(benchmark::State& state) {
  copack::PolyKernel kernel(3, {0.3, -1.1, 0.25, -0.7});
  for (auto _ : state)
    benchmark::DoNotOptimize(copack::separate_sphere(kernel, 6, 4, 5));
}
BENCHMARK(BM_SeparateSphere);

void BM_Alpha(benchmark::State& state) {
  const auto g = copack::gnp_graph(static_cast<int>(state.range(0)), 0.3, 41);
  for (auto _ : state) benchmark::DoNotOptimize(copack::alpha(g));
}
BENCHMARK(BM_Alpha)->Arg(20)->Arg(30);

void BM_DkpThreshold(benchmark::State& state) {
  const auto g = copack::petersen_graph();
  for (auto _ : state) benchmark::DoNotOptimize(copack::dkp_threshold(g, 1e-3));
}
BENCHMARK(BM_DkpThreshold);

void BM_DelsarteBound(benchmark::State& state) {
  copack::KissingInstance inst;
  inst.dim = 8;
  inst.degree = 6;
  inst.mode = copack::BoundMode::Delsarte;
  for (auto _ : state) benchmark::DoNotOptimize(copack::delsarte_bound(inst));
}
BENCHMARK(BM_DelsarteBound);

}  // namespace

BENCHMARK_MAIN();
