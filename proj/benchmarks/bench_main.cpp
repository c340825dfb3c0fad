#include <benchmark/benchmark.h>

#include <random>

#include "ringmap/ringmap.hpp"

namespace {

using namespace ringmap;

HarmonicMap random_map(int modes, double rho, unsigned seed) {
  std::mt19937 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<Complex> a(static_cast<size_t>(2 * modes + 1), Complex(0.0, 0.0));
  std::vector<Complex> b(a.size(), Complex(0.0, 0.0));
  for (int k = 1; k <= modes; ++k) {
    const double decay = std::pow(0.6, k);
    a[static_cast<size_t>(modes + k)] = decay * Complex(gauss(rng), gauss(rng));
    b[static_cast<size_t>(modes + k)] = decay * Complex(gauss(rng), gauss(rng));
    const double grow = std::pow(rho, k); // keep negative-frequency terms bounded
    a[static_cast<size_t>(modes - k)] = grow * decay * Complex(gauss(rng), gauss(rng));
    b[static_cast<size_t>(modes - k)] = grow * decay * Complex(gauss(rng), gauss(rng));
  }
  return HarmonicMap(AnnulusSource(rho), Complex(0.3, 0.0), Complex(0.1, 0.2), std::move(a),
                     std::move(b));
}

void BM_DirichletEnergy(benchmark::State& state) {
  const auto map = random_map(static_cast<int>(state.range(0)), 0.5, 7);
  for (auto _ : state) benchmark::DoNotOptimize(map.dirichlet_energy());
}
BENCHMARK(BM_DirichletEnergy)->Arg(16)->Arg(64);

void BM_ExtendFromBoundary(benchmark::State& state) {
  const int modes = static_cast<int>(state.range(0));
  const int samples = 4 * modes;
  std::vector<Complex> outer(static_cast<size_t>(samples)), inner(outer.size());
  for (int j = 0; j < samples; ++j) {
    const double t = 2.0 * std::numbers::pi * j / samples;
    outer[static_cast<size_t>(j)] = std::polar(1.0, t);
    inner[static_cast<size_t>(j)] = std::polar(2.0 / 3.0, t);
  }
  const AnnulusSource source(0.5);
  for (auto _ : state)
    benchmark::DoNotOptimize(extend_from_boundary(outer, inner, source, modes));
}
BENCHMARK(BM_ExtendFromBoundary)->Arg(16)->Arg(64);

void BM_FitHopfConstant(benchmark::State& state) {
  const auto map = nitsche_minimizer(AnnulusPair(0.5, 2.0 / 3.0));
  for (auto _ : state) benchmark::DoNotOptimize(fit_hopf_constant(map));
}
BENCHMARK(BM_FitHopfConstant);

void BM_JacobianScan(benchmark::State& state) {
  const auto map = random_map(32, 0.5, 11);
  for (auto _ : state) benchmark::DoNotOptimize(jacobian_scan(map, 64, 256));
}
BENCHMARK(BM_JacobianScan);

void BM_ComputeModulus(benchmark::State& state) {
  const auto outer = JordanCurve::circle({0.0, 0.0}, 1.0);
  const auto inner = JordanCurve::circle({0.2, 0.0}, 0.3);
  for (auto _ : state) benchmark::DoNotOptimize(compute_modulus(outer, inner));
}
BENCHMARK(BM_ComputeModulus);

void BM_LiftMesh(benchmark::State& state) {
  const AnnulusPair pair(0.5, 2.0 / 3.0);
  const auto map = nitsche_minimizer(pair);
  const double c = nitsche_c(pair);
  for (auto _ : state) benchmark::DoNotOptimize(lift(map, c, 64, 256));
}
BENCHMARK(BM_LiftMesh);

void BM_MinimizeObjectiveStep(benchmark::State& state) {
  // One boundary_values -> extend -> energy pipeline evaluation.
  const auto curve = JordanCurve::circle({0.0, 0.0}, 2.0 / 3.0);
  const auto rep = BoundaryReparam::uniform(8);
  const AnnulusSource source(0.5);
  for (auto _ : state) {
    auto outer = boundary_values(rep, JordanCurve::circle({0.0, 0.0}, 1.0), 256);
    auto inner = boundary_values(rep, curve, 256);
    const auto map = extend_from_boundary(outer, inner, source, 64);
    benchmark::DoNotOptimize(map.dirichlet_energy());
  }
}
BENCHMARK(BM_MinimizeObjectiveStep);

} // namespace

BENCHMARK_MAIN();
