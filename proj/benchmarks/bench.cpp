// Micro benchmarks for the hot paths: coefficient-table construction,
// interpolant evaluation, counting functions, and potential evaluation.
// Run with --benchmark_filter=<regex> to select a subset.

#include <benchmark/benchmark.h>

#include <complex>
#include <utility>
#include <vector>

#include "varkit/divdiff.hpp"
#include "varkit/growth.hpp"
#include "varkit/smoothing.hpp"
#include "varkit/values.hpp"
#include "varkit/variety.hpp"
#include "varkit/weight.hpp"

namespace {

using namespace varkit;

MultiplicityVariety pi_lattice(int nmax) {
  const mpfr_prec_t prec = kStoragePrecision;
  const BigFloat limit = BigFloat::pow2(nmax, prec);
  const BigFloat pi = BigFloat::pi(prec);
  std::vector<std::pair<BigComplex, int>> pts;
  pts.emplace_back(BigComplex(prec), 1);
  for (long k = 1;; ++k) {
    BigFloat r = pi;
    r *= static_cast<double>(k);
    if (r > limit) break;
    BigComplex zp(prec), zm(prec);
    zp.re() = r;
    r.negate();
    zm.re() = r;
    pts.emplace_back(std::move(zp), 1);
    pts.emplace_back(std::move(zm), 1);
  }
  return MultiplicityVariety(std::move(pts), nmax);
}

// Smallest truncation octave whose lattice has at least `points` nodes.
int octave_for_points(long points) {
  for (int n = 1; n <= 14; ++n) {
    if (2 * (1L << n) / 3 >= points) return n;  // ~2*2^n/pi nodes per octave n
  }
  return 14;
}

void BM_phi_table(benchmark::State& state) {
  const long q = state.range(0);
  const MultiplicityVariety V = pi_lattice(octave_for_points(q));
  const ValueSequence W = ValueSequence::delta_first_top(V, 128);
  const int use = static_cast<int>(std::min<long>(q, V.size()));
  for (auto _ : state) {
    benchmark::DoNotOptimize(phi_table(V, W, use, 128));
  }
  state.SetComplexityN(use);
}
BENCHMARK(BM_phi_table)->Arg(64)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond)
    ->Complexity(benchmark::oNSquared);

void BM_newton_eval(benchmark::State& state) {
  const MultiplicityVariety V = pi_lattice(9);
  const ValueSequence W = ValueSequence::delta_first_top(V, 128);
  const DividedDifferenceTable T = phi_table(V, W, V.size(), 128);
  const BigComplex z(std::complex<double>(17.25, 4.5), 128);
  for (auto _ : state) {
    benchmark::DoNotOptimize(newton_eval(V, T, V.size(), z, 0));
  }
}
BENCHMARK(BM_newton_eval)->Unit(benchmark::kMicrosecond);

void BM_counting_N(benchmark::State& state) {
  const MultiplicityVariety V = pi_lattice(12);
  const std::complex<double> center(0.0, 0.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(counting_N(V, center, 4096.0));
  }
}
BENCHMARK(BM_counting_N)->Unit(benchmark::kMicrosecond);

void BM_octave_norm(benchmark::State& state) {
  const MultiplicityVariety V = pi_lattice(10);
  const ValueSequence W = ValueSequence::delta_first_top(V, 128);
  const DividedDifferenceTable T = phi_table(V, W, V.size(), 128);
  for (auto _ : state) {
    benchmark::DoNotOptimize(octave_norm(V, T, 10));
  }
}
BENCHMARK(BM_octave_norm)->Unit(benchmark::kMicrosecond);

void BM_eval_U(benchmark::State& state) {
  const MultiplicityVariety V = pi_lattice(12);
  const Potential P(V);
  const std::complex<double> z(301.5, 120.25);
  for (auto _ : state) {
    benchmark::DoNotOptimize(P.eval_U(z, 8.0));
  }
}
BENCHMARK(BM_eval_U)->Unit(benchmark::kMicrosecond);

void BM_laplacian_V(benchmark::State& state) {
  const MultiplicityVariety V = pi_lattice(12);
  const Potential P(V);
  const std::complex<double> z(301.5, 120.25);
  for (auto _ : state) {
    benchmark::DoNotOptimize(P.laplacian_V(z, 0.5));
  }
}
BENCHMARK(BM_laplacian_V)->Unit(benchmark::kMicrosecond);

void BM_eval_dbar_F(benchmark::State& state) {
  std::vector<std::pair<std::complex<double>, int>> pts;
  for (int j = 0; j <= 9; ++j) {
    const double r = 1.3 * static_cast<double>(1 << j);
    pts.emplace_back(std::complex<double>(r, 0.1 * j), 1);
  }
  const MultiplicityVariety V =
      MultiplicityVariety::from_doubles(pts, MultiplicityVariety::kComplete);
  ValueSequence W(V, 128);
  for (int j = 0; j < V.size(); ++j) W.set(j, 0, BigComplex(std::complex<double>(1.0, 0.0), 128));
  const SmoothInterpolant S(V, W, 128);
  const BigComplex z(std::complex<double>(9.0, 9.0), 128);
  for (auto _ : state) {
    benchmark::DoNotOptimize(S.eval_dbar_F(z));
  }
}
BENCHMARK(BM_eval_dbar_F)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
