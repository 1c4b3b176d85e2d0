#include <benchmark/benchmark.h>

#include <random>

#include "qrbf/bases.hpp"
#include "qrbf/gram.hpp"
#include "qrbf/quadrature.hpp"
#include "qrbf/spaces.hpp"
#include "qrbf/transforms.hpp"

using namespace qrbf;

static void BM_GaussHermite(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gauss_hermite(m, 1.7));
}
BENCHMARK(BM_GaussHermite)->Arg(20)->Arg(80)->Arg(200)->Arg(512);

static void BM_StarExp(benchmark::State& state) {
  const Quaternion q{0.3, 0.8, -0.2, 0.1}, p{-0.5, 0.1, 0.9, 0.4};
  for (auto _ : state) benchmark::DoNotOptimize(star_exp(2.0, q, p));
}
BENCHMARK(BM_StarExp);

static void BM_SliceKernel(benchmark::State& state) {
  const Quaternion q{0.3, 0.8, -0.2, 0.1}, p{-0.5, 0.1, 0.9, 0.4};
  for (auto _ : state) benchmark::DoNotOptimize(rbf_kernel_qslice(1.0, q, p));
}
BENCHMARK(BM_SliceKernel);

static void BM_RbfSliceInnerProduct(benchmark::State& state) {
  const RbfSlice space{KernelParams(1.0), ImaginaryUnit::i()};
  const auto f = rbf_basis_series(1.0, 5);
  const auto g = rbf_basis_series(1.0, 7);
  const QuadOptions opts{static_cast<int>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(inner_product(space, f, g, opts));
}
BENCHMARK(BM_RbfSliceInnerProduct)->Arg(40)->Arg(80)->Arg(160);

static void BM_RbfCGram(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  const RbfC space{KernelParams(1.0), dim};
  std::vector<RbfCFunction> fs;
  for (const auto& n : graded_indices(dim, 3)) fs.emplace_back(rbf_basis_series_d(1.0, n));
  for (auto _ : state) benchmark::DoNotOptimize(gram_matrix(space, fs));
}
BENCHMARK(BM_RbfCGram)->Arg(1)->Arg(2);

static void BM_GaussianGramPsd(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  RealPoints pts(n);
  for (auto& p : pts) p = {u(rng), u(rng), u(rng)};
  for (auto _ : state) {
    const auto g = build_gram(KernelId::gaussian, {1.0}, pts);
    benchmark::DoNotOptimize(psd_check(g, 1e-10));
  }
}
BENCHMARK(BM_GaussianGramPsd)->Arg(16)->Arg(128)->Arg(512);

static void BM_SbTransformQuadrature(benchmark::State& state) {
  const L2Handle phi{[](double x) { return Quaternion{x * std::exp(-0.6 * x * x)}; }, L2Certificate{1.2, 1}};
  std::vector<L2Function> phis{phi};
  std::vector<Quaternion> pts;
  for (int a = 0; a < 64; ++a) pts.push_back({0.05 * a, 0.0, 0.03 * a, 0.0});
  for (auto _ : state) benchmark::DoNotOptimize(sb_transform_batch(2.0, phis, pts));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(pts.size()));
}
BENCHMARK(BM_SbTransformQuadrature);
BENCHMARK_MAIN();
