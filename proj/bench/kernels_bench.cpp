// Serial reference kernels against their OpenMP counterparts.
//   ./kernels_bench --benchmark_filter=laplacian

#include <benchmark/benchmark.h>

#include <map>
#include <vector>

#include "cslce/kernels.hpp"
#include "cslce/synth.hpp"
#include "helpers.hpp"

using namespace cslce;
namespace k = cslce::kernels;

namespace {

const SparseGraph& graph_of(Index n) {
  static std::map<Index, SparseGraph> cache;
  auto it = cache.find(n);
  if (it == cache.end()) {
    Rng rng(1);
    it = cache.emplace(n, testing::random_graph(n, 8 * n, rng)).first;
  }
  return it->second;
}

const PointCloud& cloud_of(Index per_cluster) {
  static std::map<Index, PointCloud> cache;
  auto it = cache.find(per_cluster);
  if (it == cache.end()) {
    Rng rng(2);
    it = cache.emplace(per_cluster, gen_geometric(Shape::kMoons, per_cluster, 0.05, rng)).first;
  }
  return it->second;
}

template <auto Kernel>
void BM_laplacian(benchmark::State& state) {
  const auto& g = graph_of(state.range(0));
  const auto n = static_cast<std::size_t>(g.num_vertices());
  std::vector<double> x(n, 1.0), y(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = static_cast<double>(i % 7);
  for (auto _ : state) {
    Kernel(g.csr(), k::LaplacianAction::kAbsTranspose, x, y);
    benchmark::DoNotOptimize(y.data());
  }
  state.SetItemsProcessed(state.iterations() * g.nnz());
}

template <auto Kernel>
void BM_random_walk(benchmark::State& state) {
  const auto& g = graph_of(state.range(0));
  const auto n = static_cast<std::size_t>(g.num_vertices());
  std::vector<double> x(n, 1.0), y(n);
  for (auto _ : state) {
    Kernel(g.csr(), x, y);
    benchmark::DoNotOptimize(y.data());
  }
  state.SetItemsProcessed(state.iterations() * g.nnz());
}

template <auto Kernel>
void BM_knn(benchmark::State& state) {
  const auto& pc = cloud_of(state.range(0));
  const Index kk = 8;
  const auto m = static_cast<std::size_t>(pc.size() * kk);
  std::vector<Index> nbr(m);
  std::vector<double> d2(m);
  for (auto _ : state) {
    Kernel(pc.view(), kk, nbr, d2);
    benchmark::DoNotOptimize(nbr.data());
  }
  state.SetItemsProcessed(state.iterations() * pc.size() * pc.size());
}

}  // namespace

BENCHMARK(BM_laplacian<k::serial::laplacian_apply>)->Name("laplacian/serial")->Arg(1 << 14)->Arg(1 << 18);
BENCHMARK(BM_laplacian<k::omp::laplacian_apply>)->Name("laplacian/omp")->Arg(1 << 14)->Arg(1 << 18)->UseRealTime();
BENCHMARK(BM_random_walk<k::serial::random_walk_step>)->Name("random_walk/serial")->Arg(1 << 14)->Arg(1 << 18);
BENCHMARK(BM_random_walk<k::omp::random_walk_step>)->Name("random_walk/omp")->Arg(1 << 14)->Arg(1 << 18)->UseRealTime();
BENCHMARK(BM_knn<k::serial::knn_search>)->Name("knn/serial")->Arg(200)->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_knn<k::omp::knn_search>)->Name("knn/omp")->Arg(200)->Arg(1000)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
