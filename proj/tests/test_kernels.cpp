#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cslce/kernels.hpp"
#include "cslce/synth.hpp"
#include "helpers.hpp"

using namespace cslce;
namespace k = cslce::kernels;

// Large enough to take the threaded path.
TEST_CASE("omp kernels agree bitwise with serial ones") {
  Rng rng(1);
  const auto g = testing::random_graph(20000, 80000, rng);
  const Vector x = Vector::Random(g.num_vertices());
  const auto n = static_cast<std::size_t>(x.size());
  std::vector<double> a(n), b(n);

  for (auto action : {k::LaplacianAction::kPlain, k::LaplacianAction::kTranspose, k::LaplacianAction::kAbs,
                      k::LaplacianAction::kAbsTranspose}) {
    k::serial::laplacian_apply(g.csr(), action, {x.data(), n}, a);
    k::omp::laplacian_apply(g.csr(), action, {x.data(), n}, b);
    CHECK(a == b);
  }
  k::serial::random_walk_step(g.csr(), {x.data(), n}, a);
  k::omp::random_walk_step(g.csr(), {x.data(), n}, b);
  CHECK(a == b);
}

TEST_CASE("knn search") {
  Rng rng(2);
  const auto pc = gen_geometric(Shape::kCircles, 100, 0.05, rng);
  const Index kk = 6;
  const auto m = static_cast<std::size_t>(pc.size() * kk);
  std::vector<Index> n1(m), n2(m);
  std::vector<double> d1(m), d2(m);
  k::serial::knn_search(pc.view(), kk, n1, d1);
  k::omp::knn_search(pc.view(), kk, n2, d2);
  CHECK(n1 == n2);
  CHECK(d1 == d2);

  // Brute-force check of one row.
  const Index i = 17;
  std::vector<std::pair<double, Index>> all;
  for (Index j = 0; j < pc.size(); ++j)
    if (j != i) all.emplace_back((pc.points.row(i) - pc.points.row(j)).squaredNorm(), j);
  std::sort(all.begin(), all.end());
  for (Index r = 0; r < kk; ++r) {
    CHECK(n1[static_cast<std::size_t>(i * kk + r)] == all[static_cast<std::size_t>(r)].second);
    CHECK(d1[static_cast<std::size_t>(i * kk + r)] == doctest::Approx(all[static_cast<std::size_t>(r)].first));
  }
}

TEST_CASE("ties in knn go to the smaller index") {
  // Points 1 and 2 are both at distance 1 from point 0.
  std::vector<double> c{0, 0, 1, 0, -1, 0, 5, 5};
  const k::PointView pv{c, 4, 2};
  std::vector<Index> nbr(4);
  std::vector<double> d2(4);
  k::serial::knn_search(pv, 1, nbr, d2);
  CHECK(nbr[0] == 1);
}
