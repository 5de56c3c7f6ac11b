#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numeric>

#include "cslce/cslce.hpp"
#include "cslce/metrics.hpp"
#include "cslce/synth.hpp"
#include "helpers.hpp"

using namespace cslce;

TEST_CASE("diffuse_seeds") {
  const auto g = testing::triangles(2, true);
  const VertexSet seeds{0, 4};
  const Vector v0 = diffuse_seeds(g, seeds, 0);
  CHECK(v0[0] == g.degree(0));
  CHECK(v0[4] == g.degree(4));
  CHECK(v0.sum() == g.degree(0) + g.degree(4));

  const Matrix a = g.dense_adjacency();
  const Matrix p = a * a.rowwise().sum().cwiseInverse().asDiagonal();
  Vector want = v0;
  for (Index t = 1; t <= 5; ++t) {
    want = p * want;
    const Vector got = diffuse_seeds(g, seeds, t);
    CHECK((got - want).norm() < 1e-12);
    CHECK(std::abs(got.sum() - v0.sum()) < 1e-9 * v0.sum());
  }

  const auto apart = testing::triangles(2);
  const Vector w = diffuse_seeds(apart, {1}, 4);
  CHECK(w.tail(3).norm() == 0.0);
  CHECK_THROWS_AS(diffuse_seeds(g, {}, 2), ConfigError);
}

TEST_CASE("candidate_set") {
  Vector v = Vector::LinSpaced(1000, 0.0, 1.0);
  CHECK(candidate_set(v, 200, 0.1).size() == 220);
  CHECK(candidate_set(v, 200, 0.1).contains(999));
  CHECK(candidate_set(v, 950, 0.1).size() == 1000);
}

TEST_CASE("size arithmetic") {
  CHECK(indicator_sparsity(200, 0.4) == 120);
  CHECK(indicator_sparsity(3, 0.4) == 1);
  CHECK(indicator_sparsity(1, 0.5) == 1);

  Rng rng(1);
  const auto g = testing::random_graph(400, 1200, rng);
  const auto l = random_walk_laplacian(g);
  std::vector<Index> ids(220);
  std::iota(ids.begin(), ids.end(), 50);
  CHECK(removal_set(l, VertexSet(ids), 0.4).size() == 88);
}

TEST_CASE("removal_set on triangles") {
  SUBCASE("disconnected: all scores zero, lowest index wins") {
    const auto g = testing::triangles(2);
    const auto l = random_walk_laplacian(g);
    CHECK(removal_scores(l, {0, 1, 2}).norm() == 0.0);
    CHECK(removal_set(l, {0, 1, 2}, 0.4) == VertexSet{0});
  }
  SUBCASE("bridged: the boundary scores positive") {
    const auto g = testing::triangles(2, true);
    const auto l = random_walk_laplacian(g);
    const VertexSet omega{0, 1, 2, 3};
    const Vector s = removal_scores(l, omega);

    const Matrix dl = testing::dense_laplacian(g);
    const Vector w = (dl * omega.indicator(6)).cwiseAbs();
    for (Index j = 0; j < omega.size(); ++j)
      CHECK(s[j] == doctest::Approx(dl.col(omega[j]).cwiseAbs().dot(w)));
    CHECK(s[2] > 0.0);
    CHECK(s[3] > 0.0);

    Index top = 0;
    s.maxCoeff(&top);
    const auto t = removal_set(l, omega, 0.25);
    CHECK(t.size() == 1);
    CHECK_FALSE(t.contains(omega[top]));
  }
}

TEST_CASE("solve_sparse_indicator on triangles") {
  const auto g = testing::triangles(2);
  const auto l = random_walk_laplacian(g);
  const auto small = solve_sparse_indicator(l, {0}, 3, 0.4);
  CHECK(small.sparsity == 1);

  const auto x = solve_sparse_indicator(l, {0}, 4, 0.4);
  CHECK(x.sparsity == 2);
  for (Index v = 0; v < 6; ++v) CHECK(x.value(v) == doctest::Approx(v == 1 || v == 2 ? 1.0 : 0.0).epsilon(1e-8));

  // y computed through -L 1_T agrees with the direct image.
  const Vector direct = indicator_image(l, complement({0}, 6));
  const Vector via_t = -indicator_image(l, {0});
  CHECK((direct - via_t).norm() < 1e-12);
}

TEST_CASE("exact recovery on disconnected sbm") {
  Rng rng(12);
  const auto lg = gen_ssbm(300, 3, 0.3, 0.0, rng);
  const auto l = random_walk_laplacian(lg.graph);
  const VertexSet& c1 = lg.clusters[0];
  // |C1 \ T| = 60 = s.
  std::vector<Index> ids(c1.begin(), c1.begin() + 40);
  const VertexSet t(ids);
  const auto x = solve_sparse_indicator(l, t, 100, 0.4);
  for (Index v = 0; v < 300; ++v) {
    const double want = c1.contains(v) && !t.contains(v) ? 1.0 : 0.0;
    CHECK(std::abs(x.value(v) - want) < 1e-8);
  }
  CHECK(x.sp.residual < 1e-8);
}

TEST_CASE("extract_cluster on triangles") {
  const auto g = testing::triangles(2);
  CslceParams p{.n_hat = 3, .epsilon = 0.3, .t = 3, .gamma = 0.33, .r_threshold = 0.5};
  const auto r = extract_cluster(g, {0}, p);
  CHECK(r.omega == VertexSet{0, 1, 2, 3});
  CHECK(r.removal == VertexSet{0});
  CHECK(r.cluster == VertexSet{0, 1, 2});
  CHECK(jaccard(r.cluster, {0, 1, 2}) == 1.0);

  // gamma = 0.34 leaves s = floor(0.66 * 3) = 1: the best single column fits
  // with coefficient exactly 0.5, which is not above R.
  p.gamma = 0.34;
  const auto hazard = extract_cluster(g, {0}, p);
  CHECK(hazard.x_sharp.sparsity == 1);
  CHECK(hazard.x_sharp.value(1) + hazard.x_sharp.value(2) == doctest::Approx(0.5));
  CHECK(hazard.cluster == VertexSet{0});
}

TEST_CASE("pipeline invariants") {
  Rng rng(13);
  const double n = 600;
  for (int trial = 0; trial < 5; ++trial) {
    const auto lg = gen_ssbm(600, 3, 5 * std::log(n) / n, std::log(n) / n, rng);
    const VertexSet seeds{lg.clusters[0][3], lg.clusters[0][50], lg.clusters[0][120]};
    CslceParams p{.n_hat = 200};
    p.include_seeds_in_output = false;
    const auto r = extract_cluster(lg.graph, seeds, p);
    CHECK(set_difference(r.removal, r.omega).empty());
    CHECK(set_intersection(r.accepted, r.removal).empty());
    CHECK(r.cluster == set_union(r.accepted, r.removal));
    CHECK((r.x_sharp.sp.solution.array() != 0.0).count() <= r.x_sharp.sparsity);
    CHECK(r.omega.size() == 220);
    CHECK(r.removal.size() == 88);
    CHECK(r.x_sharp.sparsity == 120);
  }
}

TEST_CASE("params are validated") {
  const auto g = testing::triangles(2);
  CHECK_THROWS_AS(extract_cluster(g, {0}, {.n_hat = 0}), ConfigError);
  CHECK_THROWS_AS(extract_cluster(g, {0}, {.n_hat = 3, .gamma = 0.6}), ConfigError);
  CHECK_THROWS_AS(extract_cluster(g, {0}, {.n_hat = 3, .r_threshold = 0.95}), ConfigError);
  CHECK_THROWS_AS(extract_cluster(g, {0}, {.n_hat = 3, .t = 0}), ConfigError);
  CHECK_THROWS(extract_cluster(g, {9}, {.n_hat = 3}));
}

TEST_CASE("extract_cluster is equivariant under relabelling") {
  Rng rng(14);
  const Index n = 300;
  std::vector<Edge> e;
  std::uniform_real_distribution<double> w(0.5, 1.5);
  const auto base = gen_ssbm(n, 3, 0.1, 0.01, rng);
  for (const Edge& x : base.graph.edges()) e.push_back({x.u, x.v, w(rng)});
  const auto g = build_graph(n, e);
  const VertexSet seeds{1, 40, 77};
  const CslceParams p{.n_hat = 100};
  const auto r = extract_cluster(g, seeds, p);

  const auto perm = random_permutation(n, rng);
  std::vector<Index> ps;
  for (Index s : seeds) ps.push_back(perm[static_cast<std::size_t>(s)]);
  const auto rp = extract_cluster(g.permuted(perm), VertexSet(ps), p);

  std::vector<Index> mapped;
  for (Index v : r.cluster) mapped.push_back(perm[static_cast<std::size_t>(v)]);
  CHECK(rp.cluster == VertexSet(mapped));
}

TEST_CASE("extract_all_clusters") {
  SUBCASE("three triangles") {
    const auto g = testing::triangles(3);
    const std::vector<VertexSet> seeds{{0}, {4}, {8}};
    const std::vector<CslceParams> p(3, CslceParams{.n_hat = 3, .epsilon = 0.3, .gamma = 0.33});
    const auto r = extract_all_clusters(g, seeds, p);
    CHECK(r.clusters == std::vector<VertexSet>{{0, 1, 2}, {3, 4, 5}, {6, 7, 8}});
  }
  SUBCASE("one seed set takes everything") {
    const auto g = testing::triangles(2, true);
    const auto r = extract_all_clusters(g, {{1}}, {CslceParams{.n_hat = 3}});
    CHECK(r.clusters.front() == VertexSet::all(6));
  }
  SUBCASE("partition covers V disjointly") {
    Rng rng(15);
    const double n = 600;
    const auto lg = gen_ssbm(600, 3, 5 * std::log(n) / n, std::log(n) / n, rng);
    std::vector<VertexSet> seeds;
    std::vector<CslceParams> p;
    for (const auto& c : lg.clusters) {
      seeds.push_back({c[0], c[10], c[20], c[30], c[40]});
      p.push_back({.n_hat = c.size()});
    }
    const auto r = extract_all_clusters(lg.graph, seeds, p);
    Index total = 0;
    VertexSet all;
    for (const auto& c : r.clusters) {
      total += c.size();
      all = set_union(all, c);
    }
    CHECK(total == 600);
    CHECK(all == VertexSet::all(600));
    CHECK(mean_accuracy(r.clusters, lg.clusters) > 0.7);
  }
}
