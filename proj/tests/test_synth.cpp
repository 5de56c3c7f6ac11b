#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "cslce/laplacian.hpp"
#include "cslce/synth.hpp"
#include "helpers.hpp"

using namespace cslce;

namespace {

Index cluster_of(const std::vector<Index>& membership, Index v) { return membership[static_cast<std::size_t>(v)]; }

}  // namespace

TEST_CASE("ssbm sizes and contiguous blocks") {
  Rng rng(1);
  const auto lg = gen_ssbm(600, 3, 5 * std::log(600.0) / 600, std::log(600.0) / 600, rng);
  CHECK(lg.sizes() == std::vector<Index>{200, 200, 200});
  CHECK(lg.clusters[1][0] == 200);
  CHECK(lg.clusters[1][199] == 399);
  CHECK_THROWS_AS(gen_ssbm(100, 3, 0.5, 0.1, rng), ConfigError);
  CHECK_THROWS_AS(gen_ssbm(99, 3, 0.1, 0.5, rng), ConfigError);
}

TEST_CASE("deterministic extremes") {
  Rng rng(2);
  const auto lg = gen_ssbm(9, 3, 1.0, 0.0, rng);
  CHECK(lg.graph.num_edges() == 9);
  for (Index v = 0; v < 9; ++v) CHECK(lg.graph.degree(v) == 2.0);

  SbmSpec spec{{3, 4, 5}, Matrix::Identity(3, 3)};
  const auto sbm = gen_sbm(spec, rng);
  CHECK(sbm.graph.num_edges() == 3 + 6 + 10);
}

TEST_CASE("retry budget") {
  Rng rng(3);
  CHECK_THROWS_AS(gen_ssbm(300, 3, 0.001, 0.0, rng, 5), GeneratorError);
}

TEST_CASE("edge probabilities within four standard errors") {
  const Index n = 300;
  const double p = 0.08, q = 0.02;
  Rng rng(4);
  double intra = 0.0, inter = 0.0;
  const int draws = 200;
  for (int d = 0; d < draws; ++d) {
    const auto lg = gen_ssbm(n, 3, p, q, rng);
    const auto member = lg.membership();
    for (const Edge& e : lg.graph.edges())
      (cluster_of(member, e.u) == cluster_of(member, e.v) ? intra : inter) += 1.0;
  }
  const double intra_pairs = 3.0 * 100 * 99 / 2 * draws, inter_pairs = 3.0 * 100 * 100 * draws;
  CHECK(std::abs(intra / intra_pairs - p) < 4 * std::sqrt(p * (1 - p) / intra_pairs));
  CHECK(std::abs(inter / inter_pairs - q) < 4 * std::sqrt(q * (1 - q) / inter_pairs));
}

TEST_CASE("non-symmetric sbm") {
  const double n = 1600;
  const double p = std::pow(std::log(n), 2) / n, q = 5 * std::log(n) / n;
  Rng rng(5);
  const auto lg = gen_sbm(SbmSpec::planted({200, 400, 1000}, p, q), rng);
  CHECK(lg.graph.num_vertices() == 1600);
  CHECK(lg.sizes() == std::vector<Index>{200, 400, 1000});

  double intra = 0.0;
  const int draws = 100;
  for (int d = 0; d < draws; ++d) {
    const auto g = gen_sbm(SbmSpec::planted({200, 400, 1000}, p, q), rng);
    const auto member = g.membership();
    for (const Edge& e : g.graph.edges())
      if (member[static_cast<std::size_t>(e.u)] == 0 && member[static_cast<std::size_t>(e.v)] == 0) intra += 2.0;
  }
  const double mean = intra / (200.0 * draws);
  CHECK(mean == doctest::Approx(199 * p).epsilon(0.02));
}

TEST_CASE("ssbm expected intra-degree") {
  const double n = 600, p = 5 * std::log(n) / n, q = std::log(n) / n;
  Rng rng(6);
  std::vector<double> means;
  for (int d = 0; d < 100; ++d) {
    const auto lg = gen_ssbm(600, 3, p, q, rng);
    const auto member = lg.membership();
    double s = 0.0;
    for (const Edge& e : lg.graph.edges())
      if (member[static_cast<std::size_t>(e.u)] == member[static_cast<std::size_t>(e.v)]) s += 2.0;
    means.push_back(s / 600);
  }
  double mean = 0.0, var = 0.0;
  for (double m : means) mean += m / 100;
  for (double m : means) var += (m - mean) * (m - mean) / 99;
  CHECK(std::abs(mean - 199 * p) < 3 * std::sqrt(var / 100));
}

TEST_CASE("intra_subgraph") {
  Rng rng(7);
  const auto full = gen_ssbm(12, 3, 1.0, 0.0, rng);
  CHECK(intra_subgraph(full).edges().size() == full.graph.edges().size());

  const std::vector<Index> labels{0, 0, 0, 1, 1, 1};
  const auto lg = make_labeled_graph(testing::triangles(2, true), labels);
  const auto g = intra_subgraph(lg);
  CHECK(g.num_edges() == 6);
  CHECK(g.weight(2, 3) == 0.0);

  // Dense enough that no vertex loses all its neighbours.
  const double n = 600, q = std::log(n) / n;
  double removed = 0.0;
  for (int d = 0; d < 50; ++d) {
    const auto s = gen_ssbm(600, 3, 0.1, q, rng);
    removed += static_cast<double>(s.graph.num_edges() - intra_subgraph(s).num_edges());
  }
  const double expected = 120000 * q;
  CHECK(removed / 50 == doctest::Approx(expected).epsilon(0.03));
}

TEST_CASE("labeled graphs order clusters by size") {
  const std::vector<Index> labels{7, 7, 7, 2, 2, 2, 2, 2, 2};
  std::vector<Edge> e{{0, 1, 1}, {1, 2, 1}, {3, 4, 1}, {4, 5, 1}, {5, 6, 1}, {6, 7, 1}, {7, 8, 1}};
  const auto lg = make_labeled_graph(build_graph(9, e), labels);
  CHECK(lg.clusters[0] == VertexSet{0, 1, 2});
  CHECK(lg.membership()[4] == 1);

  const std::vector<Index> perm{8, 7, 6, 5, 4, 3, 2, 1, 0};
  const auto p = permute(lg, perm);
  CHECK(p.clusters[0] == VertexSet{6, 7, 8});
  CHECK(p.graph.weight(8, 7) == 1.0);
}

TEST_CASE("geometric shapes") {
  Rng rng(8);
  const auto pc = gen_geometric(Shape::kCircles, 100, 0.0, rng);
  CHECK(pc.size() == 300);
  CHECK(pc.dim() == 100);
  for (Index i = 0; i < pc.size(); ++i)
    if (pc.labels[static_cast<std::size_t>(i)] == 0) CHECK(pc.points.row(i).head<2>().norm() == doctest::Approx(1.0));

  Rng r1(9), r2(9);
  const auto a = gen_geometric(Shape::kMoons, 50, 0.1, r1);
  const auto b = gen_geometric(Shape::kMoons, 50, 0.1, r2);
  CHECK(a.points == b.points);

  CHECK(parse_shape("lines") == Shape::kLines);
  CHECK(to_string(Shape::kMoons) == "moons");
  CHECK_THROWS_AS(parse_shape("squares"), ConfigError);
}

TEST_CASE("knn graph") {
  SUBCASE("two points") {
    PointCloud pc;
    pc.points.resize(2, 1);
    pc.points << 0.0, 1.5;
    pc.labels = {0, 1};
    const auto g = knn_graph(pc, {.k = 1, .sigma = 2.0});
    CHECK(g.weight(0, 1) == doctest::Approx(std::exp(-2.25 / 4.0)));
  }
  SUBCASE("symmetric with few inter-cluster edges") {
    Rng rng(10);
    const auto pc = gen_geometric(Shape::kCircles, 100, 0.0, rng);
    const auto lg = knn_labeled_graph(pc, {});
    const Matrix a = lg.graph.dense_adjacency();
    CHECK((a - a.transpose()).cwiseAbs().maxCoeff() == 0.0);
    const auto member = lg.membership();
    double inter = 0.0;
    const auto edges = lg.graph.edges();
    for (const Edge& e : edges)
      if (member[static_cast<std::size_t>(e.u)] != member[static_cast<std::size_t>(e.v)]) inter += 1.0;
    CHECK(inter / static_cast<double>(edges.size()) < 0.05);
    for (Index v = 0; v < lg.graph.num_vertices(); ++v) CHECK(lg.graph.neighbors(v).size() >= 8);
  }
}
