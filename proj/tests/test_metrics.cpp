#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cslce/expr.hpp"
#include "cslce/metrics.hpp"
#include "cslce/synth.hpp"

using namespace cslce;

TEST_CASE("jaccard") {
  CHECK(jaccard({1, 2, 3}, {2, 3, 4}) == 0.5);
  CHECK(jaccard({1, 2}, {1, 2}) == 1.0);
  CHECK(jaccard({1}, {2}) == 0.0);
  CHECK(jaccard({}, {}) == 1.0);
}

TEST_CASE("sym_diff_ratio") {
  CHECK(sym_diff_ratio({1, 2, 3, 4}, {1, 2, 3, 4}) == 0.0);
  CHECK(sym_diff_ratio({1, 2, 3, 4}, {1, 2, 3, 4, 9}) == 0.25);
  CHECK(sym_diff_ratio({1, 2}, {}) == 1.0);
  CHECK_THROWS_AS(sym_diff_ratio({}, {1}), ConfigError);
}

TEST_CASE("jaccard is symmetric and matches sym_diff_ratio at zero") {
  Rng rng(1);
  std::bernoulli_distribution coin(0.4);
  for (int rep = 0; rep < 200; ++rep) {
    std::vector<Index> a, b;
    for (Index v = 0; v < 12; ++v) {
      if (coin(rng)) a.push_back(v);
      if (coin(rng)) b.push_back(v);
    }
    if (a.empty()) a.push_back(0);
    const VertexSet sa(a), sb(b);
    CHECK(jaccard(sa, sb) == jaccard(sb, sa));
    CHECK((sym_diff_ratio(sa, sb) == 0.0) == (jaccard(sa, sb) == 1.0));
  }
}

TEST_CASE("mean_accuracy") {
  const std::vector<VertexSet> truth{{0, 1}, {2, 3}};
  CHECK(mean_accuracy(truth, truth) == 1.0);
  CHECK(mean_accuracy({{}, {0, 1, 2, 3}}, truth) == 0.5);
  CHECK(mean_accuracy({{0, 1, 2}, {2, 3, 0}}, truth) == 1.0);
  CHECK_THROWS_AS(mean_accuracy({{0}}, truth), ConfigError);
}

TEST_CASE("misclassified") {
  const std::vector<VertexSet> truth{{0, 1}, {2, 3}};
  CHECK(misclassified(truth, truth) == 0);
  CHECK(misclassified({{0}, {1, 2, 3}}, truth) == 1);
  CHECK(misclassified({{2, 3}, {0, 1}}, truth) == 4);
}

TEST_CASE("score_cluster") {
  const auto s = score_cluster({0, 1, 2, 3}, {0, 1, 2, 9}, 0.5);
  CHECK(s.jaccard == doctest::Approx(0.6));
  CHECK(s.sym_diff_ratio == 0.5);
  CHECK(s.misclassified == 2);
  CHECK(s.wall_time == 0.5);
}

TEST_CASE("expressions") {
  const std::map<std::string, double> vars{{"n", 600.0}, {"k", 3.0}};
  CHECK(eval_expression("5*log(n)/n", vars) == doctest::Approx(5 * std::log(600.0) / 600));
  CHECK(eval_expression("log(n)^2/n", vars) == doctest::Approx(std::pow(std::log(600.0), 2) / 600));
  CHECK(eval_expression("2^3^2") == 512.0);
  CHECK(eval_expression("-(1 + 2) * 3") == -9.0);
  CHECK(eval_expression("sqrt(16) + log2(8) + exp(0)") == 8.0);
  CHECK(eval_expression("ln(1)") == 0.0);
  CHECK(eval_expression("1e-3 * 2") == doctest::Approx(0.002));
  CHECK_THROWS_AS(eval_expression("n +", vars), ConfigError);
  CHECK_THROWS_AS(eval_expression("m", vars), ConfigError);
  CHECK_THROWS_AS(eval_expression("foo(2)"), ConfigError);
  CHECK_THROWS_AS(eval_expression("(1"), ConfigError);
}
