#include "cslce/synth.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <numeric>
#include <tuple>

namespace cslce {

std::vector<Index> LabeledGraph::sizes() const {
  std::vector<Index> out;
  for (const auto& c : clusters) out.push_back(c.size());
  return out;
}

std::vector<Index> LabeledGraph::membership() const {
  std::vector<Index> m(static_cast<std::size_t>(graph.num_vertices()), -1);
  for (Index c = 0; c < num_clusters(); ++c) {
    for (Index v : clusters[static_cast<std::size_t>(c)]) m[static_cast<std::size_t>(v)] = c;
  }
  return m;
}

LabeledGraph make_labeled_graph(SparseGraph g, std::span<const Index> labels) {
  const Index n = g.num_vertices();
  if (static_cast<Index>(labels.size()) != n) {
    throw GraphError("label count " + std::to_string(labels.size()) + " != vertex count " + std::to_string(n));
  }
  std::map<Index, std::vector<Index>> by_label;
  for (Index v = 0; v < n; ++v) by_label[labels[static_cast<std::size_t>(v)]].push_back(v);
  std::vector<VertexSet> clusters;
  for (auto& [label, members] : by_label) clusters.push_back(VertexSet::from_sorted_unique(std::move(members)));
  std::stable_sort(clusters.begin(), clusters.end(),
                   [](const VertexSet& a, const VertexSet& b) { return a.size() < b.size(); });
  return {std::move(g), std::move(clusters)};
}

LabeledGraph permute(const LabeledGraph& lg, std::span<const Index> perm) {
  LabeledGraph out{lg.graph.permuted(perm), {}};
  for (const auto& c : lg.clusters) {
    std::vector<Index> moved;
    for (Index v : c) moved.push_back(perm[static_cast<std::size_t>(v)]);
    out.clusters.emplace_back(std::move(moved));
  }
  return out;
}

std::vector<Index> random_permutation(Index n, Rng& rng) {
  std::vector<Index> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), Index{0});
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

SbmSpec SbmSpec::planted(std::vector<Index> sizes, double p, double q) {
  const auto k = static_cast<Index>(sizes.size());
  Matrix prob = Matrix::Constant(k, k, q);
  prob.diagonal().setConstant(p);
  return {std::move(sizes), std::move(prob)};
}

void SbmSpec::validate() const {
  const auto k = static_cast<Index>(sizes.size());
  if (k < 1) throw ConfigError("SBM needs at least one block");
  if (prob.rows() != k || prob.cols() != k) throw ConfigError("SBM probability matrix must be k x k");
  for (Index s : sizes) {
    if (s < 1) throw ConfigError("SBM block sizes must be positive");
  }
  for (Index a = 0; a < k; ++a) {
    for (Index b = 0; b < k; ++b) {
      const double p = prob(a, b);
      if (!(p >= 0.0 && p <= 1.0)) throw ConfigError("SBM probabilities must lie in [0, 1]");
      if (p != prob(b, a)) throw ConfigError("SBM probability matrix must be symmetric");
    }
  }
}

LabeledGraph gen_sbm(const SbmSpec& spec, Rng& rng, int max_retries) {
  spec.validate();
  const auto k = static_cast<Index>(spec.sizes.size());
  std::vector<Index> block;
  for (Index b = 0; b < k; ++b) block.insert(block.end(), static_cast<std::size_t>(spec.sizes[static_cast<std::size_t>(b)]), b);
  const auto n = static_cast<Index>(block.size());

  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::vector<Edge> edges;
  std::vector<Index> deg(static_cast<std::size_t>(n));
  for (int attempt = 0; attempt < max_retries; ++attempt) {
    edges.clear();
    std::fill(deg.begin(), deg.end(), 0);
    for (Index i = 0; i < n; ++i) {
      const Index bi = block[static_cast<std::size_t>(i)];
      for (Index j = i + 1; j < n; ++j) {
        if (unif(rng) < spec.prob(bi, block[static_cast<std::size_t>(j)])) {
          edges.push_back({i, j, 1.0});
          ++deg[static_cast<std::size_t>(i)];
          ++deg[static_cast<std::size_t>(j)];
        }
      }
    }
    if (std::find(deg.begin(), deg.end(), 0) == deg.end()) {
      return make_labeled_graph(build_graph(n, edges), block);
    }
  }
  throw GeneratorError("SBM sampling produced an isolated vertex in all " + std::to_string(max_retries) +
                       " attempts");
}

LabeledGraph gen_ssbm(Index n, Index k, double p, double q, Rng& rng, int max_retries) {
  if (k < 1 || n < 1 || n % k != 0) {
    throw ConfigError("SSBM: k = " + std::to_string(k) + " must divide n = " + std::to_string(n));
  }
  if (!(q >= 0.0 && q < p && p <= 1.0)) throw ConfigError("SSBM: need 0 <= q < p <= 1");
  return gen_sbm(SbmSpec::planted(std::vector<Index>(static_cast<std::size_t>(k), n / k), p, q), rng,
                 max_retries);
}

Shape parse_shape(const std::string& name) {
  if (name == "lines") return Shape::kLines;
  if (name == "circles") return Shape::kCircles;
  if (name == "moons") return Shape::kMoons;
  throw ConfigError("unknown shape '" + name + "' (expected lines, circles or moons)");
}

std::string to_string(Shape s) {
  switch (s) {
    case Shape::kLines:
      return "lines";
    case Shape::kCircles:
      return "circles";
    case Shape::kMoons:
      return "moons";
  }
  return "?";
}

PointCloud gen_geometric(Shape shape, Index per_cluster, double noise_sd, Rng& rng, const GeometricConfig& cfg) {
  if (per_cluster < 1) throw ConfigError("geometric data needs per_cluster >= 1");
  if (!(noise_sd >= 0.0)) throw ConfigError("noise_sd must be >= 0");
  if (cfg.ambient_dim < 2) throw ConfigError("ambient dimension must be >= 2");

  const Index n = 3 * per_cluster;
  PointCloud pc;
  pc.points.setZero(n, cfg.ambient_dim);
  pc.labels.resize(static_cast<std::size_t>(n));
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  constexpr double pi = std::numbers::pi;

  for (Index c = 0; c < 3; ++c) {
    const auto uc = static_cast<std::size_t>(c);
    for (Index m = 0; m < per_cluster; ++m) {
      const Index row = c * per_cluster + m;
      double x = 0.0;
      double y = 0.0;
      switch (shape) {
        case Shape::kLines:
          x = cfg.line_length * unif(rng);
          y = cfg.line_heights[uc];
          break;
        case Shape::kCircles: {
          const double theta = 2.0 * pi * unif(rng);
          x = cfg.circle_radii[uc] * std::cos(theta);
          y = cfg.circle_radii[uc] * std::sin(theta);
          break;
        }
        case Shape::kMoons: {
          const double theta = pi * unif(rng);
          const double sign = c == 1 ? -1.0 : 1.0;
          x = cfg.moon_centers[uc][0] + cfg.moon_radius * std::cos(theta);
          y = cfg.moon_centers[uc][1] + sign * cfg.moon_radius * std::sin(theta);
          break;
        }
      }
      pc.points(row, 0) = x;
      pc.points(row, 1) = y;
      pc.labels[static_cast<std::size_t>(row)] = c;
    }
  }
  if (noise_sd > 0.0) {
    std::normal_distribution<double> noise(0.0, noise_sd);
    for (Index i = 0; i < pc.points.size(); ++i) pc.points.data()[i] += noise(rng);
  }
  return pc;
}

double auto_sigma(std::span<const double> kth_dist2) {
  double acc = 0.0;
  for (double d2 : kth_dist2) acc += std::sqrt(d2);
  return kth_dist2.empty() ? 0.0 : acc / static_cast<double>(kth_dist2.size());
}

SparseGraph knn_graph(const PointCloud& pc, const KnnOptions& opts) {
  const Index n = pc.size();
  const Index k = opts.k;
  if (k < 1) throw ConfigError("knn_graph: k must be >= 1");
  if (n <= k) throw ConfigError("knn_graph: need more points than neighbours");

  std::vector<Index> nbr(static_cast<std::size_t>(n * k));
  std::vector<double> dist2(static_cast<std::size_t>(n * k));
  kernels::omp::knn_search(pc.view(), k, nbr, dist2);

  double sigma = opts.sigma;
  if (opts.weighting == KnnWeighting::kGaussian && sigma <= 0.0) {
    std::vector<double> kth(static_cast<std::size_t>(n));
    for (Index i = 0; i < n; ++i) kth[static_cast<std::size_t>(i)] = dist2[static_cast<std::size_t>(i * k + k - 1)];
    sigma = auto_sigma(kth);
    if (!(sigma > 0.0)) throw ConfigError("knn_graph: automatic bandwidth is zero (all neighbours coincide)");
  }

  // Union symmetrization: each unordered pair once, weight from its distance.
  std::vector<std::tuple<Index, Index, double>> pairs;
  pairs.reserve(static_cast<std::size_t>(n * k));
  for (Index i = 0; i < n; ++i) {
    for (Index m = 0; m < k; ++m) {
      const Index j = nbr[static_cast<std::size_t>(i * k + m)];
      pairs.emplace_back(std::min(i, j), std::max(i, j), dist2[static_cast<std::size_t>(i * k + m)]);
    }
  }
  std::sort(pairs.begin(), pairs.end());
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    const auto& [u, v, d2] = pairs[p];
    if (p > 0 && std::get<0>(pairs[p - 1]) == u && std::get<1>(pairs[p - 1]) == v) continue;
    const double w = opts.weighting == KnnWeighting::kBinary ? 1.0 : std::exp(-d2 / (sigma * sigma));
    // An underflowed Gaussian weight would silently drop a selected edge.
    edges.push_back({u, v, std::max(w, std::numeric_limits<double>::min())});
  }
  return build_graph(n, edges);
}

LabeledGraph knn_labeled_graph(const PointCloud& pc, const KnnOptions& opts) {
  return make_labeled_graph(knn_graph(pc, opts), pc.labels);
}

SparseGraph intra_subgraph(const LabeledGraph& lg) {
  const std::vector<Index> member = lg.membership();
  std::vector<Edge> kept;
  for (const Edge& e : lg.graph.edges()) {
    if (member[static_cast<std::size_t>(e.u)] == member[static_cast<std::size_t>(e.v)]) kept.push_back(e);
  }
  return build_graph(lg.graph.num_vertices(), kept, {.allow_self_loops = lg.graph.has_self_loops()});
}

}  // namespace cslce
