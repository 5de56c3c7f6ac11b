#pragma once

#include <array>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "cslce/graph.hpp"
#include "cslce/vertex_set.hpp"

namespace cslce {

using Rng = std::mt19937_64;

/// A graph with a ground-truth partition. Clusters are kept in nondecreasing
/// size order (stable in their original label order), so clusters[0] is C1.
struct LabeledGraph {
  SparseGraph graph;
  std::vector<VertexSet> clusters;

  Index num_clusters() const { return static_cast<Index>(clusters.size()); }
  std::vector<Index> sizes() const;
  // Cluster index of every vertex.
  std::vector<Index> membership() const;
};

// Validates that labels cover every vertex, then orders clusters by size.
// Label values need not be contiguous; empty label ids are dropped.
LabeledGraph make_labeled_graph(SparseGraph g, std::span<const Index> labels);

// Relabel vertices by perm (vertex v becomes perm[v]).
LabeledGraph permute(const LabeledGraph& lg, std::span<const Index> perm);

std::vector<Index> random_permutation(Index n, Rng& rng);

struct SbmSpec {
  std::vector<Index> sizes;
  Matrix prob;  // k x k, symmetric, entries in [0, 1]

  // Diagonal p, off-diagonal q.
  static SbmSpec planted(std::vector<Index> sizes, double p, double q);
  void validate() const;
};

inline constexpr int kDefaultGeneratorRetries = 100;

/// Stochastic block model with contiguous blocks. Every unordered pair is an
/// independent Bernoulli draw; the whole graph is resampled while any vertex
/// is isolated, up to `max_retries` attempts.
LabeledGraph gen_sbm(const SbmSpec& spec, Rng& rng, int max_retries = kDefaultGeneratorRetries);

LabeledGraph gen_ssbm(Index n, Index k, double p, double q, Rng& rng, int max_retries = kDefaultGeneratorRetries);

struct PointCloud {
  Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor> points;
  std::vector<Index> labels;

  Index size() const { return points.rows(); }
  Index dim() const { return points.cols(); }
  kernels::PointView view() const {
    return {{points.data(), static_cast<std::size_t>(points.size())}, points.rows(), points.cols()};
  }
};

enum class Shape { kLines, kCircles, kMoons };

Shape parse_shape(const std::string& name);
std::string to_string(Shape s);

// Planar layout of the three geometric benchmark shapes and their embedding.
struct GeometricConfig {
  Index ambient_dim = 100;
  // Three horizontal segments [0, line_length] x {height}.
  double line_length = 5.0;
  std::array<double, 3> line_heights{0.0, 1.0, 2.0};
  // Concentric circles about the origin.
  std::array<double, 3> circle_radii{1.0, 2.0, 3.0};
  // Half circles of radius moon_radius: upper, lower, upper.
  double moon_radius = 1.0;
  std::array<std::array<double, 2>, 3> moon_centers{{{0.0, 0.0}, {1.0, 0.5}, {2.0, 0.0}}};
};

/// Three clusters of `per_cluster` points each, drawn in the plane, zero
/// padded to ambient_dim and perturbed by isotropic N(0, noise_sd^2) noise on
/// every coordinate.
PointCloud gen_geometric(Shape shape, Index per_cluster, double noise_sd, Rng& rng,
                         const GeometricConfig& cfg = {});

enum class KnnWeighting { kGaussian, kBinary };

struct KnnOptions {
  Index k = 8;
  // Gaussian bandwidth; <= 0 selects the mean distance to the k-th neighbour.
  double sigma = 0.0;
  KnnWeighting weighting = KnnWeighting::kGaussian;
};

/// Union-symmetrized k-nearest-neighbour graph with weights
/// exp(-|xi - xj|^2 / sigma^2) (or 1 for binary weighting).
SparseGraph knn_graph(const PointCloud& pc, const KnnOptions& opts);

// Bandwidth chosen when KnnOptions::sigma <= 0.
double auto_sigma(std::span<const double> kth_dist2);

LabeledGraph knn_labeled_graph(const PointCloud& pc, const KnnOptions& opts);

/// The graph restricted to within-cluster edges. Throws GraphError when a
/// vertex has no neighbour inside its own cluster.
SparseGraph intra_subgraph(const LabeledGraph& lg);

}  // namespace cslce
