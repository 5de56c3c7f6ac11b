#pragma once

#include <vector>

#include "cslce/graph.hpp"
#include "cslce/laplacian.hpp"
#include "cslce/solver.hpp"
#include "cslce/vertex_set.hpp"

namespace cslce {

/// Tunables of a single local cluster extraction.
struct CslceParams {
  Index n_hat = 0;             // estimated size of the target cluster
  double epsilon = 0.1;        // candidate-set inflation, in (0, 1)
  Index t = 3;                 // random-walk depth, >= 1
  double gamma = 0.4;          // removal fraction, in [0.1, 0.5]
  double r_threshold = 0.5;    // rejection threshold, in [0.1, 0.9]
  bool include_seeds_in_output = true;
  SpOptions sp;                // max_iter 0 means ceil(log2 n)

  // Throws ConfigError on any out-of-range field.
  void validate(Index n) const;
};

/// Solution of the sparse indicator problem over the columns V \ T.
struct IndicatorSolution {
  VertexSet columns;  // local j is global columns[j]
  Index sparsity = 0;
  SpResult sp;        // sp.solution is indexed locally

  // x#_v for a global vertex v (0 for vertices in T).
  double value(Index v) const;
};

struct ClusterResult {
  VertexSet cluster;   // C1#
  VertexSet omega;     // candidate set
  VertexSet removal;   // T
  VertexSet accepted;  // W# = {v : x#_v > R}
  IndicatorSolution x_sharp;
  // |cluster| is off from n_hat by more than a factor of two.
  bool size_warning = false;
  double wall_time = 0.0;  // seconds
};

/// v^(t) = P^t D 1_seeds with P = A D^{-1}, by t sparse matvecs.
Vector diffuse_seeds(const SparseGraph& g, const VertexSet& seeds, Index t);

/// The min(n, ceil((1 + epsilon) n_hat)) vertices of largest |v|.
VertexSet candidate_set(const Vector& v, Index n_hat, double epsilon);

/// The max(1, floor(gamma |omega|)) vertices of omega with the smallest
/// score |L_omega|^T |L 1_omega|, ties toward the smaller index.
VertexSet removal_set(const LaplacianOperator& l, const VertexSet& omega, double gamma);

// Scores used by removal_set, one per element of omega in order.
Vector removal_scores(const LaplacianOperator& l, const VertexSet& omega);

/// Subspace Pursuit on L_{V\T} x ~ L 1_{V\T} with ||x||_0 <= max(1, floor((1 - gamma) n_hat)).
IndicatorSolution solve_sparse_indicator(const LaplacianOperator& l, const VertexSet& removal, Index n_hat,
                                         double gamma, const SpOptions& sp = {});

// max(1, floor((1 - gamma) n_hat)).
Index indicator_sparsity(Index n_hat, double gamma);

/// Extract the cluster containing `seeds`.
ClusterResult extract_cluster(const SparseGraph& g, const VertexSet& seeds, const CslceParams& params);

struct PartitionResult {
  // One cluster per seed set, in input order; the last takes every vertex
  // not extracted earlier.
  std::vector<VertexSet> clusters;
  // Vertices isolated in a residual graph and assigned through their
  // strongest original neighbour.
  Index fallback_assignments = 0;
};

/// Extract clusters one at a time, each from the graph left after removing
/// the previous ones. params[i] configures cluster i; params.size() must
/// equal seed_sets.size(). n_hat is capped at the residual graph size.
PartitionResult extract_all_clusters(const SparseGraph& g, const std::vector<VertexSet>& seed_sets,
                                     const std::vector<CslceParams>& params);

}  // namespace cslce
