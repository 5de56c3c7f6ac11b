#pragma once

#include <span>
#include <vector>

#include "cslce/kernels.hpp"
#include "cslce/types.hpp"
#include "cslce/vertex_set.hpp"

namespace cslce {

struct Edge {
  Index u = 0;
  Index v = 0;
  double weight = 1.0;
};

struct GraphBuildOptions {
  // Self-loops are rejected unless set; none of the benchmark graphs need them.
  bool allow_self_loops = false;
};

/// Immutable undirected weighted graph in symmetric CSR form.
///
/// Every unordered pair is stored in both rows with the same weight, all
/// weights are strictly positive, and every vertex has positive degree.
class SparseGraph {
 public:
  Index num_vertices() const { return static_cast<Index>(degree_.size()); }
  // Unordered edges, self-loops counted once.
  Index num_edges() const { return num_edges_; }
  Index nnz() const { return static_cast<Index>(col_.size()); }

  std::span<const Index> neighbors(Index v) const;
  std::span<const double> weights(Index v) const;
  double degree(Index v) const { return degree_[static_cast<std::size_t>(v)]; }
  std::span<const double> degrees() const { return degree_; }
  // 0 when (u, v) is not an edge.
  double weight(Index u, Index v) const;
  bool has_self_loops() const { return has_self_loops_; }

  kernels::CsrView csr() const { return {row_ptr_, col_, val_, degree_}; }

  // Each unordered edge once, u <= v, sorted.
  std::vector<Edge> edges() const;

  // Dense adjacency; throws ConfigError above max_n.
  Matrix dense_adjacency(Index max_n = 2000) const;

  // Subgraph on `keep`, relabelled 0..|keep|-1 in increasing order.
  SparseGraph induced(const VertexSet& keep) const;

  // Relabel vertex v as perm[v]. perm must be a permutation of [0, n).
  SparseGraph permuted(std::span<const Index> perm) const;

  friend SparseGraph build_graph(Index n, std::span<const Edge> edges, const GraphBuildOptions& opts);

 private:
  std::vector<Index> row_ptr_;
  std::vector<Index> col_;
  std::vector<double> val_;
  std::vector<double> degree_;
  Index num_edges_ = 0;
  bool has_self_loops_ = false;
};

/// Assemble a graph from an edge list. Duplicate pairs, including (i,j)
/// together with (j,i), are summed. Throws GraphError on out-of-range
/// indices, nonpositive weights, forbidden self-loops, or isolated vertices.
SparseGraph build_graph(Index n, std::span<const Edge> edges, const GraphBuildOptions& opts = {});

// Connected components as a label per vertex, labels numbered by first appearance.
std::vector<Index> connected_components(Index n, std::span<const Edge> edges);

}  // namespace cslce
