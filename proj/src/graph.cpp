#include "cslce/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <tuple>

namespace cslce {

std::span<const Index> SparseGraph::neighbors(Index v) const {
  const auto b = static_cast<std::size_t>(row_ptr_[static_cast<std::size_t>(v)]);
  const auto e = static_cast<std::size_t>(row_ptr_[static_cast<std::size_t>(v) + 1]);
  return std::span<const Index>(col_).subspan(b, e - b);
}

std::span<const double> SparseGraph::weights(Index v) const {
  const auto b = static_cast<std::size_t>(row_ptr_[static_cast<std::size_t>(v)]);
  const auto e = static_cast<std::size_t>(row_ptr_[static_cast<std::size_t>(v) + 1]);
  return std::span<const double>(val_).subspan(b, e - b);
}

double SparseGraph::weight(Index u, Index v) const {
  const auto nb = neighbors(u);
  const auto it = std::lower_bound(nb.begin(), nb.end(), v);
  if (it == nb.end() || *it != v) return 0.0;
  return weights(u)[static_cast<std::size_t>(it - nb.begin())];
}

std::vector<Edge> SparseGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(num_edges_));
  for (Index u = 0; u < num_vertices(); ++u) {
    const auto nb = neighbors(u);
    const auto w = weights(u);
    for (std::size_t p = 0; p < nb.size(); ++p) {
      if (nb[p] >= u) out.push_back({u, nb[p], w[p]});
    }
  }
  return out;
}

Matrix SparseGraph::dense_adjacency(Index max_n) const {
  const Index n = num_vertices();
  if (n > max_n) {
    throw ConfigError("dense materialization refused: n = " + std::to_string(n) + " exceeds cap " +
                      std::to_string(max_n));
  }
  Matrix a = Matrix::Zero(n, n);
  for (Index u = 0; u < n; ++u) {
    const auto nb = neighbors(u);
    const auto w = weights(u);
    for (std::size_t p = 0; p < nb.size(); ++p) a(u, nb[p]) = w[p];
  }
  return a;
}

SparseGraph SparseGraph::induced(const VertexSet& keep) const {
  keep.check_range(num_vertices());
  std::vector<Index> local(static_cast<std::size_t>(num_vertices()), -1);
  for (Index i = 0; i < keep.size(); ++i) local[static_cast<std::size_t>(keep[i])] = i;
  std::vector<Edge> sub;
  for (const Edge& e : edges()) {
    const Index a = local[static_cast<std::size_t>(e.u)];
    const Index b = local[static_cast<std::size_t>(e.v)];
    if (a >= 0 && b >= 0) sub.push_back({a, b, e.weight});
  }
  return build_graph(keep.size(), sub, {.allow_self_loops = has_self_loops_});
}

SparseGraph SparseGraph::permuted(std::span<const Index> perm) const {
  const Index n = num_vertices();
  if (static_cast<Index>(perm.size()) != n) throw GraphError("permutation length does not match vertex count");
  std::vector<Edge> moved = edges();
  for (Edge& e : moved) {
    e.u = perm[static_cast<std::size_t>(e.u)];
    e.v = perm[static_cast<std::size_t>(e.v)];
  }
  return build_graph(n, moved, {.allow_self_loops = has_self_loops_});
}

SparseGraph build_graph(Index n, std::span<const Edge> edges, const GraphBuildOptions& opts) {
  if (n <= 0) throw GraphError("graph must have at least one vertex");

  // Canonicalize to u <= v, sort, and sum duplicates.
  std::vector<Edge> canon;
  canon.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
      throw GraphError("edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) + ") out of range for n = " +
                       std::to_string(n));
    }
    if (!(e.weight > 0.0)) {
      throw GraphError("edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) + ") has nonpositive weight");
    }
    if (e.u == e.v && !opts.allow_self_loops) {
      throw GraphError("self-loop at vertex " + std::to_string(e.u) + " not allowed");
    }
    canon.push_back({std::min(e.u, e.v), std::max(e.u, e.v), e.weight});
  }
  std::sort(canon.begin(), canon.end(),
            [](const Edge& a, const Edge& b) { return std::tie(a.u, a.v) < std::tie(b.u, b.v); });
  std::vector<Edge> merged;
  merged.reserve(canon.size());
  for (const Edge& e : canon) {
    if (!merged.empty() && merged.back().u == e.u && merged.back().v == e.v) {
      merged.back().weight += e.weight;
    } else {
      merged.push_back(e);
    }
  }

  SparseGraph g;
  const auto un = static_cast<std::size_t>(n);
  std::vector<Index> count(un, 0);
  for (const Edge& e : merged) {
    ++count[static_cast<std::size_t>(e.u)];
    if (e.u != e.v) ++count[static_cast<std::size_t>(e.v)];
  }
  g.row_ptr_.assign(un + 1, 0);
  std::partial_sum(count.begin(), count.end(), g.row_ptr_.begin() + 1);
  g.col_.resize(static_cast<std::size_t>(g.row_ptr_.back()));
  g.val_.resize(g.col_.size());
  std::vector<Index> cursor(g.row_ptr_.begin(), g.row_ptr_.end() - 1);
  auto put = [&](Index row, Index col, double w) {
    const auto p = static_cast<std::size_t>(cursor[static_cast<std::size_t>(row)]++);
    g.col_[p] = col;
    g.val_[p] = w;
  };
  // merged is sorted by (u, v), so row r receives its mirrored entries (u < r)
  // before its own (r, v >= r) entries and every row comes out sorted.
  for (const Edge& e : merged) {
    put(e.u, e.v, e.weight);
    if (e.u != e.v) put(e.v, e.u, e.weight);
    g.has_self_loops_ = g.has_self_loops_ || e.u == e.v;
  }

  g.degree_.assign(un, 0.0);
  for (std::size_t r = 0; r < un; ++r) {
    double d = 0.0;
    for (auto p = g.row_ptr_[r]; p < g.row_ptr_[r + 1]; ++p) d += g.val_[static_cast<std::size_t>(p)];
    if (!(d > 0.0)) throw GraphError("vertex " + std::to_string(r) + " is isolated (degree 0)");
    g.degree_[r] = d;
  }
  g.num_edges_ = static_cast<Index>(merged.size());
  return g;
}

std::vector<Index> connected_components(Index n, std::span<const Edge> edges) {
  std::vector<Index> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), Index{0});
  auto find = [&](Index x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  for (const Edge& e : edges) {
    const Index a = find(e.u);
    const Index b = find(e.v);
    if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  }
  std::vector<Index> label(static_cast<std::size_t>(n), -1);
  std::vector<Index> root_label(static_cast<std::size_t>(n), -1);
  Index next = 0;
  for (Index v = 0; v < n; ++v) {
    const Index r = find(v);
    auto& rl = root_label[static_cast<std::size_t>(r)];
    if (rl < 0) rl = next++;
    label[static_cast<std::size_t>(v)] = rl;
  }
  return label;
}

}  // namespace cslce
