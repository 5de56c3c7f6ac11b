#pragma once

#include <vector>

#include "cslce/graph.hpp"
#include "cslce/synth.hpp"

namespace testing {

using cslce::Edge;
using cslce::Index;

inline cslce::SparseGraph complete(Index n) {
  std::vector<Edge> e;
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j) e.push_back({i, j, 1.0});
  return cslce::build_graph(n, e);
}

// Disjoint triangles {0,1,2}, {3,4,5}, ...; `bridge` adds the edge (2, 3).
inline cslce::SparseGraph triangles(Index count, bool bridge = false) {
  std::vector<Edge> e;
  for (Index c = 0; c < count; ++c) {
    const Index b = 3 * c;
    e.push_back({b, b + 1, 1.0});
    e.push_back({b + 1, b + 2, 1.0});
    e.push_back({b, b + 2, 1.0});
  }
  if (bridge) e.push_back({2, 3, 1.0});
  return cslce::build_graph(3 * count, e);
}

// I - D^{-1} A from the dense adjacency.
inline cslce::Matrix dense_laplacian(const cslce::SparseGraph& g) {
  const cslce::Matrix a = g.dense_adjacency();
  const cslce::Vector d = a.rowwise().sum();
  cslce::Matrix l = -(d.cwiseInverse().asDiagonal() * a);
  l.diagonal().array() += 1.0;
  return l;
}

// Random connected graph: a Hamiltonian path plus extra random weighted edges.
inline cslce::SparseGraph random_graph(Index n, Index extra, cslce::Rng& rng) {
  std::uniform_real_distribution<double> w(0.5, 2.0);
  std::uniform_int_distribution<Index> pick(0, n - 1);
  std::vector<Edge> e;
  for (Index i = 0; i + 1 < n; ++i) e.push_back({i, i + 1, w(rng)});
  for (Index k = 0; k < extra; ++k) {
    const Index u = pick(rng), v = pick(rng);
    if (u != v) e.push_back({u, v, w(rng)});
  }
  return cslce::build_graph(n, e);
}

}  // namespace testing
