#pragma once

#include <vector>

#include "cslce/graph.hpp"
#include "cslce/sensing.hpp"
#include "cslce/vertex_set.hpp"

namespace cslce {

/// The random-walk Laplacian L = I - D^{-1} A of a graph, as an operator.
///
/// Holds a reference to the graph, which must outlive it. Never materialized
/// densely except through `to_dense`, which is capped.
class LaplacianOperator {
 public:
  explicit LaplacianOperator(const SparseGraph& g) : g_(&g) {}
  explicit LaplacianOperator(SparseGraph&&) = delete;

  const SparseGraph& graph() const { return *g_; }
  Index size() const { return g_->num_vertices(); }

  Vector apply(const Vector& x) const;
  Vector apply_transpose(const Vector& x) const;
  // Entrywise absolute value of L applied to x.
  Vector apply_abs(const Vector& x) const;
  Vector apply_abs_transpose(const Vector& x) const;

  // Nonzeros of column j as (row, value), rows ascending.
  std::vector<std::pair<Index, double>> column(Index j) const;

  Matrix to_dense(Index max_n = 2000) const;

 private:
  Vector run(kernels::LaplacianAction action, const Vector& x) const;

  const SparseGraph* g_;
};

/// L restricted to an ordered set of columns; local column j is global
/// column `global_index(j)`.
class ColumnSubmatrix final : public SensingOperator {
 public:
  ColumnSubmatrix(const LaplacianOperator& l, VertexSet selected);

  Index rows() const override { return l_.size(); }
  Index cols() const override { return selected_.size(); }
  Vector apply(const Vector& x) const override;
  Vector apply_transpose(const Vector& y) const override;
  SparseMatrix columns(std::span<const Index> local_cols) const override;

  const VertexSet& selected() const { return selected_; }
  Index global_index(Index local) const { return selected_[local]; }
  // -1 when the global column is not selected.
  Index local_index(Index global) const { return local_of_[static_cast<std::size_t>(global)]; }

  Matrix to_dense(Index max_n = 2000) const;

 private:
  LaplacianOperator l_;
  VertexSet selected_;
  std::vector<Index> local_of_;
};

LaplacianOperator random_walk_laplacian(const SparseGraph& g);
LaplacianOperator random_walk_laplacian(SparseGraph&&) = delete;

// L 1_s.
Vector indicator_image(const LaplacianOperator& l, const VertexSet& s);

// Throws ConfigError for an empty selection.
ColumnSubmatrix column_submatrix(const LaplacianOperator& l, const VertexSet& s);

}  // namespace cslce
