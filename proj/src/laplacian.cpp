#include "cslce/laplacian.hpp"

#include <string>

namespace cslce {

Vector DenseOperator::apply(const Vector& x) const { return a_ * x; }

Vector DenseOperator::apply_transpose(const Vector& y) const { return a_.transpose() * y; }

SparseMatrix DenseOperator::columns(std::span<const Index> cols) const {
  Matrix block(a_.rows(), static_cast<Index>(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j) block.col(static_cast<Index>(j)) = a_.col(cols[j]);
  return block.sparseView();
}

Vector LaplacianOperator::run(kernels::LaplacianAction action, const Vector& x) const {
  if (x.size() != size()) {
    throw ConfigError("Laplacian matvec: vector length " + std::to_string(x.size()) + " != " +
                      std::to_string(size()));
  }
  Vector y(size());
  kernels::omp::laplacian_apply(g_->csr(), action, {x.data(), static_cast<std::size_t>(x.size())},
                                {y.data(), static_cast<std::size_t>(y.size())});
  return y;
}

Vector LaplacianOperator::apply(const Vector& x) const { return run(kernels::LaplacianAction::kPlain, x); }

Vector LaplacianOperator::apply_transpose(const Vector& x) const {
  return run(kernels::LaplacianAction::kTranspose, x);
}

Vector LaplacianOperator::apply_abs(const Vector& x) const { return run(kernels::LaplacianAction::kAbs, x); }

Vector LaplacianOperator::apply_abs_transpose(const Vector& x) const {
  return run(kernels::LaplacianAction::kAbsTranspose, x);
}

std::vector<std::pair<Index, double>> LaplacianOperator::column(Index j) const {
  // L_ij = delta_ij - A_ij / d_i; A is symmetric so row j of A lists column j.
  const auto nb = g_->neighbors(j);
  const auto w = g_->weights(j);
  std::vector<std::pair<Index, double>> out;
  out.reserve(nb.size() + 1);
  bool diag_done = false;
  for (std::size_t p = 0; p < nb.size(); ++p) {
    const Index i = nb[p];
    if (!diag_done && i >= j) {
      if (i == j) {
        out.emplace_back(j, 1.0 - w[p] / g_->degree(j));
        diag_done = true;
        continue;
      }
      out.emplace_back(j, 1.0);
      diag_done = true;
    }
    out.emplace_back(i, -w[p] / g_->degree(i));
  }
  if (!diag_done) out.emplace_back(j, 1.0);
  return out;
}

Matrix LaplacianOperator::to_dense(Index max_n) const {
  const Matrix a = g_->dense_adjacency(max_n);
  Matrix l = Matrix::Identity(size(), size());
  for (Index i = 0; i < size(); ++i) l.row(i) -= a.row(i) / g_->degree(i);
  return l;
}

ColumnSubmatrix::ColumnSubmatrix(const LaplacianOperator& l, VertexSet selected)
    : l_(l), selected_(std::move(selected)), local_of_(static_cast<std::size_t>(l.size()), -1) {
  selected_.check_range(l.size());
  for (Index j = 0; j < selected_.size(); ++j) local_of_[static_cast<std::size_t>(selected_[j])] = j;
}

Vector ColumnSubmatrix::apply(const Vector& x) const {
  if (x.size() != cols()) throw ConfigError("column submatrix matvec: dimension mismatch");
  Vector full = Vector::Zero(rows());
  for (Index j = 0; j < cols(); ++j) full[selected_[j]] = x[j];
  return l_.apply(full);
}

Vector ColumnSubmatrix::apply_transpose(const Vector& y) const {
  const Vector full = l_.apply_transpose(y);
  Vector out(cols());
  for (Index j = 0; j < cols(); ++j) out[j] = full[selected_[j]];
  return out;
}

SparseMatrix ColumnSubmatrix::columns(std::span<const Index> local_cols) const {
  SparseMatrix block(rows(), static_cast<Index>(local_cols.size()));
  std::vector<Eigen::Triplet<double, Index>> trips;
  for (std::size_t c = 0; c < local_cols.size(); ++c) {
    const Index local = local_cols[c];
    if (local < 0 || local >= cols()) throw ConfigError("column submatrix: local column out of range");
    for (const auto& [row, value] : l_.column(selected_[local])) {
      trips.emplace_back(row, static_cast<Index>(c), value);
    }
  }
  block.setFromTriplets(trips.begin(), trips.end());
  return block;
}

Matrix ColumnSubmatrix::to_dense(Index max_n) const {
  const Matrix full = l_.to_dense(max_n);
  Matrix out(rows(), cols());
  for (Index j = 0; j < cols(); ++j) out.col(j) = full.col(selected_[j]);
  return out;
}

LaplacianOperator random_walk_laplacian(const SparseGraph& g) { return LaplacianOperator(g); }

Vector indicator_image(const LaplacianOperator& l, const VertexSet& s) { return l.apply(s.indicator(l.size())); }

ColumnSubmatrix column_submatrix(const LaplacianOperator& l, const VertexSet& s) {
  if (s.empty()) throw ConfigError("column submatrix needs a nonempty column set");
  return ColumnSubmatrix(l, s);
}

}  // namespace cslce
