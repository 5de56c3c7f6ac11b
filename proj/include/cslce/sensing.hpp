#pragma once

#include <span>

#include <Eigen/Sparse>

#include "cslce/types.hpp"

namespace cslce {

using SparseMatrix = Eigen::SparseMatrix<double, Eigen::ColMajor, Index>;

/// An m x n linear operator as seen by the sparse solver.
///
/// Implementations must be read-only and reentrant: the solver may call any
/// action concurrently from several trials sharing one operator.
class SensingOperator {
 public:
  virtual ~SensingOperator() = default;

  virtual Index rows() const = 0;
  virtual Index cols() const = 0;
  virtual Vector apply(const Vector& x) const = 0;
  virtual Vector apply_transpose(const Vector& y) const = 0;
  // The m x |cols| block of the selected columns, in the given order.
  virtual SparseMatrix columns(std::span<const Index> cols) const = 0;
};

class DenseOperator final : public SensingOperator {
 public:
  explicit DenseOperator(Matrix a) : a_(std::move(a)) {}

  Index rows() const override { return a_.rows(); }
  Index cols() const override { return a_.cols(); }
  Vector apply(const Vector& x) const override;
  Vector apply_transpose(const Vector& y) const override;
  SparseMatrix columns(std::span<const Index> cols) const override;

  const Matrix& matrix() const { return a_; }

 private:
  Matrix a_;
};

}  // namespace cslce
