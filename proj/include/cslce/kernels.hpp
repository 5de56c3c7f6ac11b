#pragma once

// Data-parallel inner loops. Every kernel exists twice: `serial` is the
// reference used by tests, `omp` is what the library calls. Each output entry
// is reduced by a single thread, so the two agree bitwise.

#include <span>

#include "cslce/types.hpp"

namespace cslce::kernels {

// Read-only view of a symmetric CSR adjacency with its weighted degrees.
struct CsrView {
  std::span<const Index> row_ptr;  // n + 1
  std::span<const Index> col;      // nnz, sorted within each row
  std::span<const double> val;     // nnz
  std::span<const double> degree;  // n

  Index rows() const { return static_cast<Index>(degree.size()); }
};

// Which action of the random-walk Laplacian L = I - D^{-1} A to apply.
enum class LaplacianAction {
  kPlain,          // L x
  kTranspose,      // L^T x
  kAbs,            // |L| x
  kAbsTranspose,   // |L|^T x
};

// Row-major point matrix, n rows of dim coordinates.
struct PointView {
  std::span<const double> coords;
  Index n = 0;
  Index dim = 0;
};

namespace serial {

void laplacian_apply(const CsrView& a, LaplacianAction action, std::span<const double> x,
                     std::span<double> y);

// y = A D^{-1} x, one step of the column-stochastic random walk.
void random_walk_step(const CsrView& a, std::span<const double> x, std::span<double> y);

// For each point, the k nearest other points by (squared distance, index).
// Outputs are n*k row-major.
void knn_search(const PointView& pts, Index k, std::span<Index> nbr, std::span<double> dist2);

}  // namespace serial

namespace omp {

void laplacian_apply(const CsrView& a, LaplacianAction action, std::span<const double> x,
                     std::span<double> y);

void random_walk_step(const CsrView& a, std::span<const double> x, std::span<double> y);

void knn_search(const PointView& pts, Index k, std::span<Index> nbr, std::span<double> dist2);

}  // namespace omp

}  // namespace cslce::kernels
