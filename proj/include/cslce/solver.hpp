#pragma once

#include <vector>

#include "cslce/sensing.hpp"
#include "cslce/vertex_set.hpp"

namespace cslce {

/// Indices of the s largest |v_i|, ties broken toward the smaller index.
/// s >= v.size() selects everything.
VertexSet top_k_magnitude(const Vector& v, Index s);

/// argmin_z ||A_support z - y||_2, coefficients in support order.
///
/// Solved through the Cholesky factor of the Gram matrix with one step of
/// iterative refinement; when the block is numerically rank deficient it falls
/// back to a complete orthogonal decomposition, which yields the minimum-norm
/// minimizer.
Vector restricted_least_squares(const SensingOperator& a, const VertexSet& support, const Vector& y);

struct SpOptions {
  // Iteration cap; 0 means ceil(log2 n) with n the number of columns.
  Index max_iter = 0;
  // Stop once ||y - A x||_2 <= tol.
  double tol = 1e-8;
  // Scale columns to unit norm internally and undo it on the coefficients.
  bool normalize_columns = false;
};

struct SpResult {
  Vector solution;  // length n, at most s nonzeros
  VertexSet support;
  // Residual norm of every iterate, starting with the initial one. The last
  // entry may belong to a rejected iterate.
  std::vector<double> residual_history;
  double residual = 0.0;  // of the returned iterate
  Index iterations = 0;
  bool converged = false;
};

Index default_sp_iterations(Index n);

/// Subspace Pursuit for min ||A x - y||_2 subject to ||x||_0 <= s.
///
/// Stops on a residual increase (returning the previous iterate), a repeated
/// support, ||r|| <= tol, or after max_iter expansion/pruning rounds.
SpResult subspace_pursuit(const SensingOperator& a, const Vector& y, Index s, const SpOptions& opts = {});

/// Smallest delta with (1-delta)|x|^2 <= |A x|^2 <= (1+delta)|x|^2 for every
/// s-sparse x, by enumerating all s-column submatrices. Limited to n <= 20.
double rip_constant_bruteforce(const Matrix& a, Index s);

}  // namespace cslce
