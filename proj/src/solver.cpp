#include "cslce/solver.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace cslce {

VertexSet top_k_magnitude(const Vector& v, Index s) {
  if (s < 0) throw ConfigError("top_k_magnitude: negative count");
  const Index n = v.size();
  if (s >= n) return VertexSet::all(n);
  std::vector<Index> idx(static_cast<std::size_t>(n));
  std::iota(idx.begin(), idx.end(), Index{0});
  auto before = [&v](Index a, Index b) {
    const double ma = std::abs(v[a]);
    const double mb = std::abs(v[b]);
    return ma != mb ? ma > mb : a < b;
  };
  std::nth_element(idx.begin(), idx.begin() + s, idx.end(), before);
  idx.resize(static_cast<std::size_t>(s));
  return VertexSet(std::move(idx));
}

namespace {

constexpr double kGramRcond = 1e-12;
constexpr double kCodThreshold = 1e-10;

Vector solve_block(const SparseMatrix& block, const Vector& y) {
  const Matrix gram = Matrix(block.transpose() * block);
  Eigen::LLT<Matrix> llt(gram);
  if (llt.info() == Eigen::Success && llt.rcond() > kGramRcond) {
    Vector z = llt.solve(block.transpose() * y);
    const Vector r = y - block * z;
    z += llt.solve(block.transpose() * r);
    return z;
  }
  Eigen::CompleteOrthogonalDecomposition<Matrix> cod;
  cod.setThreshold(kCodThreshold);
  cod.compute(Matrix(block));
  return cod.solve(y);
}

// Column view with optional unit-norm scaling.
class ScaledColumns {
 public:
  ScaledColumns(const SensingOperator& a, bool normalize) : a_(a), inv_norm_(Vector::Ones(a.cols())) {
    if (!normalize) return;
    std::vector<Index> all(static_cast<std::size_t>(a.cols()));
    std::iota(all.begin(), all.end(), Index{0});
    const SparseMatrix full = a.columns(all);
    for (Index j = 0; j < a.cols(); ++j) {
      const double nrm = full.col(j).norm();
      inv_norm_[j] = nrm > 0.0 ? 1.0 / nrm : 1.0;
    }
  }

  Vector correlate(const Vector& r) const { return a_.apply_transpose(r).cwiseProduct(inv_norm_); }

  SparseMatrix block(const VertexSet& cols) const {
    SparseMatrix b = a_.columns(cols.ids());
    for (Index c = 0; c < b.cols(); ++c) b.col(c) *= inv_norm_[cols[c]];
    return b;
  }

  double inv_norm(Index j) const { return inv_norm_[j]; }

 private:
  const SensingOperator& a_;
  Vector inv_norm_;
};

struct Iterate {
  VertexSet support;
  Vector coef;
  Vector residual;
  double norm = 0.0;
};

Iterate fit(const ScaledColumns& cols, const VertexSet& support, const Vector& y) {
  const SparseMatrix b = cols.block(support);
  Iterate it{support, solve_block(b, y), {}, 0.0};
  it.residual = y - b * it.coef;
  it.norm = it.residual.norm();
  return it;
}

}  // namespace

Vector restricted_least_squares(const SensingOperator& a, const VertexSet& support, const Vector& y) {
  if (support.empty()) throw ConfigError("restricted_least_squares: empty support");
  if (y.size() != a.rows()) throw ConfigError("restricted_least_squares: rhs length does not match operator rows");
  support.check_range(a.cols());
  return solve_block(a.columns(support.ids()), y);
}

Index default_sp_iterations(Index n) {
  return std::max<Index>(1, static_cast<Index>(std::ceil(std::log2(static_cast<double>(std::max<Index>(n, 1))))));
}

SpResult subspace_pursuit(const SensingOperator& a, const Vector& y, Index s, const SpOptions& opts) {
  if (s < 1) throw ConfigError("subspace_pursuit: sparsity must be >= 1");
  if (opts.max_iter < 0) throw ConfigError("subspace_pursuit: max_iter must be >= 1 (or 0 for the default)");
  if (y.size() != a.rows()) {
    throw ConfigError("subspace_pursuit: rhs length " + std::to_string(y.size()) + " != operator rows " +
                      std::to_string(a.rows()));
  }
  const Index n = a.cols();
  const Index max_iter = opts.max_iter > 0 ? opts.max_iter : default_sp_iterations(n);
  const ScaledColumns cols(a, opts.normalize_columns);

  SpResult out;
  Iterate cur = fit(cols, top_k_magnitude(cols.correlate(y), s), y);
  out.residual_history.push_back(cur.norm);

  for (Index iter = 1; iter <= max_iter && cur.norm > opts.tol; ++iter) {
    const VertexSet candidate = set_union(cur.support, top_k_magnitude(cols.correlate(cur.residual), s));
    const SparseMatrix cand_block = cols.block(candidate);
    const Vector cand_coef = solve_block(cand_block, y);
    std::vector<Index> pruned;
    for (Index local : top_k_magnitude(cand_coef, s)) pruned.push_back(candidate[local]);
    Iterate next = fit(cols, VertexSet::from_sorted_unique(std::move(pruned)), y);

    out.iterations = iter;
    out.residual_history.push_back(next.norm);
    if (next.norm > cur.norm) break;
    const bool stalled = next.support == cur.support;
    cur = std::move(next);
    if (stalled) break;
  }

  out.solution = Vector::Zero(n);
  for (Index j = 0; j < cur.support.size(); ++j) {
    out.solution[cur.support[j]] = cur.coef[j] * cols.inv_norm(cur.support[j]);
  }
  out.support = std::move(cur.support);
  out.residual = cur.norm;
  out.converged = cur.norm <= opts.tol;
  return out;
}

double rip_constant_bruteforce(const Matrix& a, Index s) {
  const Index n = a.cols();
  if (n > 20) throw ConfigError("rip_constant_bruteforce: n = " + std::to_string(n) + " too large (max 20)");
  if (s < 1 || s > n) throw ConfigError("rip_constant_bruteforce: sparsity must lie in [1, n]");
  if (!a.allFinite()) throw ConfigError("rip_constant_bruteforce: matrix has non-finite entries");

  std::vector<Index> pick(static_cast<std::size_t>(s));
  std::iota(pick.begin(), pick.end(), Index{0});
  Matrix sub(a.rows(), s);
  double delta = 0.0;
  while (true) {
    for (Index c = 0; c < s; ++c) sub.col(c) = a.col(pick[static_cast<std::size_t>(c)]);
    Eigen::JacobiSVD<Matrix> svd(sub);
    const Vector sv = svd.singularValues();
    const double smax = sv[0];
    // Fewer rows than columns leaves a null direction.
    const double smin = sv.size() < s ? 0.0 : sv[sv.size() - 1];
    delta = std::max({delta, 1.0 - smin * smin, smax * smax - 1.0});

    // Next s-combination in lexicographic order.
    Index pos = s - 1;
    while (pos >= 0 && pick[static_cast<std::size_t>(pos)] == n - s + pos) --pos;
    if (pos < 0) break;
    ++pick[static_cast<std::size_t>(pos)];
    for (Index q = pos + 1; q < s; ++q) pick[static_cast<std::size_t>(q)] = pick[static_cast<std::size_t>(q - 1)] + 1;
  }
  return delta;
}

}  // namespace cslce
