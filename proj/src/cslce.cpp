#include "cslce/cslce.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <string>

namespace cslce {

namespace {

// Size arithmetic on products like 0.6 * 200 must not lose an element to
// representation error, so nudge before rounding.
constexpr double kRoundingSlack = 1e-9;

Index floor_count(double x) { return static_cast<Index>(std::floor(x + kRoundingSlack)); }
Index ceil_count(double x) { return static_cast<Index>(std::ceil(x - kRoundingSlack)); }

}  // namespace

void CslceParams::validate(Index n) const {
  if (n_hat < 1) throw ConfigError("n_hat must be a positive integer");
  if (n_hat > n) throw ConfigError("n_hat = " + std::to_string(n_hat) + " exceeds vertex count " + std::to_string(n));
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw ConfigError("epsilon must lie in (0, 1)");
  if (t < 1) throw ConfigError("random walk depth t must be >= 1");
  if (!(gamma >= 0.1 && gamma <= 0.5)) throw ConfigError("gamma must lie in [0.1, 0.5]");
  if (!(r_threshold >= 0.1 && r_threshold <= 0.9)) throw ConfigError("r_threshold must lie in [0.1, 0.9]");
  if (sp.max_iter < 0) throw ConfigError("sp max_iter must be >= 0");
}

double IndicatorSolution::value(Index v) const {
  const auto ids = columns.ids();
  const auto it = std::lower_bound(ids.begin(), ids.end(), v);
  if (it == ids.end() || *it != v) return 0.0;
  return sp.solution[it - ids.begin()];
}

Vector diffuse_seeds(const SparseGraph& g, const VertexSet& seeds, Index t) {
  if (seeds.empty()) throw ConfigError("diffuse_seeds: seed set is empty");
  if (t < 0) throw ConfigError("diffuse_seeds: depth must be >= 0");
  seeds.check_range(g.num_vertices());
  const Index n = g.num_vertices();
  Vector v = Vector::Zero(n);
  for (Index s : seeds) v[s] = g.degree(s);
  Vector next(n);
  for (Index step = 0; step < t; ++step) {
    kernels::omp::random_walk_step(g.csr(), {v.data(), static_cast<std::size_t>(n)},
                                   {next.data(), static_cast<std::size_t>(n)});
    v.swap(next);
  }
  return v;
}

VertexSet candidate_set(const Vector& v, Index n_hat, double epsilon) {
  const Index want = ceil_count((1.0 + epsilon) * static_cast<double>(n_hat));
  return top_k_magnitude(v, std::min(v.size(), want));
}

Vector removal_scores(const LaplacianOperator& l, const VertexSet& omega) {
  const Vector w = indicator_image(l, omega).cwiseAbs();
  const Vector all = l.apply_abs_transpose(w);
  Vector out(omega.size());
  for (Index j = 0; j < omega.size(); ++j) out[j] = all[omega[j]];
  return out;
}

VertexSet removal_set(const LaplacianOperator& l, const VertexSet& omega, double gamma) {
  if (omega.empty()) throw ConfigError("removal_set: candidate set is empty");
  const Vector score = removal_scores(l, omega);
  const Index m = std::min(omega.size(), std::max<Index>(1, floor_count(gamma * static_cast<double>(omega.size()))));
  std::vector<Index> order(static_cast<std::size_t>(omega.size()));
  std::iota(order.begin(), order.end(), Index{0});
  // omega is sorted, so local order is global order for tie-breaking.
  std::partial_sort(order.begin(), order.begin() + m, order.end(), [&score](Index a, Index b) {
    return score[a] != score[b] ? score[a] < score[b] : a < b;
  });
  std::vector<Index> picked;
  for (Index j = 0; j < m; ++j) picked.push_back(omega[order[static_cast<std::size_t>(j)]]);
  return VertexSet(std::move(picked));
}

Index indicator_sparsity(Index n_hat, double gamma) {
  return std::max<Index>(1, floor_count((1.0 - gamma) * static_cast<double>(n_hat)));
}

IndicatorSolution solve_sparse_indicator(const LaplacianOperator& l, const VertexSet& removal, Index n_hat,
                                         double gamma, const SpOptions& sp) {
  const Index n = l.size();
  removal.check_range(n);
  if (removal.size() >= n) throw ConfigError("solve_sparse_indicator: removal set must be a proper subset of V");
  IndicatorSolution out;
  out.columns = complement(removal, n);
  out.sparsity = indicator_sparsity(n_hat, gamma);
  const ColumnSubmatrix sensing = column_submatrix(l, out.columns);
  // L 1_{V\T} = -L 1_T since L 1 = 0; T is the smaller set.
  const Vector y = -indicator_image(l, removal);
  SpOptions opts = sp;
  if (opts.max_iter == 0) opts.max_iter = default_sp_iterations(n);
  out.sp = subspace_pursuit(sensing, y, out.sparsity, opts);
  return out;
}

ClusterResult extract_cluster(const SparseGraph& g, const VertexSet& seeds, const CslceParams& params) {
  const auto start = std::chrono::steady_clock::now();
  const Index n = g.num_vertices();
  params.validate(n);
  if (seeds.empty()) throw ConfigError("extract_cluster: seed set is empty");
  seeds.check_range(n);

  const LaplacianOperator l(g);
  ClusterResult res;
  res.omega = candidate_set(diffuse_seeds(g, seeds, params.t), params.n_hat, params.epsilon);
  res.removal = removal_set(l, res.omega, params.gamma);
  res.x_sharp = solve_sparse_indicator(l, res.removal, params.n_hat, params.gamma, params.sp);

  std::vector<Index> accepted;
  const Vector& x = res.x_sharp.sp.solution;
  for (Index j = 0; j < x.size(); ++j) {
    if (x[j] > params.r_threshold) accepted.push_back(res.x_sharp.columns[j]);
  }
  res.accepted = VertexSet::from_sorted_unique(std::move(accepted));
  res.cluster = set_union(res.accepted, res.removal);
  if (params.include_seeds_in_output) res.cluster = set_union(res.cluster, seeds);

  const auto size = static_cast<double>(res.cluster.size());
  const auto target = static_cast<double>(params.n_hat);
  res.size_warning = size > 2.0 * target || 2.0 * size < target;
  res.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return res;
}

PartitionResult extract_all_clusters(const SparseGraph& g, const std::vector<VertexSet>& seed_sets,
                                     const std::vector<CslceParams>& params) {
  const Index n = g.num_vertices();
  const auto k = static_cast<Index>(seed_sets.size());
  if (k < 1) throw ConfigError("extract_all_clusters: need at least one seed set");
  if (params.size() != seed_sets.size()) throw ConfigError("extract_all_clusters: one parameter set per seed set");

  std::vector<Index> owner(static_cast<std::size_t>(n), -1);
  for (Index c = 0; c < k; ++c) {
    const auto& seeds = seed_sets[static_cast<std::size_t>(c)];
    if (seeds.empty()) throw ConfigError("extract_all_clusters: empty seed set");
    seeds.check_range(n);
    for (Index v : seeds) {
      if (owner[static_cast<std::size_t>(v)] >= 0) throw ConfigError("extract_all_clusters: seed sets overlap");
      owner[static_cast<std::size_t>(v)] = c;
    }
  }

  std::vector<Index> assigned(static_cast<std::size_t>(n), -1);
  PartitionResult out;
  auto remaining = [&] {
    std::vector<Index> r;
    for (Index v = 0; v < n; ++v) {
      if (assigned[static_cast<std::size_t>(v)] < 0) r.push_back(v);
    }
    return VertexSet::from_sorted_unique(std::move(r));
  };

  // Vertices whose neighbours are all assigned get the cluster of their
  // heaviest original neighbour (or their own seed cluster). Assigning an
  // isolated vertex cannot isolate another one, so one pass suffices.
  auto peel_isolated = [&] {
    for (Index v = 0; v < n; ++v) {
      if (assigned[static_cast<std::size_t>(v)] >= 0) continue;
      const auto nb = g.neighbors(v);
      const auto w = g.weights(v);
      bool isolated = true;
      Index best = -1;
      for (std::size_t p = 0; p < nb.size(); ++p) {
        if (nb[p] == v) continue;
        if (assigned[static_cast<std::size_t>(nb[p])] < 0) {
          isolated = false;
          break;
        }
        if (best < 0 || w[p] > w[static_cast<std::size_t>(best)]) best = static_cast<Index>(p);
      }
      if (!isolated) continue;
      const Index own = owner[static_cast<std::size_t>(v)];
      assigned[static_cast<std::size_t>(v)] =
          own >= 0 ? own : (best >= 0 ? assigned[static_cast<std::size_t>(nb[static_cast<std::size_t>(best)])] : k - 1);
      ++out.fallback_assignments;
    }
  };

  for (Index c = 0; c + 1 < k; ++c) {
    peel_isolated();
    const VertexSet rest = remaining();
    std::vector<Index> local_seeds;
    for (Index j = 0; j < rest.size(); ++j) {
      if (owner[static_cast<std::size_t>(rest[j])] == c) local_seeds.push_back(j);
    }
    if (local_seeds.empty()) continue;

    const SparseGraph residual = g.induced(rest);
    CslceParams p = params[static_cast<std::size_t>(c)];
    p.n_hat = std::min(p.n_hat, residual.num_vertices());
    const ClusterResult res = extract_cluster(residual, VertexSet::from_sorted_unique(std::move(local_seeds)), p);
    for (Index local : res.cluster) {
      const Index v = rest[local];
      const Index own = owner[static_cast<std::size_t>(v)];
      if (own >= 0 && own != c) continue;
      assigned[static_cast<std::size_t>(v)] = c;
    }
  }

  out.clusters.resize(static_cast<std::size_t>(k));
  std::vector<std::vector<Index>> members(static_cast<std::size_t>(k));
  for (Index v = 0; v < n; ++v) {
    const Index c = assigned[static_cast<std::size_t>(v)];
    members[static_cast<std::size_t>(c >= 0 ? c : k - 1)].push_back(v);
  }
  for (Index c = 0; c < k; ++c) {
    out.clusters[static_cast<std::size_t>(c)] = VertexSet::from_sorted_unique(std::move(members[static_cast<std::size_t>(c)]));
  }
  return out;
}

}  // namespace cslce
