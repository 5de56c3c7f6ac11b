#include "cslce/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <iomanip>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>

#include "cslce/expr.hpp"
#include "cslce/metrics.hpp"

namespace cslce {

namespace {

constexpr double kRoundingSlack = 1e-9;

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::string fmt(double x) {
  std::ostringstream os;
  os << std::setprecision(12) << x;
  return os.str();
}

Index to_index(const std::string& key, const std::string& v) {
  std::size_t used = 0;
  long long x = 0;
  try {
    x = std::stoll(v, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != v.size() || v.empty()) throw ConfigError("key '" + key + "': expected an integer, got '" + v + "'");
  return static_cast<Index>(x);
}

double to_double(const std::string& key, const std::string& v) {
  std::size_t used = 0;
  double x = 0.0;
  try {
    x = std::stod(v, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != v.size() || v.empty()) throw ConfigError("key '" + key + "': expected a number, got '" + v + "'");
  return x;
}

bool to_bool(const std::string& key, const std::string& v) {
  if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
  if (v == "false" || v == "0" || v == "no" || v == "off") return false;
  throw ConfigError("key '" + key + "': expected true/false, got '" + v + "'");
}

struct Field {
  const char* key;
  std::function<void(ExperimentConfig&, const std::string&)> set;
  std::function<std::string(const ExperimentConfig&)> get;
};

#define CSLCE_STR(member)                                                                       \
  Field {                                                                                       \
    #member, [](ExperimentConfig& c, const std::string& v) { c.member = v; },                  \
        [](const ExperimentConfig& c) { return c.member; }                                      \
  }
#define CSLCE_INT(name, member)                                                                 \
  Field {                                                                                       \
    name, [](ExperimentConfig& c, const std::string& v) { c.member = to_index(name, v); },     \
        [](const ExperimentConfig& c) { return std::to_string(c.member); }                      \
  }
#define CSLCE_REAL(name, member)                                                                \
  Field {                                                                                       \
    name, [](ExperimentConfig& c, const std::string& v) { c.member = to_double(name, v); },    \
        [](const ExperimentConfig& c) { return fmt(c.member); }                                 \
  }
#define CSLCE_BOOL(name, member)                                                                \
  Field {                                                                                       \
    name, [](ExperimentConfig& c, const std::string& v) { c.member = to_bool(name, v); },      \
        [](const ExperimentConfig& c) { return std::string(c.member ? "true" : "false"); }      \
  }

const std::vector<Field>& fields() {
  static const std::vector<Field> table = {
      CSLCE_STR(dataset),
      CSLCE_INT("n", n),
      CSLCE_INT("k", k),
      CSLCE_INT("n1", n1),
      CSLCE_STR(sizes),
      CSLCE_STR(p),
      CSLCE_STR(q),
      CSLCE_INT("per_cluster", per_cluster),
      CSLCE_REAL("noise_sd", noise_sd),
      CSLCE_INT("ambient_dim", ambient_dim),
      CSLCE_INT("knn_k", knn_k),
      CSLCE_REAL("knn_sigma", knn_sigma),
      CSLCE_STR(knn_weighting),
      CSLCE_STR(graph_file),
      CSLCE_STR(labels_file),
      CSLCE_STR(points_file),
      CSLCE_BOOL("points_header", points_header),
      CSLCE_BOOL("largest_component", largest_component),
      CSLCE_BOOL("drop_self_loops", drop_self_loops),
      CSLCE_BOOL("resample_dataset", resample_dataset),
      CSLCE_BOOL("permute", permute),
      CSLCE_STR(task),
      CSLCE_INT("target_cluster", target_cluster),
      CSLCE_INT("seeds_per_cluster", seeds_per_cluster),
      CSLCE_REAL("label_ratio", label_ratio),
      CSLCE_REAL("n_hat_scale", n_hat_scale),
      CSLCE_REAL("epsilon", params.epsilon),
      CSLCE_INT("t", params.t),
      CSLCE_REAL("gamma", params.gamma),
      CSLCE_REAL("r_threshold", params.r_threshold),
      CSLCE_BOOL("include_seeds", params.include_seeds_in_output),
      CSLCE_INT("sp_max_iter", params.sp.max_iter),
      CSLCE_REAL("sp_tol", params.sp.tol),
      CSLCE_BOOL("normalize_columns", params.sp.normalize_columns),
      CSLCE_INT("trials", trials),
      Field{"rng_seed",
            [](ExperimentConfig& c, const std::string& v) {
              c.rng_seed = static_cast<std::uint64_t>(to_index("rng_seed", v));
            },
            [](const ExperimentConfig& c) { return std::to_string(c.rng_seed); }},
      CSLCE_INT("jobs", jobs),
      CSLCE_STR(output),
      CSLCE_BOOL("timing", timing),
  };
  return table;
}

#undef CSLCE_STR
#undef CSLCE_INT
#undef CSLCE_REAL
#undef CSLCE_BOOL

bool is_point_dataset(const std::string& d) {
  return d == "lines" || d == "circles" || d == "moons" || d == "points";
}

std::map<std::string, double> size_vars(const ExperimentConfig& cfg) {
  return {{"n1", static_cast<double>(cfg.n1)}, {"k", static_cast<double>(cfg.k)}, {"n", static_cast<double>(cfg.n)}};
}

std::vector<Index> parse_sizes(const ExperimentConfig& cfg) {
  std::vector<Index> out;
  std::stringstream ss(cfg.sizes);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const double v = eval_expression(trim(item), size_vars(cfg));
    if (!(v >= 1.0) || std::abs(v - std::round(v)) > kRoundingSlack) {
      throw ConfigError("sizes: '" + trim(item) + "' is not a positive integer");
    }
    out.push_back(static_cast<Index>(std::llround(v)));
  }
  if (out.empty()) throw ConfigError("sbm dataset needs 'sizes'");
  return out;
}

double probability(const std::string& key, const std::string& expr, Index total, Index k, Index n1) {
  const double v = eval_expression(expr, {{"n", static_cast<double>(total)},
                                          {"k", static_cast<double>(k)},
                                          {"n1", static_cast<double>(n1)}});
  if (!(v >= 0.0 && v <= 1.0)) throw ConfigError(key + " = " + expr + " evaluates to " + fmt(v) + ", outside [0, 1]");
  return v;
}

KnnOptions knn_options(const ExperimentConfig& cfg) {
  KnnOptions o;
  o.k = cfg.knn_k;
  o.sigma = cfg.knn_sigma;
  if (cfg.knn_weighting == "gaussian") {
    o.weighting = KnnWeighting::kGaussian;
  } else if (cfg.knn_weighting == "binary") {
    o.weighting = KnnWeighting::kBinary;
  } else {
    throw ConfigError("knn_weighting must be gaussian or binary");
  }
  return o;
}

PointCloud make_points(const ExperimentConfig& cfg, Rng& rng) {
  if (cfg.dataset == "points") return load_point_csv(cfg.points_file, cfg.points_header);
  GeometricConfig geo;
  geo.ambient_dim = cfg.ambient_dim;
  return gen_geometric(parse_shape(cfg.dataset), cfg.per_cluster, cfg.noise_sd, rng, geo);
}

LabeledGraph load_graph_dataset(const ExperimentConfig& cfg) {
  EdgeListOptions opts;
  opts.largest_component = cfg.largest_component;
  opts.drop_self_loops = cfg.drop_self_loops;
  LoadedGraph loaded = load_edge_list(cfg.graph_file, opts);
  const std::vector<Index> all_labels = load_labels(cfg.labels_file);
  std::vector<Index> labels;
  for (Index v : loaded.original_ids) {
    if (v >= static_cast<Index>(all_labels.size())) {
      throw IoError(cfg.labels_file + ": no label for vertex " + std::to_string(v));
    }
    labels.push_back(all_labels[static_cast<std::size_t>(v)]);
  }
  return make_labeled_graph(std::move(loaded.graph), labels);
}

std::string sanitize(std::string s) {
  for (char& c : s) {
    if (c == ',' || c == '\n' || c == '\r' || c == '"') c = ';';
  }
  return s;
}

Index n_hat_for(const ExperimentConfig& cfg, Index cluster_size, Index n) {
  const auto est = static_cast<Index>(std::llround(cfg.n_hat_scale * static_cast<double>(cluster_size)));
  return std::clamp<Index>(est, 1, n);
}

SeedCount seed_count(const ExperimentConfig& cfg) {
  return cfg.label_ratio > 0.0 ? SeedCount{0, cfg.label_ratio} : SeedCount{cfg.seeds_per_cluster, 0.0};
}

std::vector<ResultRow> run_trial(const ExperimentConfig& cfg, Index trial, const LabeledGraph* cached) {
  Rng rng(trial_seed(cfg.rng_seed, trial));
  std::optional<LabeledGraph> fresh;
  if (cached == nullptr) fresh = make_dataset(cfg, rng);
  const LabeledGraph& base = cached != nullptr ? *cached : *fresh;
  std::optional<LabeledGraph> shuffled;
  if (cfg.permute) shuffled = permute(base, random_permutation(base.graph.num_vertices(), rng));
  const LabeledGraph& lg = shuffled ? *shuffled : base;

  const Index n = lg.graph.num_vertices();
  const Index k = lg.num_clusters();
  const SeedCount how = seed_count(cfg);
  auto stamp = [&](ResultRow row) {
    row.trial = trial;
    row.n = n;
    row.k = k;
    if (!cfg.timing) row.wall_time = 0.0;
    return row;
  };

  std::vector<ResultRow> rows;
  if (cfg.task == "single") {
    if (cfg.target_cluster < 0 || cfg.target_cluster >= k) {
      throw ConfigError("target_cluster " + std::to_string(cfg.target_cluster) + " out of range for " +
                        std::to_string(k) + " clusters");
    }
    const VertexSet& truth = lg.clusters[static_cast<std::size_t>(cfg.target_cluster)];
    const VertexSet seeds = sample_seeds(truth, how, rng);
    CslceParams params = cfg.params;
    params.n_hat = n_hat_for(cfg, truth.size(), n);
    const ClusterResult res = extract_cluster(lg.graph, seeds, params);
    const TrialScore s = score_cluster(truth, res.cluster, res.wall_time);
    ResultRow row;
    row.cluster_index = cfg.target_cluster;
    row.n_hat = params.n_hat;
    row.seeds = seeds.size();
    row.jaccard = s.jaccard;
    row.mean_accuracy = recall(truth, res.cluster);
    row.sym_diff_ratio = s.sym_diff_ratio;
    row.misclassified = s.misclassified;
    row.wall_time = s.wall_time;
    rows.push_back(stamp(row));
    row.cluster_index = -1;
    rows.push_back(stamp(row));
    return rows;
  }

  std::vector<VertexSet> seed_sets;
  std::vector<CslceParams> params;
  Index total_seeds = 0;
  for (const VertexSet& c : lg.clusters) {
    seed_sets.push_back(sample_seeds(c, how, rng));
    total_seeds += seed_sets.back().size();
    params.push_back(cfg.params);
    params.back().n_hat = n_hat_for(cfg, c.size(), n);
  }
  const auto start = std::chrono::steady_clock::now();
  const PartitionResult part = extract_all_clusters(lg.graph, seed_sets, params);
  const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  ResultRow summary;
  summary.cluster_index = -1;
  summary.seeds = total_seeds;
  for (Index c = 0; c < k; ++c) {
    const auto uc = static_cast<std::size_t>(c);
    const TrialScore s = score_cluster(lg.clusters[uc], part.clusters[uc]);
    ResultRow row;
    row.cluster_index = c;
    row.n_hat = params[uc].n_hat;
    row.seeds = seed_sets[uc].size();
    row.jaccard = s.jaccard;
    row.mean_accuracy = recall(lg.clusters[uc], part.clusters[uc]);
    row.sym_diff_ratio = s.sym_diff_ratio;
    row.misclassified = s.misclassified;
    rows.push_back(stamp(row));
    summary.jaccard += s.jaccard / static_cast<double>(k);
    summary.sym_diff_ratio += s.sym_diff_ratio / static_cast<double>(k);
    summary.n_hat += row.n_hat;
  }
  summary.mean_accuracy = mean_accuracy(part.clusters, lg.clusters);
  summary.misclassified = misclassified(part.clusters, lg.clusters);
  summary.wall_time = elapsed;
  rows.push_back(stamp(summary));
  return rows;
}

}  // namespace

void ExperimentConfig::validate() const {
  static const std::vector<std::string> kinds = {"ssbm", "sbm", "lines", "circles", "moons", "edgelist", "points"};
  if (std::find(kinds.begin(), kinds.end(), dataset) == kinds.end()) {
    throw ConfigError("unknown dataset '" + dataset + "'");
  }
  const bool wants_graph_file = dataset == "edgelist";
  const bool wants_points_file = dataset == "points";
  if (wants_graph_file != !graph_file.empty() || wants_graph_file != !labels_file.empty()) {
    throw ConfigError(wants_graph_file ? "edgelist dataset needs graph_file and labels_file"
                                       : "graph_file/labels_file are only used by the edgelist dataset");
  }
  if (wants_points_file != !points_file.empty()) {
    throw ConfigError(wants_points_file ? "points dataset needs points_file"
                                        : "points_file is only used by the points dataset");
  }
  if (dataset == "sbm" && sizes.empty()) throw ConfigError("sbm dataset needs 'sizes'");
  if (task != "single" && task != "all") throw ConfigError("task must be single or all");
  if (trials < 1) throw ConfigError("trials must be >= 1");
  if (jobs < 1) throw ConfigError("jobs must be >= 1");
  if (label_ratio < 0.0 || label_ratio >= 1.0) throw ConfigError("label_ratio must lie in (0, 1)");
  if (label_ratio > 0.0 && seeds_per_cluster > 0) {
    throw ConfigError("label_ratio and seeds_per_cluster are mutually exclusive");
  }
  if (label_ratio == 0.0 && seeds_per_cluster < 1) throw ConfigError("seeds_per_cluster must be >= 1");
  if (!(n_hat_scale > 0.0)) throw ConfigError("n_hat_scale must be positive");
  if (is_point_dataset(dataset)) knn_options(*this);
  // n_hat is filled per cluster; check the remaining ranges with a placeholder.
  CslceParams probe = params;
  probe.n_hat = 1;
  probe.validate(1);
}

std::vector<std::string> config_keys() {
  std::vector<std::string> out;
  for (const Field& f : fields()) out.emplace_back(f.key);
  return out;
}

ConfigMap read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config '" + path + "'");
  ConfigMap out;
  std::string line;
  for (int lineno = 1; std::getline(in, line); ++lineno) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError(path + ":" + std::to_string(lineno) + ": expected 'key = value'");
    }
    out[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  return out;
}

ExperimentConfig make_config(const ConfigMap& entries) {
  ExperimentConfig cfg;
  for (const auto& [key, value] : entries) {
    const auto& table = fields();
    const auto it = std::find_if(table.begin(), table.end(), [&](const Field& f) { return key == f.key; });
    if (it == table.end()) throw ConfigError("unknown config key '" + key + "'");
    it->set(cfg, value);
  }
  if (entries.count("label_ratio") != 0 && entries.count("seeds_per_cluster") == 0) cfg.seeds_per_cluster = 0;
  cfg.validate();
  return cfg;
}

std::vector<std::pair<std::string, std::string>> describe(const ExperimentConfig& cfg) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const Field& f : fields()) out.emplace_back(f.key, f.get(cfg));
  return out;
}

Index SeedCount::resolve(Index cluster_size) const {
  if (ratio > 0.0) {
    return std::max<Index>(1, static_cast<Index>(std::ceil(ratio * static_cast<double>(cluster_size) - kRoundingSlack)));
  }
  return count;
}

VertexSet sample_seeds(const VertexSet& cluster, const SeedCount& how, Rng& rng) {
  const Index want = how.resolve(cluster.size());
  if (want < 1) throw ConfigError("seed count must be >= 1");
  if (want > cluster.size()) {
    throw ConfigError("cannot draw " + std::to_string(want) + " seeds from a cluster of " +
                      std::to_string(cluster.size()));
  }
  std::vector<Index> picked;
  std::sample(cluster.begin(), cluster.end(), std::back_inserter(picked), want, rng);
  return VertexSet(std::move(picked));
}

std::uint64_t trial_seed(std::uint64_t base, Index trial) {
  // splitmix64 finalizer over (base, trial).
  std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (static_cast<std::uint64_t>(trial) + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

LabeledGraph make_dataset(const ExperimentConfig& cfg, Rng& rng) {
  if (cfg.dataset == "ssbm") {
    return gen_ssbm(cfg.n, cfg.k, probability("p", cfg.p, cfg.n, cfg.k, cfg.n1),
                    probability("q", cfg.q, cfg.n, cfg.k, cfg.n1), rng);
  }
  if (cfg.dataset == "sbm") {
    std::vector<Index> sizes = parse_sizes(cfg);
    Index total = 0;
    for (Index s : sizes) total += s;
    const auto k = static_cast<Index>(sizes.size());
    const double p = probability("p", cfg.p, total, k, cfg.n1);
    const double q = probability("q", cfg.q, total, k, cfg.n1);
    return gen_sbm(SbmSpec::planted(std::move(sizes), p, q), rng);
  }
  if (cfg.dataset == "edgelist") return load_graph_dataset(cfg);
  return knn_labeled_graph(make_points(cfg, rng), knn_options(cfg));
}

const MetricSummary& ExperimentReport::metric(const std::string& name) const {
  for (const auto& m : summary) {
    if (m.metric == name) return m;
  }
  throw ConfigError("no summary metric '" + name + "'");
}

std::vector<MetricSummary> summarize(const std::vector<ResultRow>& rows) {
  const std::vector<std::pair<std::string, std::function<double(const ResultRow&)>>> metrics = {
      {"jaccard", [](const ResultRow& r) { return r.jaccard; }},
      {"mean_accuracy", [](const ResultRow& r) { return r.mean_accuracy; }},
      {"sym_diff_ratio", [](const ResultRow& r) { return r.sym_diff_ratio; }},
      {"misclassified", [](const ResultRow& r) { return static_cast<double>(r.misclassified); }},
      {"wall_time_s", [](const ResultRow& r) { return r.wall_time; }},
  };
  std::vector<MetricSummary> out;
  for (const auto& [name, get] : metrics) {
    MetricSummary m{name, 0.0, 0.0, 0};
    double sum = 0.0;
    for (const auto& r : rows) {
      if (r.cluster_index == -1 && r.status == "ok") {
        sum += get(r);
        ++m.count;
      }
    }
    if (m.count > 0) m.mean = sum / static_cast<double>(m.count);
    double ss = 0.0;
    for (const auto& r : rows) {
      if (r.cluster_index == -1 && r.status == "ok") ss += (get(r) - m.mean) * (get(r) - m.mean);
    }
    m.sd = m.count > 1 ? std::sqrt(ss / static_cast<double>(m.count - 1)) : 0.0;
    out.push_back(m);
  }
  return out;
}

ExperimentReport run_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  std::unique_ptr<LabeledGraph> cached;
  const bool synthetic = cfg.dataset != "edgelist" && cfg.dataset != "points";
  if (!synthetic || !cfg.resample_dataset) {
    Rng rng(trial_seed(cfg.rng_seed, -1));
    cached = std::make_unique<LabeledGraph>(make_dataset(cfg, rng));
  }

  std::vector<std::vector<ResultRow>> per_trial(static_cast<std::size_t>(cfg.trials));
#pragma omp parallel for schedule(dynamic, 1) num_threads(static_cast<int>(cfg.jobs))
  for (Index trial = 0; trial < cfg.trials; ++trial) {
    auto& slot = per_trial[static_cast<std::size_t>(trial)];
    try {
      slot = run_trial(cfg, trial, cached.get());
    } catch (const std::exception& e) {
      ResultRow failed;
      failed.trial = trial;
      failed.cluster_index = -1;
      failed.status = "failed: " + sanitize(e.what());
      slot = {failed};
    }
  }

  ExperimentReport report;
  for (auto& rows : per_trial) {
    for (auto& r : rows) {
      if (r.status != "ok") ++report.failed_trials;
      report.rows.push_back(std::move(r));
    }
  }
  report.summary = summarize(report.rows);
  if (!cfg.output.empty()) {
    std::ofstream out(cfg.output);
    if (!out) throw IoError("cannot open '" + cfg.output + "' for writing");
    write_report_csv(out, cfg, report);
    if (!out) throw IoError("write to '" + cfg.output + "' failed");
  }
  return report;
}

void write_report_csv(std::ostream& out, const ExperimentConfig& cfg, const ExperimentReport& report) {
  out << "# cslce experiment\n";
  // jobs and output do not change the rows, so they stay out of the echo.
  for (const auto& [key, value] : describe(cfg))
    if (key != "jobs" && key != "output") out << "# " << key << " = " << value << '\n';
  out << "trial,cluster_index,n,k,n_hat,epsilon,t,gamma,r_threshold,seeds,"
         "jaccard,mean_accuracy,sym_diff_ratio,misclassified,wall_time_s,status\n";
  const auto& p = cfg.params;
  for (const auto& r : report.rows) {
    out << r.trial << ',' << (r.cluster_index < 0 ? std::string("all") : std::to_string(r.cluster_index)) << ',';
    if (r.status != "ok") {
      out << ",,,,,,,,,,,,," << r.status << '\n';
      continue;
    }
    out << r.n << ',' << r.k << ',' << r.n_hat << ',' << fmt(p.epsilon) << ',' << p.t << ',' << fmt(p.gamma) << ','
        << fmt(p.r_threshold) << ',' << r.seeds << ',' << fmt(r.jaccard) << ',' << fmt(r.mean_accuracy) << ','
        << fmt(r.sym_diff_ratio) << ',' << r.misclassified << ',' << fmt(r.wall_time) << ',' << r.status << '\n';
  }
  out << "# summary: metric,mean,sd,count (failed trials: " << report.failed_trials << ")\n";
  for (const auto& m : report.summary) {
    out << "# summary," << m.metric << ',' << fmt(m.mean) << ',' << fmt(m.sd) << ',' << m.count << '\n';
  }
}

std::vector<std::string> generate_dataset_files(const ExperimentConfig& cfg, const std::string& prefix) {
  cfg.validate();
  Rng rng(trial_seed(cfg.rng_seed, 0));
  std::vector<std::string> written;
  LabeledGraph lg = [&] {
    if (is_point_dataset(cfg.dataset)) {
      const PointCloud pc = make_points(cfg, rng);
      write_point_csv(prefix + ".points.csv", pc, true);
      written.push_back(prefix + ".points.csv");
      return knn_labeled_graph(pc, knn_options(cfg));
    }
    return make_dataset(cfg, rng);
  }();
  write_edge_list(prefix + ".edges", lg.graph);
  written.push_back(prefix + ".edges");
  const std::vector<Index> member = lg.membership();
  write_labels(prefix + ".labels", member);
  written.push_back(prefix + ".labels");
  return written;
}

AssignmentScore score_assignment(std::span<const Index> truth, std::span<const Index> found) {
  if (truth.size() != found.size()) {
    throw ConfigError("assignment has " + std::to_string(found.size()) + " vertices, truth has " +
                      std::to_string(truth.size()));
  }
  std::map<Index, std::vector<Index>> t;
  std::map<Index, std::vector<Index>> f;
  for (std::size_t v = 0; v < truth.size(); ++v) {
    t[truth[v]].push_back(static_cast<Index>(v));
    f[found[v]].push_back(static_cast<Index>(v));
  }
  AssignmentScore out;
  for (auto& [label, members] : t) {
    const VertexSet truth_set = VertexSet::from_sorted_unique(members);
    const auto it = f.find(label);
    const VertexSet found_set = it == f.end() ? VertexSet{} : VertexSet::from_sorted_unique(it->second);
    LabelScore s;
    s.label = label;
    s.truth_size = truth_set.size();
    s.found_size = found_set.size();
    s.jaccard = jaccard(truth_set, found_set);
    s.accuracy = recall(truth_set, found_set);
    s.sym_diff_ratio = sym_diff_ratio(truth_set, found_set);
    out.mean_accuracy += s.accuracy;
    out.mean_jaccard += s.jaccard;
    out.clusters.push_back(s);
  }
  out.mean_accuracy /= static_cast<double>(out.clusters.size());
  out.mean_jaccard /= static_cast<double>(out.clusters.size());
  for (std::size_t v = 0; v < truth.size(); ++v) out.misclassified += truth[v] != found[v] ? 1 : 0;
  return out;
}

void write_score_csv(std::ostream& out, const AssignmentScore& score) {
  out << "label,truth_size,found_size,jaccard,accuracy,sym_diff_ratio\n";
  for (const auto& c : score.clusters) {
    out << c.label << ',' << c.truth_size << ',' << c.found_size << ',' << fmt(c.jaccard) << ',' << fmt(c.accuracy)
        << ',' << fmt(c.sym_diff_ratio) << '\n';
  }
  out << "# mean_accuracy," << fmt(score.mean_accuracy) << '\n';
  out << "# mean_jaccard," << fmt(score.mean_jaccard) << '\n';
  out << "# misclassified," << score.misclassified << '\n';
}

}  // namespace cslce
