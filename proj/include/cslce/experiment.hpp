#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "cslce/cslce.hpp"
#include "cslce/io.hpp"
#include "cslce/synth.hpp"

namespace cslce {

/// Everything a benchmark run needs. Keys in config files and `--key value`
/// overrides use the field names below (see `config_keys()`).
struct ExperimentConfig {
  // Dataset: ssbm | sbm | lines | circles | moons | edgelist | points.
  std::string dataset = "ssbm";
  Index n = 600;
  Index k = 3;
  Index n1 = 0;                          // variable available to `sizes`
  std::string sizes;                     // sbm block sizes, e.g. "n1, 2*n1, 5*n1"
  std::string p = "5*log(n)/n";          // expressions in n (total), k, n1
  std::string q = "log(n)/n";
  Index per_cluster = 200;
  double noise_sd = 0.05;
  Index ambient_dim = 100;
  Index knn_k = 8;
  double knn_sigma = 0.0;                // <= 0: automatic
  std::string knn_weighting = "gaussian";
  std::string graph_file;
  std::string labels_file;
  std::string points_file;
  bool points_header = false;
  bool largest_component = false;
  bool drop_self_loops = false;
  bool resample_dataset = true;          // regenerate synthetic data every trial
  bool permute = true;                   // random vertex relabelling per trial

  // Task: single (one target cluster) | all (every cluster, one at a time).
  std::string task = "single";
  Index target_cluster = 0;
  Index seeds_per_cluster = 5;
  double label_ratio = 0.0;              // used instead of seeds_per_cluster when > 0
  double n_hat_scale = 1.0;              // n_hat = round(scale * |C|)
  CslceParams params;

  Index trials = 100;
  std::uint64_t rng_seed = 1;
  Index jobs = 1;
  std::string output;
  bool timing = true;                    // false writes 0 for wall times

  void validate() const;
};

using ConfigMap = std::map<std::string, std::string>;

// Ordered list of recognised keys.
std::vector<std::string> config_keys();

// `key = value` lines; '#' starts a comment.
ConfigMap read_config_file(const std::string& path);

// Applies entries over the defaults. Unknown keys and bad values throw ConfigError.
ExperimentConfig make_config(const ConfigMap& entries);

// Every key with its resolved value, in config_keys() order.
std::vector<std::pair<std::string, std::string>> describe(const ExperimentConfig& cfg);

/// How many seeds to draw from a cluster.
struct SeedCount {
  Index count = 0;     // used when ratio <= 0
  double ratio = 0.0;  // ceil(ratio * |C|), at least 1

  Index resolve(Index cluster_size) const;
};

/// Uniform sample without replacement from a ground-truth cluster.
VertexSet sample_seeds(const VertexSet& cluster, const SeedCount& how, Rng& rng);

struct ResultRow {
  Index trial = 0;
  Index cluster_index = -1;  // -1 marks the per-trial summary row
  Index n = 0;
  Index k = 0;
  Index n_hat = 0;
  Index seeds = 0;
  double jaccard = 0.0;
  double mean_accuracy = 0.0;
  double sym_diff_ratio = 0.0;
  Index misclassified = 0;
  double wall_time = 0.0;
  std::string status = "ok";
};

struct MetricSummary {
  std::string metric;
  double mean = 0.0;
  double sd = 0.0;  // sample standard deviation
  Index count = 0;
};

struct ExperimentReport {
  std::vector<ResultRow> rows;
  std::vector<MetricSummary> summary;  // over the per-trial summary rows that succeeded
  Index failed_trials = 0;

  const MetricSummary& metric(const std::string& name) const;
};

/// Runs every trial (in parallel up to cfg.jobs) and, when cfg.output is
/// set, writes the CSV there. Output is a pure function of the config.
ExperimentReport run_experiment(const ExperimentConfig& cfg);

void write_report_csv(std::ostream& out, const ExperimentConfig& cfg, const ExperimentReport& report);

// Mean and sample SD of the summary rows with status ok.
std::vector<MetricSummary> summarize(const std::vector<ResultRow>& rows);

/// Dataset of one trial, exactly as run_experiment would see it before
/// permutation.
LabeledGraph make_dataset(const ExperimentConfig& cfg, Rng& rng);

/// Writes <prefix>.edges and <prefix>.labels (plus <prefix>.points.csv for
/// point-cloud datasets) for the trial-0 dataset. Returns the paths written.
std::vector<std::string> generate_dataset_files(const ExperimentConfig& cfg, const std::string& prefix);

struct LabelScore {
  Index label = 0;
  Index truth_size = 0;
  Index found_size = 0;
  double jaccard = 0.0;
  double accuracy = 0.0;  // recall
  double sym_diff_ratio = 0.0;
};

struct AssignmentScore {
  std::vector<LabelScore> clusters;
  double mean_accuracy = 0.0;
  double mean_jaccard = 0.0;
  Index misclassified = 0;
};

/// Compares two label vectors, clusters matched by label value.
AssignmentScore score_assignment(std::span<const Index> truth, std::span<const Index> found);

void write_score_csv(std::ostream& out, const AssignmentScore& score);

// Seed for trial `trial` of a run seeded with `base`.
std::uint64_t trial_seed(std::uint64_t base, Index trial);

}  // namespace cslce
