// cslce: generate benchmark datasets, run local cluster extraction
// experiments, and re-score assignments.
//
//   cslce gen   --config ssbm.cfg --prefix data/ssbm [--key value ...]
//   cslce run   --config ssbm.cfg [--output results.csv] [--key value ...]
//   cslce score --truth truth.labels --assignment found.labels
//
// Exit codes: 0 success, 1 configuration error, 2 I/O error, 3 other failure.

#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

#include "cslce/experiment.hpp"

namespace {

constexpr int kExitConfig = 1;
constexpr int kExitIo = 2;
constexpr int kExitOther = 3;

// Folds `--key value` / `--key=value` pairs left over by CLI11 into entries.
void apply_overrides(const std::vector<std::string>& extras, cslce::ConfigMap& entries) {
  for (std::size_t i = 0; i < extras.size(); ++i) {
    const std::string& arg = extras[i];
    if (arg.rfind("--", 0) != 0) throw cslce::ConfigError("unexpected argument '" + arg + "'");
    std::string key = arg.substr(2);
    std::string value;
    if (const auto eq = key.find('='); eq != std::string::npos) {
      value = key.substr(eq + 1);
      key.erase(eq);
    } else {
      if (i + 1 >= extras.size()) throw cslce::ConfigError("missing value for --" + key);
      value = extras[++i];
    }
    entries[key] = value;
  }
}

cslce::ExperimentConfig load_config(const std::string& path, const std::vector<std::string>& extras) {
  cslce::ConfigMap entries;
  if (!path.empty()) entries = cslce::read_config_file(path);
  apply_overrides(extras, entries);
  return cslce::make_config(entries);
}

void print_summary(const cslce::ExperimentReport& report) {
  std::cout << "metric,mean,sd,count\n";
  for (const auto& m : report.summary) {
    std::cout << m.metric << ',' << m.mean << ',' << m.sd << ',' << m.count << '\n';
  }
  if (report.failed_trials > 0) std::cout << "failed trials: " << report.failed_trials << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Compressive-sensing local cluster extraction benchmarks"};
  app.require_subcommand(1);

  std::string config_path;
  std::string prefix;
  auto* gen = app.add_subcommand("gen", "Write dataset files (edge list, labels, points) for trial 0");
  gen->add_option("--config", config_path, "key = value config file");
  gen->add_option("--prefix", prefix, "Output path prefix")->required();
  gen->allow_extras();

  std::string output;
  bool quiet = false;
  auto* run = app.add_subcommand("run", "Run an experiment and write the result CSV");
  run->add_option("--config", config_path, "key = value config file");
  run->add_option("--output", output, "Result CSV path (overrides the config)");
  run->add_flag("--quiet", quiet, "Do not print the summary");
  run->allow_extras();

  std::string truth_path;
  std::string found_path;
  auto* score = app.add_subcommand("score", "Score an assignment file against ground truth");
  score->add_option("--truth", truth_path, "Ground-truth labels file")->required();
  score->add_option("--assignment", found_path, "Found labels file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    if (*gen) {
      const auto cfg = load_config(config_path, gen->remaining());
      for (const auto& path : cslce::generate_dataset_files(cfg, prefix)) std::cout << path << '\n';
    } else if (*run) {
      auto cfg = load_config(config_path, run->remaining());
      if (!output.empty()) cfg.output = output;
      const auto report = cslce::run_experiment(cfg);
      if (cfg.output.empty()) {
        cslce::write_report_csv(std::cout, cfg, report);
      } else if (!quiet) {
        print_summary(report);
      }
    } else if (*score) {
      const auto truth = cslce::load_labels(truth_path);
      const auto found = cslce::load_labels(found_path);
      cslce::write_score_csv(std::cout, cslce::score_assignment(truth, found));
    }
  } catch (const cslce::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const cslce::GraphError& e) {
    std::cerr << "graph error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const cslce::IoError& e) {
    std::cerr << "i/o error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitOther;
  }
  return 0;
}
