#include "cslce/metrics.hpp"

#include <string>

namespace cslce {

double jaccard(const VertexSet& a, const VertexSet& b) {
  const Index inter = set_intersection(a, b).size();
  const Index uni = a.size() + b.size() - inter;
  return uni == 0 ? 1.0 : static_cast<double>(inter) / static_cast<double>(uni);
}

double sym_diff_ratio(const VertexSet& truth, const VertexSet& found) {
  if (truth.empty()) throw ConfigError("sym_diff_ratio: truth set is empty");
  return static_cast<double>(symmetric_difference(truth, found).size()) / static_cast<double>(truth.size());
}

double recall(const VertexSet& truth, const VertexSet& found) {
  if (truth.empty()) throw ConfigError("recall: truth set is empty");
  return static_cast<double>(set_intersection(truth, found).size()) / static_cast<double>(truth.size());
}

double mean_accuracy(const std::vector<VertexSet>& partition, const std::vector<VertexSet>& truth) {
  if (partition.size() != truth.size() || truth.empty()) {
    throw ConfigError("mean_accuracy: " + std::to_string(partition.size()) + " found clusters vs " +
                      std::to_string(truth.size()) + " true clusters");
  }
  double acc = 0.0;
  for (std::size_t i = 0; i < truth.size(); ++i) acc += recall(truth[i], partition[i]);
  return acc / static_cast<double>(truth.size());
}

Index misclassified(const std::vector<VertexSet>& partition, const std::vector<VertexSet>& truth) {
  if (partition.size() != truth.size()) throw ConfigError("misclassified: cluster counts differ");
  Index correct = 0;
  Index total = 0;
  for (std::size_t i = 0; i < truth.size(); ++i) {
    correct += set_intersection(truth[i], partition[i]).size();
    total += truth[i].size();
  }
  return total - correct;
}

TrialScore score_cluster(const VertexSet& truth, const VertexSet& found, double wall_time) {
  return {jaccard(truth, found), sym_diff_ratio(truth, found), symmetric_difference(truth, found).size(), wall_time};
}

}  // namespace cslce
