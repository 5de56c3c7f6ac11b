#pragma once

#include <vector>

#include "cslce/vertex_set.hpp"

namespace cslce {

// |a n b| / |a u b|; two empty sets score 1.
double jaccard(const VertexSet& a, const VertexSet& b);

// |truth (+) found| / |truth|. Throws ConfigError for an empty truth.
double sym_diff_ratio(const VertexSet& truth, const VertexSet& found);

// |truth n found| / |truth|.
double recall(const VertexSet& truth, const VertexSet& found);

// Mean per-cluster recall, clusters matched by position.
double mean_accuracy(const std::vector<VertexSet>& partition, const std::vector<VertexSet>& truth);

// Vertices whose found cluster differs from their true one; both partitions
// are matched by position and must cover the same vertex range.
Index misclassified(const std::vector<VertexSet>& partition, const std::vector<VertexSet>& truth);

struct TrialScore {
  double jaccard = 0.0;
  double sym_diff_ratio = 0.0;
  Index misclassified = 0;
  double wall_time = 0.0;
};

TrialScore score_cluster(const VertexSet& truth, const VertexSet& found, double wall_time = 0.0);

}  // namespace cslce
