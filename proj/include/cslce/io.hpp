#pragma once

#include <string>
#include <vector>

#include "cslce/graph.hpp"
#include "cslce/synth.hpp"

namespace cslce {

struct EdgeListOptions {
  // Keep only the largest connected component (ties: lowest vertex id).
  bool largest_component = false;
  // Silently skip i == i lines instead of rejecting them.
  bool drop_self_loops = false;
  // Vertex count; 0 infers max index + 1.
  Index num_vertices = 0;
};

struct LoadedGraph {
  SparseGraph graph;
  // File id of every graph vertex (identity unless a component was extracted).
  std::vector<Index> original_ids;
};

/// Whitespace-separated `i j [weight]` per line, 0-based, weight 1 by
/// default; blank lines and lines starting with '#' are skipped. Errors
/// carry the file name and line number.
LoadedGraph load_edge_list(const std::string& path, const EdgeListOptions& opts = {});
void write_edge_list(const std::string& path, const SparseGraph& g);

/// One integer label per line (vertex = line order), or `vertex label` pairs.
std::vector<Index> load_labels(const std::string& path);
void write_labels(const std::string& path, std::span<const Index> labels);

/// Comma-separated rows of d coordinates followed by an integer label.
PointCloud load_point_csv(const std::string& path, bool has_header = false);
void write_point_csv(const std::string& path, const PointCloud& pc, bool with_header = true);

}  // namespace cslce
