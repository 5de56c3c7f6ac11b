#include "cslce/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace cslce {

namespace {

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  return in;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << std::setprecision(17);
  return out;
}

[[noreturn]] void parse_fail(const std::string& path, Index line, const std::string& what) {
  throw IoError(path + ":" + std::to_string(line) + ": " + what);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  if (sep == ' ') {
    std::size_t i = 0;
    while (i < s.size()) {
      while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
      std::size_t j = i;
      while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
      if (j > i) out.push_back(s.substr(i, j - i));
      i = j;
    }
    return out;
  }
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      auto tok = s.substr(start, i - start);
      while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.front()))) tok.remove_prefix(1);
      while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.back()))) tok.remove_suffix(1);
      out.push_back(tok);
      start = i + 1;
    }
  }
  return out;
}

template <typename T>
bool parse_number(std::string_view tok, T& value) {
  const auto* end = tok.data() + tok.size();
  const auto [ptr, ec] = std::from_chars(tok.data(), end, value);
  return ec == std::errc() && ptr == end;
}

bool skippable(std::string_view line) {
  const auto first = line.find_first_not_of(" \t\r");
  return first == std::string_view::npos || line[first] == '#';
}

}  // namespace

LoadedGraph load_edge_list(const std::string& path, const EdgeListOptions& opts) {
  auto in = open_in(path);
  std::vector<Edge> edges;
  Index max_id = -1;
  std::string line;
  for (Index lineno = 1; std::getline(in, line); ++lineno) {
    if (skippable(line)) continue;
    const auto tok = split(line, ' ');
    if (tok.size() < 2 || tok.size() > 3) parse_fail(path, lineno, "expected 'i j [weight]'");
    Edge e;
    if (!parse_number(tok[0], e.u) || !parse_number(tok[1], e.v)) parse_fail(path, lineno, "bad vertex index");
    if (tok.size() == 3 && !parse_number(tok[2], e.weight)) parse_fail(path, lineno, "bad weight");
    if (e.u < 0 || e.v < 0) parse_fail(path, lineno, "negative vertex index");
    if (!(e.weight > 0.0)) parse_fail(path, lineno, "weight must be positive");
    if (opts.num_vertices > 0 && (e.u >= opts.num_vertices || e.v >= opts.num_vertices)) {
      parse_fail(path, lineno, "vertex index exceeds declared vertex count");
    }
    max_id = std::max({max_id, e.u, e.v});
    if (e.u == e.v && opts.drop_self_loops) continue;
    edges.push_back(e);
  }
  const Index n = opts.num_vertices > 0 ? opts.num_vertices : max_id + 1;
  if (n <= 0) throw IoError(path + ": no edges");

  LoadedGraph out{{}, {}};
  if (!opts.largest_component) {
    out.graph = build_graph(n, edges);
    out.original_ids.resize(static_cast<std::size_t>(n));
    for (Index v = 0; v < n; ++v) out.original_ids[static_cast<std::size_t>(v)] = v;
    return out;
  }

  const std::vector<Index> comp = connected_components(n, edges);
  std::vector<Index> count(static_cast<std::size_t>(n), 0);
  for (Index c : comp) ++count[static_cast<std::size_t>(c)];
  // Component labels follow first appearance, so max_element picks the lowest id on ties.
  const Index best = std::max_element(count.begin(), count.end()) - count.begin();
  if (count[static_cast<std::size_t>(best)] < 2) throw GraphError(path + ": largest component is a single vertex");
  std::vector<Index> local(static_cast<std::size_t>(n), -1);
  for (Index v = 0; v < n; ++v) {
    if (comp[static_cast<std::size_t>(v)] == best) {
      local[static_cast<std::size_t>(v)] = static_cast<Index>(out.original_ids.size());
      out.original_ids.push_back(v);
    }
  }
  std::vector<Edge> kept;
  for (const Edge& e : edges) {
    if (local[static_cast<std::size_t>(e.u)] >= 0) {
      kept.push_back({local[static_cast<std::size_t>(e.u)], local[static_cast<std::size_t>(e.v)], e.weight});
    }
  }
  out.graph = build_graph(static_cast<Index>(out.original_ids.size()), kept);
  return out;
}

void write_edge_list(const std::string& path, const SparseGraph& g) {
  auto out = open_out(path);
  out << "# " << g.num_vertices() << " vertices, " << g.num_edges() << " edges\n";
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << ' ' << e.weight << '\n';
  if (!out) throw IoError("write to '" + path + "' failed");
}

std::vector<Index> load_labels(const std::string& path) {
  auto in = open_in(path);
  std::vector<std::pair<Index, Index>> rows;
  int width = 0;
  std::string line;
  for (Index lineno = 1; std::getline(in, line); ++lineno) {
    if (skippable(line)) continue;
    const auto tok = split(line, ' ');
    const int w = static_cast<int>(tok.size());
    if (w != 1 && w != 2) parse_fail(path, lineno, "expected 'label' or 'vertex label'");
    if (width != 0 && w != width) parse_fail(path, lineno, "mixed label line formats");
    width = w;
    Index v = static_cast<Index>(rows.size());
    Index label = 0;
    if (w == 2 && !parse_number(tok[0], v)) parse_fail(path, lineno, "bad vertex index");
    if (!parse_number(tok[static_cast<std::size_t>(w - 1)], label)) parse_fail(path, lineno, "bad label");
    rows.emplace_back(v, label);
  }
  std::vector<Index> labels(rows.size(), -1);
  for (const auto& [v, label] : rows) {
    if (v < 0 || v >= static_cast<Index>(rows.size()) || labels[static_cast<std::size_t>(v)] != -1) {
      throw IoError(path + ": vertex ids must be a permutation of 0..n-1");
    }
    labels[static_cast<std::size_t>(v)] = label;
  }
  return labels;
}

void write_labels(const std::string& path, std::span<const Index> labels) {
  auto out = open_out(path);
  for (std::size_t v = 0; v < labels.size(); ++v) out << v << ' ' << labels[v] << '\n';
  if (!out) throw IoError("write to '" + path + "' failed");
}

PointCloud load_point_csv(const std::string& path, bool has_header) {
  auto in = open_in(path);
  std::vector<double> coords;
  std::vector<Index> labels;
  Index dim = -1;
  std::string line;
  for (Index lineno = 1; std::getline(in, line); ++lineno) {
    if (lineno == 1 && has_header) continue;
    if (skippable(line)) continue;
    const auto tok = split(line, ',');
    const auto d = static_cast<Index>(tok.size()) - 1;
    if (d < 1) parse_fail(path, lineno, "need at least one coordinate and a label");
    if (dim >= 0 && d != dim) parse_fail(path, lineno, "inconsistent column count");
    dim = d;
    for (Index c = 0; c < d; ++c) {
      double x = 0.0;
      if (!parse_number(tok[static_cast<std::size_t>(c)], x)) parse_fail(path, lineno, "bad coordinate");
      coords.push_back(x);
    }
    Index label = 0;
    if (!parse_number(tok.back(), label) || label < 0) parse_fail(path, lineno, "bad label");
    labels.push_back(label);
  }
  if (labels.empty()) throw IoError(path + ": no points");
  PointCloud pc;
  pc.points = Eigen::Map<const decltype(pc.points)>(coords.data(), static_cast<Index>(labels.size()), dim);
  pc.labels = std::move(labels);
  return pc;
}

void write_point_csv(const std::string& path, const PointCloud& pc, bool with_header) {
  auto out = open_out(path);
  if (with_header) {
    for (Index c = 0; c < pc.dim(); ++c) out << 'x' << c << ',';
    out << "label\n";
  }
  for (Index i = 0; i < pc.size(); ++i) {
    for (Index c = 0; c < pc.dim(); ++c) out << pc.points(i, c) << ',';
    out << pc.labels[static_cast<std::size_t>(i)] << '\n';
  }
  if (!out) throw IoError("write to '" + path + "' failed");
}

}  // namespace cslce
