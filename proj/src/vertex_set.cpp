#include "cslce/vertex_set.hpp"

#include <algorithm>
#include <iterator>
#include <numeric>
#include <string>

namespace cslce {

VertexSet::VertexSet(std::initializer_list<Index> ids) : VertexSet(std::vector<Index>(ids)) {}

VertexSet::VertexSet(std::vector<Index> ids) : ids_(std::move(ids)) {
  std::sort(ids_.begin(), ids_.end());
  ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

VertexSet VertexSet::all(Index n) {
  std::vector<Index> ids(static_cast<std::size_t>(n));
  std::iota(ids.begin(), ids.end(), Index{0});
  return from_sorted_unique(std::move(ids));
}

VertexSet VertexSet::from_sorted_unique(std::vector<Index> ids) {
  VertexSet s;
  s.ids_ = std::move(ids);
  return s;
}

bool VertexSet::contains(Index v) const { return std::binary_search(ids_.begin(), ids_.end(), v); }

void VertexSet::check_range(Index n) const {
  if (!ids_.empty() && (ids_.front() < 0 || ids_.back() >= n)) {
    const Index bad = ids_.front() < 0 ? ids_.front() : ids_.back();
    throw GraphError("vertex index " + std::to_string(bad) + " out of range [0, " + std::to_string(n) + ")");
  }
}

Vector VertexSet::indicator(Index n) const {
  check_range(n);
  Vector x = Vector::Zero(n);
  for (Index v : ids_) x[v] = 1.0;
  return x;
}

namespace {

template <typename Op>
VertexSet combine(const VertexSet& a, const VertexSet& b, Op op) {
  std::vector<Index> out;
  op(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return VertexSet::from_sorted_unique(std::move(out));
}

}  // namespace

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  return combine(a, b, [](auto... args) { return std::set_union(args...); });
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
  return combine(a, b, [](auto... args) { return std::set_intersection(args...); });
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  return combine(a, b, [](auto... args) { return std::set_difference(args...); });
}

VertexSet symmetric_difference(const VertexSet& a, const VertexSet& b) {
  return combine(a, b, [](auto... args) { return std::set_symmetric_difference(args...); });
}

VertexSet complement(const VertexSet& s, Index n) {
  s.check_range(n);
  std::vector<Index> out;
  out.reserve(static_cast<std::size_t>(n - s.size()));
  auto it = s.begin();
  for (Index v = 0; v < n; ++v) {
    if (it != s.end() && *it == v) {
      ++it;
    } else {
      out.push_back(v);
    }
  }
  return VertexSet::from_sorted_unique(std::move(out));
}

VertexSet threshold_above(const Vector& v, double threshold) {
  std::vector<Index> out;
  for (Index i = 0; i < v.size(); ++i) {
    if (v[i] > threshold) out.push_back(i);
  }
  return VertexSet::from_sorted_unique(std::move(out));
}

}  // namespace cslce
