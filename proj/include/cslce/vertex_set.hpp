#pragma once

#include <initializer_list>
#include <span>
#include <vector>

#include "cslce/types.hpp"

namespace cslce {

/// Sorted set of distinct vertex indices.
///
/// Construction sorts and deduplicates. Range checks against a vertex count
/// happen at the call sites that know n (see `check_range`).
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Index> ids);
  explicit VertexSet(std::vector<Index> ids);

  static VertexSet all(Index n);
  static VertexSet from_sorted_unique(std::vector<Index> ids);

  Index size() const { return static_cast<Index>(ids_.size()); }
  bool empty() const { return ids_.empty(); }
  bool contains(Index v) const;

  auto begin() const { return ids_.begin(); }
  auto end() const { return ids_.end(); }
  Index operator[](Index i) const { return ids_[static_cast<std::size_t>(i)]; }
  std::span<const Index> ids() const { return ids_; }

  // Throws GraphError if any index is outside [0, n).
  void check_range(Index n) const;

  // Dense 0/1 indicator of length n.
  Vector indicator(Index n) const;

  bool operator==(const VertexSet&) const = default;

 private:
  std::vector<Index> ids_;
};

VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);
VertexSet symmetric_difference(const VertexSet& a, const VertexSet& b);

// V \ s for V = [0, n).
VertexSet complement(const VertexSet& s, Index n);

// {i : v_i > threshold}, strict comparison.
VertexSet threshold_above(const Vector& v, double threshold);

}  // namespace cslce
