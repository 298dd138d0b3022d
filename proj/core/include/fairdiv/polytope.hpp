#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "fairdiv/model.hpp"

namespace fairdiv {

/// The set of unit-sum valuation rows consistent with one top-k ranking:
///
///   { v >= 0 : v(g_(1)) >= ... >= v(g_(k)) >= v(g') for unranked g',
///     sum_g v(g) = 1 }
///
/// Its vertices are the uniform distributions on the up-closed supports of
/// the ranking order: the top-t prefixes for t = 1..k, and top-k united with
/// any nonempty subset of the unranked goods. For k = m that is exactly the
/// m prefix-uniform points; for k = 0 every nonempty subset of goods.
struct ConsistentPolytope {
  std::vector<int> ranking;  // k distinct good ids, best first
  int m = 0;

  int k() const { return static_cast<int>(ranking.size()); }
};

ConsistentPolytope agent_polytope(const Instance& inst, int agent);

/// Visits every vertex: prefixes t = 1..k first, then unranked subsets by
/// cardinality and lexicographic membership. The visitor returns false to
/// stop early. Enumeration is exponential in m - k, so m - k <= 20 is
/// required (CapExceeded beyond).
void for_each_extreme_point(const ConsistentPolytope& p,
                            const std::function<bool(const std::vector<Rat>&)>& visit);

std::vector<std::vector<Rat>> extreme_points(const ConsistentPolytope& p);

/// k + 2^(m-k) - 1, without enumerating.
std::uint64_t extreme_point_count(const ConsistentPolytope& p);

struct ValueBounds {
  Rat min;
  Rat max;
};

/// Exact min and max of v(S) over the polytope. The objective is linear, so
/// optima sit at vertices; a vertex's value depends only on the prefix hit
/// counts and on how many unranked goods its support takes inside vs outside
/// S, which collapses the subset family to an O(m) scan.
ValueBounds bundle_value_bounds(const ConsistentPolytope& p, const std::vector<int>& bundle);

/// A pseudo-random consistent unit-sum row: convex combination of vertices
/// with random integer weights. Deterministic for a given seed.
std::vector<Rat> sample_consistent(const ConsistentPolytope& p, std::uint64_t seed);

}  // namespace fairdiv
