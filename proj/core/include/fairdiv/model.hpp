#pragma once

#include <compare>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "fairdiv/rational.hpp"

namespace fairdiv {

// Agents and goods are 0-indexed everywhere in this library.

/// A market: n agents, m goods, and one top-k ranking per agent.
struct Instance {
  int n = 0;
  int m = 0;
  int k = 0;
  std::vector<std::vector<int>> rankings;  // n rows of k distinct good ids, best first
};

/// Checks all Instance invariants: n >= 1, 0 <= k <= m, one ranking per
/// agent, each listing exactly k distinct goods from [0, m).
void validate_instance(const Instance& inst);

/// Additive unit-sum valuations, one row per agent.
struct ValuationProfile {
  std::vector<std::vector<Rat>> values;  // n x m

  int agents() const { return static_cast<int>(values.size()); }
  int goods() const { return values.empty() ? 0 : static_cast<int>(values[0].size()); }
  Rat bundle_value(int agent, const std::vector<int>& bundle) const;
};

/// Entries nonnegative, rows rectangular and summing to exactly 1.
void validate_profile(const ValuationProfile& v);

/// True iff every agent's values are non-increasing along their ranking and
/// every ranked good is worth at least every unranked good. Ties allowed.
bool is_consistent(const ValuationProfile& v, const Instance& inst);

/// The k most valuable goods in non-increasing value order, ties broken by
/// ascending good id.
std::vector<int> top_k_of(const std::vector<Rat>& row, int k);

/// An ordered partition of the goods into n bundles (empty bundles legal).
/// Bundles are kept sorted ascending so allocations compare structurally.
struct Allocation {
  std::vector<std::vector<int>> bundles;

  bool operator==(const Allocation&) const = default;
  auto operator<=>(const Allocation&) const = default;
};

void validate_allocation(const Allocation& a, int n, int m);

struct PickingSequence {
  std::vector<int> picks;  // agent ids, length <= m
};

/// Finitely supported distribution over allocations.
struct ExplicitMixture {
  std::vector<std::pair<Allocation, Rat>> support;  // probabilities sum to 1
};

void validate_mixture(const ExplicitMixture& mix, int n, int m);

/// The uniform mixture over all n! agent relabelings of a deterministic rule.
struct UniformPermutationMixture {
  std::string rule_id;
  Instance instance;
};

using RandomizedAllocation = std::variant<ExplicitMixture, UniformPermutationMixture>;

}  // namespace fairdiv
