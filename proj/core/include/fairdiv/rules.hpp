#pragma once

#include <compare>
#include <string>
#include <vector>

#include "fairdiv/model.hpp"

namespace fairdiv {

/// Requires agent's j-th pick (0-based, j per pair) to land at or before
/// `deadline`. Positions are 1-based; agents 0-based.
struct DeadlinePair {
  int agent = 0;
  int deadline = 0;

  auto operator<=>(const DeadlinePair&) const = default;
};

struct DeadlinePairSet {
  int agent_count = 0;
  std::vector<DeadlinePair> pairs;
};

/// What to do with goods left over after the picking prefix.
struct LeftoverPolicy {
  enum class Kind { one_each_ascending, all_to_agent, round_robin_pad };

  Kind kind = Kind::round_robin_pad;
  int agent = -1;

  static LeftoverPolicy one_each_ascending() { return {Kind::one_each_ascending, -1}; }
  static LeftoverPolicy all_to_agent(int agent) { return {Kind::all_to_agent, agent}; }
  static LeftoverPolicy round_robin_pad() { return {Kind::round_robin_pad, -1}; }
};

/// Each listed agent in turn takes their highest-ranked remaining good;
/// whatever is left afterwards goes out per `leftovers`. Raises
/// PickWithoutRankedGood if a picker's ranked goods are exhausted while
/// unranked goods remain (a sequence/k mismatch; the rules below are built
/// so this cannot happen).
Allocation run_picking_sequence(const Instance& inst, const PickingSequence& seq,
                                const LeftoverPolicy& leftovers);

/// Minimal k for which EF1 is guaranteed achievable from top-k rankings:
/// m - n when m mod n = 0, m - 2 when m mod n = 1, m - (m mod n) otherwise
/// (clamped at 0).
int ef1_threshold(int n, int m);

/// Round robin for the case-dependent number of steps, then leftovers placed
/// so the result permutes the hypothetical last round: m mod n = 0 gives one
/// leftover to each agent ascending; m mod n = 1 gives both leftovers to the
/// last agent (m = 1: the good to agent 0); m mod n > 1 gives the leftovers
/// one each to agents 0,1,... ascending.
Allocation ef1_rule(const Instance& inst);

/// Classic cyclic picking sequence. The final pick is forced (one good
/// left), so top-(m-1) rankings suffice.
Allocation round_robin_rule(const Instance& inst);

/// The deadline families (i, i + floor(j*2H_n(n-i+1))) in 1-based agent
/// terms, for j up to floor((m-i)/(2H_n(n-i+1))). Floors are evaluated on
/// exact rationals.
DeadlinePairSet mms_deadline_pairs(int n, int m);

/// mms_deadline_pairs plus the extra family (agent 0, 2nj+1) for j >= 1.
DeadlinePairSet mms_low_distortion_pairs(int n, int m);

/// Earliest-deadline-first: pair agents sorted by deadline (ties by agent
/// id) form the prefix; positions beyond it cycle agents 0..n-1. Raises
/// InfeasibleDeadlines(d) when more than d pairs have deadline <= d.
PickingSequence edf_schedule(const DeadlinePairSet& pairs, int length);

/// True iff for every agent the r-th occurrence in `seq` is at or before the
/// r-th smallest of that agent's deadlines.
bool verify_deadlines(const PickingSequence& seq, const DeadlinePairSet& pairs);

/// EDF sequence over mms_deadline_pairs truncated to k picks, leftovers
/// padded round-robin. Guarantees (k-n+1)/(m-n+1) * 1/(2H_n) of each agent's
/// maximin share.
Allocation mms_rule(const Instance& inst);

/// Agents 0..n-2 pick once in order, agent n-1 takes everything left.
/// Guarantees 1/floor((m-n+2)/2)-MMS; agent n-1 gets a full MMS bundle.
Allocation mms_rule_k_n_minus_1(const Instance& inst);

/// mms_rule with the extra agent-0 deadlines and all leftovers to agent 0,
/// pinning agent 0's utility at 1/(2n) or more under every consistent
/// valuation while keeping the mms_rule approximation.
Allocation mms_rule_low_distortion(const Instance& inst);

/// EF1 with agent 0's utility at least 1/(3n): for m <= n agent 0 takes its
/// top-ranked good and the rest go one each ascending; for m > n this is
/// ef1_rule, whose round-robin order already starts at agent 0.
Allocation ef1_low_distortion_rule(const Instance& inst);

/// Wraps a deterministic rule as the uniform mixture over agent relabelings.
RandomizedAllocation uniformize(const std::string& rule_id, const Instance& inst);

/// Expands to an explicit mixture over at most n! allocations (duplicates
/// merged, probabilities multiples of 1/n!). CapExceeded for n > max_n.
ExplicitMixture expand_uniform_mixture(const UniformPermutationMixture& mix, int max_n = 6);

// Stable rule identifiers: "round-robin", "ef1", "ef1-low-distortion",
// "mms", "mms-k-n-1", "mms-low-distortion", plus "uniform:<rule>".
const std::vector<std::string>& deterministic_rule_ids();
bool is_rule_id(const std::string& id);
Allocation run_deterministic_rule(const std::string& id, const Instance& inst);
RandomizedAllocation run_rule(const std::string& id, const Instance& inst);

}  // namespace fairdiv
