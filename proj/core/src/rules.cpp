#include "fairdiv/rules.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace fairdiv {

namespace {

Allocation finish(std::vector<std::vector<int>> bundles, int n, int m) {
  for (auto& b : bundles) std::sort(b.begin(), b.end());
  Allocation a{std::move(bundles)};
  validate_allocation(a, n, m);
  return a;
}

PickingSequence cyclic_sequence(int n, int steps) {
  PickingSequence seq;
  seq.picks.reserve(static_cast<std::size_t>(std::max(steps, 0)));
  for (int p = 0; p < steps; ++p) seq.picks.push_back(p % n);
  return seq;
}

}  // namespace

Allocation run_picking_sequence(const Instance& inst, const PickingSequence& seq,
                                const LeftoverPolicy& leftovers) {
  validate_instance(inst);
  if (static_cast<int>(seq.picks.size()) > inst.m)
    raise(Errc::bad_argument, "picking sequence longer than the number of goods");
  if (leftovers.kind == LeftoverPolicy::Kind::all_to_agent &&
      (leftovers.agent < 0 || leftovers.agent >= inst.n))
    raise(Errc::bad_argument, "leftover agent out of range", leftovers.agent);

  std::vector<char> taken(static_cast<std::size_t>(std::max(inst.m, 1)), 0);
  std::vector<std::vector<int>> bundles(static_cast<std::size_t>(inst.n));

  for (std::size_t pos = 0; pos < seq.picks.size(); ++pos) {
    const int agent = seq.picks[pos];
    if (agent < 0 || agent >= inst.n)
      raise(Errc::bad_argument, "picking agent " + std::to_string(agent) + " out of range", agent);
    int chosen = -1;
    for (int g : inst.rankings[static_cast<std::size_t>(agent)]) {
      if (!taken[static_cast<std::size_t>(g)]) {
        chosen = g;
        break;
      }
    }
    if (chosen < 0)
      raise(Errc::pick_without_ranked_good,
            "agent " + std::to_string(agent) + " has no ranked good left at pick " +
                std::to_string(pos + 1) + " (sequence/k mismatch)",
            agent);
    taken[static_cast<std::size_t>(chosen)] = 1;
    bundles[static_cast<std::size_t>(agent)].push_back(chosen);
  }

  std::vector<int> rest;
  for (int g = 0; g < inst.m; ++g)
    if (!taken[static_cast<std::size_t>(g)]) rest.push_back(g);

  switch (leftovers.kind) {
    case LeftoverPolicy::Kind::one_each_ascending:
      if (static_cast<int>(rest.size()) > inst.n)
        raise(Errc::bad_argument, "more leftovers than agents for one-each policy");
      for (std::size_t i = 0; i < rest.size(); ++i) bundles[i].push_back(rest[i]);
      break;
    case LeftoverPolicy::Kind::all_to_agent:
      for (int g : rest) bundles[static_cast<std::size_t>(leftovers.agent)].push_back(g);
      break;
    case LeftoverPolicy::Kind::round_robin_pad:
      for (std::size_t i = 0; i < rest.size(); ++i)
        bundles[i % static_cast<std::size_t>(inst.n)].push_back(rest[i]);
      break;
  }

  return finish(std::move(bundles), inst.n, inst.m);
}

int ef1_threshold(int n, int m) {
  if (n < 1) raise(Errc::zero_n, "ef1_threshold needs n >= 1");
  if (m < 0) raise(Errc::bad_argument, "negative good count");
  if (m == 0) return 0;
  const int r = m % n;
  int k;
  if (r == 0)
    k = m - n;
  else if (r == 1)
    k = m - 2;
  else
    k = m - r;
  return std::max(k, 0);
}

Allocation ef1_rule(const Instance& inst) {
  validate_instance(inst);
  const int thr = ef1_threshold(inst.n, inst.m);
  if (inst.k < thr)
    raise(Errc::k_below_threshold, "EF1 needs k >= " + std::to_string(thr) + ", got k=" +
                                       std::to_string(inst.k),
          thr);
  if (inst.m == 0) return finish(std::vector<std::vector<int>>(inst.n), inst.n, inst.m);

  const int r = inst.m % inst.n;
  if (r == 1) {
    if (inst.m == 1)
      return run_picking_sequence(inst, {}, LeftoverPolicy::all_to_agent(0));
    return run_picking_sequence(inst, cyclic_sequence(inst.n, inst.m - 2),
                                LeftoverPolicy::all_to_agent(inst.n - 1));
  }
  const int steps = inst.m - (r == 0 ? inst.n : r);
  return run_picking_sequence(inst, cyclic_sequence(inst.n, steps),
                              LeftoverPolicy::one_each_ascending());
}

Allocation round_robin_rule(const Instance& inst) {
  validate_instance(inst);
  if (inst.m == 0) return finish(std::vector<std::vector<int>>(inst.n), inst.n, inst.m);
  if (inst.k < inst.m - 1)
    raise(Errc::k_below_threshold,
          "round robin needs k >= m - 1, got k=" + std::to_string(inst.k), inst.m - 1);
  // The last pick is forced, so run m - 1 ranked picks and hand the leftover
  // to whoever's turn it is.
  return run_picking_sequence(inst, cyclic_sequence(inst.n, inst.m - 1),
                              LeftoverPolicy::all_to_agent((inst.m - 1) % inst.n));
}

DeadlinePairSet mms_deadline_pairs(int n, int m) {
  if (n < 1) raise(Errc::zero_n, "deadline pairs need n >= 1");
  if (m <= n)
    raise(Errc::m_not_greater_than_n,
          "deadline construction needs m > n, got m=" + std::to_string(m) +
              ", n=" + std::to_string(n));
  const Rat h2 = 2 * harmonic(n);
  DeadlinePairSet out{n, {}};
  for (int i1 = 1; i1 <= n; ++i1) {
    const Rat stride = h2 * (n - i1 + 1);
    const Int j_max = rat_floor(Rat(m - i1) / stride);
    for (Int j = 0; j <= j_max; ++j) {
      const Int offset = rat_floor(Rat(j) * stride);
      const int deadline = i1 + offset.convert_to<int>();
      out.pairs.push_back({i1 - 1, deadline});
    }
  }
  return out;
}

DeadlinePairSet mms_low_distortion_pairs(int n, int m) {
  DeadlinePairSet out = mms_deadline_pairs(n, m);
  for (int deadline = 2 * n + 1; deadline <= m; deadline += 2 * n) out.pairs.push_back({0, deadline});
  return out;
}

PickingSequence edf_schedule(const DeadlinePairSet& pairs, int length) {
  const int n = pairs.agent_count;
  if (n < 1) raise(Errc::zero_n, "schedule needs at least one agent");
  if (length < 0) raise(Errc::bad_argument, "negative schedule length");
  for (const auto& p : pairs.pairs) {
    if (p.agent < 0 || p.agent >= n)
      raise(Errc::bad_argument, "deadline pair agent out of range", p.agent);
    if (p.deadline < 1) raise(Errc::bad_argument, "deadlines are 1-based positions", p.deadline);
  }

  std::vector<DeadlinePair> sorted = pairs.pairs;
  std::sort(sorted.begin(), sorted.end(), [](const DeadlinePair& a, const DeadlinePair& b) {
    if (a.deadline != b.deadline) return a.deadline < b.deadline;
    return a.agent < b.agent;
  });
  // Unit jobs: earliest-deadline-first meets every deadline exactly when no
  // prefix is oversubscribed, i.e. at most d pairs have deadline <= d.
  for (std::size_t idx = 0; idx < sorted.size(); ++idx)
    if (sorted[idx].deadline < static_cast<int>(idx) + 1)
      raise(Errc::infeasible_deadlines,
            "more than " + std::to_string(sorted[idx].deadline) + " pairs due by position " +
                std::to_string(sorted[idx].deadline),
            sorted[idx].deadline);

  PickingSequence seq;
  seq.picks.reserve(static_cast<std::size_t>(length));
  for (const auto& p : sorted) {
    if (static_cast<int>(seq.picks.size()) == length) break;
    seq.picks.push_back(p.agent);
  }
  int pad = 0;
  while (static_cast<int>(seq.picks.size()) < length) seq.picks.push_back(pad++ % n);
  return seq;
}

bool verify_deadlines(const PickingSequence& seq, const DeadlinePairSet& pairs) {
  const int n = pairs.agent_count;
  std::vector<std::vector<int>> deadlines(static_cast<std::size_t>(std::max(n, 1)));
  for (const auto& p : pairs.pairs) {
    if (p.agent < 0 || p.agent >= n) return false;
    deadlines[static_cast<std::size_t>(p.agent)].push_back(p.deadline);
  }
  std::vector<std::vector<int>> occurrences(static_cast<std::size_t>(std::max(n, 1)));
  for (std::size_t pos = 0; pos < seq.picks.size(); ++pos) {
    const int agent = seq.picks[pos];
    if (agent >= 0 && agent < n)
      occurrences[static_cast<std::size_t>(agent)].push_back(static_cast<int>(pos) + 1);
  }
  for (int a = 0; a < n; ++a) {
    auto& due = deadlines[static_cast<std::size_t>(a)];
    std::sort(due.begin(), due.end());
    const auto& occ = occurrences[static_cast<std::size_t>(a)];
    for (std::size_t r = 0; r < due.size(); ++r) {
      if (r >= occ.size()) return false;
      if (occ[r] > due[r]) return false;
    }
  }
  return true;
}

namespace {

PickingSequence truncated_edf(const DeadlinePairSet& pairs, int m, int k) {
  PickingSequence seq = edf_schedule(pairs, m);
  seq.picks.resize(static_cast<std::size_t>(std::min(k, m)));
  return seq;
}

void require_mms_domain(const Instance& inst) {
  if (inst.m <= inst.n)
    raise(Errc::m_not_greater_than_n, "rule needs m > n, got m=" + std::to_string(inst.m) +
                                          ", n=" + std::to_string(inst.n));
}

}  // namespace

Allocation mms_rule(const Instance& inst) {
  validate_instance(inst);
  require_mms_domain(inst);
  if (inst.k < inst.n)
    raise(Errc::k_below_n, "rule needs k >= n, got k=" + std::to_string(inst.k), inst.n);
  return run_picking_sequence(inst, truncated_edf(mms_deadline_pairs(inst.n, inst.m), inst.m, inst.k),
                              LeftoverPolicy::round_robin_pad());
}

Allocation mms_rule_k_n_minus_1(const Instance& inst) {
  validate_instance(inst);
  require_mms_domain(inst);
  if (inst.k < inst.n - 1)
    raise(Errc::k_below_threshold, "rule needs k >= n - 1, got k=" + std::to_string(inst.k),
          inst.n - 1);
  PickingSequence seq;
  for (int a = 0; a + 1 < inst.n; ++a) seq.picks.push_back(a);
  return run_picking_sequence(inst, seq, LeftoverPolicy::all_to_agent(inst.n - 1));
}

Allocation mms_rule_low_distortion(const Instance& inst) {
  validate_instance(inst);
  require_mms_domain(inst);
  if (inst.k < inst.n)
    raise(Errc::k_below_n, "rule needs k >= n, got k=" + std::to_string(inst.k), inst.n);
  return run_picking_sequence(
      inst, truncated_edf(mms_low_distortion_pairs(inst.n, inst.m), inst.m, inst.k),
      LeftoverPolicy::all_to_agent(0));
}

Allocation ef1_low_distortion_rule(const Instance& inst) {
  validate_instance(inst);
  if (inst.k == 0) raise(Errc::k_zero, "rule needs k >= 1");
  if (inst.m <= inst.n) {
    // One good per agent at most, agent 0 served first with its favorite.
    std::vector<std::vector<int>> bundles(static_cast<std::size_t>(inst.n));
    const int favorite = inst.rankings[0][0];
    bundles[0].push_back(favorite);
    int next_agent = 1;
    for (int g = 0; g < inst.m; ++g) {
      if (g == favorite) continue;
      bundles[static_cast<std::size_t>(next_agent++)].push_back(g);
    }
    return finish(std::move(bundles), inst.n, inst.m);
  }
  return ef1_rule(inst);
}

const std::vector<std::string>& deterministic_rule_ids() {
  static const std::vector<std::string> ids = {
      "round-robin", "ef1", "ef1-low-distortion", "mms", "mms-k-n-1", "mms-low-distortion"};
  return ids;
}

bool is_rule_id(const std::string& id) {
  const auto& ids = deterministic_rule_ids();
  if (std::find(ids.begin(), ids.end(), id) != ids.end()) return true;
  if (id.rfind("uniform:", 0) == 0)
    return std::find(ids.begin(), ids.end(), id.substr(8)) != ids.end();
  return false;
}

Allocation run_deterministic_rule(const std::string& id, const Instance& inst) {
  if (id == "round-robin") return round_robin_rule(inst);
  if (id == "ef1") return ef1_rule(inst);
  if (id == "ef1-low-distortion") return ef1_low_distortion_rule(inst);
  if (id == "mms") return mms_rule(inst);
  if (id == "mms-k-n-1") return mms_rule_k_n_minus_1(inst);
  if (id == "mms-low-distortion") return mms_rule_low_distortion(inst);
  raise(Errc::unknown_rule, "unknown deterministic rule '" + id + "'");
}

RandomizedAllocation uniformize(const std::string& rule_id, const Instance& inst) {
  // Run once on the identity labeling so precondition failures surface here.
  (void)run_deterministic_rule(rule_id, inst);
  return UniformPermutationMixture{rule_id, inst};
}

ExplicitMixture expand_uniform_mixture(const UniformPermutationMixture& mix, int max_n) {
  const Instance& inst = mix.instance;
  validate_instance(inst);
  if (inst.n > max_n)
    raise(Errc::cap_exceeded, "permutation expansion capped at n <= " + std::to_string(max_n));

  std::vector<int> perm(static_cast<std::size_t>(inst.n));
  std::iota(perm.begin(), perm.end(), 0);
  Int factorial = 1;
  for (int i = 2; i <= inst.n; ++i) factorial *= i;

  // perm[role] is the original agent playing that role.
  std::map<Allocation, Int> counts;
  do {
    Instance relabeled = inst;
    for (int role = 0; role < inst.n; ++role)
      relabeled.rankings[static_cast<std::size_t>(role)] =
          inst.rankings[static_cast<std::size_t>(perm[static_cast<std::size_t>(role)])];
    const Allocation by_role = run_deterministic_rule(mix.rule_id, relabeled);
    Allocation back;
    back.bundles.resize(static_cast<std::size_t>(inst.n));
    for (int role = 0; role < inst.n; ++role)
      back.bundles[static_cast<std::size_t>(perm[static_cast<std::size_t>(role)])] =
          by_role.bundles[static_cast<std::size_t>(role)];
    counts[std::move(back)] += 1;
  } while (std::next_permutation(perm.begin(), perm.end()));

  ExplicitMixture out;
  out.support.reserve(counts.size());
  for (auto& [alloc, count] : counts) out.support.emplace_back(alloc, Rat(count, factorial));
  validate_mixture(out, inst.n, inst.m);
  return out;
}

RandomizedAllocation run_rule(const std::string& id, const Instance& inst) {
  if (id.rfind("uniform:", 0) == 0) return uniformize(id.substr(8), inst);
  ExplicitMixture degenerate;
  degenerate.support.emplace_back(run_deterministic_rule(id, inst), Rat(1));
  return degenerate;
}

}  // namespace fairdiv
