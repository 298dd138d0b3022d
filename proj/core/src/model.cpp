#include "fairdiv/model.hpp"

#include <algorithm>
#include <numeric>

namespace fairdiv {

void validate_instance(const Instance& inst) {
  if (inst.n < 1)
    raise(Errc::invalid_instance, "agent count must be >= 1, got " + std::to_string(inst.n));
  if (inst.m < 0)
    raise(Errc::invalid_instance, "good count must be >= 0, got " + std::to_string(inst.m));
  if (inst.k < 0 || inst.k > inst.m)
    raise(Errc::invalid_instance,
          "ranking length k must satisfy 0 <= k <= m, got k=" + std::to_string(inst.k) +
              " with m=" + std::to_string(inst.m));
  if (static_cast<int>(inst.rankings.size()) != inst.n)
    raise(Errc::ranking_length_mismatch,
          "expected " + std::to_string(inst.n) + " rankings, got " +
              std::to_string(inst.rankings.size()));

  std::vector<char> seen(static_cast<std::size_t>(std::max(inst.m, 1)), 0);
  for (int a = 0; a < inst.n; ++a) {
    const auto& r = inst.rankings[a];
    if (static_cast<int>(r.size()) != inst.k)
      raise(Errc::ranking_length_mismatch,
            "agent " + std::to_string(a) + " ranks " + std::to_string(r.size()) +
                " goods, expected k=" + std::to_string(inst.k),
            a);
    std::fill(seen.begin(), seen.end(), 0);
    for (int g : r) {
      if (g < 0 || g >= inst.m)
        raise(Errc::good_id_out_of_range,
              "agent " + std::to_string(a) + " ranks good " + std::to_string(g) +
                  " outside [0, " + std::to_string(inst.m) + ")",
              g);
      if (seen[static_cast<std::size_t>(g)])
        raise(Errc::duplicate_good_in_ranking,
              "agent " + std::to_string(a) + " ranks good " + std::to_string(g) + " twice", a);
      seen[static_cast<std::size_t>(g)] = 1;
    }
  }
}

Rat ValuationProfile::bundle_value(int agent, const std::vector<int>& bundle) const {
  if (agent < 0 || agent >= agents())
    raise(Errc::dimension_mismatch, "agent " + std::to_string(agent) + " out of range", agent);
  const auto& row = values[static_cast<std::size_t>(agent)];
  Rat total;
  for (int g : bundle) {
    if (g < 0 || g >= static_cast<int>(row.size()))
      raise(Errc::good_id_out_of_range, "good " + std::to_string(g) + " out of range", g);
    total += row[static_cast<std::size_t>(g)];
  }
  return total;
}

void validate_profile(const ValuationProfile& v) {
  if (v.values.empty()) raise(Errc::invalid_profile, "profile has no agents");
  const std::size_t m = v.values[0].size();
  for (std::size_t a = 0; a < v.values.size(); ++a) {
    const auto& row = v.values[a];
    if (row.size() != m)
      raise(Errc::invalid_profile, "agent " + std::to_string(a) + " row has wrong length",
            static_cast<long long>(a));
    Rat sum;
    for (const Rat& x : row) {
      if (x < 0)
        raise(Errc::invalid_profile, "agent " + std::to_string(a) + " has a negative value",
              static_cast<long long>(a));
      sum += x;
    }
    if (sum != 1)
      raise(Errc::invalid_profile,
            "agent " + std::to_string(a) + " values sum to " + rat_string(sum) + ", expected 1",
            static_cast<long long>(a));
  }
}

bool is_consistent(const ValuationProfile& v, const Instance& inst) {
  if (v.agents() != inst.n || v.goods() != inst.m)
    raise(Errc::dimension_mismatch, "profile is " + std::to_string(v.agents()) + "x" +
                                        std::to_string(v.goods()) + ", instance wants " +
                                        std::to_string(inst.n) + "x" + std::to_string(inst.m));
  for (int a = 0; a < inst.n; ++a) {
    const auto& row = v.values[static_cast<std::size_t>(a)];
    const auto& ranking = inst.rankings[static_cast<std::size_t>(a)];
    for (std::size_t t = 1; t < ranking.size(); ++t)
      if (row[static_cast<std::size_t>(ranking[t - 1])] < row[static_cast<std::size_t>(ranking[t])])
        return false;
    if (ranking.empty() || inst.k == inst.m) continue;
    std::vector<char> ranked(static_cast<std::size_t>(inst.m), 0);
    for (int g : ranking) ranked[static_cast<std::size_t>(g)] = 1;
    const Rat& last = row[static_cast<std::size_t>(ranking.back())];
    for (int g = 0; g < inst.m; ++g)
      if (!ranked[static_cast<std::size_t>(g)] && row[static_cast<std::size_t>(g)] > last)
        return false;
  }
  return true;
}

std::vector<int> top_k_of(const std::vector<Rat>& row, int k) {
  const int m = static_cast<int>(row.size());
  if (k < 0 || k > m)
    raise(Errc::k_too_large,
          "k=" + std::to_string(k) + " outside [0, m=" + std::to_string(m) + "]");
  std::vector<int> ids(static_cast<std::size_t>(m));
  std::iota(ids.begin(), ids.end(), 0);
  std::stable_sort(ids.begin(), ids.end(), [&](int a, int b) {
    const Rat& va = row[static_cast<std::size_t>(a)];
    const Rat& vb = row[static_cast<std::size_t>(b)];
    if (va != vb) return va > vb;
    return a < b;
  });
  ids.resize(static_cast<std::size_t>(k));
  return ids;
}

void validate_allocation(const Allocation& a, int n, int m) {
  if (static_cast<int>(a.bundles.size()) != n)
    raise(Errc::invalid_allocation, "expected " + std::to_string(n) + " bundles, got " +
                                        std::to_string(a.bundles.size()));
  std::vector<char> seen(static_cast<std::size_t>(std::max(m, 1)), 0);
  int total = 0;
  for (const auto& bundle : a.bundles) {
    for (int g : bundle) {
      if (g < 0 || g >= m)
        raise(Errc::invalid_allocation, "good " + std::to_string(g) + " out of range", g);
      if (seen[static_cast<std::size_t>(g)])
        raise(Errc::invalid_allocation, "good " + std::to_string(g) + " allocated twice", g);
      seen[static_cast<std::size_t>(g)] = 1;
      ++total;
    }
  }
  if (total != m)
    raise(Errc::invalid_allocation, "allocation covers " + std::to_string(total) + " of " +
                                        std::to_string(m) + " goods");
}

void validate_mixture(const ExplicitMixture& mix, int n, int m) {
  if (mix.support.empty()) raise(Errc::invalid_allocation, "mixture has empty support");
  Rat total;
  for (const auto& [alloc, prob] : mix.support) {
    validate_allocation(alloc, n, m);
    if (prob < 0) raise(Errc::invalid_allocation, "mixture has a negative probability");
    total += prob;
  }
  if (total != 1)
    raise(Errc::invalid_allocation,
          "mixture probabilities sum to " + rat_string(total) + ", expected 1");
}

}  // namespace fairdiv
