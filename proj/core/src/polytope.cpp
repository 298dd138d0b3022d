#include "fairdiv/polytope.hpp"

#include <algorithm>
#include <random>

namespace fairdiv {

namespace {

void check_polytope(const ConsistentPolytope& p) {
  if (p.m < 0) raise(Errc::invalid_instance, "negative good count");
  std::vector<char> seen(static_cast<std::size_t>(std::max(p.m, 1)), 0);
  for (int g : p.ranking) {
    if (g < 0 || g >= p.m)
      raise(Errc::good_id_out_of_range, "ranked good " + std::to_string(g) + " out of range", g);
    if (seen[static_cast<std::size_t>(g)])
      raise(Errc::duplicate_good_in_ranking, "good " + std::to_string(g) + " ranked twice", g);
    seen[static_cast<std::size_t>(g)] = 1;
  }
}

std::vector<int> unranked_goods(const ConsistentPolytope& p) {
  std::vector<char> ranked(static_cast<std::size_t>(std::max(p.m, 1)), 0);
  for (int g : p.ranking) ranked[static_cast<std::size_t>(g)] = 1;
  std::vector<int> u;
  u.reserve(static_cast<std::size_t>(p.m - p.k()));
  for (int g = 0; g < p.m; ++g)
    if (!ranked[static_cast<std::size_t>(g)]) u.push_back(g);
  return u;
}

constexpr int kEnumerationBits = 20;

}  // namespace

ConsistentPolytope agent_polytope(const Instance& inst, int agent) {
  validate_instance(inst);
  if (agent < 0 || agent >= inst.n)
    raise(Errc::dimension_mismatch, "agent " + std::to_string(agent) + " out of range", agent);
  return ConsistentPolytope{inst.rankings[static_cast<std::size_t>(agent)], inst.m};
}

void for_each_extreme_point(const ConsistentPolytope& p,
                            const std::function<bool(const std::vector<Rat>&)>& visit) {
  check_polytope(p);
  const int k = p.k();
  if (p.m - k > kEnumerationBits)
    raise(Errc::cap_exceeded, "vertex enumeration needs m - k <= " +
                                  std::to_string(kEnumerationBits) + ", got " +
                                  std::to_string(p.m - k));
  if (p.m == 0) return;  // unit-sum over zero goods: no points at all

  std::vector<Rat> row(static_cast<std::size_t>(p.m));

  // Uniform on the top-t prefix, t = 1..k.
  for (int t = 1; t <= k; ++t) {
    std::fill(row.begin(), row.end(), Rat(0));
    for (int s = 0; s < t; ++s) row[static_cast<std::size_t>(p.ranking[s])] = Rat(1, t);
    if (!visit(row)) return;
  }

  // Uniform on top-k plus each nonempty unranked subset, by size then
  // lexicographic membership.
  const std::vector<int> u = unranked_goods(p);
  const int un = static_cast<int>(u.size());
  std::vector<int> combo;
  for (int s = 1; s <= un; ++s) {
    combo.resize(static_cast<std::size_t>(s));
    for (int i = 0; i < s; ++i) combo[static_cast<std::size_t>(i)] = i;
    while (true) {
      std::fill(row.begin(), row.end(), Rat(0));
      const Rat w(1, k + s);
      for (int g : p.ranking) row[static_cast<std::size_t>(g)] = w;
      for (int idx : combo) row[static_cast<std::size_t>(u[static_cast<std::size_t>(idx)])] = w;
      if (!visit(row)) return;

      int pos = s - 1;
      while (pos >= 0 && combo[static_cast<std::size_t>(pos)] == un - s + pos) --pos;
      if (pos < 0) break;
      ++combo[static_cast<std::size_t>(pos)];
      for (int i = pos + 1; i < s; ++i)
        combo[static_cast<std::size_t>(i)] = combo[static_cast<std::size_t>(i - 1)] + 1;
    }
  }
}

std::vector<std::vector<Rat>> extreme_points(const ConsistentPolytope& p) {
  std::vector<std::vector<Rat>> out;
  out.reserve(static_cast<std::size_t>(extreme_point_count(p)));
  for_each_extreme_point(p, [&](const std::vector<Rat>& row) {
    out.push_back(row);
    return true;
  });
  return out;
}

std::uint64_t extreme_point_count(const ConsistentPolytope& p) {
  check_polytope(p);
  if (p.m == 0) return 0;
  const int k = p.k();
  if (p.m - k > 62) raise(Errc::cap_exceeded, "vertex count overflows 64 bits");
  return static_cast<std::uint64_t>(k) + (std::uint64_t{1} << (p.m - k)) - 1;
}

ValueBounds bundle_value_bounds(const ConsistentPolytope& p, const std::vector<int>& bundle) {
  check_polytope(p);
  if (p.m == 0) raise(Errc::empty_market, "no unit-sum valuations over zero goods");

  std::vector<char> in_s(static_cast<std::size_t>(p.m), 0);
  for (int g : bundle) {
    if (g < 0 || g >= p.m)
      raise(Errc::good_id_out_of_range, "bundle good " + std::to_string(g) + " out of range", g);
    in_s[static_cast<std::size_t>(g)] = 1;
  }

  const int k = p.k();
  bool have = false;
  ValueBounds out;
  auto consider = [&](const Rat& value) {
    if (!have) {
      out.min = out.max = value;
      have = true;
      return;
    }
    if (value < out.min) out.min = value;
    if (value > out.max) out.max = value;
  };

  // Prefix vertices.
  int hits = 0;
  for (int t = 1; t <= k; ++t) {
    hits += in_s[static_cast<std::size_t>(p.ranking[t - 1])];
    consider(Rat(hits, t));
  }

  // Subset vertices. Only the counts of unranked goods taken inside vs
  // outside S matter; min sits at "all outside included", max at "none".
  const int ranked_hits = hits;
  int s_in = 0;
  for (int g = 0; g < p.m; ++g) s_in += in_s[static_cast<std::size_t>(g)];
  const int unranked_in = s_in - ranked_hits;
  const int unranked_out = (p.m - k) - unranked_in;
  for (int i = 0; i <= unranked_in; ++i) {
    for (int j : {0, unranked_out}) {
      if (k + i + j == 0) continue;  // empty support is not a point
      consider(Rat(ranked_hits + i, k + i + j));
    }
  }

  return out;
}

std::vector<Rat> sample_consistent(const ConsistentPolytope& p, std::uint64_t seed) {
  check_polytope(p);
  if (p.m < 1) raise(Errc::empty_market, "cannot sample a valuation over zero goods");

  // mt19937_64 with modulo reduction keeps output identical across standard
  // libraries; std::uniform_int_distribution does not.
  std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + 0x2545f4914f6cdd1dULL);
  auto below = [&rng](std::uint64_t bound) { return static_cast<int>(rng() % bound); };

  const int k = p.k();
  const std::vector<int> u = unranked_goods(p);
  const int un = static_cast<int>(u.size());

  std::vector<Rat> acc(static_cast<std::size_t>(p.m));
  long long total_weight = 0;
  std::vector<int> support;
  for (int component = 0; component < 6; ++component) {
    support.clear();
    const bool use_prefix = k >= 1 && (un == 0 || below(2) == 0);
    if (use_prefix) {
      const int t = 1 + below(static_cast<std::uint64_t>(k));
      for (int s = 0; s < t; ++s) support.push_back(p.ranking[static_cast<std::size_t>(s)]);
    } else {
      support.assign(p.ranking.begin(), p.ranking.end());
      std::size_t before = support.size();
      for (int g : u)
        if (below(2) == 0) support.push_back(g);
      if (support.size() == before)
        support.push_back(u[static_cast<std::size_t>(below(static_cast<std::uint64_t>(un)))]);
    }
    const int w = 1 + below(64);
    total_weight += w;
    const Rat share(w, static_cast<long long>(support.size()));
    for (int g : support) acc[static_cast<std::size_t>(g)] += share;
  }

  for (Rat& x : acc) x /= total_weight;
  return acc;
}

}  // namespace fairdiv
