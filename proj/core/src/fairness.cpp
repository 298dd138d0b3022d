#include "fairdiv/fairness.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace fairdiv {

namespace {

void check_dims(const Allocation& a, const ValuationProfile& v) {
  if (static_cast<int>(a.bundles.size()) != v.agents())
    raise(Errc::dimension_mismatch,
          "allocation has " + std::to_string(a.bundles.size()) + " bundles for " +
              std::to_string(v.agents()) + " agents");
  validate_allocation(a, v.agents(), v.goods());
}

// Max over canonical bundle labelings of the min bundle sum. Goods come in
// descending value so the upper-bound prune bites early.
template <typename Num>
class MmsSearch {
 public:
  MmsSearch(std::vector<Num> vals, int n) : vals_(std::move(vals)), n_(n) {
    std::sort(vals_.begin(), vals_.end(), std::greater<>());
    sums_.assign(static_cast<std::size_t>(n_), Num(0));
    for (const Num& x : vals_) remaining_ += x;
  }

  Num run() {
    dfs(0, 0);
    return best_;
  }

 private:
  void dfs(std::size_t g, int used) {
    if (g == vals_.size()) {
      if (used == n_) {
        Num mn = sums_[0];
        for (int b = 1; b < n_; ++b) mn = std::min(mn, sums_[static_cast<std::size_t>(b)]);
        if (mn > best_) best_ = mn;
      }
      return;
    }
    if (used + static_cast<int>(vals_.size() - g) < n_) return;  // a bundle stays empty
    Num ub = remaining_;
    if (used == n_) ub += *std::min_element(sums_.begin(), sums_.end());
    if (ub <= best_) return;

    const int limit = std::min(used + 1, n_);
    const Num& x = vals_[g];
    remaining_ -= x;
    for (int b = 0; b < limit; ++b) {
      sums_[static_cast<std::size_t>(b)] += x;
      dfs(g + 1, std::max(used, b + 1));
      sums_[static_cast<std::size_t>(b)] -= x;
    }
    remaining_ += x;
  }

  std::vector<Num> vals_;
  int n_;
  std::vector<Num> sums_;
  Num remaining_{};
  Num best_{};
};

}  // namespace

bool is_ef1(const Allocation& a, const ValuationProfile& v) {
  check_dims(a, v);
  const int n = v.agents();
  for (int i = 0; i < n; ++i) {
    const Rat own = v.bundle_value(i, a.bundles[static_cast<std::size_t>(i)]);
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      const auto& other = a.bundles[static_cast<std::size_t>(j)];
      Rat theirs = v.bundle_value(i, other);
      if (own >= theirs) continue;
      Rat best_good;
      for (int g : other)
        best_good = std::max(best_good, v.values[static_cast<std::size_t>(i)][static_cast<std::size_t>(g)]);
      if (own < theirs - best_good) return false;
    }
  }
  return true;
}

bool is_efx(const Allocation& a, const ValuationProfile& v) {
  check_dims(a, v);
  const int n = v.agents();
  for (int i = 0; i < n; ++i) {
    const Rat own = v.bundle_value(i, a.bundles[static_cast<std::size_t>(i)]);
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      const auto& other = a.bundles[static_cast<std::size_t>(j)];
      if (other.empty()) continue;
      const Rat theirs = v.bundle_value(i, other);
      Rat worst_good = v.values[static_cast<std::size_t>(i)][static_cast<std::size_t>(other[0])];
      for (int g : other)
        worst_good = std::min(worst_good,
                              v.values[static_cast<std::size_t>(i)][static_cast<std::size_t>(g)]);
      if (own < theirs - worst_good) return false;
    }
  }
  return true;
}

bool is_eq1(const Allocation& a, const ValuationProfile& v) {
  check_dims(a, v);
  const int n = v.agents();
  for (int j = 0; j < n; ++j) {
    const auto& bj = a.bundles[static_cast<std::size_t>(j)];
    if (bj.empty()) continue;
    const Rat theirs = v.bundle_value(j, bj);
    Rat best_good;
    for (int g : bj)
      best_good = std::max(best_good, v.values[static_cast<std::size_t>(j)][static_cast<std::size_t>(g)]);
    for (int i = 0; i < n; ++i) {
      if (i == j) continue;
      if (v.bundle_value(i, a.bundles[static_cast<std::size_t>(i)]) < theirs - best_good)
        return false;
    }
  }
  return true;
}

bool is_eqx(const Allocation& a, const ValuationProfile& v) {
  check_dims(a, v);
  const int n = v.agents();
  for (int j = 0; j < n; ++j) {
    const auto& bj = a.bundles[static_cast<std::size_t>(j)];
    if (bj.empty()) continue;
    const Rat theirs = v.bundle_value(j, bj);
    // Worst case removes the least valuable positively-valued good; with no
    // positive good the comparison stands against the full (zero) bundle.
    Rat removed;
    bool any_positive = false;
    for (int g : bj) {
      const Rat& x = v.values[static_cast<std::size_t>(j)][static_cast<std::size_t>(g)];
      if (x > 0 && (!any_positive || x < removed)) {
        removed = x;
        any_positive = true;
      }
    }
    const Rat bar = theirs - removed;
    for (int i = 0; i < n; ++i) {
      if (i == j) continue;
      if (v.bundle_value(i, a.bundles[static_cast<std::size_t>(i)]) < bar) return false;
    }
  }
  return true;
}

bool is_balanced(const Allocation& a) {
  if (a.bundles.empty()) return true;
  std::size_t lo = a.bundles[0].size(), hi = lo;
  for (const auto& b : a.bundles) {
    lo = std::min(lo, b.size());
    hi = std::max(hi, b.size());
  }
  return hi - lo <= 1;
}

Rat mms_value(int agent, const ValuationProfile& v, int n, const MmsCap& cap) {
  if (cap.max_m < 1 || cap.max_n < 1) raise(Errc::bad_argument, "caps must be positive");
  if (n < 1) raise(Errc::zero_n, "maximin share needs n >= 1");
  if (agent < 0 || agent >= v.agents())
    raise(Errc::dimension_mismatch, "agent " + std::to_string(agent) + " out of range", agent);
  const int m = v.goods();
  if (m > cap.max_m || n > cap.max_n)
    raise(Errc::cap_exceeded, "mms enumeration capped at m <= " + std::to_string(cap.max_m) +
                                  ", n <= " + std::to_string(cap.max_n));
  if (m == 0) return Rat(0);

  const auto& row = v.values[static_cast<std::size_t>(agent)];
  Int common = 1;
  for (const Rat& x : row)
    common = boost::multiprecision::lcm(common, boost::multiprecision::denominator(x));

  // Scaled to integers the search is pure int64 whenever the common
  // denominator fits; the cpp_int fallback keeps exactness beyond that.
  if (common <= std::numeric_limits<long long>::max()) {
    const long long scale = common.convert_to<long long>();
    std::vector<long long> scaled;
    scaled.reserve(row.size());
    for (const Rat& x : row) {
      const Int units = boost::multiprecision::numerator(x) *
                        (common / boost::multiprecision::denominator(x));
      scaled.push_back(units.convert_to<long long>());
    }
    MmsSearch<long long> search(std::move(scaled), n);
    return Rat(search.run(), scale);
  }

  std::vector<Int> scaled;
  scaled.reserve(row.size());
  for (const Rat& x : row)
    scaled.push_back(boost::multiprecision::numerator(x) *
                     (common / boost::multiprecision::denominator(x)));
  MmsSearch<Int> search(std::move(scaled), n);
  return Rat(search.run(), common);
}

bool is_alpha_mms(const Allocation& a, const ValuationProfile& v, const Rat& alpha,
                  const MmsCap& cap) {
  if (alpha < 0 || alpha > 1)
    raise(Errc::alpha_out_of_range, "alpha must lie in [0, 1], got " + rat_string(alpha));
  check_dims(a, v);
  const int n = v.agents();
  for (int i = 0; i < n; ++i) {
    const Rat own = v.bundle_value(i, a.bundles[static_cast<std::size_t>(i)]);
    if (own < alpha * mms_value(i, v, n, cap)) return false;
  }
  return true;
}

bool necessary_dominates(const std::vector<int>& ranking, int m, const std::vector<int>& xs,
                         const std::vector<int>& ys) {
  std::vector<char> in_x(static_cast<std::size_t>(std::max(m, 1)), 0);
  std::vector<char> in_y(static_cast<std::size_t>(std::max(m, 1)), 0);
  auto mark = [m](std::vector<char>& mask, int g) {
    if (g < 0 || g >= m)
      raise(Errc::good_id_out_of_range, "good " + std::to_string(g) + " out of range", g);
    mask[static_cast<std::size_t>(g)] = 1;
  };
  for (int g : xs) mark(in_x, g);
  for (int g : ys) mark(in_y, g);
  for (int g = 0; g < m; ++g) {
    if (in_x[static_cast<std::size_t>(g)] && in_y[static_cast<std::size_t>(g)]) {
      in_x[static_cast<std::size_t>(g)] = 0;
      in_y[static_cast<std::size_t>(g)] = 0;
    }
  }

  // Prefix counts decide coverage among ranked goods.
  int cx = 0, cy = 0;
  std::vector<char> ranked(static_cast<std::size_t>(std::max(m, 1)), 0);
  for (int g : ranking) {
    if (g < 0 || g >= m)
      raise(Errc::good_id_out_of_range, "ranked good " + std::to_string(g) + " out of range", g);
    ranked[static_cast<std::size_t>(g)] = 1;
    cx += in_x[static_cast<std::size_t>(g)];
    cy += in_y[static_cast<std::size_t>(g)];
    if (cx < cy) return false;
  }

  // Y's unranked goods need ranked X surplus; unranked X goods cover nothing.
  int y_unranked = 0;
  for (int g = 0; g < m; ++g)
    if (in_y[static_cast<std::size_t>(g)] && !ranked[static_cast<std::size_t>(g)]) ++y_unranked;
  return cx - cy >= y_unranked;
}

namespace {

std::vector<int> without(const std::vector<int>& bundle, int g) {
  std::vector<int> rest;
  rest.reserve(bundle.size() - 1);
  for (int h : bundle)
    if (h != g) rest.push_back(h);
  return rest;
}

template <typename PairCheck>
bool necessary_envy_scan(const Allocation& a, const Instance& inst, PairCheck&& holds) {
  validate_instance(inst);
  if (static_cast<int>(a.bundles.size()) != inst.n)
    raise(Errc::dimension_mismatch, "allocation / instance agent counts differ");
  validate_allocation(a, inst.n, inst.m);
  for (int i = 0; i < inst.n; ++i)
    for (int j = 0; j < inst.n; ++j) {
      if (i == j || a.bundles[static_cast<std::size_t>(j)].empty()) continue;
      if (!holds(i, j)) return false;
    }
  return true;
}

}  // namespace

bool necessary_ef1(const Allocation& a, const Instance& inst) {
  return necessary_envy_scan(a, inst, [&](int i, int j) {
    const auto& mine = a.bundles[static_cast<std::size_t>(i)];
    const auto& other = a.bundles[static_cast<std::size_t>(j)];
    const auto& ranking = inst.rankings[static_cast<std::size_t>(i)];
    for (int g : other)
      if (necessary_dominates(ranking, inst.m, mine, without(other, g))) return true;
    return false;
  });
}

bool necessary_efx(const Allocation& a, const Instance& inst) {
  return necessary_envy_scan(a, inst, [&](int i, int j) {
    const auto& mine = a.bundles[static_cast<std::size_t>(i)];
    const auto& other = a.bundles[static_cast<std::size_t>(j)];
    const auto& ranking = inst.rankings[static_cast<std::size_t>(i)];
    for (int g : other)
      if (!necessary_dominates(ranking, inst.m, mine, without(other, g))) return false;
    return true;
  });
}

// Equitability compares different agents' polytopes, so the quantifier
// splits into a min for the have-not and a max for the holder. The EQX guard
// v_j(g) > 0 adds nothing here: any vertex attaining the max can be mixed
// with the uniform point to keep v_j(g) positive while staying arbitrarily
// close to it.
bool necessary_eq1(const Allocation& a, const Instance& inst) {
  return necessary_envy_scan(a, inst, [&](int i, int j) {
    const ConsistentPolytope pi{inst.rankings[static_cast<std::size_t>(i)], inst.m};
    const ConsistentPolytope pj{inst.rankings[static_cast<std::size_t>(j)], inst.m};
    const Rat floor_i = bundle_value_bounds(pi, a.bundles[static_cast<std::size_t>(i)]).min;
    const auto& other = a.bundles[static_cast<std::size_t>(j)];
    for (int g : other)
      if (bundle_value_bounds(pj, without(other, g)).max <= floor_i) return true;
    return false;
  });
}

bool necessary_eqx(const Allocation& a, const Instance& inst) {
  return necessary_envy_scan(a, inst, [&](int i, int j) {
    const ConsistentPolytope pi{inst.rankings[static_cast<std::size_t>(i)], inst.m};
    const ConsistentPolytope pj{inst.rankings[static_cast<std::size_t>(j)], inst.m};
    const Rat floor_i = bundle_value_bounds(pi, a.bundles[static_cast<std::size_t>(i)]).min;
    const auto& other = a.bundles[static_cast<std::size_t>(j)];
    for (int g : other)
      if (bundle_value_bounds(pj, without(other, g)).max > floor_i) return false;
    return true;
  });
}

bool lemma1_condition(const Allocation& a, const Instance& inst) {
  validate_instance(inst);
  if (static_cast<int>(a.bundles.size()) != inst.n)
    raise(Errc::dimension_mismatch, "allocation / instance agent counts differ");
  validate_allocation(a, inst.n, inst.m);

  std::vector<char> top(static_cast<std::size_t>(std::max(inst.m, 1)), 0);
  for (int g : inst.rankings[0]) top[static_cast<std::size_t>(g)] = 1;
  for (int i = 1; i < inst.n; ++i) {
    for (int g : inst.rankings[static_cast<std::size_t>(i)])
      if (!top[static_cast<std::size_t>(g)])
        raise(Errc::top_k_sets_disagree,
              "agent " + std::to_string(i) + " ranks good " + std::to_string(g) +
                  " outside the shared top-k set",
              i);
  }

  std::vector<int> ranked_held(static_cast<std::size_t>(inst.n), 0);
  std::vector<int> sizes(static_cast<std::size_t>(inst.n), 0);
  for (int i = 0; i < inst.n; ++i) {
    sizes[static_cast<std::size_t>(i)] = static_cast<int>(a.bundles[static_cast<std::size_t>(i)].size());
    for (int g : a.bundles[static_cast<std::size_t>(i)])
      ranked_held[static_cast<std::size_t>(i)] += top[static_cast<std::size_t>(g)];
  }
  for (int i = 0; i < inst.n; ++i) {
    // s_i >= |A_j| - 1 for all j != i; only the largest other bundle binds.
    int largest_other = 0;
    for (int j = 0; j < inst.n; ++j)
      if (j != i) largest_other = std::max(largest_other, sizes[static_cast<std::size_t>(j)]);
    if (inst.n > 1 && ranked_held[static_cast<std::size_t>(i)] < largest_other - 1) return false;
  }
  return true;
}

}  // namespace fairdiv
