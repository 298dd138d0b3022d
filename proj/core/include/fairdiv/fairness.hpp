#pragma once

#include <vector>

#include "fairdiv/model.hpp"
#include "fairdiv/polytope.hpp"

namespace fairdiv {

/// Size caps for the exact maximin-share enumeration.
struct MmsCap {
  int max_m = 12;
  int max_n = 4;
};

// Checkers for a concrete valuation profile.

/// Envy-free up to one good: i never envies j once the single good of A_j
/// that i values most is set aside.
bool is_ef1(const Allocation& a, const ValuationProfile& v);

/// Envy-free up to any good: the comparison must survive removing every
/// single good of A_j.
bool is_efx(const Allocation& a, const ValuationProfile& v);

/// Equitable up to one good: v_i(A_i) >= v_j(A_j \ {g}) for the good g of
/// A_j that j values most. Interpersonal, unlike envy.
bool is_eq1(const Allocation& a, const ValuationProfile& v);

/// Equitable up to any positively-valued good.
bool is_eqx(const Allocation& a, const ValuationProfile& v);

/// Bundle cardinalities differ by at most one.
bool is_balanced(const Allocation& a);

/// Exact maximin share of `agent`: best over all ordered partitions of the
/// goods into n bundles of the worst bundle value. Brute-force enumeration
/// with canonical bundle labeling; CapExceeded beyond the caps.
Rat mms_value(int agent, const ValuationProfile& v, int n, const MmsCap& cap = {});

bool is_alpha_mms(const Allocation& a, const ValuationProfile& v, const Rat& alpha,
                  const MmsCap& cap = {});

/// True iff v(X) >= v(Y) for every unit-sum valuation consistent with the
/// ranking. Decided without enumeration: once the shared goods cancel, a
/// ranked good covers any good ranked no better and any unranked good, while
/// an unranked good covers nothing; the Hall condition on that interval
/// structure reduces to prefix counts.
bool necessary_dominates(const std::vector<int>& ranking, int m, const std::vector<int>& xs,
                         const std::vector<int>& ys);

/// Fairness for every valuation profile consistent with the rankings.
bool necessary_ef1(const Allocation& a, const Instance& inst);
bool necessary_efx(const Allocation& a, const Instance& inst);
bool necessary_eq1(const Allocation& a, const Instance& inst);
bool necessary_eqx(const Allocation& a, const Instance& inst);

/// With all agents agreeing on the top-k good set and s_i = |A_i ∩ top-k|,
/// checks s_i >= |A_j| - 1 for all i != j. A necessary condition for an
/// allocation to be EF1 under every consistent valuation.
bool lemma1_condition(const Allocation& a, const Instance& inst);

}  // namespace fairdiv
