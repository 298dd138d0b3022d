#pragma once

#include <optional>

#include "fairdiv/rational.hpp"

namespace fairdiv {

// Exact verification of the scheduling inequalities behind the deadline
// construction. Everything here is rational arithmetic; a single floor
// shifted by float rounding would move a deadline.

/// sum_{i=1..n} floor((d - i) / (2 H_n (n - i + 1)))
Int deadline_count_bound(int n, long long d);

/// floor((d - 1) / (2n)) plus the sum above.
Int refined_deadline_count_bound(int n, long long d);

struct LemmaCounterexample {
  int n = 0;
  long long d = 0;
  Int lhs;
  Int rhs;
};

struct LemmaReport {
  long long checked = 0;
  std::optional<LemmaCounterexample> counterexample;

  bool verified() const { return !counterexample.has_value(); }
};

/// deadline_count_bound(n, d) <= d - n for all 1 <= n <= n_max,
/// n + 1 <= d <= d_max.
LemmaReport verify_deadline_inequality(int n_max, long long d_max);

/// refined_deadline_count_bound(n, d) <= d - n over the same grid.
LemmaReport verify_refined_deadline_inequality(int n_max, long long d_max);

/// H_{3n} <= 2 H_n - 1 for 4 <= n <= n_max.
LemmaReport verify_harmonic_chain(int n_max);

}  // namespace fairdiv
