// End-to-end acceptance suite. Each criterion prints one PASS/FAIL line;
// the binary exits nonzero if any criterion fails. Everything is exact
// rational arithmetic; there are no tolerances to tune.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fairdiv/fairness.hpp"
#include "fairdiv/lemmas.hpp"
#include "fairdiv/polytope.hpp"
#include "fairdiv/rules.hpp"
#include "fairdiv/welfare.hpp"

using namespace fairdiv;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

Instance agree_instance(int n, int m, int k) {
  Instance inst;
  inst.n = n;
  inst.m = m;
  inst.k = k;
  std::vector<int> ranking(static_cast<std::size_t>(k));
  std::iota(ranking.begin(), ranking.end(), 0);
  inst.rankings.assign(static_cast<std::size_t>(n), ranking);
  return inst;
}

Instance random_instance(int n, int m, int k, std::mt19937_64& rng) {
  Instance inst;
  inst.n = n;
  inst.m = m;
  inst.k = k;
  std::vector<int> goods(static_cast<std::size_t>(m));
  std::iota(goods.begin(), goods.end(), 0);
  for (int a = 0; a < n; ++a) {
    std::vector<int> shuffled = goods;
    for (std::size_t i = shuffled.size(); i > 1; --i)
      std::swap(shuffled[i - 1], shuffled[rng() % i]);
    shuffled.resize(static_cast<std::size_t>(k));
    inst.rankings.push_back(std::move(shuffled));
  }
  return inst;
}

ValuationProfile sampled_profile(const Instance& inst, std::mt19937_64& rng) {
  ValuationProfile v;
  for (int i = 0; i < inst.n; ++i)
    v.values.push_back(sample_consistent(agent_polytope(inst, i), rng()));
  return v;
}

void for_each_allocation(int n, int m, const std::function<bool(const Allocation&)>& visit) {
  std::vector<int> owner(static_cast<std::size_t>(m), 0);
  while (true) {
    Allocation a;
    a.bundles.assign(static_cast<std::size_t>(n), {});
    for (int g = 0; g < m; ++g)
      a.bundles[static_cast<std::size_t>(owner[static_cast<std::size_t>(g)])].push_back(g);
    if (!visit(a)) return;
    int pos = m - 1;
    while (pos >= 0 && owner[static_cast<std::size_t>(pos)] == n - 1) {
      owner[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) return;
    ++owner[static_cast<std::size_t>(pos)];
  }
}

// 1. Base scheduling inequality, exact, n <= 50, d <= 5000.
Outcome criterion1() {
  const LemmaReport r = verify_deadline_inequality(50, 5000);
  Outcome out;
  out.pass = r.verified();
  std::ostringstream os;
  os << r.checked << " (n,d) pairs, "
     << (r.verified() ? "0 counterexamples" : "counterexample found");
  out.detail = os.str();
  return out;
}

// 2. Refined inequality plus its reported spot values.
Outcome criterion2() {
  Outcome out;
  const LemmaReport r = verify_refined_deadline_inequality(30, 3000);
  if (!r.verified()) return {false, "refined inequality has a counterexample"};

  if (refined_deadline_count_bound(2, 5) != 2) return {false, "n=2 d=5 LHS != 2"};
  if (refined_deadline_count_bound(2, 6) != 2) return {false, "n=2 d=6 LHS != 2"};
  if (refined_deadline_count_bound(2, 7) != 3) return {false, "n=2 d=7 LHS != 3"};
  if (harmonic(12) != Rat(86021, 27720)) return {false, "H_12 mismatch"};

  Rat tail;
  const Rat two_h3 = 2 * harmonic(3);
  for (int j = 1; j <= 9; ++j) tail += 1 / (two_h3 * j - 1);
  if (tail != Rat(Int("19657653727"), Int("21402806880")))
    return {false, "harmonic tail sum mismatch"};

  std::ostringstream os;
  os << r.checked << " (n,d) pairs and all spot values exact";
  out.detail = os.str();
  return out;
}

// 3. EF1 achievability at the exact threshold.
Outcome criterion3() {
  std::mt19937_64 rng(0x5eed0003);
  long long checked = 0;
  for (int n = 1; n <= 4; ++n) {
    for (int m = 0; m <= 9; ++m) {
      const int k = ef1_threshold(n, m);
      std::vector<Instance> instances{agree_instance(n, m, k)};
      for (int s = 0; s < 100; ++s) instances.push_back(random_instance(n, m, k, rng));
      for (const Instance& inst : instances) {
        const Allocation a = ef1_rule(inst);
        ++checked;
        if (!necessary_ef1(a, inst)) {
          std::ostringstream os;
          os << "violation at n=" << n << " m=" << m << " k=" << k;
          return {false, os.str()};
        }
      }
    }
  }
  std::ostringstream os;
  os << checked << " rule outputs all necessary-EF1";
  return {true, os.str()};
}

// 4. EF1 impossibility one below the threshold, exhaustively.
Outcome criterion4() {
  long long eliminated = 0, grids = 0;
  for (int n = 2; n <= 3; ++n) {
    for (int m = 0; m <= 8; ++m) {
      const int k = ef1_threshold(n, m) - 1;
      if (k < 0) continue;
      const Instance inst = agree_instance(n, m, k);
      bool found = false;
      for_each_allocation(n, m, [&](const Allocation& a) {
        ++eliminated;
        found = necessary_ef1(a, inst);
        return !found;
      });
      if (found) {
        std::ostringstream os;
        os << "allocation passes below threshold at n=" << n << " m=" << m << " k=" << k;
        return {false, os.str()};
      }
      ++grids;
    }
  }
  std::ostringstream os;
  os << eliminated << " allocations over " << grids << " (n,m) grids, none necessary-EF1";
  return {true, os.str()};
}

// 5. The (k-n+1)/(m-n+1) * 1/(2H_n) approximation of the truncated rule.
Outcome criterion5() {
  std::mt19937_64 rng(0x5eed0005);
  long long checked = 0;
  for (int n = 2; n <= 3; ++n) {
    const Rat inv_2h = 1 / (2 * harmonic(n));
    for (int m = n + 1; m <= 9; ++m) {
      for (int k = n; k <= m; ++k) {
        const Rat alpha = Rat(k - n + 1, m - n + 1) * inv_2h;
        for (int s = 0; s < 200; ++s) {
          const Instance inst =
              s % 2 == 0 ? agree_instance(n, m, k) : random_instance(n, m, k, rng);
          const Allocation a = mms_rule(inst);
          const ValuationProfile v = sampled_profile(inst, rng);
          for (int i = 0; i < n; ++i) {
            ++checked;
            const Rat own = v.bundle_value(i, a.bundles[static_cast<std::size_t>(i)]);
            if (own < alpha * mms_value(i, v, n)) {
              std::ostringstream os;
              os << "agent " << i << " below alpha*MMS at n=" << n << " m=" << m << " k=" << k
                 << " sample " << s;
              return {false, os.str()};
            }
          }
        }
      }
    }
  }
  std::ostringstream os;
  os << checked << " agent guarantees, zero violations";
  return {true, os.str()};
}

// 6. k = n-1 rule guarantees, and zero-value profiles for k < n-1.
Outcome criterion6() {
  std::mt19937_64 rng(0x5eed0006);
  long long checked = 0;
  for (int n = 2; n <= 3; ++n) {
    const int k = n - 1;
    for (int m = n + 1; m <= 9; ++m) {
      const Rat alpha(1, (m - n + 2) / 2);
      for (int s = 0; s < 200; ++s) {
        const Instance inst =
            s % 2 == 0 ? agree_instance(n, m, k) : random_instance(n, m, k, rng);
        const Allocation a = mms_rule_k_n_minus_1(inst);
        const ValuationProfile v = sampled_profile(inst, rng);
        const Rat last_mms = mms_value(n - 1, v, n);
        if (v.bundle_value(n - 1, a.bundles[static_cast<std::size_t>(n - 1)]) < last_mms)
          return {false, "last agent below exact MMS"};
        for (int i = 0; i < n; ++i) {
          ++checked;
          if (v.bundle_value(i, a.bundles[static_cast<std::size_t>(i)]) <
              alpha * mms_value(i, v, n)) {
            std::ostringstream os;
            os << "agent " << i << " below 1/floor((m-n+2)/2) MMS at n=" << n << " m=" << m;
            return {false, os.str()};
          }
        }
      }
    }
  }

  // k < n-1: the adversary starves some agent entirely.
  long long starved = 0;
  for (int n = 2; n <= 4; ++n) {
    for (int k = 0; k + 1 < n; ++k) {
      for (int m = n + 1; m <= 7; ++m) {
        const ImpossibilityFixture fx = gen_mms_positive_fixture(n, m, k);
        bool all_starved = true;
        for_each_allocation(n, m, [&](const Allocation& a) {
          const ValuationProfile v = fx.adversary(a);
          bool found = false;
          for (int i = 0; i < n && !found; ++i)
            found = v.bundle_value(i, a.bundles[static_cast<std::size_t>(i)]) == 0 &&
                    mms_value(i, v, n) == Rat(1, n);
          all_starved = found;
          ++starved;
          return all_starved;
        });
        if (!all_starved) {
          std::ostringstream os;
          os << "no starved agent at n=" << n << " m=" << m << " k=" << k;
          return {false, os.str()};
        }
      }
    }
  }
  std::ostringstream os;
  os << checked << " guarantee checks and " << starved << " starvation witnesses";
  return {true, os.str()};
}

// 7. Certified worst-case utility floors for agent 0.
Outcome criterion7() {
  std::mt19937_64 rng(0x5eed0007);
  long long certified = 0;
  for (int n = 1; n <= 6; ++n) {
    for (int m = 0; m <= 30; ++m) {
      // mms-low-distortion on its domain m > n, k >= n
      if (m > n) {
        for (int k = n; k <= m; ++k) {
          for (int s = 0; s < 3; ++s) {
            const Instance inst =
                s == 0 ? agree_instance(n, m, k) : random_instance(n, m, k, rng);
            const Allocation a = mms_rule_low_distortion(inst);
            const auto bounds = bundle_value_bounds(agent_polytope(inst, 0), a.bundles[0]);
            ++certified;
            if (bounds.min < Rat(1, 2 * n)) {
              std::ostringstream os;
              os << "mms-low-distortion floor broken at n=" << n << " m=" << m << " k=" << k
                 << " (min " << rat_string(bounds.min) << ")";
              return {false, os.str()};
            }
          }
        }
      }
      // ef1-low-distortion for every admissible k >= 1
      if (m >= 1) {
        for (int k = std::max(1, ef1_threshold(n, m)); k <= m; ++k) {
          for (int s = 0; s < 3; ++s) {
            const Instance inst =
                s == 0 ? agree_instance(n, m, k) : random_instance(n, m, k, rng);
            const Allocation a = ef1_low_distortion_rule(inst);
            const auto bounds = bundle_value_bounds(agent_polytope(inst, 0), a.bundles[0]);
            ++certified;
            if (bounds.min < Rat(1, 3 * n)) {
              std::ostringstream os;
              os << "ef1-low-distortion floor broken at n=" << n << " m=" << m << " k=" << k
                 << " (min " << rat_string(bounds.min) << ")";
              return {false, os.str()};
            }
          }
        }
      }
    }
  }
  std::ostringstream os;
  os << certified << " bundles certified by exact polytope minima";
  return {true, os.str()};
}

// 8. Uniformized picking sequences: expected welfare >= 1 at full length,
//    >= 1/3 for the EF1 family.
Outcome criterion8() {
  std::mt19937_64 rng(0x5eed0008);
  long long checked = 0;
  for (int n = 2; n <= 5; ++n) {
    for (int m = n + 1; m <= 8; ++m) {
      const Instance full = random_instance(n, m, m, rng);
      const auto rr = expand_uniform_mixture(
          std::get<UniformPermutationMixture>(uniformize("round-robin", full)));
      const auto mms_mix =
          expand_uniform_mixture(std::get<UniformPermutationMixture>(uniformize("mms", full)));

      const int k_ef1 = ef1_threshold(n, m);
      const Instance at_threshold = random_instance(n, m, k_ef1, rng);
      const auto ef1_mix = expand_uniform_mixture(
          std::get<UniformPermutationMixture>(uniformize("ef1", at_threshold)));

      for (int s = 0; s < 50; ++s) {
        const ValuationProfile v_full = sampled_profile(full, rng);
        ++checked;
        if (expected_sw(rr, v_full) < 1) return {false, "uniform round robin below 1"};
        if (expected_sw(mms_mix, v_full) < 1) return {false, "uniform full-length mms below 1"};
        const ValuationProfile v_thr = sampled_profile(at_threshold, rng);
        if (expected_sw(ef1_mix, v_thr) < Rat(1, 3)) return {false, "uniform ef1 below 1/3"};
      }
    }
  }
  std::ostringstream os;
  os << checked << " profiles, all expectations above their floors";
  return {true, os.str()};
}

// 9. The n=4 pair construction: implemented EF1 rules collapse to welfare
//    1/4 while a feasible alternative reaches 3/2.
Outcome criterion9() {
  const Thm2Family fam = gen_thm2(4);
  for (const std::string rule : {"ef1", "ef1-low-distortion"}) {
    const Allocation a = run_deterministic_rule(rule, fam.instance);
    const ValuationProfile v = fam.adversarial_profile(a);
    if (!is_consistent(v, fam.instance)) return {false, rule + ": witness inconsistent"};
    if (social_welfare(a, v) != Rat(1, 4)) return {false, rule + ": welfare is not exactly 1/4"};
    const Rat alt = social_welfare(fam.alternative_allocation(a), v);
    if (alt < Rat(3, 2)) return {false, rule + ": alternative below 3/2"};
    if (alt / social_welfare(a, v) < 6) return {false, rule + ": ratio below 6"};
  }
  return {true, "both EF1 rules at welfare 1/4 vs alternative >= 3/2 (ratio >= 6)"};
}

// 10. No allocation of the 2x4 shared-ranking fixture is necessarily EFX or
//     necessarily EQ1.
Outcome criterion10() {
  const Instance inst = agree_instance(2, 4, 4);
  long long efx_passes = 0, eq1_passes = 0, total = 0;
  for_each_allocation(2, 4, [&](const Allocation& a) {
    ++total;
    if (necessary_efx(a, inst)) ++efx_passes;
    if (necessary_eq1(a, inst)) ++eq1_passes;
    return true;
  });
  std::ostringstream os;
  os << total << " allocations, " << efx_passes << " EFX passes, " << eq1_passes
     << " EQ1 passes";
  return {efx_passes == 0 && eq1_passes == 0 && total == 16, os.str()};
}

// 11. The matching criterion agrees with the vertex scan on every pair of
//     bundles.
Outcome criterion11() {
  std::mt19937_64 rng(0x5eed000b);
  long long pairs = 0;
  for (int m = 1; m <= 6; ++m) {
    for (int k : {0, 1, 3, m}) {
      if (k > m) continue;
      for (int variant = 0; variant < 2; ++variant) {
        const Instance inst =
            variant == 0 ? agree_instance(1, m, k) : random_instance(1, m, k, rng);
        const ConsistentPolytope p = agent_polytope(inst, 0);
        for (int xs = 0; xs < (1 << m); ++xs) {
          for (int ys = 0; ys < (1 << m); ++ys) {
            std::vector<int> x_goods, y_goods;
            for (int g = 0; g < m; ++g) {
              if (xs & (1 << g)) x_goods.push_back(g);
              if (ys & (1 << g)) y_goods.push_back(g);
            }
            bool scan = true;
            for_each_extreme_point(p, [&](const std::vector<Rat>& row) {
              Rat diff;
              for (int g : x_goods) diff += row[static_cast<std::size_t>(g)];
              for (int g : y_goods) diff -= row[static_cast<std::size_t>(g)];
              if (diff < 0) scan = false;
              return scan;
            });
            ++pairs;
            if (necessary_dominates(p.ranking, m, x_goods, y_goods) != scan) {
              std::ostringstream os;
              os << "disagreement at m=" << m << " k=" << k << " X=" << xs << " Y=" << ys;
              return Outcome{false, os.str()};
            }
          }
        }
      }
    }
  }
  std::ostringstream os;
  os << pairs << " (X,Y) pairs in exact agreement";
  return {true, os.str()};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "base deadline inequality, n<=50 d<=5000, exact", criterion1},
      {2, "refined deadline inequality with exact spot values", criterion2},
      {3, "EF1 achievable at the threshold (necessary-EF1 outputs)", criterion3},
      {4, "EF1 impossible below the threshold (exhaustive)", criterion4},
      {5, "truncated-sequence rule meets (k-n+1)/(m-n+1)/(2H_n) MMS", criterion5},
      {6, "k=n-1 rule guarantees and k<n-1 starvation witnesses", criterion6},
      {7, "agent-0 welfare floors 1/(2n) and 1/(3n), certified", criterion7},
      {8, "uniformized sequences: expected welfare floors", criterion8},
      {9, "pair construction: welfare 1/4 vs alternative 3/2", criterion9},
      {10, "no necessary EFX or EQ1 on the 2x4 fixture", criterion10},
      {11, "matching criterion equals vertex scan", criterion11},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out.pass = false;
      out.detail = std::string("exception: ") + e.what();
    }
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start);
    std::printf("[%s] criterion %2d: %s -- %s (%.1fs)\n", out.pass ? "PASS" : "FAIL", c.id,
                c.title, out.detail.c_str(), static_cast<double>(elapsed.count()) / 1000.0);
    std::fflush(stdout);
    if (!out.pass) ++failures;
  }
  if (failures > 0) std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
