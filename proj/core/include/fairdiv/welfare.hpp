#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fairdiv/model.hpp"
#include "fairdiv/rules.hpp"

namespace fairdiv {

Rat social_welfare(const Allocation& a, const ValuationProfile& v);

/// Maximum social welfare over all allocations. Additivity makes the
/// per-good argmax optimal; always in [1, n] for unit-sum profiles.
Rat optimal_sw(const ValuationProfile& v);

/// Exact expectation over the support. Permutation mixtures are expanded,
/// so n <= max_n applies (CapExceeded beyond; use sampled_expected_sw).
Rat expected_sw(const RandomizedAllocation& ra, const ValuationProfile& v, int max_n = 6);

/// Monte Carlo estimate for permutation mixtures too large to expand. The
/// mean over the drawn permutations is an exact rational; deterministic for
/// a given seed.
Rat sampled_expected_sw(const RandomizedAllocation& ra, const ValuationProfile& v,
                        std::uint64_t seed, int samples);

enum class SearchMode { exhaustive_vertices, sampled };

const char* search_mode_name(SearchMode m);

/// Worst optimal/achieved welfare ratio found over explored consistent
/// profiles. A certified lower bound on the rule's distortion at this
/// instance, never a claim of the supremum.
struct DistortionReport {
  std::string instance_id;
  std::string rule_id;
  bool infinite = false;  // a zero-welfare witness was found
  Rat worst_ratio = 1;
  ValuationProfile witness;
  SearchMode mode = SearchMode::sampled;
  std::uint64_t seed = 0;

  std::string csv_row() const;  // instance_id,rule,ratio_num,ratio_den,mode,seed
};

struct DistortionSearchConfig {
  SearchMode mode = SearchMode::sampled;
  std::uint64_t seed = 0;
  int samples = 200;
  std::uint64_t vertex_product_cap = 1'000'000;
  std::uint64_t vertex_row_cap = 200'000;  // materialized rows across agents
  int permutation_cap = 6;
};

DistortionReport empirical_distortion(const std::string& rule_id, const Instance& inst,
                                      const std::string& instance_id,
                                      const DistortionSearchConfig& cfg);

// ---------------------------------------------------------------------------
// Adversarial instance families.

/// x^n goods, identical complete rankings by ascending id. Agents typed by a
/// bijection: type t (0-based) values the first x^(t+1) goods at 1/x^(t+1).
/// The block partition W matched to the types scores at least (1 - 1/x) n.
struct Thm1Family {
  Instance instance;
  int x = 0;
  std::vector<std::vector<int>> blocks;  // W_0..W_(n-1)

  ValuationProfile profile(const std::vector<int>& agent_type) const;
  Allocation block_allocation(const std::vector<int>& agent_type) const;
  Rat block_welfare_floor() const;  // (1 - 1/x) * n
};

Thm1Family gen_thm1(int n, int x, std::uint64_t good_cap = 1'000'000);

/// n goods for n agents: a star good every agent ranks first, one pair good
/// ranked second by each pair of agents, fillers for the rest. Odd n uses
/// the even construction on n-1 agents plus a universally last-ranked filler
/// and one cloned agent. For any allocation giving each agent exactly one
/// good, adversarial_profile is a consistent profile under which that
/// allocation scores exactly 1/n while alternative_allocation scores at
/// least the floor below.
struct Thm2Family {
  Instance instance;
  int star_good = 0;
  std::vector<int> pair_goods;                   // pair_goods[l] shared by pair l
  std::vector<std::array<int, 2>> pair_agents;   // agents of pair l
  std::optional<int> clone_agent;                // odd n only

  ValuationProfile adversarial_profile(const Allocation& a) const;
  Allocation alternative_allocation(const Allocation& a) const;
  Rat alternative_welfare_floor() const;  // p/4 + 1/2 with p = n (even) or n-1 (odd)
};

Thm2Family gen_thm2(int n);

/// Identical top-k profile witnessing the approximation ceiling for k >= n.
/// For an allocation placing good i with agent i, adversarial_profile is the
/// consistent profile whose exact MMS analysis caps the approximation at
/// alpha_cap (nullopt when the cap degenerates to nothing).
struct MmsUpperFamily {
  Instance instance;

  std::optional<Rat> alpha_cap() const;  // k / (H_n (m-n) - (m-k))
  ValuationProfile adversarial_profile(const Allocation& a) const;
};

MmsUpperFamily gen_mms_upper(int n, int m, int k);

/// A fixed instance plus a builder mapping any allocation to a consistent
/// profile violating the tagged property for it.
struct ImpossibilityFixture {
  std::string tag;  // "efx", "eq1-eqx", "ef1-distortion", "mms-positive"
  Instance instance;
  std::function<ValuationProfile(const Allocation&)> adversary;
};

std::vector<ImpossibilityFixture> gen_impossibility_fixtures();

/// Identical top-k profile with k < n - 1 < m: every allocation leaves some
/// agent with zero value and maximin share 1/n under the built profile.
ImpossibilityFixture gen_mms_positive_fixture(int n, int m, int k);

}  // namespace fairdiv
