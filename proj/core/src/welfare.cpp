#include "fairdiv/welfare.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "fairdiv/polytope.hpp"

namespace fairdiv {

Rat social_welfare(const Allocation& a, const ValuationProfile& v) {
  if (static_cast<int>(a.bundles.size()) != v.agents())
    raise(Errc::dimension_mismatch, "allocation / profile agent counts differ");
  Rat total;
  for (int i = 0; i < v.agents(); ++i)
    total += v.bundle_value(i, a.bundles[static_cast<std::size_t>(i)]);
  return total;
}

Rat optimal_sw(const ValuationProfile& v) {
  Rat total;
  for (int g = 0; g < v.goods(); ++g) {
    Rat best = v.values[0][static_cast<std::size_t>(g)];
    for (int i = 1; i < v.agents(); ++i)
      best = std::max(best, v.values[static_cast<std::size_t>(i)][static_cast<std::size_t>(g)]);
    total += best;
  }
  return total;
}

Rat expected_sw(const RandomizedAllocation& ra, const ValuationProfile& v, int max_n) {
  const ExplicitMixture* mix = std::get_if<ExplicitMixture>(&ra);
  ExplicitMixture expanded;
  if (!mix) {
    expanded = expand_uniform_mixture(std::get<UniformPermutationMixture>(ra), max_n);
    mix = &expanded;
  }
  Rat total;
  for (const auto& [alloc, prob] : mix->support) total += prob * social_welfare(alloc, v);
  return total;
}

Rat sampled_expected_sw(const RandomizedAllocation& ra, const ValuationProfile& v,
                        std::uint64_t seed, int samples) {
  if (samples < 1) raise(Errc::bad_argument, "need at least one sample");
  if (const ExplicitMixture* mix = std::get_if<ExplicitMixture>(&ra)) {
    (void)seed;
    Rat total;
    for (const auto& [alloc, prob] : mix->support) total += prob * social_welfare(alloc, v);
    return total;
  }

  const auto& uniform = std::get<UniformPermutationMixture>(ra);
  const Instance& inst = uniform.instance;
  validate_instance(inst);
  std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + 0x94d049bb133111ebULL);
  std::vector<int> perm(static_cast<std::size_t>(inst.n));
  Rat total;
  for (int s = 0; s < samples; ++s) {
    std::iota(perm.begin(), perm.end(), 0);
    for (std::size_t i = perm.size(); i > 1; --i)
      std::swap(perm[i - 1], perm[rng() % i]);
    Instance relabeled = inst;
    for (int role = 0; role < inst.n; ++role)
      relabeled.rankings[static_cast<std::size_t>(role)] =
          inst.rankings[static_cast<std::size_t>(perm[static_cast<std::size_t>(role)])];
    const Allocation by_role = run_deterministic_rule(uniform.rule_id, relabeled);
    Rat sw;
    for (int role = 0; role < inst.n; ++role)
      sw += v.bundle_value(perm[static_cast<std::size_t>(role)],
                           by_role.bundles[static_cast<std::size_t>(role)]);
    total += sw;
  }
  return total / samples;
}

const char* search_mode_name(SearchMode m) {
  return m == SearchMode::exhaustive_vertices ? "exhaustive-vertices" : "sampled";
}

std::string DistortionReport::csv_row() const {
  std::ostringstream os;
  os << instance_id << ',' << rule_id << ',';
  if (infinite)
    os << "inf,1";
  else
    os << boost::multiprecision::numerator(worst_ratio) << ','
       << boost::multiprecision::denominator(worst_ratio);
  os << ',' << search_mode_name(mode) << ',' << seed;
  return os.str();
}

DistortionReport empirical_distortion(const std::string& rule_id, const Instance& inst,
                                      const std::string& instance_id,
                                      const DistortionSearchConfig& cfg) {
  validate_instance(inst);
  DistortionReport report;
  report.instance_id = instance_id;
  report.rule_id = rule_id;
  report.mode = cfg.mode;
  report.seed = cfg.seed;

  // Ordinal rules see only the rankings, so the (possibly randomized)
  // allocation is fixed across all explored valuations.
  ExplicitMixture outcome;
  if (rule_id.rfind("uniform:", 0) == 0) {
    outcome = expand_uniform_mixture(UniformPermutationMixture{rule_id.substr(8), inst},
                                     cfg.permutation_cap);
  } else {
    outcome.support.emplace_back(run_deterministic_rule(rule_id, inst), Rat(1));
  }

  bool any = false;
  auto consider = [&](const ValuationProfile& v) {
    Rat achieved;
    for (const auto& [alloc, prob] : outcome.support)
      achieved += prob * social_welfare(alloc, v);
    const Rat best = optimal_sw(v);
    if (achieved == 0) {
      report.infinite = true;
      report.witness = v;
      return false;  // nothing can beat an infinite ratio
    }
    const Rat ratio = best / achieved;
    if (!any || ratio > report.worst_ratio) {
      report.worst_ratio = ratio;
      report.witness = v;
      any = true;
    }
    return true;
  };

  if (cfg.mode == SearchMode::sampled) {
    std::mt19937_64 rng(cfg.seed * 0x9e3779b97f4a7c15ULL + 0xbf58476d1ce4e5b9ULL);
    ValuationProfile v;
    v.values.resize(static_cast<std::size_t>(inst.n));
    for (int s = 0; s < cfg.samples; ++s) {
      for (int i = 0; i < inst.n; ++i)
        v.values[static_cast<std::size_t>(i)] = sample_consistent(agent_polytope(inst, i), rng());
      if (!consider(v)) break;
    }
    return report;
  }

  // Exhaustive product of the per-agent vertex sets.
  std::uint64_t product = 1, rows = 0;
  std::vector<std::vector<std::vector<Rat>>> vertices(static_cast<std::size_t>(inst.n));
  for (int i = 0; i < inst.n; ++i) {
    const auto count = extreme_point_count(agent_polytope(inst, i));
    if (count == 0) raise(Errc::empty_market, "agent polytope has no vertices (m = 0)");
    if (product > cfg.vertex_product_cap / std::max<std::uint64_t>(count, 1))
      raise(Errc::cap_exceeded, "vertex product exceeds cap");
    product *= count;
    rows += count;
    if (rows > cfg.vertex_row_cap) raise(Errc::cap_exceeded, "vertex rows exceed cap");
    vertices[static_cast<std::size_t>(i)] = extreme_points(agent_polytope(inst, i));
  }

  std::vector<std::size_t> pick(static_cast<std::size_t>(inst.n), 0);
  ValuationProfile v;
  v.values.resize(static_cast<std::size_t>(inst.n));
  while (true) {
    for (int i = 0; i < inst.n; ++i)
      v.values[static_cast<std::size_t>(i)] =
          vertices[static_cast<std::size_t>(i)][pick[static_cast<std::size_t>(i)]];
    if (!consider(v)) break;
    int pos = inst.n - 1;
    while (pos >= 0) {
      if (++pick[static_cast<std::size_t>(pos)] <
          vertices[static_cast<std::size_t>(pos)].size())
        break;
      pick[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
  }
  return report;
}

// ---------------------------------------------------------------------------
// Adversarial instance families.

Thm1Family gen_thm1(int n, int x, std::uint64_t good_cap) {
  if (n < 1) raise(Errc::zero_n, "need n >= 1");
  if (x < 2) raise(Errc::bad_argument, "need x >= 2");
  std::uint64_t m = 1;
  for (int t = 0; t < n; ++t) {
    if (m > good_cap / static_cast<std::uint64_t>(x))
      raise(Errc::cap_exceeded, "x^n exceeds the good cap");
    m *= static_cast<std::uint64_t>(x);
  }

  Thm1Family fam;
  fam.x = x;
  fam.instance.n = n;
  fam.instance.m = static_cast<int>(m);
  fam.instance.k = static_cast<int>(m);
  std::vector<int> ranking(m);
  std::iota(ranking.begin(), ranking.end(), 0);
  fam.instance.rankings.assign(static_cast<std::size_t>(n), ranking);

  std::uint64_t lo = 0, hi = 1;
  for (int t = 0; t < n; ++t) {
    hi *= static_cast<std::uint64_t>(x);
    std::vector<int> block;
    block.reserve(hi - lo);
    for (std::uint64_t g = lo; g < hi; ++g) block.push_back(static_cast<int>(g));
    fam.blocks.push_back(std::move(block));
    lo = hi;
  }
  return fam;
}

namespace {

void check_bijection(const std::vector<int>& agent_type, int n) {
  if (static_cast<int>(agent_type.size()) != n)
    raise(Errc::bad_argument, "type assignment must cover every agent");
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  for (int t : agent_type) {
    if (t < 0 || t >= n || used[static_cast<std::size_t>(t)])
      raise(Errc::bad_argument, "type assignment must be a bijection");
    used[static_cast<std::size_t>(t)] = 1;
  }
}

}  // namespace

ValuationProfile Thm1Family::profile(const std::vector<int>& agent_type) const {
  const int n = instance.n;
  check_bijection(agent_type, n);
  ValuationProfile v;
  v.values.assign(static_cast<std::size_t>(n),
                  std::vector<Rat>(static_cast<std::size_t>(instance.m), Rat(0)));
  for (int i = 0; i < n; ++i) {
    // Type t likes the first x^(t+1) goods equally.
    std::int64_t span = 1;
    for (int t = 0; t <= agent_type[static_cast<std::size_t>(i)]; ++t) span *= x;
    const Rat each(1, span);
    for (std::int64_t g = 0; g < span; ++g)
      v.values[static_cast<std::size_t>(i)][static_cast<std::size_t>(g)] = each;
  }
  return v;
}

Allocation Thm1Family::block_allocation(const std::vector<int>& agent_type) const {
  const int n = instance.n;
  check_bijection(agent_type, n);
  Allocation a;
  a.bundles.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    a.bundles[static_cast<std::size_t>(i)] =
        blocks[static_cast<std::size_t>(agent_type[static_cast<std::size_t>(i)])];
  validate_allocation(a, n, instance.m);
  return a;
}

Rat Thm1Family::block_welfare_floor() const { return Rat(instance.n) * Rat(x - 1, x); }

Thm2Family gen_thm2(int n) {
  if (n < 2) raise(Errc::n_too_small, "construction needs n >= 2");
  Thm2Family fam;
  const bool odd = (n % 2) != 0;
  const int base = odd ? n - 1 : n;  // even count carrying the pair structure

  fam.instance.n = n;
  fam.instance.m = n;
  fam.instance.k = n;
  fam.star_good = 0;
  for (int l = 0; l < base / 2; ++l) {
    fam.pair_goods.push_back(1 + l);
    fam.pair_agents.push_back({2 * l, 2 * l + 1});
  }

  auto ranking_for = [&](int pair_good) {
    std::vector<int> r;
    r.push_back(0);
    if (pair_good >= 0) r.push_back(pair_good);
    for (int g = 1; g < n; ++g)
      if (g != pair_good && (!odd || g != n - 1)) r.push_back(g);
    if (odd) r.push_back(n - 1);  // the filler good is ranked last by everyone
    return r;
  };

  fam.instance.rankings.resize(static_cast<std::size_t>(n));
  for (int l = 0; l < base / 2; ++l) {
    const auto r = ranking_for(fam.pair_goods[static_cast<std::size_t>(l)]);
    fam.instance.rankings[static_cast<std::size_t>(2 * l)] = r;
    fam.instance.rankings[static_cast<std::size_t>(2 * l + 1)] = r;
  }
  if (odd) {
    fam.clone_agent = n - 1;
    fam.instance.rankings[static_cast<std::size_t>(n - 1)] =
        fam.instance.rankings[static_cast<std::size_t>(n - 2)];
  }
  validate_instance(fam.instance);
  return fam;
}

namespace {

int holder_of(const Allocation& a, int good) {
  for (std::size_t i = 0; i < a.bundles.size(); ++i)
    for (int g : a.bundles[i])
      if (g == good) return static_cast<int>(i);
  return -1;
}

void require_single_good_each(const Allocation& a, int n, int m) {
  validate_allocation(a, n, m);
  for (const auto& b : a.bundles)
    if (b.size() != 1)
      raise(Errc::bad_argument, "builder needs an allocation giving each agent exactly one good");
}

}  // namespace

namespace {

// Adversarial roles for a single-good-per-agent allocation: the star holder
// gets the uniform row; in every pair not touching the star holder, the
// member without the pair good becomes the "loser" (half on the star, half
// on the pair good); everyone else concentrates on the star good.
struct Thm2Roles {
  int star_holder = -1;
  std::vector<int> losers;  // per pair, -1 when the pair contains the star holder
};

Thm2Roles thm2_roles(const Thm2Family& fam, const Allocation& a) {
  Thm2Roles roles;
  roles.star_holder = holder_of(a, fam.star_good);
  for (std::size_t l = 0; l < fam.pair_goods.size(); ++l) {
    const auto [a1, a2] = fam.pair_agents[l];
    if (a1 == roles.star_holder || a2 == roles.star_holder) {
      roles.losers.push_back(-1);
      continue;
    }
    roles.losers.push_back(holder_of(a, fam.pair_goods[l]) == a1 ? a2 : a1);
  }
  return roles;
}

}  // namespace

ValuationProfile Thm2Family::adversarial_profile(const Allocation& a) const {
  const int n = instance.n;
  require_single_good_each(a, n, n);
  const Thm2Roles roles = thm2_roles(*this, a);

  ValuationProfile v;
  v.values.assign(static_cast<std::size_t>(n),
                  std::vector<Rat>(static_cast<std::size_t>(n), Rat(0)));
  for (int i = 0; i < n; ++i) v.values[static_cast<std::size_t>(i)][0] = 1;
  v.values[static_cast<std::size_t>(roles.star_holder)].assign(static_cast<std::size_t>(n),
                                                               Rat(1, n));
  for (std::size_t l = 0; l < pair_goods.size(); ++l) {
    const int loser = roles.losers[l];
    if (loser < 0) continue;
    v.values[static_cast<std::size_t>(loser)][0] = Rat(1, 2);
    v.values[static_cast<std::size_t>(loser)][static_cast<std::size_t>(pair_goods[l])] =
        Rat(1, 2);
  }

  validate_profile(v);
  return v;
}

Allocation Thm2Family::alternative_allocation(const Allocation& a) const {
  const int n = instance.n;
  require_single_good_each(a, n, n);
  const Thm2Roles roles = thm2_roles(*this, a);

  std::vector<int> assigned(static_cast<std::size_t>(n), -1);
  std::vector<char> good_used(static_cast<std::size_t>(n), 0);
  auto give = [&](int agent, int good) {
    assigned[static_cast<std::size_t>(agent)] = good;
    good_used[static_cast<std::size_t>(good)] = 1;
  };

  // Star good to the first agent concentrating full value on it, each free
  // pair good to its loser, the rest padded out one per agent.
  std::vector<char> is_loser(static_cast<std::size_t>(n), 0);
  for (int loser : roles.losers)
    if (loser >= 0) is_loser[static_cast<std::size_t>(loser)] = 1;
  for (int agent = 0; agent < n; ++agent) {
    if (agent == roles.star_holder || is_loser[static_cast<std::size_t>(agent)]) continue;
    give(agent, star_good);
    break;
  }
  for (std::size_t l = 0; l < pair_goods.size(); ++l)
    if (roles.losers[l] >= 0) give(roles.losers[l], pair_goods[l]);

  int next_good = 0;
  for (int agent = 0; agent < n; ++agent) {
    if (assigned[static_cast<std::size_t>(agent)] >= 0) continue;
    while (good_used[static_cast<std::size_t>(next_good)]) ++next_good;
    give(agent, next_good);
  }

  Allocation out;
  out.bundles.resize(static_cast<std::size_t>(n));
  for (int agent = 0; agent < n; ++agent)
    out.bundles[static_cast<std::size_t>(agent)].push_back(assigned[static_cast<std::size_t>(agent)]);
  validate_allocation(out, n, n);
  return out;
}

Rat Thm2Family::alternative_welfare_floor() const {
  const int p = clone_agent ? instance.n - 1 : instance.n;
  return Rat(p, 4) + Rat(1, 2);
}

MmsUpperFamily gen_mms_upper(int n, int m, int k) {
  if (n < 1) raise(Errc::zero_n, "need n >= 1");
  if (m <= n) raise(Errc::m_not_greater_than_n, "construction needs m > n");
  if (k < n) raise(Errc::k_below_n, "construction needs k >= n");
  if (k > m) raise(Errc::k_too_large, "k cannot exceed m");
  MmsUpperFamily fam;
  fam.instance.n = n;
  fam.instance.m = m;
  fam.instance.k = k;
  std::vector<int> ranking(static_cast<std::size_t>(k));
  std::iota(ranking.begin(), ranking.end(), 0);
  fam.instance.rankings.assign(static_cast<std::size_t>(n), ranking);
  return fam;
}

std::optional<Rat> MmsUpperFamily::alpha_cap() const {
  const int n = instance.n, m = instance.m, k = instance.k;
  const Rat denom = harmonic(n) * (m - n) - (m - k);
  if (denom <= 0) return std::nullopt;
  return Rat(k) / denom;
}

ValuationProfile MmsUpperFamily::adversarial_profile(const Allocation& a) const {
  const int n = instance.n, m = instance.m, k = instance.k;
  validate_allocation(a, n, m);
  for (int i = 0; i < n; ++i) {
    const auto& b = a.bundles[static_cast<std::size_t>(i)];
    if (std::find(b.begin(), b.end(), i) == b.end())
      raise(Errc::bad_argument, "builder expects good i in agent i's bundle", i);
  }

  ValuationProfile v;
  v.values.assign(static_cast<std::size_t>(n),
                  std::vector<Rat>(static_cast<std::size_t>(m), Rat(0)));
  for (int i = 0; i < n; ++i) {
    auto& row = v.values[static_cast<std::size_t>(i)];
    std::vector<char> zero(static_cast<std::size_t>(m), 0);
    int q = 0;
    for (int g : a.bundles[static_cast<std::size_t>(i)])
      if (g >= k) {
        zero[static_cast<std::size_t>(g)] = 1;
        ++q;
      }
    const Rat unit(1, m - q - i);
    // Keeping the head values at least the tail unit preserves consistency
    // even when the agent was handed many unranked goods.
    const Rat head = std::max(Rat(1, n), unit);
    Rat total;
    for (int g = 0; g < m; ++g) {
      if (zero[static_cast<std::size_t>(g)]) continue;
      row[static_cast<std::size_t>(g)] = g < i ? head : unit;
      total += row[static_cast<std::size_t>(g)];
    }
    for (int g = 0; g < m; ++g) row[static_cast<std::size_t>(g)] /= total;
  }
  validate_profile(v);
  return v;
}

namespace {

ValuationProfile uniform_profile(int n, int m) {
  ValuationProfile v;
  v.values.assign(static_cast<std::size_t>(n),
                  std::vector<Rat>(static_cast<std::size_t>(m), Rat(1, m)));
  return v;
}

Instance identical_ranking_instance(int n, int m, int k) {
  Instance inst;
  inst.n = n;
  inst.m = m;
  inst.k = k;
  std::vector<int> ranking(static_cast<std::size_t>(k));
  std::iota(ranking.begin(), ranking.end(), 0);
  inst.rankings.assign(static_cast<std::size_t>(n), ranking);
  return inst;
}

// Two agents, four goods, one shared complete ranking. For unequal bundle
// sizes the uniform have-not is violated even up to any good; for a 2-2
// split the agent without the top good concentrates value on it.
ValuationProfile efx_adversary(const Allocation& a) {
  validate_allocation(a, 2, 4);
  if (a.bundles[0].size() != a.bundles[1].size()) return uniform_profile(2, 4);
  const int holder = holder_of(a, 0);
  ValuationProfile v = uniform_profile(2, 4);
  v.values[static_cast<std::size_t>(1 - holder)] = {Rat(4, 7), Rat(1, 7), Rat(1, 7), Rat(1, 7)};
  return v;
}

ValuationProfile eq1_adversary(const Allocation& a) {
  validate_allocation(a, 2, 4);
  if (a.bundles[0].size() != a.bundles[1].size()) return uniform_profile(2, 4);
  const int holder = holder_of(a, 0);
  ValuationProfile v = uniform_profile(2, 4);
  v.values[static_cast<std::size_t>(1 - holder)] = {Rat(1), Rat(0), Rat(0), Rat(0)};
  return v;
}

// Two goods, empty rankings. Whenever EF1 forces one good per agent, the
// anti-matched profile drives the rule's welfare to zero.
ValuationProfile ef1_distortion_adversary(const Allocation& a) {
  validate_allocation(a, 2, 2);
  if (a.bundles[0].size() != 1) return uniform_profile(2, 2);
  ValuationProfile v;
  v.values.assign(2, std::vector<Rat>(2, Rat(0)));
  v.values[0][static_cast<std::size_t>(a.bundles[1][0])] = 1;
  v.values[1][static_cast<std::size_t>(a.bundles[0][0])] = 1;
  return v;
}

}  // namespace

ImpossibilityFixture gen_mms_positive_fixture(int n, int m, int k) {
  if (n < 2) raise(Errc::n_too_small, "fixture needs n >= 2");
  if (k >= n - 1) raise(Errc::bad_argument, "fixture needs k < n - 1");
  if (m <= n) raise(Errc::m_not_greater_than_n, "fixture needs m > n");
  ImpossibilityFixture fx;
  fx.tag = "mms-positive";
  fx.instance = identical_ranking_instance(n, m, k);
  fx.adversary = [n, m, k](const Allocation& a) {
    validate_allocation(a, n, m);
    // An agent holding no ranked good and fewest goods has at most m - n
    // goods, so n valued goods fit outside its bundle.
    int victim = -1;
    for (int i = 0; i < n; ++i) {
      const auto& b = a.bundles[static_cast<std::size_t>(i)];
      const bool no_ranked = std::none_of(b.begin(), b.end(), [k](int g) { return g < k; });
      if (!no_ranked) continue;
      if (victim < 0 || b.size() < a.bundles[static_cast<std::size_t>(victim)].size()) victim = i;
    }
    if (victim < 0) raise(Errc::bad_argument, "every agent holds a ranked good");

    std::vector<char> held(static_cast<std::size_t>(m), 0);
    for (int g : a.bundles[static_cast<std::size_t>(victim)]) held[static_cast<std::size_t>(g)] = 1;
    ValuationProfile v = uniform_profile(n, m);
    auto& row = v.values[static_cast<std::size_t>(victim)];
    std::fill(row.begin(), row.end(), Rat(0));
    int placed = 0;
    for (int g = 0; g < k; ++g, ++placed) row[static_cast<std::size_t>(g)] = Rat(1, n);
    for (int g = k; g < m && placed < n; ++g) {
      if (held[static_cast<std::size_t>(g)]) continue;
      row[static_cast<std::size_t>(g)] = Rat(1, n);
      ++placed;
    }
    if (placed != n) raise(Errc::bad_argument, "victim bundle too large for the construction");
    return v;
  };
  return fx;
}

std::vector<ImpossibilityFixture> gen_impossibility_fixtures() {
  std::vector<ImpossibilityFixture> out;
  out.push_back({"efx", identical_ranking_instance(2, 4, 4), efx_adversary});
  out.push_back({"eq1-eqx", identical_ranking_instance(2, 4, 4), eq1_adversary});
  out.push_back({"ef1-distortion", identical_ranking_instance(2, 2, 0), ef1_distortion_adversary});
  out.push_back(gen_mms_positive_fixture(4, 6, 2));
  return out;
}

}  // namespace fairdiv
