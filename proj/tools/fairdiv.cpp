// fairdiv: batch front-end for the ordinal fair-division library.
//
//   fairdiv gen            emit instance files (fixed families or random)
//   fairdiv run            run a rule on an instance and report properties
//   fairdiv check          check properties of a given allocation
//   fairdiv sweep          distortion/fairness sweep over a parameter grid
//   fairdiv verify-lemmas  exact verification of the scheduling inequalities
//
// Exit codes: 0 success, 1 property violation found (check / verify-lemmas),
// 2 usage error.

#include <algorithm>
#include <future>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "fairdiv/fairness.hpp"
#include "fairdiv/json_io.hpp"
#include "fairdiv/lemmas.hpp"
#include "fairdiv/polytope.hpp"
#include "fairdiv/rules.hpp"
#include "fairdiv/welfare.hpp"

using namespace fairdiv;
using nlohmann::ordered_json;

namespace {

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty())
    std::cout << text;
  else
    write_text_file(out_path, text);
}

Instance agree_instance(int n, int m, int k) {
  Instance inst;
  inst.n = n;
  inst.m = m;
  inst.k = k;
  std::vector<int> ranking(static_cast<std::size_t>(k));
  std::iota(ranking.begin(), ranking.end(), 0);
  inst.rankings.assign(static_cast<std::size_t>(n), ranking);
  validate_instance(inst);
  return inst;
}

Instance random_instance(int n, int m, int k, std::uint64_t seed) {
  std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + 0x6a09e667f3bcc909ULL);
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
  validate_instance(inst);
  return inst;
}

ValuationProfile uniform_valuations(const Instance& inst) {
  if (inst.m < 1) raise(Errc::empty_market, "valuations need at least one good");
  ValuationProfile v;
  v.values.assign(static_cast<std::size_t>(inst.n),
                  std::vector<Rat>(static_cast<std::size_t>(inst.m), Rat(1, inst.m)));
  return v;
}

ValuationProfile sampled_valuations(const Instance& inst, std::uint64_t seed) {
  std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + 0xa54ff53a5f1d36f1ULL);
  ValuationProfile v;
  for (int i = 0; i < inst.n; ++i)
    v.values.push_back(sample_consistent(agent_polytope(inst, i), rng()));
  return v;
}

std::string rat_human(const Rat& q) {
  std::ostringstream os;
  os << rat_string(q) << " (~" << std::fixed << std::setprecision(6) << rat_double(q) << ")";
  return os.str();
}

// ---------------------------------------------------------------------------
// gen

struct GenOptions {
  std::string family = "agree";
  int n = 2, m = 4, k = -1, x = 2;
  std::uint64_t seed = 0;
  std::string valuations = "none";  // none | uniform | sample
  std::string out;
};

int cmd_gen(const GenOptions& opt) {
  Instance inst;
  std::string id;
  if (opt.family == "agree") {
    const int k = opt.k < 0 ? opt.m : opt.k;
    inst = agree_instance(opt.n, opt.m, k);
    id = "agree-n" + std::to_string(opt.n) + "-m" + std::to_string(opt.m) + "-k" +
         std::to_string(k);
  } else if (opt.family == "random") {
    const int k = opt.k < 0 ? opt.m : opt.k;
    inst = random_instance(opt.n, opt.m, k, opt.seed);
    id = "random-n" + std::to_string(opt.n) + "-m" + std::to_string(opt.m) + "-k" +
         std::to_string(k) + "-s" + std::to_string(opt.seed);
  } else if (opt.family == "thm1") {
    inst = gen_thm1(opt.n, opt.x).instance;
    id = "thm1-n" + std::to_string(opt.n) + "-x" + std::to_string(opt.x);
  } else if (opt.family == "thm2") {
    inst = gen_thm2(opt.n).instance;
    id = "thm2-n" + std::to_string(opt.n);
  } else if (opt.family == "mms-upper") {
    const int k = opt.k < 0 ? opt.m : opt.k;
    inst = gen_mms_upper(opt.n, opt.m, k).instance;
    id = "mms-upper-n" + std::to_string(opt.n) + "-m" + std::to_string(opt.m) + "-k" +
         std::to_string(k);
  } else {
    raise(Errc::bad_argument, "unknown family '" + opt.family + "'");
  }

  std::optional<ValuationProfile> v;
  if (opt.valuations == "uniform")
    v = uniform_valuations(inst);
  else if (opt.valuations == "sample")
    v = sampled_valuations(inst, opt.seed);
  else if (opt.valuations != "none")
    raise(Errc::bad_argument, "unknown valuations mode '" + opt.valuations + "'");

  emit(opt.out, instance_json(inst, v));
  std::cerr << "generated " << id << ": n=" << inst.n << " m=" << inst.m << " k=" << inst.k
            << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// shared property reporting

ordered_json property_report(const Instance& inst, const Allocation& a,
                             const std::optional<ValuationProfile>& v,
                             const std::optional<Rat>& alpha, const MmsCap& cap) {
  ordered_json props;
  props["balanced"] = is_balanced(a);
  props["necessary_ef1"] = necessary_ef1(a, inst);
  props["necessary_efx"] = necessary_efx(a, inst);
  props["necessary_eq1"] = necessary_eq1(a, inst);
  props["necessary_eqx"] = necessary_eqx(a, inst);
  try {
    props["lemma1"] = lemma1_condition(a, inst);
  } catch (const Error& e) {
    if (e.code() != Errc::top_k_sets_disagree) throw;
    props["lemma1"] = nullptr;  // precondition absent: agents disagree on the top-k set
  }

  if (v) {
    ordered_json cardinal;
    cardinal["is_ef1"] = is_ef1(a, *v);
    cardinal["is_efx"] = is_efx(a, *v);
    cardinal["is_eq1"] = is_eq1(a, *v);
    cardinal["is_eqx"] = is_eqx(a, *v);
    cardinal["social_welfare"] = rat_string(social_welfare(a, *v));
    cardinal["optimal_sw"] = rat_string(optimal_sw(*v));
    if (alpha) {
      try {
        cardinal["is_alpha_mms"] = is_alpha_mms(a, *v, *alpha, cap);
        cardinal["alpha"] = rat_string(*alpha);
      } catch (const Error& e) {
        if (e.code() != Errc::cap_exceeded) throw;
        cardinal["is_alpha_mms"] = nullptr;
      }
    }
    props["cardinal"] = std::move(cardinal);
  }
  return props;
}

void print_text_report(const ordered_json& report) {
  std::cout << "instance " << report["instance_id"].get<std::string>();
  if (report.contains("rule")) std::cout << "  rule " << report["rule"].get<std::string>();
  std::cout << "\n";
  for (const auto& bundle : report["allocation"]) {
    std::cout << "  bundle [";
    bool first = true;
    for (const auto& g : bundle) {
      if (!first) std::cout << " ";
      std::cout << g.get<int>();
      first = false;
    }
    std::cout << "]\n";
  }
  for (const auto& [key, value] : report["properties"].items()) {
    if (key == "cardinal") continue;
    std::cout << "  " << key << ": "
              << (value.is_null() ? "skipped" : (value.get<bool>() ? "pass" : "FAIL")) << "\n";
  }
  if (report["properties"].contains("cardinal")) {
    for (const auto& [key, value] : report["properties"]["cardinal"].items()) {
      std::cout << "  " << key << ": ";
      if (value.is_null())
        std::cout << "skipped";
      else if (value.is_boolean())
        std::cout << (value.get<bool>() ? "pass" : "FAIL");
      else
        std::cout << rat_human(parse_rat(value.get<std::string>()));
      std::cout << "\n";
    }
  }
}

// ---------------------------------------------------------------------------
// run

struct RunOptions {
  std::string in;
  std::string rule = "ef1";
  std::string id;
  std::uint64_t seed = 0;
  std::string format = "json";
  std::string out;
  std::string alpha;
  int mms_max_m = 12, mms_max_n = 4, perm_cap = 6;
};

int cmd_run(const RunOptions& opt) {
  const InstanceFile file = load_instance_file(opt.in);
  const Instance& inst = file.instance;
  const std::string id = opt.id.empty() ? "file:" + opt.in : opt.id;
  if (!is_rule_id(opt.rule)) raise(Errc::unknown_rule, "unknown rule '" + opt.rule + "'");
  const MmsCap cap{opt.mms_max_m, opt.mms_max_n};
  std::optional<Rat> alpha;
  if (!opt.alpha.empty()) alpha = parse_rat(opt.alpha);

  ordered_json report;
  report["command"] = "run";
  report["instance_id"] = id;
  report["rule"] = opt.rule;
  report["seed"] = opt.seed;

  if (opt.rule.rfind("uniform:", 0) == 0) {
    const auto mix = expand_uniform_mixture(
        UniformPermutationMixture{opt.rule.substr(8), inst}, opt.perm_cap);
    ordered_json support = ordered_json::array();
    bool all_necessary_ef1 = true;
    for (const auto& [alloc, prob] : mix.support) {
      ordered_json entry;
      entry["probability"] = rat_string(prob);
      entry["bundles"] = alloc.bundles;
      support.push_back(std::move(entry));
      all_necessary_ef1 = all_necessary_ef1 && necessary_ef1(alloc, inst);
    }
    report["support"] = std::move(support);
    report["properties"] = {{"necessary_ef1_all_support", all_necessary_ef1}};
    if (file.valuations)
      report["expected_sw"] = rat_string(expected_sw(RandomizedAllocation{mix}, *file.valuations));
    if (opt.format == "text") {
      std::cout << "instance " << id << "  rule " << opt.rule << "\n";
      for (const auto& entry : report["support"])
        std::cout << "  p=" << entry["probability"].get<std::string>() << "  "
                  << entry["bundles"].dump() << "\n";
      std::cout << "  necessary_ef1 over support: "
                << (all_necessary_ef1 ? "pass" : "FAIL") << "\n";
      if (report.contains("expected_sw"))
        std::cout << "  expected_sw: "
                  << rat_human(parse_rat(report["expected_sw"].get<std::string>())) << "\n";
      return 0;
    }
    emit(opt.out, report.dump(2) + "\n");
    return 0;
  }

  const Allocation a = run_deterministic_rule(opt.rule, inst);
  report["allocation"] = a.bundles;
  report["properties"] = property_report(inst, a, file.valuations, alpha, cap);

  if (opt.format == "json") {
    emit(opt.out, report.dump(2) + "\n");
  } else if (opt.format == "text") {
    print_text_report(report);
  } else {
    raise(Errc::bad_argument, "unknown format '" + opt.format + "'");
  }
  return 0;
}

// ---------------------------------------------------------------------------
// check

struct CheckOptions {
  std::string in;
  std::string allocation;
  std::string id;
  std::string properties = "necessary-ef1,balanced";
  std::string alpha;
  std::string format = "json";
  std::string out;
  int mms_max_m = 12, mms_max_n = 4;
};

int cmd_check(const CheckOptions& opt) {
  const InstanceFile file = load_instance_file(opt.in);
  const Instance& inst = file.instance;
  const Allocation a = load_allocation_file(opt.allocation, inst.n, inst.m);
  const std::string id = opt.id.empty() ? "file:" + opt.in : opt.id;
  const MmsCap cap{opt.mms_max_m, opt.mms_max_n};
  std::optional<Rat> alpha;
  if (!opt.alpha.empty()) alpha = parse_rat(opt.alpha);

  ordered_json report;
  report["command"] = "check";
  report["instance_id"] = id;
  report["allocation"] = a.bundles;
  report["properties"] = property_report(inst, a, file.valuations, alpha, cap);

  // Requested properties decide the exit code.
  std::vector<std::string> wanted;
  std::stringstream ss(opt.properties);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::replace(item.begin(), item.end(), '-', '_');
    if (!item.empty()) wanted.push_back(item);
  }
  bool violation = false;
  for (const auto& name : wanted) {
    const ordered_json* slot = nullptr;
    if (report["properties"].contains(name)) {
      slot = &report["properties"][name];
    } else if (report["properties"].contains("cardinal") &&
               report["properties"]["cardinal"].contains(name)) {
      slot = &report["properties"]["cardinal"][name];
    } else {
      raise(Errc::bad_argument, "property '" + name + "' was not computed (missing valuations?)");
    }
    if (slot->is_boolean() && !slot->get<bool>()) violation = true;
  }
  report["violation"] = violation;

  if (opt.format == "json")
    emit(opt.out, report.dump(2) + "\n");
  else
    print_text_report(report);
  return violation ? 1 : 0;
}

// ---------------------------------------------------------------------------
// sweep

struct SweepOptions {
  std::string rules = "ef1,mms";
  int n_min = 2, n_max = 4;
  int m = -1;  // default 2n+1
  int k = -1;  // default: minimal valid k for the rule
  int instances = 5;
  int samples = 100;
  std::uint64_t seed = 1;
  std::string mode = "sampled";
  std::string format = "csv";
  std::string out;
  int mms_max_m = 12, mms_max_n = 4;
  std::uint64_t vertex_cap = 1'000'000;
  int perm_cap = 6;
};

int minimal_k(const std::string& rule, int n, int m) {
  if (rule == "round-robin") return std::max(m - 1, 0);
  if (rule == "ef1") return ef1_threshold(n, m);
  if (rule == "ef1-low-distortion") return std::max(1, ef1_threshold(n, m));
  if (rule == "mms" || rule == "mms-low-distortion") return n;
  if (rule == "mms-k-n-1") return n - 1;
  raise(Errc::unknown_rule, "unknown rule '" + rule + "'");
}

std::optional<Rat> rule_alpha(const std::string& rule, int n, int m, int k) {
  if (rule == "mms" || rule == "mms-low-distortion")
    return Rat(k - n + 1, m - n + 1) / (2 * harmonic(n));
  if (rule == "mms-k-n-1") return Rat(1, (m - n + 2) / 2);
  return std::nullopt;
}

int cmd_sweep(const SweepOptions& opt) {
  const SearchMode mode = opt.mode == "exhaustive-vertices" ? SearchMode::exhaustive_vertices
                                                            : SearchMode::sampled;
  if (opt.mode != "sampled" && opt.mode != "exhaustive-vertices")
    raise(Errc::bad_argument, "mode must be sampled or exhaustive-vertices");

  std::vector<std::string> rules;
  std::stringstream ss(opt.rules);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const std::string base = item.rfind("uniform:", 0) == 0 ? item.substr(8) : item;
    if (!is_rule_id(base)) raise(Errc::unknown_rule, "unknown rule '" + item + "'");
    rules.push_back(item);
  }

  struct Row {
    std::string csv;
    std::string human;
    ordered_json json;
  };
  const MmsCap cap{opt.mms_max_m, opt.mms_max_n};

  // One shard per (rule, n, instance) cell. Each shard owns its seed, so the
  // result is independent of scheduling; the sorted merge keeps the output
  // byte-stable.
  auto run_shard = [&](std::string rule, int n, int idx,
                       std::uint64_t shard_seed) -> Row {
    const std::string base = rule.rfind("uniform:", 0) == 0 ? rule.substr(8) : rule;
    const int m = opt.m > 0 ? opt.m : 2 * n + 1;
    int k = opt.k >= 0 ? opt.k : minimal_k(base, n, m);
    k = std::min(k, m);

    std::string id;
    Instance inst;
    if (idx == 0) {
      inst = agree_instance(n, m, k);
      id = "agree-n" + std::to_string(n) + "-m" + std::to_string(m) + "-k" + std::to_string(k);
    } else {
      inst = random_instance(n, m, k, shard_seed);
      id = "random-n" + std::to_string(n) + "-m" + std::to_string(m) + "-k" +
           std::to_string(k) + "-s" + std::to_string(shard_seed);
    }

    DistortionSearchConfig cfg;
    cfg.mode = mode;
    cfg.seed = shard_seed;
    cfg.samples = opt.samples;
    cfg.vertex_product_cap = opt.vertex_cap;
    cfg.permutation_cap = opt.perm_cap;
    const DistortionReport report = empirical_distortion(rule, inst, id, cfg);

    // Fairness pass rate: the necessary checker for the EF1 family, the
    // rule's own alpha on sampled profiles for the MMS family. A randomized
    // rule is only as fair as its entire support.
    std::vector<Allocation> support;
    if (rule != base) {
      const auto mix = expand_uniform_mixture(UniformPermutationMixture{base, inst});
      for (const auto& [alloc, prob] : mix.support) support.push_back(alloc);
    } else {
      support.push_back(run_deterministic_rule(base, inst));
    }

    std::string fairness = "necessary-ef1";
    double pass_rate = 0.0;
    const std::optional<Rat> alpha = rule_alpha(base, n, m, k);
    if (!alpha) {
      const bool ok = std::all_of(support.begin(), support.end(),
                                  [&](const Allocation& a) { return necessary_ef1(a, inst); });
      pass_rate = ok ? 1.0 : 0.0;
    } else {
      fairness = "alpha-mms";
      int pass = 0, total = 0;
      std::mt19937_64 rng(shard_seed ^ 0x5bd1e9955bd1e995ULL);
      for (int s = 0; s < std::max(1, opt.samples / 10); ++s) {
        ValuationProfile v;
        for (int i = 0; i < n; ++i)
          v.values.push_back(sample_consistent(agent_polytope(inst, i), rng()));
        try {
          bool ok = true;
          for (const Allocation& a : support) ok = ok && is_alpha_mms(a, v, *alpha, cap);
          pass += ok ? 1 : 0;
          ++total;
        } catch (const Error& e) {
          if (e.code() != Errc::cap_exceeded) throw;
        }
      }
      pass_rate = total == 0 ? -1.0 : static_cast<double>(pass) / total;
    }

    std::ostringstream csv;
    csv << report.csv_row() << ',' << fairness << ',';
    if (pass_rate < 0)
      csv << "n/a";
    else
      csv << pass_rate;

    std::ostringstream human;
    human << id << "  " << rule << "  ratio ";
    if (report.infinite)
      human << "inf";
    else
      human << rat_human(report.worst_ratio);
    human << "  " << fairness << " rate " << pass_rate;

    ordered_json j;
    j["instance_id"] = id;
    j["rule"] = rule;
    j["ratio"] = report.infinite ? "inf" : rat_string(report.worst_ratio);
    j["mode"] = search_mode_name(mode);
    j["seed"] = shard_seed;
    j["fairness"] = fairness;
    if (pass_rate < 0)
      j["pass_rate"] = nullptr;
    else
      j["pass_rate"] = pass_rate;
    return {csv.str(), human.str(), std::move(j)};
  };

  std::vector<std::future<Row>> shards;
  std::uint64_t shard = 0;
  for (const std::string& rule : rules)
    for (int n = opt.n_min; n <= opt.n_max; ++n)
      for (int idx = 0; idx < opt.instances; ++idx) {
        const std::uint64_t shard_seed = opt.seed + 1000003 * shard++;
        shards.push_back(std::async(std::launch::async, run_shard, rule, n, idx, shard_seed));
      }

  std::vector<Row> rows;
  rows.reserve(shards.size());
  for (auto& f : shards) rows.push_back(f.get());
  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) { return a.csv < b.csv; });
  std::ostringstream os;
  if (opt.format == "csv") {
    os << "instance_id,rule,ratio_num,ratio_den,mode,seed,fairness,pass_rate\n";
    for (const Row& r : rows) os << r.csv << "\n";
  } else if (opt.format == "json") {
    ordered_json all = ordered_json::array();
    for (const Row& r : rows) all.push_back(r.json);
    os << all.dump(2) << "\n";
  } else if (opt.format == "text") {
    for (const Row& r : rows) os << r.human << "\n";
  } else {
    raise(Errc::bad_argument, "unknown format '" + opt.format + "'");
  }
  emit(opt.out, os.str());
  return 0;
}

// ---------------------------------------------------------------------------
// verify-lemmas

struct VerifyOptions {
  int n_max = 50;
  long long d_max = 5000;
  int refined_n_max = 30;
  long long refined_d_max = 3000;
};

int cmd_verify_lemmas(const VerifyOptions& opt) {
  bool ok = true;

  const LemmaReport base = verify_deadline_inequality(opt.n_max, opt.d_max);
  if (base.verified()) {
    std::cout << "base inequality: verified on " << base.checked << " (n,d) pairs (n<="
              << opt.n_max << ", d<=" << opt.d_max << ")\n";
  } else {
    ok = false;
    std::cout << "base inequality: COUNTEREXAMPLE at n=" << base.counterexample->n
              << " d=" << base.counterexample->d << " (lhs " << base.counterexample->lhs
              << " > rhs " << base.counterexample->rhs << ")\n";
  }

  const LemmaReport refined =
      verify_refined_deadline_inequality(opt.refined_n_max, opt.refined_d_max);
  if (refined.verified()) {
    std::cout << "refined inequality: verified on " << refined.checked << " (n,d) pairs (n<="
              << opt.refined_n_max << ", d<=" << opt.refined_d_max << ")\n";
  } else {
    ok = false;
    std::cout << "refined inequality: COUNTEREXAMPLE at n=" << refined.counterexample->n
              << " d=" << refined.counterexample->d << "\n";
  }

  const LemmaReport chain = verify_harmonic_chain(std::max(opt.n_max, 4));
  if (chain.verified()) {
    std::cout << "harmonic chain: verified for 4 <= n <= " << std::max(opt.n_max, 4) << "\n";
  } else {
    ok = false;
    std::cout << "harmonic chain: COUNTEREXAMPLE at n=" << chain.counterexample->n << "\n";
  }

  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ordinal fair division: rules, checkers, and verifiers"};
  app.require_subcommand(1);

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "generate an instance file");
  gen_cmd->add_option("--family", gen.family, "agree | random | thm1 | thm2 | mms-upper");
  gen_cmd->add_option("--n", gen.n, "agent count");
  gen_cmd->add_option("--m", gen.m, "good count");
  gen_cmd->add_option("--k", gen.k, "ranking length (default m)");
  gen_cmd->add_option("--x", gen.x, "block width for thm1");
  gen_cmd->add_option("--seed", gen.seed, "seed for random families");
  gen_cmd->add_option("--valuations", gen.valuations, "none | uniform | sample");
  gen_cmd->add_option("--out", gen.out, "output path (default stdout)");

  RunOptions run;
  auto* run_cmd = app.add_subcommand("run", "run a rule and report properties");
  run_cmd->add_option("--in", run.in, "instance JSON file")->required();
  run_cmd->add_option("--rule", run.rule, "rule id (see README)");
  run_cmd->add_option("--id", run.id, "instance id used in the report");
  run_cmd->add_option("--seed", run.seed, "seed recorded in the report");
  run_cmd->add_option("--alpha", run.alpha, "check alpha-MMS at this rational, e.g. 1/3");
  run_cmd->add_option("--format", run.format, "json | text");
  run_cmd->add_option("--out", run.out, "output path (default stdout)");
  run_cmd->add_option("--mms-max-m", run.mms_max_m, "MMS oracle cap on goods");
  run_cmd->add_option("--mms-max-n", run.mms_max_n, "MMS oracle cap on agents");
  run_cmd->add_option("--perm-cap", run.perm_cap, "permutation expansion cap");

  CheckOptions check;
  auto* check_cmd = app.add_subcommand("check", "check an allocation against properties");
  check_cmd->add_option("--in", check.in, "instance JSON file")->required();
  check_cmd->add_option("--allocation", check.allocation, "allocation JSON file")->required();
  check_cmd->add_option("--id", check.id, "instance id used in the report");
  check_cmd->add_option("--properties", check.properties,
                        "comma list deciding the exit code (default necessary-ef1,balanced)");
  check_cmd->add_option("--alpha", check.alpha, "check alpha-MMS at this rational");
  check_cmd->add_option("--format", check.format, "json | text");
  check_cmd->add_option("--out", check.out, "output path (default stdout)");
  check_cmd->add_option("--mms-max-m", check.mms_max_m, "MMS oracle cap on goods");
  check_cmd->add_option("--mms-max-n", check.mms_max_n, "MMS oracle cap on agents");

  SweepOptions sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "worst ratios and fairness rates over a grid");
  sweep_cmd->add_option("--rules", sweep.rules, "comma list of rule ids");
  sweep_cmd->add_option("--n-min", sweep.n_min, "smallest agent count");
  sweep_cmd->add_option("--n-max", sweep.n_max, "largest agent count");
  sweep_cmd->add_option("--m", sweep.m, "good count (default 2n+1)");
  sweep_cmd->add_option("--k", sweep.k, "ranking length (default rule minimum)");
  sweep_cmd->add_option("--instances", sweep.instances, "instances per (rule, n) cell");
  sweep_cmd->add_option("--samples", sweep.samples, "valuation samples per instance");
  sweep_cmd->add_option("--seed", sweep.seed, "base seed");
  sweep_cmd->add_option("--mode", sweep.mode, "sampled | exhaustive-vertices");
  sweep_cmd->add_option("--format", sweep.format, "csv | json | text");
  sweep_cmd->add_option("--out", sweep.out, "output path (default stdout)");
  sweep_cmd->add_option("--mms-max-m", sweep.mms_max_m, "MMS oracle cap on goods");
  sweep_cmd->add_option("--mms-max-n", sweep.mms_max_n, "MMS oracle cap on agents");
  sweep_cmd->add_option("--vertex-cap", sweep.vertex_cap, "vertex product cap, exhaustive mode");
  sweep_cmd->add_option("--perm-cap", sweep.perm_cap, "permutation expansion cap");

  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify-lemmas", "exact inequality verification");
  verify_cmd->add_option("--n-max", verify.n_max, "agents bound for the base inequality");
  verify_cmd->add_option("--d-max", verify.d_max, "positions bound for the base inequality");
  verify_cmd->add_option("--refined-n-max", verify.refined_n_max, "agents bound, refined");
  verify_cmd->add_option("--refined-d-max", verify.refined_d_max, "positions bound, refined");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*gen_cmd) return cmd_gen(gen);
    if (*run_cmd) return cmd_run(run);
    if (*check_cmd) return cmd_check(check);
    if (*sweep_cmd) return cmd_sweep(sweep);
    if (*verify_cmd) return cmd_verify_lemmas(verify);
  } catch (const Error& e) {
    std::cerr << "error [" << errc_name(e.code()) << "]: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
