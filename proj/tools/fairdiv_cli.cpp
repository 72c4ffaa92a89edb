// Command-line front end: solve | check | verify | gen | bench.
// Exit codes: 0 success/holds, 1 check failed/does not hold, 2 usage or
// parse error, 3 enumeration bound exceeded.

#include <cctype>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "fairdiv/algorithms.hpp"
#include "fairdiv/criteria.hpp"
#include "fairdiv/gen.hpp"
#include "fairdiv/json_io.hpp"
#include "fairdiv/oracle.hpp"

namespace {

using fairdiv::Json;
using fairdiv::Value;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBound = 3;

Value parse_alpha(const std::string& text) {
  auto v = fairdiv::parse_value(text);
  if (!v) throw fairdiv::Error("malformed rational '" + text + "'");
  return *v;
}

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw fairdiv::Error("cannot open '" + path + "'");
  Json j;
  in >> j;
  return j;
}

void emit(const Json& j, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::ofstream out(out_path);
    if (!out) throw fairdiv::Error("cannot write '" + out_path + "'");
    out << j.dump(2) << "\n";
  }
}

unsigned long long enum_bound_from_env() {
  if (const char* s = std::getenv("FAIRDIV_ENUM_BOUND")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(s, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return 20'000'000ULL;
}

struct LoadedInstance {
  std::optional<fairdiv::Instance> goods;
  std::optional<fairdiv::cake::CakeInstance> cake;
};

LoadedInstance load_instance(const std::string& name_or_path, std::optional<int> n,
                             std::optional<Value> alpha) {
  LoadedInstance out;
  if (auto builtin = fairdiv::builtin_instance(name_or_path, n, alpha)) {
    out.goods = std::move(*builtin);
    return out;
  }
  std::string key = name_or_path;
  for (auto& c : key) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (key == "thm_5_1") {
    out.cake = fairdiv::cake_thm_5_1();
    return out;
  }
  if (key == "thm_5_5") {
    out.cake = fairdiv::cake_thm_5_5();
    return out;
  }
  Json j = load_json(name_or_path);
  if (fairdiv::looks_like_cake(j))
    out.cake = fairdiv::cake_instance_from_json(j);
  else
    out.goods = fairdiv::instance_from_json(j);
  return out;
}

struct CriterionSpec {
  std::string criterion;
  std::string side;
};

std::vector<CriterionSpec> parse_criteria(const std::string& text) {
  std::vector<CriterionSpec> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string item = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    pos = comma == std::string::npos ? text.size() : comma + 1;
    if (item.empty()) continue;
    std::size_t colon = item.find(':');
    CriterionSpec spec;
    spec.criterion = item.substr(0, colon);
    spec.side = colon == std::string::npos ? "agents" : item.substr(colon + 1);
    static const char* known[] = {"ef1",     "sdef1", "sd_ef1", "sdef1_blocks",
                                  "sd_ef1_blocks", "blocks", "efx",    "mms",
                                  "eq1",     "po",    "balanced", "fisher",
                                  "ef",      "eq"};
    bool ok = false;
    for (const char* k : known) ok = ok || spec.criterion == k;
    if (!ok) throw fairdiv::Error("unknown criterion '" + spec.criterion + "'");
    if (spec.side != "agents" && spec.side != "market")
      throw fairdiv::Error("unknown side '" + spec.side + "'");
    out.push_back(std::move(spec));
  }
  return out;
}

int cmd_solve(const std::string& algorithm, const std::string& instance_name,
              std::optional<int> n_param, std::optional<Value> alpha, bool with_trace,
              const std::string& out_path, int workers) {
  (void)workers;
  LoadedInstance loaded = load_instance(instance_name, n_param, alpha);
  Json out;
  bool certified = true;

  if (loaded.cake) {
    if (algorithm != "perfect_division")
      throw fairdiv::Error("cake instances support --algorithm perfect_division");
    const auto& inst = *loaded.cake;
    std::vector<fairdiv::cake::PiecewiseConstantDensity> densities = inst.utilities;
    densities.push_back(inst.market);
    int n = n_param.value_or(inst.n);
    auto alloc = fairdiv::cake::perfect_division(densities, n);
    out["allocation"] = fairdiv::interval_allocation_to_json(alloc);
    Json certs = Json::array();
    for (const auto& d : densities) {
      Value share = d.total() / n;
      bool equal = true;
      for (int i = 0; i < n; ++i)
        equal = equal && fairdiv::cake::measure(d, alloc.pieces[static_cast<std::size_t>(i)]) == share;
      Json c;
      c["criterion"] = "equal_division";
      c["passed"] = equal;
      certs.push_back(std::move(c));
      certified = certified && equal;
    }
    out["certificates"] = std::move(certs);
    emit(out, out_path);
    return certified ? kExitOk : kExitFailed;
  }

  const fairdiv::Instance& inst = *loaded.goods;
  fairdiv::Trace trace;
  fairdiv::Trace* tr = with_trace ? &trace : nullptr;
  fairdiv::Allocation alloc;
  std::vector<fairdiv::FairnessReport> certs;

  if (algorithm == "identical_ranking") {
    auto utilities = inst.additive_utilities();
    fairdiv::Ranking market = fairdiv::ranking_from_valuation(inst.market_for(0), "market");
    fairdiv::Ranking common = fairdiv::ranking_from_valuation(utilities.at(0), "u1");
    alloc = fairdiv::solve_identical_ranking(market, common, inst.n);
    certs.push_back(fairdiv::check_sd_ef1(utilities, alloc));
    certs.back().side = "agents";
    certs.push_back(fairdiv::check_sd_ef1(inst.market_profile(), alloc));
    certs.back().side = "market";
  } else if (algorithm == "cut_choose") {
    alloc = fairdiv::solve_two_agent_cut_choose(inst, tr);
    certs.push_back(fairdiv::check_sd_ef1(inst.additive_utilities(), alloc));
    certs.back().side = "agents";
    certs.push_back(fairdiv::check_sd_ef1(inst.market_profile(), alloc));
    certs.back().side = "market";
  } else if (algorithm == "ef1_sdef1") {
    alloc = fairdiv::solve_ef1_sdef1(inst, tr);
    certs.push_back(fairdiv::check_ef1(inst.utilities, alloc));
    certs.back().side = "agents";
    fairdiv::Ranking market = fairdiv::ranking_from_valuation(inst.market_for(0), "market");
    certs.push_back(fairdiv::check_sd_ef1_market_blocks(market, inst.n, alloc));
  } else if (algorithm == "mes") {
    alloc = fairdiv::solve_mes(inst, tr);
    certs.push_back(fairdiv::check_ef1(inst.utilities, alloc, Value(1) / 2));
    certs.back().side = "agents";
    fairdiv::Ranking market = fairdiv::ranking_from_valuation(inst.market_for(0), "market");
    certs.push_back(fairdiv::check_sd_ef1_market_blocks(market, inst.n, alloc));
  } else if (algorithm == "two_agent_pairs") {
    alloc = fairdiv::solve_two_agent_pairs(inst, tr);
    certs.push_back(fairdiv::check_ef1(inst.utilities, alloc));
    certs.back().side = "agents";
    fairdiv::Ranking market = fairdiv::ranking_from_valuation(inst.market_for(0), "market");
    certs.push_back(fairdiv::check_sd_ef1_market_blocks(market, inst.n, alloc));
  } else if (algorithm == "eq1_fpo") {
    auto res = fairdiv::solve_eq1_fpo(inst, tr);
    alloc = res.allocation;
    certs.push_back(fairdiv::check_eq1(inst.market_profile(), alloc));
    certs.back().side = "market";
    certs.push_back(fairdiv::check_fisher_equilibrium(inst, alloc, res.prices));
    certs.back().side = "agents";
    Json prices = Json::array();
    for (const auto& p : res.prices) prices.push_back(fairdiv::value_to_json(p));
    out["prices"] = std::move(prices);
  } else {
    throw fairdiv::Error("unknown algorithm '" + algorithm + "'");
  }

  out["allocation"] = fairdiv::allocation_to_json(alloc);
  Json cj = Json::array();
  for (const auto& c : certs) {
    certified = certified && c.passed;
    cj.push_back(fairdiv::report_to_json(c));
  }
  out["certificates"] = std::move(cj);
  if (with_trace) out["trace"] = fairdiv::trace_to_json(trace);
  emit(out, out_path);
  return certified ? kExitOk : kExitFailed;
}

int cmd_check(const std::string& instance_name, const std::string& allocation_path,
              const std::string& criteria_text, std::optional<Value> alpha,
              const std::string& prices_path, const std::string& out_path) {
  auto specs = parse_criteria(criteria_text);
  LoadedInstance loaded = load_instance(instance_name, std::nullopt, alpha);
  Json reports = Json::array();
  bool all_passed = true;

  if (loaded.cake) {
    const auto& inst = *loaded.cake;
    auto alloc = fairdiv::interval_allocation_from_json(load_json(allocation_path));
    std::vector<fairdiv::cake::PiecewiseConstantDensity> per_agent;
    for (int i = 0; i < inst.n; ++i) per_agent.push_back(inst.utility_for(i));
    for (const auto& spec : specs) {
      fairdiv::FairnessReport rep;
      if (spec.criterion == "ef")
        rep = spec.side == "market" ? fairdiv::cake::check_cake_ef_market(inst.market, alloc)
                                    : fairdiv::cake::check_cake_ef(per_agent, alloc);
      else if (spec.criterion == "eq")
        rep = fairdiv::cake::check_cake_eq(per_agent, alloc);
      else if (spec.criterion == "balanced")
        rep = fairdiv::cake::check_cake_balanced(alloc);
      else
        throw fairdiv::Error("criterion '" + spec.criterion + "' does not apply to cake instances");
      rep.side = spec.side;
      all_passed = all_passed && rep.passed;
      reports.push_back(fairdiv::report_to_json(rep));
    }
    emit(reports, out_path);
    return all_passed ? kExitOk : kExitFailed;
  }

  const fairdiv::Instance& inst = *loaded.goods;
  auto alloc = fairdiv::allocation_from_json(load_json(allocation_path));
  for (const auto& v : fairdiv::validate(inst, alloc))
    throw fairdiv::Error("invalid allocation: " + v.message);

  for (const auto& spec : specs) {
    fairdiv::FairnessReport rep;
    const bool market = spec.side == "market";
    if (spec.criterion == "ef1") {
      rep = market ? fairdiv::check_ef1_additive(inst.market_profile(), alloc,
                                                 alpha.value_or(Value(1)))
                   : fairdiv::check_ef1(inst.utilities, alloc, alpha.value_or(Value(1)));
    } else if (spec.criterion == "sdef1" || spec.criterion == "sd_ef1") {
      rep = market ? fairdiv::check_sd_ef1(inst.market_profile(), alloc)
                   : fairdiv::check_sd_ef1(inst.additive_utilities(), alloc);
    } else if (spec.criterion == "sdef1_blocks" || spec.criterion == "sd_ef1_blocks" ||
               spec.criterion == "blocks") {
      fairdiv::Ranking r = fairdiv::ranking_from_valuation(inst.market_for(0), "market");
      rep = fairdiv::check_sd_ef1_market_blocks(r, inst.n, alloc);
    } else if (spec.criterion == "efx") {
      rep = market ? fairdiv::check_efx_alpha(inst.market_profile(), alloc,
                                              alpha.value_or(Value(1)))
                   : fairdiv::check_efx_alpha(inst.additive_utilities(), alloc,
                                              alpha.value_or(Value(1)));
    } else if (spec.criterion == "mms") {
      rep = market ? fairdiv::check_mms_alpha(inst.market_profile(), alloc,
                                              alpha.value_or(Value(1)))
                   : fairdiv::check_mms_alpha(inst.additive_utilities(), alloc,
                                              alpha.value_or(Value(1)));
    } else if (spec.criterion == "eq1") {
      rep = market ? fairdiv::check_eq1(inst.market_profile(), alloc)
                   : fairdiv::check_eq1(inst.additive_utilities(), alloc);
    } else if (spec.criterion == "po") {
      fairdiv::PoOptions po;
      po.enumeration_bound = enum_bound_from_env();
      rep = fairdiv::check_po_bruteforce(inst.utilities, alloc, po);
    } else if (spec.criterion == "balanced") {
      rep = fairdiv::check_balanced_report(alloc, inst.n, inst.m);
    } else if (spec.criterion == "fisher") {
      if (prices_path.empty()) throw fairdiv::Error("fisher check needs --prices");
      Json pj = load_json(prices_path);
      std::vector<Value> prices;
      for (const auto& p : pj) prices.push_back(fairdiv::value_from_json(p));
      rep = fairdiv::check_fisher_equilibrium(inst, alloc, prices);
    } else {
      throw fairdiv::Error("criterion '" + spec.criterion + "' does not apply to goods instances");
    }
    rep.side = spec.side;
    all_passed = all_passed && rep.passed;
    reports.push_back(fairdiv::report_to_json(rep));
  }
  emit(reports, out_path);
  return all_passed ? kExitOk : kExitFailed;
}

int cmd_verify(const std::string& theorem, std::optional<int> n, std::optional<Value> alpha,
               int seeds, int workers, const std::string& out_path) {
  fairdiv::VerifyParams params;
  params.n = n;
  params.alpha = alpha;
  if (seeds > 0) params.seeds = seeds;
  params.workers = workers;
  fairdiv::TheoremReport rep = fairdiv::verify_theorem(theorem, params);
  emit(fairdiv::theorem_report_to_json(rep), out_path);
  return rep.holds ? kExitOk : kExitFailed;
}

int cmd_gen(int n, int m, const std::string& dist, long max_value, const std::string& mix,
            unsigned long long seed, const std::string& out_path) {
  fairdiv::GenSpec spec;
  spec.n = n;
  spec.m = m;
  spec.max_value = max_value;
  spec.seed = seed;
  if (!mix.empty()) spec.mix = parse_alpha(mix);
  if (dist == "uniform")
    spec.dist = fairdiv::GenDist::Uniform;
  else if (dist == "correlated")
    spec.dist = fairdiv::GenDist::CorrelatedWithMarket;
  else if (dist == "identical-ranking")
    spec.dist = fairdiv::GenDist::IdenticalRanking;
  else
    throw fairdiv::Error("unknown distribution '" + dist + "'");
  fairdiv::Instance inst = fairdiv::generate_instance(spec);
  emit(fairdiv::instance_to_json(inst), out_path);
  return kExitOk;
}

int cmd_bench(unsigned long long seed) {
  using Clock = std::chrono::steady_clock;
  auto time_ms = [](Clock::time_point a, Clock::time_point b) {
    return std::chrono::duration_cast<std::chrono::microseconds>(b - a).count() / 1000.0;
  };
  Json rows = Json::array();
  auto bench_verify = [&](const std::string& id, std::optional<int> n,
                          std::optional<Value> alpha) {
    fairdiv::VerifyParams params;
    params.n = n;
    params.alpha = alpha;
    params.seeds = 200;
    params.seed_base = seed;
    auto t0 = Clock::now();
    auto rep = fairdiv::verify_theorem(id, params);
    auto t1 = Clock::now();
    Json row;
    row["task"] = "verify " + id;
    row["holds"] = rep.holds;
    row["ms"] = time_ms(t0, t1);
    rows.push_back(std::move(row));
  };
  bench_verify("thm_3_1", std::nullopt, std::nullopt);
  bench_verify("thm_3_2", std::nullopt, std::nullopt);
  bench_verify("thm_4_1", std::nullopt, std::nullopt);
  bench_verify("thm_4_4", 3, Value(1) / 2);
  bench_verify("thm_4_5", std::nullopt, Value(1));
  bench_verify("prop_b_1", std::nullopt, std::nullopt);
  bench_verify("thm_5_5", std::nullopt, std::nullopt);

  auto bench_solver = [&](const std::string& name, auto&& run) {
    auto t0 = Clock::now();
    int runs = 0;
    for (int s = 0; s < 50; ++s) runs += run(seed + static_cast<unsigned long long>(s));
    auto t1 = Clock::now();
    Json row;
    row["task"] = name;
    row["runs"] = runs;
    row["ms"] = time_ms(t0, t1);
    rows.push_back(std::move(row));
  };
  bench_solver("solve ef1_sdef1 (n=4, m=12)", [](unsigned long long s) {
    fairdiv::GenSpec g;
    g.n = 4;
    g.m = 12;
    g.seed = s;
    auto inst = fairdiv::generate_instance(g);
    fairdiv::solve_ef1_sdef1(inst);
    return 1;
  });
  bench_solver("solve eq1_fpo (n=3, m=8)", [](unsigned long long s) {
    fairdiv::GenSpec g;
    g.n = 3;
    g.m = 8;
    g.seed = s;
    auto inst = fairdiv::generate_instance(g);
    fairdiv::solve_eq1_fpo(inst);
    return 1;
  });
  std::cout << rows.dump(2) << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact solvers and checkers for fair division with market values"};
  app.require_subcommand(1);

  std::string instance_name, allocation_path, criteria_text, algorithm, theorem, dist = "uniform";
  std::string out_path, prices_path, mix;
  std::optional<int> n_param;
  std::string alpha_text;
  int gen_n = 2, gen_m = 4;
  long max_value = 10;
  unsigned long long seed = 1;
  int seeds = 1000;
  int workers = 1;
  bool with_trace = false;

  auto* solve = app.add_subcommand("solve", "run a solver and certify its guarantees");
  solve->add_option("--algorithm", algorithm,
                    "identical_ranking | cut_choose | ef1_sdef1 | mes | two_agent_pairs | "
                    "eq1_fpo | perfect_division")
      ->required();
  solve->add_option("--instance", instance_name, "instance file or builtin name")->required();
  solve->add_option("--n", n_param, "agent count for parametrized builtins");
  solve->add_option("--alpha", alpha_text, "rational parameter a/b");
  solve->add_flag("--trace", with_trace, "include the structured trace");
  solve->add_option("--out", out_path, "output path (default stdout)");
  solve->add_option("--workers", workers, "deterministic worker count");

  auto* check = app.add_subcommand("check", "run fairness checkers on an allocation");
  check->add_option("--instance", instance_name)->required();
  check->add_option("--allocation", allocation_path)->required();
  check->add_option("--criteria", criteria_text,
                    "comma list of criterion[:side], e.g. ef1:agents,sdef1:market");
  check->add_option("--alpha", alpha_text);
  check->add_option("--prices", prices_path, "price vector JSON for fisher");
  check->add_option("--out", out_path);

  auto* verify = app.add_subcommand("verify", "machine-verify a paper claim");
  verify->add_option("--theorem", theorem,
                     "thm_3_1 | thm_3_2 | thm_4_1 | thm_4_4 | thm_4_5 | prop_b_1 | thm_5_5")
      ->required();
  verify->add_option("--n", n_param);
  verify->add_option("--alpha", alpha_text);
  verify->add_option("--seeds", seeds, "sweep size for positive results");
  verify->add_option("--workers", workers);
  verify->add_option("--out", out_path);

  auto* gen = app.add_subcommand("gen", "generate a deterministic instance");
  gen->add_option("--n", gen_n)->required();
  gen->add_option("--m", gen_m)->required();
  gen->add_option("--dist", dist, "uniform | correlated | identical-ranking");
  gen->add_option("--max", max_value, "value grid 1..max");
  gen->add_option("--mix", mix, "market weight for correlated");
  gen->add_option("--seed", seed)->required();
  gen->add_option("--out", out_path);

  auto* bench = app.add_subcommand("bench", "time the verifications and solvers");
  bench->add_option("--seed", seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    std::optional<Value> alpha;
    if (!alpha_text.empty()) alpha = parse_alpha(alpha_text);
    if (solve->parsed())
      return cmd_solve(algorithm, instance_name, n_param, alpha, with_trace, out_path, workers);
    if (check->parsed())
      return cmd_check(instance_name, allocation_path, criteria_text, alpha, prices_path, out_path);
    if (verify->parsed()) return cmd_verify(theorem, n_param, alpha, seeds, workers, out_path);
    if (gen->parsed()) return cmd_gen(gen_n, gen_m, dist, max_value, mix, seed, out_path);
    if (bench->parsed()) return cmd_bench(seed);
  } catch (const fairdiv::BoundExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBound;
  } catch (const fairdiv::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
