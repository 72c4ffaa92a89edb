#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fairdiv/instance.hpp"
#include "fairdiv/ranking.hpp"

namespace fairdiv {

// Envy relation on a (partial) allocation: edge i -> j iff agent i strictly
// prefers j's bundle to its own. Recomputed exactly from bundle values.
struct EnvyGraph {
  int n = 0;
  std::vector<std::vector<bool>> envies;  // envies[i][j]

  static EnvyGraph from(const std::vector<MonotoneValuation>& profile,
                        const Allocation& alloc);
  // Some directed cycle, or empty when acyclic. Deterministic: DFS from the
  // lowest agent index with ascending neighbor order.
  std::vector<int> find_cycle() const;
  // Lowest-index-first Kahn order; enviers come before the agents they envy.
  std::vector<int> topological_order() const;
};

// Rotates bundles along envy cycles until the graph is acyclic. Every
// rotation strictly improves each agent on the cycle.
void eliminate_envy_cycles(const std::vector<MonotoneValuation>& profile, Allocation* alloc);

// Structured solver trace; one entry per event, serialized as JSON lines.
struct TraceStep {
  std::string kind;
  std::string detail;
  std::optional<Allocation> allocation;
  std::vector<Value> prices;
  std::optional<Value> min_market_value;
};

struct Trace {
  std::vector<TraceStep> steps;
  void add(TraceStep step) { steps.push_back(std::move(step)); }
};

// Matching-based allocation for profiles that share one ranking: pads with
// zero-value dummies to a multiple of n, decomposes the n-regular bipartite
// block multigraph into n perfect matchings, and strips the dummies.
// Output is SD-EF1 w.r.t. every valuation consistent with either ranking.
Allocation solve_identical_ranking(const Ranking& market_ranking,
                                   const Ranking& utility_ranking, int n);

// Cut-and-choose for n = 2, m <= 6: splits via solve_identical_ranking on
// (market, agent 1), then agent 2 takes whichever bundle its top-l prefix
// counts accept. SD-EF1 on both sides.
Allocation solve_two_agent_cut_choose(const Instance& inst, Trace* trace = nullptr);

// Per-block picking with envy-cycle elimination (the unit-capacity
// instantiation of cardinality-constrained EF1): EF1 w.r.t. utilities and
// one-good-per-block w.r.t. the market ranking.
Allocation solve_ef1_sdef1(const Instance& inst, Trace* trace = nullptr);

// Minimal-envied-swap algorithm for monotone subadditive utilities:
// 1/2-EF1 w.r.t. utilities, SD-EF1 w.r.t. the additive market valuation.
Allocation solve_mes(const Instance& inst, Trace* trace = nullptr);

// Pair the goods along the market ranking and exhaust per-pair orientations
// until one is EF1 for both (monotone) utilities; existence is guaranteed.
struct TwoAgentPairsOptions {
  int max_goods = 24;
};
Allocation solve_two_agent_pairs(const Instance& inst, Trace* trace = nullptr,
                                 const TwoAgentPairsOptions& opt = {});

struct Eq1FpoOptions {
  // 0 = use the default explicit polynomial guard in n, m and the number of
  // distinct market value levels.
  unsigned long long iteration_guard = 0;
};

struct Eq1FpoResult {
  Allocation allocation;
  std::vector<Value> prices;
};

// Fisher-market local search: EQ1 w.r.t. (heterogeneous) market values and
// an equilibrium (hence fPO) w.r.t. strictly positive subjective utilities.
Eq1FpoResult solve_eq1_fpo(const Instance& inst, Trace* trace = nullptr,
                           const Eq1FpoOptions& opt = {});

// Explicit guard used when Eq1FpoOptions::iteration_guard is 0.
unsigned long long eq1_fpo_default_guard(const Instance& inst);

}  // namespace fairdiv
