#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fairdiv/instance.hpp"
#include "fairdiv/ranking.hpp"

namespace fairdiv {

// One concrete violation. What lhs/rhs mean depends on the criterion; the
// convention everywhere is that a witness can be re-verified by recomputing
// both sides from the instance:
//   ef1 / efx / eq1 / mms: lhs = envier's value, rhs = scaled comparison
//     value after the recorded removal; violation means lhs < rhs.
//   sd_ef1: good = the threshold good; lhs = |A_i cap top(t)|,
//     rhs = |A_j cap top(t)| - 1 at threshold t = value(good); lhs < rhs.
//   sd_ef1 blocks: good = the extra good; lhs = |A_i cap block|, rhs = 1;
//     violation means lhs > rhs.
//   fisher: good held by the agent with lhs = bang-per-buck < rhs = mbb.
//     envier = -1 flags an unallocated good.
struct Witness {
  int envier = -1;
  int envied = -1;
  std::optional<int> good;
  Value lhs;
  Value rhs;
};

struct FairnessReport {
  std::string criterion;
  std::string side;
  bool passed = true;
  std::vector<Witness> witnesses;
  std::optional<Value> alpha;
  std::optional<Allocation> dominating;  // po: a Pareto-dominating allocation
  std::string note;
};

// EF1 with an optional multiplicative relaxation (alpha = 1 is plain EF1,
// alpha = 1/2 is the guarantee of the minimal-envied-swap algorithm).
// Accepts arbitrary monotone oracles; every single-good removal is tried.
FairnessReport check_ef1(const std::vector<MonotoneValuation>& profile,
                         const Allocation& alloc, const Value& alpha = Value(1));
FairnessReport check_ef1_additive(const std::vector<AdditiveValuation>& profile,
                                  const Allocation& alloc, const Value& alpha = Value(1));

// SD-EF1: bundle dominance at every value threshold after one removal.
// Pair (i,j) passes iff A_j is empty or the count deficit
// max_t(|A_j cap top_i(t)| - |A_i cap top_i(t)|) is at most 1. Thresholds
// range over the distinct values of the evaluating agent.
FairnessReport check_sd_ef1(const std::vector<AdditiveValuation>& profile,
                            const Allocation& alloc);

// Lemma characterization for a common strict ranking: pass iff every agent
// holds at most one good from every block of block_partition(ranking, n).
FairnessReport check_sd_ef1_market_blocks(const Ranking& market_ranking, int n,
                                          const Allocation& alloc);

// alpha-EFX: u_i(A_i) >= alpha * u_i(A_j \ {g}) for every g in A_j.
FairnessReport check_efx_alpha(const std::vector<AdditiveValuation>& profile,
                               const Allocation& alloc, const Value& alpha);

// EQ1: v_i(A_i) >= v_j(A_j \ {g}) for some g in A_j. Note both sides use the
// owner's own valuation of the owner's bundle, unlike EF1.
FairnessReport check_eq1(const std::vector<AdditiveValuation>& market_profile,
                         const Allocation& alloc);

struct PoOptions {
  unsigned long long enumeration_bound = 20'000'000ULL;
  int workers = 1;
};

// Integral Pareto optimality by exhausting all n^m allocations. The witness
// is the lexicographically first dominating allocation. Fractional PO is
// certified separately via check_fisher_equilibrium.
FairnessReport check_po_bruteforce(const std::vector<MonotoneValuation>& profile,
                                   const Allocation& alloc, const PoOptions& opt = {});

// Exact fractional-PO decision for two additive agents: an allocation is fPO
// iff some positive welfare weight separates the two agents' value ratios,
// i.e. max_{g in A_1} u2(g)/u1(g) <= min_{g in A_2} u2(g)/u1(g) with the
// zero-value cases handled as outright transfers.
bool is_fpo_two_agents(const AdditiveValuation& u1, const AdditiveValuation& u2,
                       const Allocation& alloc);

// Fisher market equilibrium: complete allocation and every held good has the
// owner's maximum bang-per-buck ratio. Passing certifies fPO by the first
// welfare theorem. n = 1 passes with any positive prices (a complete
// single-agent allocation is trivially fPO).
FairnessReport check_fisher_equilibrium(const Instance& inst, const Allocation& alloc,
                                        const std::vector<Value>& prices);

bool check_balanced(const Allocation& alloc, int n, int m);
FairnessReport check_balanced_report(const Allocation& alloc, int n, int m);

struct MmsResult {
  Value mu;
  std::vector<Bundle> partition;  // n bundles, min bundle value = mu
};

struct MmsProfile {
  std::vector<Value> mu;
  std::vector<std::vector<Bundle>> partitions;
};

// Exact maximin share by subset DP over all n-partitions. Memoized on
// (bundle count, remaining good set); default bound m <= 14.
MmsResult compute_mms(const AdditiveValuation& val, int n, int max_goods = 14);
MmsProfile compute_mms_profile(const std::vector<AdditiveValuation>& profile, int n,
                               int max_goods = 14);

FairnessReport check_mms_alpha(const std::vector<AdditiveValuation>& profile,
                               const Allocation& alloc, const Value& alpha,
                               int max_goods = 14);

}  // namespace fairdiv
