#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fairdiv/cake.hpp"
#include "fairdiv/criteria.hpp"
#include "fairdiv/instance.hpp"

namespace fairdiv {

enum class EnumConstraint { None, OneGoodPerBlock, Balanced };

struct EnumOptions {
  EnumConstraint constraint = EnumConstraint::None;
  // Required for OneGoodPerBlock.
  const BlockPartition* blocks = nullptr;
  unsigned long long bound = 20'000'000ULL;
};

// Streams every complete allocation exactly once, in lexicographic order of
// the good->agent assignment vector. Constrained streams never generate
// infeasible allocations. The visitor returns false to stop early; the
// return value is the number of allocations visited.
unsigned long long enumerate_allocations(int n, int m, const EnumOptions& opt,
                                         const std::function<bool(const Allocation&)>& visit);

struct Predicate {
  std::string criterion;  // ef1 | sd_ef1 | sd_ef1_blocks | efx | mms | eq1 | po | balanced
  std::string side;       // agents | market
  Value alpha = Value(1);
};

// First allocation (lexicographic) satisfying all predicates, or nullopt.
std::optional<Allocation> exists_allocation(const Instance& inst,
                                            const std::vector<Predicate>& predicates,
                                            const EnumOptions& opt = {});

// Evaluates one predicate against a fixed allocation.
bool predicate_holds(const Instance& inst, const Allocation& alloc, const Predicate& pred);

struct VerifyParams {
  std::optional<int> n;
  std::optional<Value> alpha;
  int seeds = 1000;        // positive sweeps
  unsigned long long seed_base = 1;
  int workers = 1;
};

struct TheoremReport {
  std::string id;
  bool holds = false;
  std::string detail;
  unsigned long long checked = 0;
  std::optional<Allocation> witness;  // counter-witness when holds is false
};

// Machine verification of the built-in impossibility and existence claims:
// thm_3_1, thm_3_2, thm_4_1, thm_4_4(n, alpha), thm_4_5(alpha), prop_b_1,
// thm_5_5. Throws Error on an unknown id.
TheoremReport verify_theorem(const std::string& id, const VerifyParams& params = {});

// Built-in counterexample instances.
Instance instance_thm_3_1();
Instance instance_thm_4_1();
Instance instance_prop_b_1();
Instance instance_thm_4_4(int n);
Instance instance_thm_4_5(const Value& alpha);
cake::CakeInstance cake_thm_5_1();
cake::CakeInstance cake_thm_5_5();

// Resolves a builtin instance name (thm_3_1, thm_4_1, prop_b_1,
// thm_4_4, thm_4_5); names are case-insensitive.
std::optional<Instance> builtin_instance(const std::string& name, std::optional<int> n,
                                         std::optional<Value> alpha);

struct OpenProblemSearch {
  int n = 2;
  int m = 4;
  long grid_max = 4;  // values range over integers 1..grid_max
  unsigned long long class_bound = 2'000'000'000ULL;
};

struct OpenProblemResult {
  std::optional<Instance> counterexample;
  unsigned long long classes_scanned = 0;
  std::string detail;
};

// Exhaustive scans for instances falsifying the open-problem conjunctions
// (op_3_4: SD-EF1 agents + EF1 market; op_4_2: EF1+PO agents + EF1 market).
// A returned instance is a research artifact, never a verdict.
OpenProblemResult search_open_problem(const std::string& id, const OpenProblemSearch& opt);

}  // namespace fairdiv
