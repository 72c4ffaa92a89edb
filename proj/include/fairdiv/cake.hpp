#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fairdiv/criteria.hpp"
#include "fairdiv/value.hpp"

namespace fairdiv::cake {

// Closed interval endpoints in I/O, half-open [lo, hi) semantics internally
// so disjointness is decidable by exact comparison.
using Interval = std::pair<Value, Value>;
using IntervalSet = std::vector<Interval>;

// Step density over [0,1]: breakpoints 0 = x_0 < ... < x_k = 1 and one
// nonnegative density per piece.
struct PiecewiseConstantDensity {
  std::vector<Value> breakpoints;
  std::vector<Value> densities;

  void validate() const;
  Value total() const;
  static PiecewiseConstantDensity uniform(const Value& density = Value(1));
};

// Exact integral of the density over a union of intervals inside [0,1].
Value measure(const PiecewiseConstantDensity& density, const IntervalSet& piece);

struct IntervalAllocation {
  std::vector<IntervalSet> pieces;  // one interval set per agent

  int num_agents() const { return static_cast<int>(pieces.size()); }
  // Physical cuts: total interval count minus one, after merging adjacent
  // intervals owned by the same agent and dropping empty ones.
  int cut_count() const;
};

// Sorts, merges adjacencies per agent, drops zero-length intervals.
IntervalAllocation normalized(const IntervalAllocation& alloc);

struct CakeViolation {
  std::string message;
};
// Intervals within [0,1], interior-disjoint across agents, total length 1.
std::vector<CakeViolation> validate_cake(const IntervalAllocation& alloc);

struct CakeInstance {
  int n = 0;
  std::vector<PiecewiseConstantDensity> utilities;  // size 1 (identical) or n
  PiecewiseConstantDensity market;

  const PiecewiseConstantDensity& utility_for(int agent) const;
};

// Envy-freeness w.r.t. per-agent densities: u_i(A_i) >= u_i(A_j).
FairnessReport check_cake_ef(const std::vector<PiecewiseConstantDensity>& per_agent,
                             const IntervalAllocation& alloc);
// Market-side envy-freeness is exact equality: v(A_i) = v(A_j).
FairnessReport check_cake_ef_market(const PiecewiseConstantDensity& market,
                                    const IntervalAllocation& alloc);
// Equitability: d_i(A_i) = d_j(A_j) under per-agent densities.
FairnessReport check_cake_eq(const std::vector<PiecewiseConstantDensity>& per_agent,
                             const IntervalAllocation& alloc);
// Equal lengths.
FairnessReport check_cake_balanced(const IntervalAllocation& alloc);

// Splits every piece of the common breakpoint refinement into n equal-length
// subintervals, one per agent: an exactly equal division under every input
// density. Cut count is (refined pieces) * n - 1; within-piece cuts alone are
// (refined pieces) * (n - 1).
IntervalAllocation perfect_division(const std::vector<PiecewiseConstantDensity>& densities,
                                    int n);

}  // namespace fairdiv::cake
