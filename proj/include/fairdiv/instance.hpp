#pragma once

#include <string>
#include <vector>

#include "fairdiv/valuation.hpp"

namespace fairdiv {

// Agents 0..n-1, goods 0..m-1 internally; I/O renders goods as g1..gm.
struct Instance {
  int n = 0;
  int m = 0;
  // One subjective valuation per agent.
  std::vector<MonotoneValuation> utilities;
  // Size 1: a single market valuation shared by all agents.
  // Size n: heterogeneous per-agent market valuations.
  std::vector<AdditiveValuation> market;

  bool heterogeneous_market() const { return market.size() > 1; }
  const AdditiveValuation& market_for(int agent) const;
  // Market valuations replicated to one per agent.
  std::vector<AdditiveValuation> market_profile() const;

  bool utilities_all_additive() const;
  // Throws unless every utility is additive.
  std::vector<AdditiveValuation> additive_utilities() const;
  bool utilities_strictly_positive() const;
};

struct Allocation {
  std::vector<Bundle> bundles;

  int num_agents() const { return static_cast<int>(bundles.size()); }
  static Allocation empty(int n) { return Allocation{std::vector<Bundle>(static_cast<std::size_t>(n))}; }

  bool operator==(const Allocation&) const = default;
};

struct AllocationViolation {
  std::string message;
};

// Checks bundle count, index ranges, disjointness, and completeness.
std::vector<AllocationViolation> validate(int n, int m, const Allocation& alloc);
std::vector<AllocationViolation> validate(const Instance& inst, const Allocation& alloc);

}  // namespace fairdiv
