#include "fairdiv/instance.hpp"

namespace fairdiv {

const AdditiveValuation& Instance::market_for(int agent) const {
  if (market.empty()) throw Error("instance has no market valuation");
  if (market.size() == 1) return market[0];
  if (agent < 0 || agent >= static_cast<int>(market.size()))
    throw Error("agent index out of range");
  return market[static_cast<std::size_t>(agent)];
}

std::vector<AdditiveValuation> Instance::market_profile() const {
  if (market.empty()) throw Error("instance has no market valuation");
  if (market.size() > 1) return market;
  return std::vector<AdditiveValuation>(static_cast<std::size_t>(n), market[0]);
}

bool Instance::utilities_all_additive() const {
  for (const auto& u : utilities)
    if (!u.is_additive()) return false;
  return true;
}

std::vector<AdditiveValuation> Instance::additive_utilities() const {
  std::vector<AdditiveValuation> out;
  out.reserve(utilities.size());
  for (const auto& u : utilities) out.push_back(u.as_additive());
  return out;
}

bool Instance::utilities_strictly_positive() const {
  for (const auto& u : utilities) {
    if (!u.is_additive()) return false;
    for (const auto& v : u.per_good())
      if (v <= 0) return false;
  }
  return true;
}

std::vector<AllocationViolation> validate(int n, int m, const Allocation& alloc) {
  std::vector<AllocationViolation> out;
  if (alloc.num_agents() != n) {
    out.push_back({"allocation has " + std::to_string(alloc.num_agents()) +
                   " bundles, expected " + std::to_string(n)});
    return out;
  }
  std::vector<int> owner(static_cast<std::size_t>(m), -1);
  for (int i = 0; i < n; ++i) {
    for (int g : alloc.bundles[static_cast<std::size_t>(i)]) {
      if (g < 0 || g >= m) {
        out.push_back({"good index " + std::to_string(g) + " out of range"});
        continue;
      }
      if (owner[static_cast<std::size_t>(g)] != -1) {
        out.push_back({"good g" + std::to_string(g + 1) + " assigned to agents " +
                       std::to_string(owner[static_cast<std::size_t>(g)] + 1) + " and " +
                       std::to_string(i + 1)});
      } else {
        owner[static_cast<std::size_t>(g)] = i;
      }
    }
  }
  for (int g = 0; g < m; ++g)
    if (owner[static_cast<std::size_t>(g)] == -1)
      out.push_back({"good g" + std::to_string(g + 1) + " unallocated"});
  return out;
}

std::vector<AllocationViolation> validate(const Instance& inst, const Allocation& alloc) {
  return validate(inst.n, inst.m, alloc);
}

}  // namespace fairdiv
