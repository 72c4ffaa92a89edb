#include "fairdiv/cake.hpp"

#include <algorithm>

namespace fairdiv::cake {

void PiecewiseConstantDensity::validate() const {
  if (breakpoints.size() < 2 || breakpoints.size() != densities.size() + 1)
    throw Error("density needs k+1 breakpoints for k pieces");
  if (breakpoints.front() != 0 || breakpoints.back() != 1)
    throw Error("breakpoints must span [0,1]");
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i)
    if (breakpoints[i] >= breakpoints[i + 1])
      throw Error("breakpoints must be strictly ascending");
  for (const Value& d : densities)
    if (d < 0) throw Error("densities must be nonnegative");
}

Value PiecewiseConstantDensity::total() const {
  Value t = 0;
  for (std::size_t i = 0; i < densities.size(); ++i)
    t += densities[i] * (breakpoints[i + 1] - breakpoints[i]);
  return t;
}

PiecewiseConstantDensity PiecewiseConstantDensity::uniform(const Value& density) {
  return {{Value(0), Value(1)}, {density}};
}

Value measure(const PiecewiseConstantDensity& density, const IntervalSet& piece) {
  density.validate();
  Value total = 0;
  for (const auto& [lo, hi] : piece) {
    if (lo > hi) throw Error("interval with lo > hi");
    if (lo < 0 || hi > 1) throw Error("interval outside [0,1]");
    for (std::size_t i = 0; i < density.densities.size(); ++i) {
      Value a = std::max(lo, density.breakpoints[i]);
      Value b = std::min(hi, density.breakpoints[i + 1]);
      if (a < b) total += density.densities[i] * (b - a);
    }
  }
  return total;
}

IntervalAllocation normalized(const IntervalAllocation& alloc) {
  IntervalAllocation out;
  out.pieces.resize(alloc.pieces.size());
  for (std::size_t i = 0; i < alloc.pieces.size(); ++i) {
    IntervalSet s = alloc.pieces[i];
    std::sort(s.begin(), s.end());
    IntervalSet merged;
    for (const auto& iv : s) {
      if (iv.first >= iv.second) continue;  // empty
      if (!merged.empty() && merged.back().second == iv.first)
        merged.back().second = iv.second;
      else
        merged.push_back(iv);
    }
    out.pieces[i] = std::move(merged);
  }
  return out;
}

int IntervalAllocation::cut_count() const {
  IntervalAllocation norm = normalized(*this);
  int intervals = 0;
  for (const auto& s : norm.pieces) intervals += static_cast<int>(s.size());
  return std::max(0, intervals - 1);
}

std::vector<CakeViolation> validate_cake(const IntervalAllocation& alloc) {
  std::vector<CakeViolation> out;
  std::vector<std::pair<Interval, int>> all;
  Value length = 0;
  for (int i = 0; i < alloc.num_agents(); ++i) {
    for (const auto& iv : alloc.pieces[static_cast<std::size_t>(i)]) {
      if (iv.first > iv.second) {
        out.push_back({"agent " + std::to_string(i + 1) + " holds an interval with lo > hi"});
        continue;
      }
      if (iv.first < 0 || iv.second > 1)
        out.push_back({"agent " + std::to_string(i + 1) + " holds an interval outside [0,1]"});
      length += iv.second - iv.first;
      all.push_back({iv, i});
    }
  }
  std::sort(all.begin(), all.end());
  for (std::size_t t = 0; t + 1 < all.size(); ++t)
    if (all[t].first.second > all[t + 1].first.first)
      out.push_back({"intervals of agents " + std::to_string(all[t].second + 1) + " and " +
                     std::to_string(all[t + 1].second + 1) + " overlap"});
  if (length != 1)
    out.push_back({"piece lengths sum to " + value_to_string(length) + ", expected 1"});
  return out;
}

const PiecewiseConstantDensity& CakeInstance::utility_for(int agent) const {
  if (utilities.empty()) throw Error("cake instance has no utilities");
  if (utilities.size() == 1) return utilities[0];
  if (agent < 0 || agent >= static_cast<int>(utilities.size()))
    throw Error("agent index out of range");
  return utilities[static_cast<std::size_t>(agent)];
}

namespace {

std::vector<Value> per_agent_values(const std::vector<PiecewiseConstantDensity>& per_agent,
                                    const IntervalAllocation& alloc) {
  if (static_cast<int>(per_agent.size()) != alloc.num_agents())
    throw Error("density profile length does not match allocation");
  std::vector<Value> own;
  own.reserve(per_agent.size());
  for (int i = 0; i < alloc.num_agents(); ++i)
    own.push_back(measure(per_agent[static_cast<std::size_t>(i)],
                          alloc.pieces[static_cast<std::size_t>(i)]));
  return own;
}

}  // namespace

FairnessReport check_cake_ef(const std::vector<PiecewiseConstantDensity>& per_agent,
                             const IntervalAllocation& alloc) {
  FairnessReport rep;
  rep.criterion = "cake_ef";
  rep.side = "agents";
  auto own = per_agent_values(per_agent, alloc);
  for (int i = 0; i < alloc.num_agents(); ++i)
    for (int j = 0; j < alloc.num_agents(); ++j) {
      if (i == j) continue;
      Value other = measure(per_agent[static_cast<std::size_t>(i)],
                            alloc.pieces[static_cast<std::size_t>(j)]);
      if (own[static_cast<std::size_t>(i)] < other) {
        rep.passed = false;
        rep.witnesses.push_back({i, j, std::nullopt, own[static_cast<std::size_t>(i)], other});
      }
    }
  return rep;
}

FairnessReport check_cake_ef_market(const PiecewiseConstantDensity& market,
                                    const IntervalAllocation& alloc) {
  FairnessReport rep;
  rep.criterion = "cake_ef";
  rep.side = "market";
  std::vector<Value> vals;
  for (int i = 0; i < alloc.num_agents(); ++i)
    vals.push_back(measure(market, alloc.pieces[static_cast<std::size_t>(i)]));
  for (int i = 0; i < alloc.num_agents(); ++i)
    for (int j = i + 1; j < alloc.num_agents(); ++j)
      if (vals[static_cast<std::size_t>(i)] != vals[static_cast<std::size_t>(j)]) {
        rep.passed = false;
        rep.witnesses.push_back({i, j, std::nullopt, vals[static_cast<std::size_t>(i)],
                                 vals[static_cast<std::size_t>(j)]});
      }
  return rep;
}

FairnessReport check_cake_eq(const std::vector<PiecewiseConstantDensity>& per_agent,
                             const IntervalAllocation& alloc) {
  FairnessReport rep;
  rep.criterion = "cake_eq";
  auto own = per_agent_values(per_agent, alloc);
  for (int i = 0; i < alloc.num_agents(); ++i)
    for (int j = i + 1; j < alloc.num_agents(); ++j)
      if (own[static_cast<std::size_t>(i)] != own[static_cast<std::size_t>(j)]) {
        rep.passed = false;
        rep.witnesses.push_back({i, j, std::nullopt, own[static_cast<std::size_t>(i)],
                                 own[static_cast<std::size_t>(j)]});
      }
  return rep;
}

FairnessReport check_cake_balanced(const IntervalAllocation& alloc) {
  FairnessReport rep;
  rep.criterion = "cake_balanced";
  PiecewiseConstantDensity unit = PiecewiseConstantDensity::uniform();
  std::vector<Value> lengths;
  for (int i = 0; i < alloc.num_agents(); ++i)
    lengths.push_back(measure(unit, alloc.pieces[static_cast<std::size_t>(i)]));
  for (int i = 0; i < alloc.num_agents(); ++i)
    for (int j = i + 1; j < alloc.num_agents(); ++j)
      if (lengths[static_cast<std::size_t>(i)] != lengths[static_cast<std::size_t>(j)]) {
        rep.passed = false;
        rep.witnesses.push_back({i, j, std::nullopt, lengths[static_cast<std::size_t>(i)],
                                 lengths[static_cast<std::size_t>(j)]});
      }
  return rep;
}

IntervalAllocation perfect_division(const std::vector<PiecewiseConstantDensity>& densities,
                                    int n) {
  if (n < 1) throw Error("agent count must be at least 1");
  if (densities.empty()) throw Error("perfect division needs at least one density");
  std::vector<Value> refined;
  for (const auto& d : densities) {
    d.validate();
    if (d.total() == 0) throw Error("density with zero total value");
    refined.insert(refined.end(), d.breakpoints.begin(), d.breakpoints.end());
  }
  std::sort(refined.begin(), refined.end());
  refined.erase(std::unique(refined.begin(), refined.end()), refined.end());

  IntervalAllocation alloc;
  alloc.pieces.resize(static_cast<std::size_t>(n));
  for (std::size_t p = 0; p + 1 < refined.size(); ++p) {
    const Value lo = refined[p];
    const Value width = (refined[p + 1] - refined[p]) / n;
    for (int agent = 0; agent < n; ++agent)
      alloc.pieces[static_cast<std::size_t>(agent)].push_back(
          {lo + width * agent, lo + width * (agent + 1)});
  }
  return alloc;
}

}  // namespace fairdiv::cake
