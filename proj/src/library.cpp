#include "fairdiv/oracle.hpp"

namespace fairdiv {

namespace {

std::vector<Value> values(std::initializer_list<long> xs) {
  std::vector<Value> out;
  out.reserve(xs.size());
  for (long x : xs) out.emplace_back(x);
  return out;
}

Instance additive_instance(std::vector<std::vector<Value>> utilities,
                           std::vector<Value> market) {
  Instance inst;
  inst.n = static_cast<int>(utilities.size());
  inst.m = static_cast<int>(market.size());
  for (auto& u : utilities) inst.utilities.push_back(MonotoneValuation::additive(std::move(u)));
  inst.market.emplace_back(std::move(market));
  return inst;
}

}  // namespace

// Two agents, seven goods. The rankings are the point; the values are the
// descending instantiation value(rank r) = m - r + 1, which induces exactly
//   market: g1 > g2 > g3 > g4 > g5 > g6 > g7
//   agent1: g1 > g3 > g2 > g5 > g4 > g7 > g6
//   agent2: g1 > g5 > g2 > g3 > g6 > g7 > g4
Instance instance_thm_3_1() {
  return additive_instance({values({7, 5, 6, 3, 4, 1, 2}), values({7, 5, 4, 1, 6, 3, 2})},
                           values({7, 6, 5, 4, 3, 2, 1}));
}

// Two agents, six goods, market identical to agent 1.
Instance instance_thm_4_1() {
  return additive_instance({values({19, 7, 4, 3, 2, 1}), values({8, 7, 6, 5, 4, 3})},
                           values({19, 7, 4, 3, 2, 1}));
}

Instance instance_prop_b_1() {
  return additive_instance({values({4, 4, 1, 1}), values({3, 3, 1, 1})},
                           values({1, 1, 1, 1}));
}

// n agents, 2n-1 goods: n unit goods followed by n-1 goods worth n to the
// agents and nothing to the market. The subjective maximin share is n.
Instance instance_thm_4_4(int n) {
  if (n < 1) throw Error("thm_4_4 instance needs n >= 1");
  std::vector<Value> u, v;
  for (int g = 0; g < n; ++g) {
    u.emplace_back(1);
    v.emplace_back(1);
  }
  for (int g = 0; g < n - 1; ++g) {
    u.emplace_back(n);
    v.emplace_back(0);
  }
  std::vector<std::vector<Value>> utilities(static_cast<std::size_t>(n), u);
  return additive_instance(std::move(utilities), std::move(v));
}

// Two agents, four unit goods; the market values the first good at
// 2/alpha + 1 so that holding it beats the other bundle after any removal.
Instance instance_thm_4_5(const Value& alpha) {
  if (alpha <= 0 || alpha > 1) throw Error("thm_4_5 instance needs alpha in (0,1]");
  std::vector<Value> v{Value(2) / alpha + 1, Value(1), Value(1), Value(1)};
  return additive_instance({values({1, 1, 1, 1}), values({1, 1, 1, 1})}, std::move(v));
}

// Identical agent density 2 on [0,1/2] and 0 on [1/2,1]; uniform market.
// Mutual envy-freeness forces equal-length splits of both halves, hence at
// least 2n-2 cuts.
cake::CakeInstance cake_thm_5_1() {
  cake::CakeInstance inst;
  inst.n = 2;
  inst.utilities.push_back({{Value(0), Value(1) / 2, Value(1)}, {Value(2), Value(0)}});
  inst.market = cake::PiecewiseConstantDensity::uniform();
  return inst;
}

// Three agents; agents 1 and 2 have V-shaped linear densities symmetric
// around 1/2 and agent 3 is uniform. Stored as the 12-piece midpoint step
// functions, which integrate the linear originals exactly on every interval
// with endpoints at multiples of 1/12 (all interval endpoints used by the
// analysis are).
cake::CakeInstance cake_thm_5_5() {
  auto midpoint_steps = [](const Value& a, const Value& b) {
    // density a + b*x on [0,1/2], mirrored on [1/2,1], sampled at midpoints
    cake::PiecewiseConstantDensity d;
    d.breakpoints.push_back(Value(0));
    for (int k = 1; k <= 12; ++k) d.breakpoints.push_back(Value(k) / 12);
    for (int k = 0; k < 12; ++k) {
      Value mid = Value(2 * k + 1) / 24;
      Value x = mid <= Value(1) / 2 ? mid : Value(1) - mid;
      d.densities.push_back(a + b * x);
    }
    return d;
  };
  cake::CakeInstance inst;
  inst.n = 3;
  inst.utilities.push_back(midpoint_steps(Value(5) / 3, Value(-8) / 3));
  inst.utilities.push_back(midpoint_steps(Value(3) / 2, Value(-2)));
  inst.utilities.push_back(cake::PiecewiseConstantDensity::uniform());
  inst.market = cake::PiecewiseConstantDensity::uniform();
  return inst;
}

}  // namespace fairdiv
