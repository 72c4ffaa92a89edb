#include "fairdiv/gen.hpp"

#include <numeric>

namespace fairdiv {

Instance generate_instance(const GenSpec& spec) {
  if (spec.n < 1 || spec.m < 0) throw Error("generator needs n >= 1 and m >= 0");
  if (spec.max_value < 1) throw Error("generator needs max_value >= 1");
  if (spec.mix < 0 || spec.mix > 1) throw Error("generator mix weight must lie in [0,1]");
  SplitMix64 rng(spec.seed);

  Instance inst;
  inst.n = spec.n;
  inst.m = spec.m;

  std::vector<Value> market(static_cast<std::size_t>(spec.m));
  for (auto& v : market) v = Value(rng.uniform(spec.max_value));

  switch (spec.dist) {
    case GenDist::Uniform: {
      for (int i = 0; i < spec.n; ++i) {
        std::vector<Value> u(static_cast<std::size_t>(spec.m));
        for (auto& x : u) x = Value(rng.uniform(spec.max_value));
        inst.utilities.push_back(MonotoneValuation::additive(std::move(u)));
      }
      break;
    }
    case GenDist::CorrelatedWithMarket: {
      for (int i = 0; i < spec.n; ++i) {
        std::vector<Value> u(static_cast<std::size_t>(spec.m));
        for (int g = 0; g < spec.m; ++g)
          u[static_cast<std::size_t>(g)] =
              spec.mix * market[static_cast<std::size_t>(g)] +
              (Value(1) - spec.mix) * Value(rng.uniform(spec.max_value));
        inst.utilities.push_back(MonotoneValuation::additive(std::move(u)));
      }
      break;
    }
    case GenDist::IdenticalRanking: {
      // One shared strict ranking; every agent's values strictly decrease
      // along it with independent random gaps.
      std::vector<int> order(static_cast<std::size_t>(spec.m));
      std::iota(order.begin(), order.end(), 0);
      for (std::size_t k = order.size(); k > 1; --k)
        std::swap(order[k - 1], order[rng.index(k)]);
      for (int i = 0; i < spec.n; ++i) {
        std::vector<Value> u(static_cast<std::size_t>(spec.m));
        Value v(rng.uniform(spec.max_value));
        for (int pos = spec.m - 1; pos >= 0; --pos) {
          u[static_cast<std::size_t>(order[static_cast<std::size_t>(pos)])] = v;
          v += rng.uniform(3);
        }
        inst.utilities.push_back(MonotoneValuation::additive(std::move(u)));
      }
      break;
    }
  }

  inst.market.emplace_back(std::move(market));
  return inst;
}

}  // namespace fairdiv
