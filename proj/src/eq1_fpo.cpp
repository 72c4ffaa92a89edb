#include <algorithm>
#include <set>

#include "fairdiv/algorithms.hpp"
#include "fairdiv/criteria.hpp"

namespace fairdiv {

namespace {

// Number of distinct market value levels max_i |{v_i(S) : S subseteq M}|,
// capped at 2^16 to keep the guard computation itself bounded.
unsigned long long market_value_levels(const Instance& inst) {
  unsigned long long best = 1;
  if (inst.m > 16) return 1ULL << 16;
  for (const auto& v : inst.market) {
    std::set<Value> sums;
    sums.insert(Value(0));
    for (int g = 0; g < inst.m; ++g) {
      std::set<Value> next = sums;
      for (const auto& s : sums) next.insert(s + v.of(g));
      sums.swap(next);
    }
    best = std::max<unsigned long long>(best, sums.size());
  }
  return best;
}

struct PathSearch {
  const Instance* inst;
  const std::vector<AdditiveValuation>* utilities;
  const std::vector<Value>* prices;
  const Allocation* alloc;
  std::vector<Value> mbb;         // per agent
  std::vector<int> owner;         // per good
  std::vector<Value> market_own;  // v_i(A_i)

  void refresh() {
    const int n = inst->n;
    mbb.assign(static_cast<std::size_t>(n), Value(0));
    for (int i = 0; i < n; ++i)
      for (int g = 0; g < inst->m; ++g)
        mbb[static_cast<std::size_t>(i)] =
            std::max(mbb[static_cast<std::size_t>(i)],
                     Value((*utilities)[static_cast<std::size_t>(i)].of(g) /
                           (*prices)[static_cast<std::size_t>(g)]));
    owner.assign(static_cast<std::size_t>(inst->m), -1);
    for (int i = 0; i < n; ++i)
      for (int g : alloc->bundles[static_cast<std::size_t>(i)])
        owner[static_cast<std::size_t>(g)] = i;
    market_own.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
      market_own[static_cast<std::size_t>(i)] =
          inst->market_for(i).of_bundle(alloc->bundles[static_cast<std::size_t>(i)]);
  }

  bool is_mbb(int agent, int good) const {
    return (*utilities)[static_cast<std::size_t>(agent)].of(good) /
               (*prices)[static_cast<std::size_t>(good)] ==
           mbb[static_cast<std::size_t>(agent)];
  }

  // Shortest EQ1-violating alternating path from any minimum-value agent,
  // ties broken by the lexicographic (start agent, good sequence) order.
  // Returns (from_agent, to_agent, good) of the transfer, or nullopt.
  struct Transfer {
    int from, to, good;
  };
  std::optional<Transfer> find_violating_transfer(const std::vector<int>& sources) {
    const int n = inst->n;
    for (int len = 1; len <= n - 1; ++len) {
      for (int start : sources) {
        std::vector<bool> on_path(static_cast<std::size_t>(n), false);
        on_path[static_cast<std::size_t>(start)] = true;
        std::optional<Transfer> found;
        dfs(start, start, 1, len, on_path, &found);
        if (found) return found;
      }
    }
    return std::nullopt;
  }

  void dfs(int start, int tail, int depth, int target_len, std::vector<bool>& on_path,
           std::optional<Transfer>* found) {
    if (*found) return;
    for (int g = 0; g < inst->m; ++g) {
      int holder = owner[static_cast<std::size_t>(g)];
      if (holder < 0 || on_path[static_cast<std::size_t>(holder)]) continue;
      if (!is_mbb(tail, g)) continue;
      if (depth == target_len) {
        Bundle rest;
        for (int h : alloc->bundles[static_cast<std::size_t>(holder)])
          if (h != g) rest.push_back(h);
        if (inst->market_for(holder).of_bundle(rest) > market_own[static_cast<std::size_t>(start)]) {
          *found = Transfer{holder, tail, g};
          return;
        }
      } else {
        on_path[static_cast<std::size_t>(holder)] = true;
        dfs(start, holder, depth + 1, target_len, on_path, found);
        on_path[static_cast<std::size_t>(holder)] = false;
        if (*found) return;
      }
    }
  }
};

}  // namespace

unsigned long long eq1_fpo_default_guard(const Instance& inst) {
  const unsigned long long n = static_cast<unsigned long long>(inst.n);
  const unsigned long long m = static_cast<unsigned long long>(inst.m);
  return 1024 + 8 * n * n * m * m * market_value_levels(inst);
}

Eq1FpoResult solve_eq1_fpo(const Instance& inst, Trace* trace, const Eq1FpoOptions& opt) {
  if (!inst.utilities_all_additive() || !inst.utilities_strictly_positive())
    throw Error(
        "equitable market division requires strictly positive subjective utilities "
        "(zero utilities make EQ1 together with fPO unattainable)");
  auto utilities = inst.additive_utilities();
  auto market = inst.market_profile();
  for (const auto& v : market)
    for (const auto& x : v.per_good())
      if (x < 0) throw Error("market values must be nonnegative");

  Eq1FpoResult res;
  res.allocation = Allocation::empty(inst.n);
  res.prices.assign(static_cast<std::size_t>(inst.m), Value(1));
  if (inst.m == 0) return res;

  // Phase 1: welfare-maximizing start; owner's utility becomes the price, so
  // every bang-per-buck ratio is at most 1 and held goods sit exactly at 1.
  for (int g = 0; g < inst.m; ++g) {
    int owner = 0;
    for (int i = 1; i < inst.n; ++i)
      if (utilities[static_cast<std::size_t>(i)].of(g) >
          utilities[static_cast<std::size_t>(owner)].of(g))
        owner = i;
    res.allocation.bundles[static_cast<std::size_t>(owner)].push_back(g);
    res.prices[static_cast<std::size_t>(g)] = utilities[static_cast<std::size_t>(owner)].of(g);
  }

  PathSearch search{&inst, &utilities, &res.prices, &res.allocation, {}, {}, {}};

  auto min_market_value = [&]() {
    Value mv = market[0].of_bundle(res.allocation.bundles[0]);
    for (int i = 1; i < inst.n; ++i)
      mv = std::min(mv, market[static_cast<std::size_t>(i)].of_bundle(
                            res.allocation.bundles[static_cast<std::size_t>(i)]));
    return mv;
  };

  if (trace) {
    TraceStep step;
    step.kind = "init";
    step.allocation = res.allocation;
    step.prices = res.prices;
    step.min_market_value = min_market_value();
    trace->add(std::move(step));
  }

  const unsigned long long guard =
      opt.iteration_guard ? opt.iteration_guard : eq1_fpo_default_guard(inst);
  unsigned long long iterations = 0;

  for (;;) {
    if (++iterations > guard)
      throw Error("iteration guard exceeded; the local search should terminate in "
                  "polynomial time, so this indicates a bug");
    search.refresh();

    // Agents at the minimum market value, in index order.
    Value mv = search.market_own[0];
    for (int i = 1; i < inst.n; ++i) mv = std::min(mv, search.market_own[static_cast<std::size_t>(i)]);
    std::vector<int> sources;
    for (int i = 0; i < inst.n; ++i)
      if (search.market_own[static_cast<std::size_t>(i)] == mv) sources.push_back(i);

    auto transfer = search.find_violating_transfer(sources);
    if (transfer) {
      Bundle& from = res.allocation.bundles[static_cast<std::size_t>(transfer->from)];
      from.erase(std::find(from.begin(), from.end(), transfer->good));
      Bundle& to = res.allocation.bundles[static_cast<std::size_t>(transfer->to)];
      to.insert(std::lower_bound(to.begin(), to.end(), transfer->good), transfer->good);
      if (trace) {
        TraceStep step;
        step.kind = "transfer";
        step.detail = "g" + std::to_string(transfer->good + 1) + " from agent " +
                      std::to_string(transfer->from + 1) + " to agent " +
                      std::to_string(transfer->to + 1);
        step.allocation = res.allocation;
        step.prices = res.prices;
        step.min_market_value = min_market_value();
        trace->add(std::move(step));
      }
      continue;
    }

    if (check_eq1(market, res.allocation).passed) break;

    // Phase 3: raise the prices of every good held inside the hierarchy of
    // the minimum agents until a new outside MBB edge appears.
    std::vector<bool> in_hierarchy(static_cast<std::size_t>(inst.n), false);
    std::vector<int> frontier = sources;
    for (int i : frontier) in_hierarchy[static_cast<std::size_t>(i)] = true;
    while (!frontier.empty()) {
      std::vector<int> next;
      for (int i : frontier)
        for (int g = 0; g < inst.m; ++g) {
          int holder = search.owner[static_cast<std::size_t>(g)];
          if (holder < 0 || in_hierarchy[static_cast<std::size_t>(holder)]) continue;
          if (search.is_mbb(i, g)) {
            in_hierarchy[static_cast<std::size_t>(holder)] = true;
            next.push_back(holder);
          }
        }
      frontier.swap(next);
    }

    bool have_beta = false;
    Value beta;
    for (int i = 0; i < inst.n; ++i) {
      if (!in_hierarchy[static_cast<std::size_t>(i)]) continue;
      for (int g = 0; g < inst.m; ++g) {
        int holder = search.owner[static_cast<std::size_t>(g)];
        if (holder < 0 || in_hierarchy[static_cast<std::size_t>(holder)]) continue;
        Value bb = utilities[static_cast<std::size_t>(i)].of(g) / res.prices[static_cast<std::size_t>(g)];
        Value ratio = search.mbb[static_cast<std::size_t>(i)] / bb;
        if (!have_beta || ratio < beta) {
          beta = ratio;
          have_beta = true;
        }
      }
    }
    if (!have_beta)
      throw Error("price phase found no outside good; EQ1 should already hold");

    for (int g = 0; g < inst.m; ++g) {
      int holder = search.owner[static_cast<std::size_t>(g)];
      if (holder >= 0 && in_hierarchy[static_cast<std::size_t>(holder)])
        res.prices[static_cast<std::size_t>(g)] *= beta;
    }
    if (trace) {
      TraceStep step;
      step.kind = "price_update";
      step.detail = "prices of the minimum hierarchy scaled by " + value_to_string(beta);
      step.allocation = res.allocation;
      step.prices = res.prices;
      step.min_market_value = min_market_value();
      trace->add(std::move(step));
    }
  }

  if (trace) {
    TraceStep step;
    step.kind = "done";
    step.allocation = res.allocation;
    step.prices = res.prices;
    step.min_market_value = min_market_value();
    trace->add(std::move(step));
  }
  return res;
}

}  // namespace fairdiv
