#include <algorithm>
#include <map>
#include <numeric>

#include "fairdiv/algorithms.hpp"
#include "fairdiv/criteria.hpp"

namespace fairdiv {

namespace {

struct BlockEdge {
  int left;   // market block
  int right;  // utility block
  int good;
  bool used = false;
};

// Kuhn augmenting-path matching over the unused edges of the multigraph.
// Edges are scanned in insertion (good) order, so the decomposition is
// deterministic.
struct BlockMatcher {
  int k;
  std::vector<BlockEdge>* edges;
  std::vector<int> match_right;  // right block -> edge id
  std::vector<bool> visited;

  bool augment(int left) {
    for (int e = 0; e < static_cast<int>(edges->size()); ++e) {
      BlockEdge& edge = (*edges)[static_cast<std::size_t>(e)];
      if (edge.used || edge.left != left) continue;
      if (visited[static_cast<std::size_t>(edge.right)]) continue;
      visited[static_cast<std::size_t>(edge.right)] = true;
      int prev = match_right[static_cast<std::size_t>(edge.right)];
      if (prev == -1 || augment((*edges)[static_cast<std::size_t>(prev)].left)) {
        match_right[static_cast<std::size_t>(edge.right)] = e;
        return true;
      }
    }
    return false;
  }

  // One perfect matching on the unused edges; returns the chosen edge ids.
  std::vector<int> take_matching() {
    match_right.assign(static_cast<std::size_t>(k), -1);
    for (int left = 0; left < k; ++left) {
      visited.assign(static_cast<std::size_t>(k), false);
      if (!augment(left))
        throw Error("regular block multigraph failed to yield a perfect matching");
    }
    std::vector<int> picked(match_right.begin(), match_right.end());
    for (int e : picked) (*edges)[static_cast<std::size_t>(e)].used = true;
    return picked;
  }
};

}  // namespace

Allocation solve_identical_ranking(const Ranking& market_ranking,
                                   const Ranking& utility_ranking, int n) {
  if (n < 1) throw Error("agent count must be at least 1");
  const int m = market_ranking.num_goods();
  if (utility_ranking.num_goods() != m)
    throw Error("rankings cover different good sets");
  {
    std::vector<int> a = market_ranking.order, b = utility_ranking.order;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) throw Error("rankings cover different good sets");
  }

  Allocation alloc = Allocation::empty(n);
  if (m == 0) return alloc;

  // Zero-value dummies pad both rankings at the bottom.
  const int dummies = (n - m % n) % n;
  const int mp = m + dummies;
  const int k = mp / n;

  std::vector<int> market_rank(static_cast<std::size_t>(mp));
  std::vector<int> utility_rank(static_cast<std::size_t>(mp));
  for (int pos = 0; pos < m; ++pos) {
    market_rank[static_cast<std::size_t>(market_ranking.order[static_cast<std::size_t>(pos)])] = pos + 1;
    utility_rank[static_cast<std::size_t>(utility_ranking.order[static_cast<std::size_t>(pos)])] = pos + 1;
  }
  for (int d = 0; d < dummies; ++d) {
    market_rank[static_cast<std::size_t>(m + d)] = m + d + 1;
    utility_rank[static_cast<std::size_t>(m + d)] = m + d + 1;
  }

  std::vector<BlockEdge> edges;
  edges.reserve(static_cast<std::size_t>(mp));
  for (int g = 0; g < mp; ++g)
    edges.push_back({(market_rank[static_cast<std::size_t>(g)] - 1) / n,
                     (utility_rank[static_cast<std::size_t>(g)] - 1) / n, g});

  BlockMatcher matcher{k, &edges, {}, {}};
  for (int agent = 0; agent < n; ++agent) {
    for (int e : matcher.take_matching()) {
      int good = edges[static_cast<std::size_t>(e)].good;
      if (good < m) alloc.bundles[static_cast<std::size_t>(agent)].push_back(good);
    }
  }
  for (auto& b : alloc.bundles) std::sort(b.begin(), b.end());
  return alloc;
}

Allocation solve_two_agent_cut_choose(const Instance& inst, Trace* trace) {
  if (inst.n != 2) throw Error("cut-and-choose requires exactly 2 agents");
  if (inst.m > 6) throw Error("cut-and-choose is only guaranteed for up to 6 goods");
  if (!inst.utilities_all_additive())
    throw Error("cut-and-choose requires additive utilities");
  auto utilities = inst.additive_utilities();

  Ranking market = ranking_from_valuation(inst.market_for(0), "market");
  Ranking first = ranking_from_valuation(utilities[0], "u1");
  Allocation split = solve_identical_ranking(market, first, 2);

  // Prefix-count spread of the split along agent 2's ranking.
  Ranking second = ranking_from_valuation(utilities[1], "u2");
  const Bundle& a = split.bundles[0];
  const Bundle& b = split.bundles[1];
  bool all_ge = true, all_le = true;
  int e = 0;
  for (int pos = 0; pos < inst.m; ++pos) {
    int g = second.order[static_cast<std::size_t>(pos)];
    if (std::binary_search(a.begin(), a.end(), g)) ++e;
    if (std::binary_search(b.begin(), b.end(), g)) --e;
    if (e < -1) all_ge = false;
    if (e > 1) all_le = false;
  }

  Allocation out = Allocation::empty(2);
  if (all_ge) {
    out.bundles[1] = a;
    out.bundles[0] = b;
  } else if (all_le) {
    out.bundles[1] = b;
    out.bundles[0] = a;
  } else {
    throw Error("cut-and-choose invariant violated: both prefix bounds failed");
  }
  if (trace) {
    TraceStep step;
    step.kind = "choose";
    step.detail = all_ge ? "agent 2 takes the first bundle" : "agent 2 takes the second bundle";
    step.allocation = out;
    trace->add(std::move(step));
  }
  return out;
}

Allocation solve_ef1_sdef1(const Instance& inst, Trace* trace) {
  if (inst.heterogeneous_market())
    throw Error("per-block picking requires a single market valuation");
  Allocation alloc = Allocation::empty(inst.n);
  if (inst.m == 0) return alloc;

  Ranking market = ranking_from_valuation(inst.market_for(0), "market");
  BlockPartition blocks = block_partition(market, inst.n);

  for (int k = 0; k < blocks.num_blocks(); ++k) {
    eliminate_envy_cycles(inst.utilities, &alloc);
    EnvyGraph g = EnvyGraph::from(inst.utilities, alloc);
    std::vector<int> order = g.topological_order();

    std::vector<int> remaining = blocks.blocks[static_cast<std::size_t>(k)];
    const int picks = static_cast<int>(remaining.size());
    for (int t = 0; t < picks; ++t) {
      int agent = order[static_cast<std::size_t>(t)];
      const MonotoneValuation& u = inst.utilities[static_cast<std::size_t>(agent)];
      Bundle& mine = alloc.bundles[static_cast<std::size_t>(agent)];
      int best = remaining[0];
      Value best_gain = u.marginal(mine, best);
      for (std::size_t r = 1; r < remaining.size(); ++r) {
        Value gain = u.marginal(mine, remaining[r]);
        if (gain > best_gain) {
          best = remaining[r];
          best_gain = gain;
        }
      }
      mine.insert(std::lower_bound(mine.begin(), mine.end(), best), best);
      remaining.erase(std::find(remaining.begin(), remaining.end(), best));
      if (trace) {
        TraceStep step;
        step.kind = "pick";
        step.detail = "agent " + std::to_string(agent + 1) + " takes g" +
                      std::to_string(best + 1) + " from block " + std::to_string(k + 1);
        trace->add(std::move(step));
      }
    }
  }
  return alloc;
}

namespace {

// Detects an oracle that decreases on a superset among the evaluations seen.
class MonotonicityWatch {
 public:
  explicit MonotonicityWatch(bool enabled) : enabled_(enabled) {}

  void record(unsigned long long mask, const Value& v) {
    if (!enabled_) return;
    for (const auto& [other, val] : seen_) {
      if ((other & mask) == other && val > v)
        throw Error("utility oracle is not monotone: value decreased on a superset");
      if ((other & mask) == mask && v > val)
        throw Error("utility oracle is not monotone: value decreased on a superset");
    }
    seen_.emplace(mask, v);
  }

 private:
  bool enabled_;
  std::map<unsigned long long, Value> seen_;
};

unsigned long long bundle_mask(const Bundle& b) {
  unsigned long long mask = 0;
  for (int g : b) mask |= 1ULL << g;
  return mask;
}

}  // namespace

Allocation solve_mes(const Instance& inst, Trace* trace) {
  if (inst.heterogeneous_market())
    throw Error("minimal-envied-swap requires a single market valuation");
  Allocation alloc = Allocation::empty(inst.n);
  if (inst.m == 0) return alloc;

  Ranking market = ranking_from_valuation(inst.market_for(0), "market");
  BlockPartition blocks = block_partition(market, inst.n);
  std::vector<int> block_of(static_cast<std::size_t>(inst.m));
  for (int g = 0; g < inst.m; ++g) block_of[static_cast<std::size_t>(g)] = blocks.block_of(g);

  std::vector<MonotonicityWatch> watch(static_cast<std::size_t>(inst.n),
                                       MonotonicityWatch(inst.m <= 24));

  auto eval = [&](int agent, const Bundle& b) {
    Value v = inst.utilities[static_cast<std::size_t>(agent)].of(b);
    if (inst.m <= 24) watch[static_cast<std::size_t>(agent)].record(bundle_mask(b), v);
    return v;
  };

  std::vector<int> charity(static_cast<std::size_t>(inst.m));
  std::iota(charity.begin(), charity.end(), 0);

  std::vector<Value> own(static_cast<std::size_t>(inst.n), Value(0));

  const unsigned long long guard =
      16 + static_cast<unsigned long long>(inst.n) * (1ULL << std::min(inst.m, 24));
  unsigned long long iterations = 0;

  // Phase 1: replace bundles by minimal envied feasible charity subsets.
  // Scanning subsets by increasing size makes the first envied feasible
  // subset minimal: any envied strict subset would be feasible and smaller.
  for (;;) {
    if (++iterations > guard) throw Error("minimal-envied-swap iteration guard exceeded");
    bool swapped = false;
    const int c = static_cast<int>(charity.size());
    for (int size = 1; size <= c && !swapped; ++size) {
      std::vector<int> idx(static_cast<std::size_t>(size));
      std::iota(idx.begin(), idx.end(), 0);
      for (;;) {
        Bundle t;
        t.reserve(static_cast<std::size_t>(size));
        for (int id : idx) t.push_back(charity[static_cast<std::size_t>(id)]);
        bool feasible = true;
        {
          std::vector<int> per_block(static_cast<std::size_t>(blocks.num_blocks()), 0);
          for (int g : t)
            if (++per_block[static_cast<std::size_t>(block_of[static_cast<std::size_t>(g)])] > 1) {
              feasible = false;
              break;
            }
        }
        if (feasible) {
          int envier = -1;
          for (int i = 0; i < inst.n; ++i)
            if (own[static_cast<std::size_t>(i)] < eval(i, t)) {
              envier = i;
              break;
            }
          if (envier != -1) {
            Bundle old = alloc.bundles[static_cast<std::size_t>(envier)];
            alloc.bundles[static_cast<std::size_t>(envier)] = t;
            own[static_cast<std::size_t>(envier)] = eval(envier, t);
            for (int g : old)
              charity.insert(std::lower_bound(charity.begin(), charity.end(), g), g);
            for (int g : t)
              charity.erase(std::find(charity.begin(), charity.end(), g));
            if (trace) {
              TraceStep step;
              step.kind = "swap";
              step.detail = "agent " + std::to_string(envier + 1) +
                            " takes a minimal envied subset of size " + std::to_string(size);
              step.allocation = alloc;
              trace->add(std::move(step));
            }
            swapped = true;
            break;
          }
        }
        // next size-combination in lexicographic order
        int pos = size - 1;
        while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == c - size + pos) --pos;
        if (pos < 0) break;
        ++idx[static_cast<std::size_t>(pos)];
        for (int q = pos + 1; q < size; ++q)
          idx[static_cast<std::size_t>(q)] = idx[static_cast<std::size_t>(q - 1)] + 1;
      }
    }
    if (!swapped) break;
  }

  // Phase 2: hand out the rest, one per block per agent; always feasible.
  for (int k = 0; k < blocks.num_blocks(); ++k) {
    std::vector<bool> has_block_good(static_cast<std::size_t>(inst.n), false);
    for (int i = 0; i < inst.n; ++i)
      for (int g : alloc.bundles[static_cast<std::size_t>(i)])
        if (block_of[static_cast<std::size_t>(g)] == k) has_block_good[static_cast<std::size_t>(i)] = true;
    for (int g : blocks.blocks[static_cast<std::size_t>(k)]) {
      if (std::find(charity.begin(), charity.end(), g) == charity.end()) continue;
      int agent = -1;
      for (int i = 0; i < inst.n; ++i)
        if (!has_block_good[static_cast<std::size_t>(i)]) {
          agent = i;
          break;
        }
      if (agent == -1)
        throw Error("feasible completion failed; cardinality invariant broken");
      has_block_good[static_cast<std::size_t>(agent)] = true;
      Bundle& mine = alloc.bundles[static_cast<std::size_t>(agent)];
      mine.insert(std::lower_bound(mine.begin(), mine.end(), g), g);
      charity.erase(std::find(charity.begin(), charity.end(), g));
      if (trace) {
        TraceStep step;
        step.kind = "complete";
        step.detail = "agent " + std::to_string(agent + 1) + " receives g" +
                      std::to_string(g + 1) + " from charity";
        trace->add(std::move(step));
      }
    }
  }
  return alloc;
}

Allocation solve_two_agent_pairs(const Instance& inst, Trace* trace,
                                 const TwoAgentPairsOptions& opt) {
  if (inst.n != 2) throw Error("pair orientation search requires exactly 2 agents");
  if (inst.heterogeneous_market())
    throw Error("pair orientation search requires a single market valuation");
  if (inst.m > opt.max_goods)
    throw BoundExceeded("pair orientation search bound exceeded");
  Allocation alloc = Allocation::empty(2);
  if (inst.m == 0) return alloc;

  Ranking market = ranking_from_valuation(inst.market_for(0), "market");
  std::vector<int> order = market.order;
  const bool padded = inst.m % 2 == 1;
  if (padded) order.push_back(inst.m);  // dummy good, zero marginal utility

  // A dummy-aware view of the oracles: the dummy never changes a value.
  auto eval = [&](int agent, const Bundle& b) {
    Bundle real;
    real.reserve(b.size());
    for (int g : b)
      if (g < inst.m) real.push_back(g);
    return inst.utilities[static_cast<std::size_t>(agent)].of(real);
  };

  const int pairs = static_cast<int>(order.size()) / 2;
  std::vector<MonotoneValuation> view;
  for (int i = 0; i < 2; ++i)
    view.push_back(MonotoneValuation::generic(
        inst.m, [&eval, i](const Bundle& b) { return eval(i, b); }));

  for (unsigned long long bits = 0; bits < (1ULL << pairs); ++bits) {
    Allocation cand = Allocation::empty(2);
    for (int p = 0; p < pairs; ++p) {
      int first = order[static_cast<std::size_t>(2 * p)];
      int second = order[static_cast<std::size_t>(2 * p + 1)];
      int to_first = (bits >> p) & 1ULL ? 1 : 0;
      if (first < inst.m) cand.bundles[static_cast<std::size_t>(to_first)].push_back(first);
      if (second < inst.m) cand.bundles[static_cast<std::size_t>(1 - to_first)].push_back(second);
    }
    for (auto& b : cand.bundles) std::sort(b.begin(), b.end());
    if (check_ef1(view, cand).passed) {
      if (trace) {
        TraceStep step;
        step.kind = "orientation";
        step.detail = "orientation bits " + std::to_string(bits);
        step.allocation = cand;
        trace->add(std::move(step));
      }
      return cand;
    }
  }
  throw Error("no EF1 pair orientation found; this contradicts the existence guarantee");
}

}  // namespace fairdiv
