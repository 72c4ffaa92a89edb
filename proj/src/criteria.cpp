#include "fairdiv/criteria.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <thread>

namespace fairdiv {

namespace {

void require_alpha_range(const Value& alpha) {
  if (alpha < 0 || alpha > 1) throw Error("alpha must lie in [0,1]");
}

Bundle without(const Bundle& b, int good) {
  Bundle out;
  out.reserve(b.size() - 1);
  for (int g : b)
    if (g != good) out.push_back(g);
  return out;
}

}  // namespace

FairnessReport check_ef1(const std::vector<MonotoneValuation>& profile,
                         const Allocation& alloc, const Value& alpha) {
  require_alpha_range(alpha);
  const int n = alloc.num_agents();
  if (static_cast<int>(profile.size()) != n)
    throw Error("profile length does not match allocation");
  FairnessReport rep;
  rep.criterion = "ef1";
  if (alpha != 1) rep.alpha = alpha;
  for (int i = 0; i < n; ++i) {
    const Bundle& mine = alloc.bundles[static_cast<std::size_t>(i)];
    const Value own = profile[static_cast<std::size_t>(i)].of(mine);
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const Bundle& other = alloc.bundles[static_cast<std::size_t>(j)];
      if (other.empty()) continue;
      // Best single removal: no structure assumed, try every good.
      bool ok = false;
      Value best_rhs;
      int best_good = -1;
      for (int g : other) {
        Value rhs = alpha * profile[static_cast<std::size_t>(i)].of(without(other, g));
        if (own >= rhs) {
          ok = true;
          break;
        }
        if (best_good == -1 || rhs < best_rhs) {
          best_rhs = rhs;
          best_good = g;
        }
      }
      if (!ok) {
        rep.passed = false;
        rep.witnesses.push_back({i, j, best_good, own, best_rhs});
      }
    }
  }
  return rep;
}

FairnessReport check_ef1_additive(const std::vector<AdditiveValuation>& profile,
                                  const Allocation& alloc, const Value& alpha) {
  std::vector<MonotoneValuation> mono;
  mono.reserve(profile.size());
  for (const auto& v : profile) mono.push_back(MonotoneValuation::additive(v.per_good()));
  return check_ef1(mono, alloc, alpha);
}

namespace {

// |{g in bundle : val(g) >= t}|
int count_at_least(const AdditiveValuation& val, const Bundle& bundle, const Value& t) {
  int c = 0;
  for (int g : bundle)
    if (val.of(g) >= t) ++c;
  return c;
}

}  // namespace

FairnessReport check_sd_ef1(const std::vector<AdditiveValuation>& profile,
                            const Allocation& alloc) {
  const int n = alloc.num_agents();
  if (static_cast<int>(profile.size()) != n)
    throw Error("profile length does not match allocation");
  FairnessReport rep;
  rep.criterion = "sd_ef1";
  for (int i = 0; i < n; ++i) {
    const AdditiveValuation& u = profile[static_cast<std::size_t>(i)];
    // Counts only change at the evaluating agent's distinct value levels.
    std::vector<Value> levels(u.per_good());
    std::sort(levels.begin(), levels.end(), std::greater<Value>());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
    const Bundle& mine = alloc.bundles[static_cast<std::size_t>(i)];
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const Bundle& other = alloc.bundles[static_cast<std::size_t>(j)];
      if (other.empty()) continue;
      // A single removal fixes every threshold iff the worst count deficit
      // is at most 1 (remove any good at or above the highest deficit level).
      for (const Value& t : levels) {
        int ci = count_at_least(u, mine, t);
        int cj = count_at_least(u, other, t);
        if (cj - ci >= 2) {
          rep.passed = false;
          int threshold_good = -1;
          for (int g = 0; g < u.num_goods(); ++g)
            if (u.of(g) == t) {
              threshold_good = g;
              break;
            }
          rep.witnesses.push_back({i, j, threshold_good, Value(ci), Value(cj - 1)});
          break;
        }
      }
    }
  }
  return rep;
}

FairnessReport check_sd_ef1_market_blocks(const Ranking& market_ranking, int n,
                                          const Allocation& alloc) {
  FairnessReport rep;
  rep.criterion = "sd_ef1_blocks";
  rep.side = "market";
  BlockPartition bp = block_partition(market_ranking, n);
  for (int i = 0; i < alloc.num_agents(); ++i) {
    const Bundle& mine = alloc.bundles[static_cast<std::size_t>(i)];
    for (int k = 0; k < bp.num_blocks(); ++k) {
      const Bundle& blk = bp.blocks[static_cast<std::size_t>(k)];
      std::vector<int> held;
      for (int g : mine)
        if (std::binary_search(blk.begin(), blk.end(), g)) held.push_back(g);
      if (held.size() > 1) {
        rep.passed = false;
        rep.witnesses.push_back(
            {i, i, held[1], Value(static_cast<long>(held.size())), Value(1)});
      }
    }
  }
  return rep;
}

FairnessReport check_efx_alpha(const std::vector<AdditiveValuation>& profile,
                               const Allocation& alloc, const Value& alpha) {
  require_alpha_range(alpha);
  const int n = alloc.num_agents();
  if (static_cast<int>(profile.size()) != n)
    throw Error("profile length does not match allocation");
  FairnessReport rep;
  rep.criterion = "efx";
  rep.alpha = alpha;
  for (int i = 0; i < n; ++i) {
    const AdditiveValuation& u = profile[static_cast<std::size_t>(i)];
    const Value own = u.of_bundle(alloc.bundles[static_cast<std::size_t>(i)]);
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const Bundle& other = alloc.bundles[static_cast<std::size_t>(j)];
      if (other.empty()) continue;
      // The binding removal is the lowest-valued good.
      const Value total = u.of_bundle(other);
      int worst_good = other[0];
      for (int g : other)
        if (u.of(g) < u.of(worst_good)) worst_good = g;
      Value rhs = alpha * (total - u.of(worst_good));
      if (own < rhs) {
        rep.passed = false;
        rep.witnesses.push_back({i, j, worst_good, own, rhs});
      }
    }
  }
  return rep;
}

FairnessReport check_eq1(const std::vector<AdditiveValuation>& market_profile,
                         const Allocation& alloc) {
  const int n = alloc.num_agents();
  if (static_cast<int>(market_profile.size()) != n)
    throw Error("market profile length does not match allocation");
  FairnessReport rep;
  rep.criterion = "eq1";
  for (int i = 0; i < n; ++i) {
    const Value own =
        market_profile[static_cast<std::size_t>(i)].of_bundle(alloc.bundles[static_cast<std::size_t>(i)]);
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const Bundle& other = alloc.bundles[static_cast<std::size_t>(j)];
      if (other.empty()) continue;
      const AdditiveValuation& vj = market_profile[static_cast<std::size_t>(j)];
      const Value total = vj.of_bundle(other);
      int best_good = other[0];
      for (int g : other)
        if (vj.of(g) > vj.of(best_good)) best_good = g;
      Value rhs = total - vj.of(best_good);
      if (own < rhs) {
        rep.passed = false;
        rep.witnesses.push_back({i, j, best_good, own, rhs});
      }
    }
  }
  return rep;
}

namespace {

// Decodes allocation index `idx` (good 0 most significant) into bundles.
void decode_allocation(unsigned long long idx, int n, int m, Allocation* out) {
  for (auto& b : out->bundles) b.clear();
  std::vector<int> digits(static_cast<std::size_t>(m));
  for (int g = m - 1; g >= 0; --g) {
    digits[static_cast<std::size_t>(g)] = static_cast<int>(idx % static_cast<unsigned>(n));
    idx /= static_cast<unsigned>(n);
  }
  for (int g = 0; g < m; ++g)
    out->bundles[static_cast<std::size_t>(digits[static_cast<std::size_t>(g)])].push_back(g);
}

}  // namespace

FairnessReport check_po_bruteforce(const std::vector<MonotoneValuation>& profile,
                                   const Allocation& alloc, const PoOptions& opt) {
  const int n = alloc.num_agents();
  if (static_cast<int>(profile.size()) != n)
    throw Error("profile length does not match allocation");
  int m = 0;
  for (const auto& b : alloc.bundles) m += static_cast<int>(b.size());
  FairnessReport rep;
  rep.criterion = "po";

  unsigned long long total = 1;
  for (int g = 0; g < m; ++g) {
    total *= static_cast<unsigned>(n);
    if (total > opt.enumeration_bound)
      throw BoundExceeded("po brute force: n^m exceeds enumeration bound");
  }

  std::vector<Value> current(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    current[static_cast<std::size_t>(i)] =
        profile[static_cast<std::size_t>(i)].of(alloc.bundles[static_cast<std::size_t>(i)]);

  const int workers = std::max(1, opt.workers);
  std::atomic<unsigned long long> best_found{total};  // lowest dominating index

  auto scan = [&](unsigned long long lo, unsigned long long hi) {
    Allocation cand = Allocation::empty(n);
    for (unsigned long long idx = lo; idx < hi; ++idx) {
      if (idx >= best_found.load(std::memory_order_relaxed)) return;
      decode_allocation(idx, n, m, &cand);
      bool weakly_better = true;
      bool strictly = false;
      for (int i = 0; i < n && weakly_better; ++i) {
        Value vi = profile[static_cast<std::size_t>(i)].of(cand.bundles[static_cast<std::size_t>(i)]);
        if (vi < current[static_cast<std::size_t>(i)])
          weakly_better = false;
        else if (vi > current[static_cast<std::size_t>(i)])
          strictly = true;
      }
      if (weakly_better && strictly) {
        unsigned long long prev = best_found.load(std::memory_order_relaxed);
        while (idx < prev &&
               !best_found.compare_exchange_weak(prev, idx, std::memory_order_relaxed)) {
        }
        return;
      }
    }
  };

  if (workers == 1 || total < 1024) {
    scan(0, total);
  } else {
    std::vector<std::thread> pool;
    unsigned long long chunk = (total + static_cast<unsigned>(workers) - 1) / static_cast<unsigned>(workers);
    for (int w = 0; w < workers; ++w) {
      unsigned long long lo = chunk * static_cast<unsigned>(w);
      unsigned long long hi = std::min(total, lo + chunk);
      if (lo < hi) pool.emplace_back(scan, lo, hi);
    }
    for (auto& t : pool) t.join();
  }

  // The chunked scan may overshoot within a chunk; rescan the prefix up to the
  // recorded candidate so the reported witness is the lexicographic first.
  unsigned long long found = best_found.load();
  if (found < total) {
    Allocation cand = Allocation::empty(n);
    for (unsigned long long idx = 0; idx <= found; ++idx) {
      decode_allocation(idx, n, m, &cand);
      bool weakly_better = true;
      bool strictly = false;
      for (int i = 0; i < n && weakly_better; ++i) {
        Value vi = profile[static_cast<std::size_t>(i)].of(cand.bundles[static_cast<std::size_t>(i)]);
        if (vi < current[static_cast<std::size_t>(i)])
          weakly_better = false;
        else if (vi > current[static_cast<std::size_t>(i)])
          strictly = true;
      }
      if (weakly_better && strictly) {
        rep.passed = false;
        rep.dominating = cand;
        for (int i = 0; i < n; ++i) {
          Value vi = profile[static_cast<std::size_t>(i)].of(cand.bundles[static_cast<std::size_t>(i)]);
          if (vi > current[static_cast<std::size_t>(i)]) {
            rep.witnesses.push_back({i, i, std::nullopt, current[static_cast<std::size_t>(i)], vi});
            break;
          }
        }
        break;
      }
    }
  }
  return rep;
}

bool is_fpo_two_agents(const AdditiveValuation& u1, const AdditiveValuation& u2,
                       const Allocation& alloc) {
  if (alloc.num_agents() != 2) throw Error("is_fpo_two_agents requires exactly 2 bundles");
  // A weighted-welfare maximizer with weights (lambda, 1) assigns g to agent 1
  // when lambda*u1(g) > u2(g) and to agent 2 when <. fPO iff a lambda > 0 fits.
  bool lower_set = false, upper_set = false;
  Value lower, upper;
  for (int g : alloc.bundles[0]) {
    if (u1.of(g) == 0) {
      if (u2.of(g) > 0) return false;  // free transfer to agent 2
      continue;
    }
    Value r = u2.of(g) / u1.of(g);
    if (!lower_set || r > lower) {
      lower = r;
      lower_set = true;
    }
  }
  for (int g : alloc.bundles[1]) {
    if (u2.of(g) == 0 && u1.of(g) > 0) return false;  // free transfer to agent 1
    if (u1.of(g) == 0) continue;                      // no upper constraint
    Value r = u2.of(g) / u1.of(g);
    if (!upper_set || r < upper) {
      upper = r;
      upper_set = true;
    }
  }
  if (!upper_set) return true;          // lambda can be arbitrarily large
  if (upper == 0) return false;         // would force lambda <= 0
  if (!lower_set) return true;          // any lambda in (0, upper]
  return lower <= upper;
}

FairnessReport check_fisher_equilibrium(const Instance& inst, const Allocation& alloc,
                                        const std::vector<Value>& prices) {
  if (static_cast<int>(prices.size()) != inst.m)
    throw Error("price vector length does not match good count");
  for (const Value& p : prices)
    if (p <= 0) throw Error("prices must be strictly positive");
  if (!inst.utilities_all_additive())
    throw Error("fisher equilibrium check requires additive utilities");

  FairnessReport rep;
  rep.criterion = "fisher_equilibrium";
  // Completeness is part of the equilibrium definition.
  std::vector<int> owner(static_cast<std::size_t>(inst.m), -1);
  for (int i = 0; i < alloc.num_agents(); ++i)
    for (int g : alloc.bundles[static_cast<std::size_t>(i)])
      if (g >= 0 && g < inst.m) owner[static_cast<std::size_t>(g)] = i;
  for (int g = 0; g < inst.m; ++g)
    if (owner[static_cast<std::size_t>(g)] == -1) {
      rep.passed = false;
      rep.witnesses.push_back({-1, -1, g, Value(0), Value(0)});
    }
  if (!rep.passed) return rep;

  if (inst.n == 1) return rep;  // complete single-agent allocation, trivially fPO

  auto utilities = inst.additive_utilities();
  for (int i = 0; i < inst.n; ++i) {
    const AdditiveValuation& u = utilities[static_cast<std::size_t>(i)];
    Value mbb = 0;
    for (int h = 0; h < inst.m; ++h)
      mbb = std::max(mbb, Value(u.of(h) / prices[static_cast<std::size_t>(h)]));
    for (int g : alloc.bundles[static_cast<std::size_t>(i)]) {
      Value bb = u.of(g) / prices[static_cast<std::size_t>(g)];
      if (bb < mbb) {
        rep.passed = false;
        rep.witnesses.push_back({i, i, g, bb, mbb});
      }
    }
  }
  return rep;
}

bool check_balanced(const Allocation& alloc, int n, int m) {
  if (alloc.num_agents() != n) return false;
  const int lo = m / n;
  const int hi = (m + n - 1) / n;
  for (const auto& b : alloc.bundles) {
    int s = static_cast<int>(b.size());
    if (s < lo || s > hi) return false;
  }
  return true;
}

FairnessReport check_balanced_report(const Allocation& alloc, int n, int m) {
  FairnessReport rep;
  rep.criterion = "balanced";
  const int lo = m / n;
  const int hi = (m + n - 1) / n;
  for (int i = 0; i < alloc.num_agents(); ++i) {
    int s = static_cast<int>(alloc.bundles[static_cast<std::size_t>(i)].size());
    if (s < lo || s > hi) {
      rep.passed = false;
      rep.witnesses.push_back({i, i, std::nullopt, Value(s), Value(s < lo ? lo : hi)});
    }
  }
  return rep;
}

FairnessReport check_mms_alpha(const std::vector<AdditiveValuation>& profile,
                               const Allocation& alloc, const Value& alpha,
                               int max_goods) {
  require_alpha_range(alpha);
  const int n = alloc.num_agents();
  if (static_cast<int>(profile.size()) != n)
    throw Error("profile length does not match allocation");
  FairnessReport rep;
  rep.criterion = "mms";
  rep.alpha = alpha;
  for (int i = 0; i < n; ++i) {
    MmsResult mms = compute_mms(profile[static_cast<std::size_t>(i)], n, max_goods);
    Value own = profile[static_cast<std::size_t>(i)].of_bundle(alloc.bundles[static_cast<std::size_t>(i)]);
    Value rhs = alpha * mms.mu;
    if (own < rhs) {
      rep.passed = false;
      rep.witnesses.push_back({i, i, std::nullopt, own, rhs});
    }
  }
  return rep;
}

}  // namespace fairdiv
