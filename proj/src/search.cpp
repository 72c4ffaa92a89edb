#include <algorithm>
#include <cstdint>
#include <unordered_set>

#include "fairdiv/oracle.hpp"

namespace fairdiv {

namespace {

// Integer-arithmetic scans: grid values are small integers, so exact int64
// sums suffice and the instances are reconstructed as rationals only on a
// hit. Allocation sets are bitmasks over the lexicographic enumeration.

struct SmallAllocs {
  int n, m;
  std::vector<std::vector<std::vector<int>>> bundles;  // allocation -> agent -> goods

  SmallAllocs(int n_, int m_) : n(n_), m(m_) {
    std::uint64_t total = 1;
    for (int g = 0; g < m; ++g) total *= static_cast<unsigned>(n);
    // Allocation sets live in 64-bit masks.
    if (total > 64) throw BoundExceeded("open-problem scan requires n^m <= 64");
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      std::vector<std::vector<int>> b(static_cast<std::size_t>(n));
      std::uint64_t x = idx;
      for (int g = m - 1; g >= 0; --g) {
        b[x % static_cast<unsigned>(n)].push_back(g);
        x /= static_cast<unsigned>(n);
      }
      for (auto& bb : b) std::sort(bb.begin(), bb.end());
      bundles.push_back(std::move(b));
    }
  }

  std::size_t count() const { return bundles.size(); }
};

long bundle_sum(const std::vector<long>& vals, const std::vector<int>& bundle) {
  long s = 0;
  for (int g : bundle) s += vals[static_cast<std::size_t>(g)];
  return s;
}

// EF1 over an integer profile (one value vector per agent).
bool ef1_int(const std::vector<std::vector<long>>& profile,
             const std::vector<std::vector<int>>& bundles) {
  const int n = static_cast<int>(bundles.size());
  for (int i = 0; i < n; ++i) {
    long own = bundle_sum(profile[static_cast<std::size_t>(i)], bundles[static_cast<std::size_t>(i)]);
    for (int j = 0; j < n; ++j) {
      if (i == j || bundles[static_cast<std::size_t>(j)].empty()) continue;
      long total = 0, best = 0;
      for (int g : bundles[static_cast<std::size_t>(j)]) {
        long v = profile[static_cast<std::size_t>(i)][static_cast<std::size_t>(g)];
        total += v;
        best = std::max(best, v);
      }
      if (own < total - best) return false;
    }
  }
  return true;
}

// SD-EF1 from weak orders alone: level[g] is the agent's preference level
// (0 = best). The pair condition is a count deficit of at most 1 at every
// level threshold.
bool sd_ef1_levels(const std::vector<std::vector<int>>& levels,
                   const std::vector<std::vector<int>>& bundles, int num_levels) {
  const int n = static_cast<int>(bundles.size());
  for (int i = 0; i < n; ++i) {
    const std::vector<int>& lv = levels[static_cast<std::size_t>(i)];
    for (int j = 0; j < n; ++j) {
      if (i == j || bundles[static_cast<std::size_t>(j)].empty()) continue;
      for (int t = 0; t < num_levels; ++t) {
        int ci = 0, cj = 0;
        for (int g : bundles[static_cast<std::size_t>(i)])
          if (lv[static_cast<std::size_t>(g)] <= t) ++ci;
        for (int g : bundles[static_cast<std::size_t>(j)])
          if (lv[static_cast<std::size_t>(g)] <= t) ++cj;
        if (cj - ci >= 2) return false;
      }
    }
  }
  return true;
}

// Integral PO within the scan universe: no allocation weakly improves all
// agents with one strict improvement.
bool po_int(const std::vector<std::vector<long>>& profile, const SmallAllocs& allocs,
            std::size_t idx) {
  const int n = allocs.n;
  std::vector<long> cur(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    cur[static_cast<std::size_t>(i)] =
        bundle_sum(profile[static_cast<std::size_t>(i)], allocs.bundles[idx][static_cast<std::size_t>(i)]);
  for (std::size_t other = 0; other < allocs.count(); ++other) {
    bool weak = true, strict = false;
    for (int i = 0; i < n && weak; ++i) {
      long v = bundle_sum(profile[static_cast<std::size_t>(i)],
                          allocs.bundles[other][static_cast<std::size_t>(i)]);
      if (v < cur[static_cast<std::size_t>(i)]) weak = false;
      if (v > cur[static_cast<std::size_t>(i)]) strict = true;
    }
    if (weak && strict) return false;
  }
  return true;
}

// All surjections of m goods onto 1..num_levels levels, i.e. weak orders.
void enumerate_weak_orders(int m, int max_levels,
                           const std::function<void(const std::vector<int>&, int)>& fn) {
  for (int levels = 1; levels <= max_levels; ++levels) {
    std::vector<int> assign(static_cast<std::size_t>(m), 0);
    for (;;) {
      std::vector<bool> seen(static_cast<std::size_t>(levels), false);
      for (int g = 0; g < m; ++g) seen[static_cast<std::size_t>(assign[static_cast<std::size_t>(g)])] = true;
      bool surjective = std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
      if (surjective) fn(assign, levels);
      int pos = m - 1;
      while (pos >= 0 && assign[static_cast<std::size_t>(pos)] == levels - 1) {
        assign[static_cast<std::size_t>(pos)] = 0;
        --pos;
      }
      if (pos < 0) break;
      ++assign[static_cast<std::size_t>(pos)];
    }
  }
}

Instance instance_from_int(const std::vector<std::vector<long>>& utilities,
                           const std::vector<long>& market) {
  Instance inst;
  inst.n = static_cast<int>(utilities.size());
  inst.m = static_cast<int>(market.size());
  for (const auto& u : utilities) {
    std::vector<Value> vals;
    vals.reserve(u.size());
    for (long x : u) vals.emplace_back(x);
    inst.utilities.push_back(MonotoneValuation::additive(std::move(vals)));
  }
  std::vector<Value> mv;
  mv.reserve(market.size());
  for (long x : market) mv.emplace_back(x);
  inst.market.emplace_back(std::move(mv));
  return inst;
}

void enumerate_grids(int m, long k, const std::function<void(const std::vector<long>&)>& fn) {
  std::vector<long> vals(static_cast<std::size_t>(m), 1);
  for (;;) {
    fn(vals);
    int pos = m - 1;
    while (pos >= 0 && vals[static_cast<std::size_t>(pos)] == k) {
      vals[static_cast<std::size_t>(pos)] = 1;
      --pos;
    }
    if (pos < 0) break;
    ++vals[static_cast<std::size_t>(pos)];
  }
}

// SD-EF1(agents) + EF1(market). SD-EF1 only sees each agent's weak order, so
// the scan ranges over weak-order pairs (with at most grid_max levels, the
// realizability limit) times market grids, and intersects allocation masks.
OpenProblemResult search_op_3_4(const OpenProblemSearch& opt) {
  OpenProblemResult res;
  if (opt.n != 2) throw Error("op_3_4 scan supports n = 2");
  SmallAllocs allocs(opt.n, opt.m);

  const int max_levels = static_cast<int>(std::min<long>(opt.m, opt.grid_max));
  std::vector<std::vector<int>> orders;
  enumerate_weak_orders(opt.m, max_levels,
                        [&](const std::vector<int>& lv, int) { orders.push_back(lv); });

  // Market side: distinct EF1 masks with one representative grid vector.
  std::vector<std::pair<std::uint64_t, std::vector<long>>> market_masks;
  std::unordered_set<std::uint64_t> seen;
  enumerate_grids(opt.m, opt.grid_max, [&](const std::vector<long>& v) {
    std::vector<std::vector<long>> prof(static_cast<std::size_t>(opt.n), v);
    std::uint64_t mask = 0;
    for (std::size_t a = 0; a < allocs.count(); ++a)
      if (ef1_int(prof, allocs.bundles[a])) mask |= 1ULL << a;
    if (seen.insert(mask).second) market_masks.push_back({mask, v});
  });

  for (std::size_t o1 = 0; o1 < orders.size(); ++o1) {
    for (std::size_t o2 = 0; o2 < orders.size(); ++o2) {
      ++res.classes_scanned;
      int lmax = 0;
      for (int g = 0; g < opt.m; ++g)
        lmax = std::max({lmax, orders[o1][static_cast<std::size_t>(g)],
                         orders[o2][static_cast<std::size_t>(g)]});
      std::vector<std::vector<int>> levels{orders[o1], orders[o2]};
      std::uint64_t sd_mask = 0;
      for (std::size_t a = 0; a < allocs.count(); ++a)
        if (sd_ef1_levels(levels, allocs.bundles[a], lmax + 1)) sd_mask |= 1ULL << a;
      for (const auto& [ef1_mask, market_vals] : market_masks) {
        if ((sd_mask & ef1_mask) == 0) {
          // Realize the weak orders with descending grid values.
          std::vector<std::vector<long>> utilities;
          for (const auto& lv : levels) {
            std::vector<long> u(static_cast<std::size_t>(opt.m));
            for (int g = 0; g < opt.m; ++g)
              u[static_cast<std::size_t>(g)] = opt.grid_max - lv[static_cast<std::size_t>(g)];
            utilities.push_back(std::move(u));
          }
          res.counterexample = instance_from_int(utilities, market_vals);
          res.detail = "no allocation is SD-EF1 for the agents and EF1 for the market";
          return res;
        }
      }
    }
  }
  res.detail = "no counterexample over " + std::to_string(res.classes_scanned) +
               " weak-order pairs times " + std::to_string(market_masks.size()) +
               " distinct market EF1 patterns";
  return res;
}

// EF1 + PO (agents) + EF1 (market), full grid scan over both profiles.
OpenProblemResult search_op_4_2(const OpenProblemSearch& opt) {
  OpenProblemResult res;
  if (opt.n != 2) throw Error("op_4_2 scan supports n = 2");
  SmallAllocs allocs(opt.n, opt.m);

  std::vector<std::pair<std::uint64_t, std::vector<long>>> market_masks;
  std::unordered_set<std::uint64_t> seen;
  enumerate_grids(opt.m, opt.grid_max, [&](const std::vector<long>& v) {
    std::vector<std::vector<long>> prof(static_cast<std::size_t>(opt.n), v);
    std::uint64_t mask = 0;
    for (std::size_t a = 0; a < allocs.count(); ++a)
      if (ef1_int(prof, allocs.bundles[a])) mask |= 1ULL << a;
    if (seen.insert(mask).second) market_masks.push_back({mask, v});
  });

  std::optional<OpenProblemResult> hit;
  std::vector<std::vector<long>> utilities(2);
  enumerate_grids(opt.m, opt.grid_max, [&](const std::vector<long>& u1) {
    if (hit) return;
    utilities[0] = u1;
    enumerate_grids(opt.m, opt.grid_max, [&](const std::vector<long>& u2) {
      if (hit) return;
      utilities[1] = u2;
      ++res.classes_scanned;
      std::uint64_t good_mask = 0;
      for (std::size_t a = 0; a < allocs.count(); ++a)
        if (ef1_int(utilities, allocs.bundles[a]) && po_int(utilities, allocs, a))
          good_mask |= 1ULL << a;
      for (const auto& [ef1_mask, market_vals] : market_masks) {
        if ((good_mask & ef1_mask) == 0) {
          OpenProblemResult found;
          found.classes_scanned = res.classes_scanned;
          found.counterexample = instance_from_int(utilities, market_vals);
          found.detail = "no allocation is EF1+PO for the agents and EF1 for the market";
          hit = found;
          return;
        }
      }
    });
  });
  if (hit) return *hit;
  res.detail = "no counterexample over " + std::to_string(res.classes_scanned) +
               " utility grids times " + std::to_string(market_masks.size()) +
               " distinct market EF1 patterns";
  return res;
}

}  // namespace

OpenProblemResult search_open_problem(const std::string& id, const OpenProblemSearch& opt) {
  if (opt.m < 1 || opt.m > 6) throw Error("open-problem scan supports 1 <= m <= 6");
  if (opt.grid_max < 1) throw Error("grid max must be at least 1");
  if (id == "op_3_4") return search_op_3_4(opt);
  if (id == "op_4_2") return search_op_4_2(opt);
  throw Error("unknown open problem id '" + id + "'");
}

}  // namespace fairdiv
