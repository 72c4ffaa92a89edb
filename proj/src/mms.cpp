#include <algorithm>

#include "fairdiv/criteria.hpp"

namespace fairdiv {

namespace {

// best[k][mask] = max over ways to split `mask` into k bundles of the
// minimum bundle value. The bundle containing the lowest set bit is pinned
// to kill the bundle-order symmetry; empty bundles fall out of the base
// case best[k][0] = 0.
struct MmsDp {
  int m;
  int n;
  const std::vector<Value>* vals;
  std::vector<Value> subset_sum;
  std::vector<std::vector<Value>> best;
  std::vector<std::vector<unsigned>> choice;

  void run() {
    const unsigned full = (m == 0) ? 0u : ((1u << m) - 1);
    subset_sum.assign(full + 1, Value(0));
    for (unsigned mask = 1; mask <= full && full != 0; ++mask) {
      unsigned low = mask & (~mask + 1);
      int g = __builtin_ctz(mask);
      subset_sum[mask] = subset_sum[mask ^ low] + (*vals)[static_cast<std::size_t>(g)];
    }
    best.assign(static_cast<std::size_t>(n) + 1, {});
    choice.assign(static_cast<std::size_t>(n) + 1, {});
    best[1] = subset_sum;
    choice[1].assign(full + 1, 0);
    for (unsigned mask = 0; mask <= full; ++mask) choice[1][mask] = mask;
    for (int k = 2; k <= n; ++k) {
      best[static_cast<std::size_t>(k)].assign(full + 1, Value(0));
      choice[static_cast<std::size_t>(k)].assign(full + 1, 0);
      for (unsigned mask = 1; mask <= full; ++mask) {
        unsigned low = mask & (~mask + 1);
        Value best_v = -1;
        unsigned best_t = 0;
        // T ranges over submasks of mask containing the lowest bit.
        for (unsigned t = mask;; t = (t - 1) & mask) {
          if (t & low) {
            Value v = std::min(subset_sum[t],
                               best[static_cast<std::size_t>(k - 1)][mask ^ t]);
            if (best_v < 0 || v > best_v) {
              best_v = v;
              best_t = t;
            }
          }
          if (t == 0) break;
        }
        best[static_cast<std::size_t>(k)][mask] = best_v;
        choice[static_cast<std::size_t>(k)][mask] = best_t;
      }
    }
  }
};

}  // namespace

MmsResult compute_mms(const AdditiveValuation& val, int n, int max_goods) {
  if (n < 1) throw Error("agent count must be at least 1");
  const int m = val.num_goods();
  if (m > max_goods)
    throw BoundExceeded("mms enumeration bound exceeded (m = " + std::to_string(m) +
                        " > " + std::to_string(max_goods) + ")");
  MmsDp dp;
  dp.m = m;
  dp.n = n;
  dp.vals = &val.per_good();
  dp.run();

  MmsResult res;
  res.partition.assign(static_cast<std::size_t>(n), {});
  unsigned mask = (m == 0) ? 0u : ((1u << m) - 1);
  res.mu = dp.best[static_cast<std::size_t>(n)][mask];
  for (int k = n; k >= 1; --k) {
    unsigned t = dp.choice[static_cast<std::size_t>(k)][mask];
    for (int g = 0; g < m; ++g)
      if (t & (1u << g)) res.partition[static_cast<std::size_t>(k - 1)].push_back(g);
    mask ^= t;
  }
  return res;
}

MmsProfile compute_mms_profile(const std::vector<AdditiveValuation>& profile, int n,
                               int max_goods) {
  MmsProfile out;
  for (const auto& val : profile) {
    MmsResult r = compute_mms(val, n, max_goods);
    out.mu.push_back(r.mu);
    out.partitions.push_back(std::move(r.partition));
  }
  return out;
}

}  // namespace fairdiv
