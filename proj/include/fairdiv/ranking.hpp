#pragma once

#include <string>
#include <vector>

#include "fairdiv/valuation.hpp"

namespace fairdiv {

// Strict total order over goods; order[0] is the best good. Ties in the
// source valuation are broken by ascending good index (the recorded rule),
// so any valuation consistent with the source induces the same guarantees.
struct Ranking {
  std::vector<int> order;
  std::string source;
  std::string tie_break = "index_asc";

  int num_goods() const { return static_cast<int>(order.size()); }
  // 1-based rank of a good (1 = best).
  int rank_of(int good) const;
};

Ranking ranking_from_valuation(const AdditiveValuation& val, std::string source = "");

// Consecutive groups of n goods along the ranking: block k holds the goods
// with ranks (k-1)*n+1 .. k*n. All blocks have n goods except possibly the
// last one.
struct BlockPartition {
  std::vector<Bundle> blocks;
  int block_of(int good) const;  // -1 when the good is not in any block

  int num_blocks() const { return static_cast<int>(blocks.size()); }
};

BlockPartition block_partition(const Ranking& ranking, int n);

}  // namespace fairdiv
