#include "fairdiv/ranking.hpp"

#include <algorithm>
#include <numeric>

namespace fairdiv {

int Ranking::rank_of(int good) const {
  for (int pos = 0; pos < num_goods(); ++pos)
    if (order[static_cast<std::size_t>(pos)] == good) return pos + 1;
  throw Error("good not present in ranking");
}

Ranking ranking_from_valuation(const AdditiveValuation& val, std::string source) {
  Ranking r;
  r.source = std::move(source);
  r.order.resize(static_cast<std::size_t>(val.num_goods()));
  std::iota(r.order.begin(), r.order.end(), 0);
  std::sort(r.order.begin(), r.order.end(), [&](int a, int b) {
    if (val.of(a) != val.of(b)) return val.of(a) > val.of(b);
    return a < b;
  });
  return r;
}

int BlockPartition::block_of(int good) const {
  for (int k = 0; k < num_blocks(); ++k) {
    const Bundle& blk = blocks[static_cast<std::size_t>(k)];
    if (std::binary_search(blk.begin(), blk.end(), good)) return k;
  }
  return -1;
}

BlockPartition block_partition(const Ranking& ranking, int n) {
  if (n < 1) throw Error("agent count must be at least 1");
  BlockPartition bp;
  const int m = ranking.num_goods();
  for (int start = 0; start < m; start += n) {
    Bundle blk(ranking.order.begin() + start,
               ranking.order.begin() + std::min(start + n, m));
    std::sort(blk.begin(), blk.end());
    bp.blocks.push_back(std::move(blk));
  }
  return bp;
}

}  // namespace fairdiv
