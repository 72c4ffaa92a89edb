#include <algorithm>

#include "fairdiv/algorithms.hpp"

namespace fairdiv {

EnvyGraph EnvyGraph::from(const std::vector<MonotoneValuation>& profile,
                          const Allocation& alloc) {
  EnvyGraph g;
  g.n = alloc.num_agents();
  g.envies.assign(static_cast<std::size_t>(g.n),
                  std::vector<bool>(static_cast<std::size_t>(g.n), false));
  std::vector<std::vector<Value>> val(static_cast<std::size_t>(g.n),
                                      std::vector<Value>(static_cast<std::size_t>(g.n)));
  for (int i = 0; i < g.n; ++i)
    for (int j = 0; j < g.n; ++j)
      val[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          profile[static_cast<std::size_t>(i)].of(alloc.bundles[static_cast<std::size_t>(j)]);
  for (int i = 0; i < g.n; ++i)
    for (int j = 0; j < g.n; ++j)
      if (i != j &&
          val[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] <
              val[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])
        g.envies[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = true;
  return g;
}

std::vector<int> EnvyGraph::find_cycle() const {
  std::vector<int> state(static_cast<std::size_t>(n), 0);  // 0 new, 1 open, 2 done
  std::vector<int> parent(static_cast<std::size_t>(n), -1);
  std::vector<int> cycle;

  // Iterative DFS keeping ascending neighbor order.
  for (int root = 0; root < n && cycle.empty(); ++root) {
    if (state[static_cast<std::size_t>(root)] != 0) continue;
    std::vector<std::pair<int, int>> stack;  // (vertex, next neighbor)
    stack.push_back({root, 0});
    state[static_cast<std::size_t>(root)] = 1;
    while (!stack.empty() && cycle.empty()) {
      auto& [v, next] = stack.back();
      bool advanced = false;
      for (int j = next; j < n; ++j) {
        if (!envies[static_cast<std::size_t>(v)][static_cast<std::size_t>(j)]) continue;
        next = j + 1;
        if (state[static_cast<std::size_t>(j)] == 1) {
          // Found a back edge v -> j; unwind the open path.
          cycle.push_back(j);
          for (int w = v; w != j; w = parent[static_cast<std::size_t>(w)]) cycle.push_back(w);
          std::reverse(cycle.begin(), cycle.end());
          advanced = true;
          break;
        }
        if (state[static_cast<std::size_t>(j)] == 0) {
          parent[static_cast<std::size_t>(j)] = v;
          state[static_cast<std::size_t>(j)] = 1;
          stack.push_back({j, 0});
          advanced = true;
          break;
        }
      }
      if (!advanced) {
        state[static_cast<std::size_t>(v)] = 2;
        stack.pop_back();
      }
    }
  }
  return cycle;
}

std::vector<int> EnvyGraph::topological_order() const {
  std::vector<int> indeg(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (envies[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])
        ++indeg[static_cast<std::size_t>(j)];
  std::vector<int> order;
  std::vector<bool> placed(static_cast<std::size_t>(n), false);
  while (static_cast<int>(order.size()) < n) {
    int pick = -1;
    for (int v = 0; v < n; ++v)
      if (!placed[static_cast<std::size_t>(v)] && indeg[static_cast<std::size_t>(v)] == 0) {
        pick = v;
        break;
      }
    if (pick == -1) throw Error("envy graph has a cycle; topological order undefined");
    placed[static_cast<std::size_t>(pick)] = true;
    order.push_back(pick);
    for (int j = 0; j < n; ++j)
      if (envies[static_cast<std::size_t>(pick)][static_cast<std::size_t>(j)])
        --indeg[static_cast<std::size_t>(j)];
  }
  return order;
}

void eliminate_envy_cycles(const std::vector<MonotoneValuation>& profile, Allocation* alloc) {
  for (;;) {
    EnvyGraph g = EnvyGraph::from(profile, *alloc);
    std::vector<int> cycle = g.find_cycle();
    if (cycle.empty()) return;
    // Rotate bundles along the cycle: each agent takes the bundle it envies.
    std::vector<Bundle> old;
    old.reserve(cycle.size());
    for (int v : cycle) old.push_back(alloc->bundles[static_cast<std::size_t>(v)]);
    for (std::size_t t = 0; t < cycle.size(); ++t)
      alloc->bundles[static_cast<std::size_t>(cycle[t])] = old[(t + 1) % cycle.size()];
  }
}

}  // namespace fairdiv
