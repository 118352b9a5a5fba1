#pragma once

#include <numeric>
#include <utility>
#include <vector>

#include "generator.hpp"
#include "graph.hpp"

namespace equitree::testing {

inline Graph path_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return graph_from_edges(n, e);
}

inline Graph cycle_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return graph_from_edges(n, e);
}

inline Graph complete_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return graph_from_edges(n, e);
}

inline Graph star_graph(int leaves) {
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return graph_from_edges(leaves + 1, e);
}

// G(n, p)-style graph from a seeded stream; p as numerator over 100.
inline Graph random_graph(int n, int p_percent, uint64_t seed) {
  SplitMix64 rng{seed};
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng.below(100) < static_cast<uint64_t>(p_percent)) e.emplace_back(i, j);
  return graph_from_edges(n, e);
}

// Independent core-number computation: repeatedly strip a minimum-degree
// vertex, track the running maximum of those minima. Quadratic on purpose.
inline int naive_core_number(const Graph& g) {
  std::vector<int> deg(g.n);
  std::vector<char> alive(g.n, 1);
  for (int v = 0; v < g.n; ++v) deg[v] = g.degree(v);
  int core = 0;
  for (int step = 0; step < g.n; ++step) {
    int best = -1;
    for (int v = 0; v < g.n; ++v)
      if (alive[v] && (best < 0 || deg[v] < deg[best])) best = v;
    core = std::max(core, deg[best]);
    alive[best] = 0;
    for (int w : g.adj[best])
      if (alive[w]) --deg[w];
  }
  return core;
}

// Forest check by iterative DFS over the induced subgraph, independent of
// the union-find used in the library.
inline bool dfs_is_forest(const Graph& g, const std::vector<int>& verts) {
  std::vector<int> local(g.n, -1);
  for (size_t i = 0; i < verts.size(); ++i) local[verts[i]] = static_cast<int>(i);
  std::vector<int> state(verts.size(), 0);  // 0 unseen, 1 done
  std::vector<std::pair<int, int>> stack;   // (local vertex, local parent)
  for (size_t s = 0; s < verts.size(); ++s) {
    if (state[s] != 0) continue;
    stack.emplace_back(static_cast<int>(s), -1);
    state[s] = 1;
    while (!stack.empty()) {
      auto [u, parent] = stack.back();
      stack.pop_back();
      bool skipped_parent_edge = false;
      for (int w : g.adj[verts[u]]) {
        int lw = local[w];
        if (lw < 0) continue;
        if (lw == parent && !skipped_parent_edge) {
          skipped_parent_edge = true;
          continue;
        }
        if (state[lw] != 0) return false;
        state[lw] = 1;
        stack.emplace_back(lw, u);
      }
    }
  }
  return true;
}

}  // namespace equitree::testing
