#include "verifier.hpp"

#include <algorithm>

#include "coloring.hpp"
#include "common.hpp"
#include "layered.hpp"

namespace equitree {

VerifyReport verify(const Graph& g, std::span<const int> colors, int k) {
  VerifyReport rep;
  rep.n = g.n;
  rep.k = k;
  rep.cap = ceil_div(g.n, k);

  rep.all_colored = true;
  rep.colors_in_range = true;
  for (int v = 0; v < g.n; ++v) {
    if (colors[v] < 0) rep.all_colored = false;
    if (colors[v] < 0 || colors[v] >= k) rep.colors_in_range = false;
  }
  if (!rep.all_colored) rep.reasons.push_back("uncolored vertices");
  if (!rep.colors_in_range) rep.reasons.push_back("color out of range");

  std::vector<std::vector<int>> classes(k);
  for (int v = 0; v < g.n; ++v)
    if (colors[v] >= 0 && colors[v] < k) classes[colors[v]].push_back(v);

  rep.class_sizes.resize(k);
  rep.class_forest.resize(k);
  bool all_forests = true;
  rep.cap_ok = true;
  for (int c = 0; c < k; ++c) {
    rep.class_sizes[c] = static_cast<long long>(classes[c].size());
    rep.class_forest[c] = induces_forest(g, classes[c]) ? 1 : 0;
    if (!rep.class_forest[c]) {
      all_forests = false;
      rep.reasons.push_back("class " + std::to_string(c) + " contains a cycle");
    }
    if (rep.class_sizes[c] > rep.cap) {
      rep.cap_ok = false;
      rep.reasons.push_back("class " + std::to_string(c) + " exceeds the cap");
    }
  }

  long long mx = 0, mn = 0;
  if (k > 0) {
    mx = *std::max_element(rep.class_sizes.begin(), rep.class_sizes.end());
    mn = *std::min_element(rep.class_sizes.begin(), rep.class_sizes.end());
  }
  rep.spread = mx - mn;
  rep.strictly_equitable = rep.spread <= 1;
  rep.valid = rep.all_colored && rep.colors_in_range && all_forests && rep.cap_ok;
  return rep;
}

namespace {

// Load a complete forest coloring through place(): within each class, walk
// every tree from its lowest-id root so each vertex arrives with at most one
// neighbor already present.
void load_coloring(PartialColoring& state, const Graph& g, std::span<const int> colors) {
  std::vector<char> placed(g.n, 0);
  std::vector<int> queue;
  for (int v = 0; v < g.n; ++v) {
    if (placed[v]) continue;
    queue.clear();
    queue.push_back(v);
    placed[v] = 1;
    for (size_t head = 0; head < queue.size(); ++head) {
      int x = queue[head];
      state.place(x, colors[x]);
      for (int w : g.adj[x]) {
        if (!placed[w] && colors[w] == colors[x]) {
          placed[w] = 1;
          queue.push_back(w);
        }
      }
    }
  }
}

}  // namespace

RebalanceResult rebalance_strict(const Graph& g, std::span<const int> colors, int k) {
  PartialColoring state(g, k);
  state.set_debug_checks(false);
  load_coloring(state, g, colors);

  RebalanceResult out;
  const long long max_rounds = 4LL * g.n + 16;
  for (long long round = 0; round < max_rounds; ++round) {
    long long mx = 0, mn = state.class_size(0);
    for (int c = 0; c < k; ++c) {
      mx = std::max(mx, state.class_size(c));
      mn = std::min(mn, state.class_size(c));
    }
    if (mx - mn <= 1) break;

    std::vector<int> roots;
    for (int c = 0; c < k; ++c)
      if (state.class_size(c) == mn) roots.push_back(c);

    WitnessLayering lay;
    int hit = expand_witness_layering(state, roots, lay,
                                      [&](int cls) { return state.class_size(cls) == mx; });
    if (hit < 0) break;  // no chain from a largest class down to a smallest
    std::vector<CoveredClass> path = witness_path(lay, hit);
    switch_witnesses(state, path);
    out.moves += static_cast<long long>(path.size()) - 1;
  }

  out.colors = state.colors();
  long long mx = 0, mn = state.class_size(0);
  for (int c = 0; c < k; ++c) {
    mx = std::max(mx, state.class_size(c));
    mn = std::min(mn, state.class_size(c));
  }
  out.reached_strict = (mx - mn) <= 1;
  return out;
}

}  // namespace equitree
