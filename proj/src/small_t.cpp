#include "small_t.hpp"

#include <algorithm>
#include <string>

namespace equitree {

namespace {

// full re-verification of the running invariant: every class a forest with
// at most cap vertices (debug builds only)
void check_prefix(const PartialColoring& state, long long cap) {
  for (int c = 0; c < state.k(); ++c) {
    if (state.class_size(c) > cap)
      throw StateError("small_t debug: class " + std::to_string(c) + " over cap");
    if (!induces_forest(state.graph(), state.members(c)))
      throw StateError("small_t debug: class " + std::to_string(c) + " not a forest");
  }
}

}  // namespace

std::optional<SolveFailure> solve_small_t(const Graph& g, const DegeneracyOrdering& ord,
                                          const SolvePlan& plan, PartialColoring& state,
                                          SmallTStats* stats) {
  const int k = state.k();
  const long long cap = plan.t;

  if (g.m == 0) {
    // round-robin fill, no neighbor logic needed
    for (int i = 0; i < g.n; ++i) state.place(ord.order[i], i % k);
    if (stats != nullptr) stats->direct += g.n;
    return std::nullopt;
  }

  std::vector<int> cnt(k, 0);
  std::vector<int> touched;
  touched.reserve(16);

  for (int idx = 0; idx < g.n; ++idx) {
    const int v = ord.order[idx];

    for (int c : touched) cnt[c] = 0;
    touched.clear();
    int colored_nbrs = 0;
    for (int w : g.adj[v]) {
      int c = state.color_of(w);
      if (c < 0) continue;
      ++colored_nbrs;
      if (cnt[c] == 0) touched.push_back(c);
      ++cnt[c];
    }

    // direct placement: at most one neighbor, room left; smallest class
    // first, ties by lowest id
    int best = -1;
    long long best_size = cap;
    for (int c = 0; c < k; ++c) {
      if (cnt[c] >= 2) continue;
      long long sz = state.class_size(c);
      if (sz < best_size) {
        best_size = sz;
        best = c;
      }
    }
    if (best >= 0) {
      state.place(v, best);
      if (stats != nullptr) ++stats->direct;
      if (state.debug_checks()) check_prefix(state, cap);
      continue;
    }

    // every class with <= 1 neighbor of v is full; classes seeing >= 2
    // neighbors are few, so one of them still has room
    int s2_count = 0;
    int receiver = -1;
    for (int c : touched)
      if (cnt[c] >= 2) ++s2_count;
    if (s2_count > std::max(0, colored_nbrs / 2))
      throw StateError("small_t: class neighbor accounting broken");
    for (int c = 0; c < k; ++c) {
      if (cnt[c] >= 2 && state.class_size(c) <= cap - 1) {
        receiver = c;
        break;
      }
    }
    if (receiver < 0)
      throw StateError("small_t: all classes full with " + std::to_string(state.colored_count()) +
                       " of " + std::to_string(g.n) + " vertices colored");

    // donor scan over the full classes in (class id, member order): the
    // first vertex with at most one neighbor in the receiver moves there,
    // freeing its slot for v
    bool placed = false;
    for (int c = 0; c < k && !placed; ++c) {
      if (cnt[c] >= 2) continue;
      for (int w : state.members(c)) {
        if (state.neighbor_count(w, receiver) <= 1) {
          state.move(w, receiver);
          state.place(v, c);
          if (stats != nullptr) ++stats->swaps;
          placed = true;
          break;
        }
      }
    }
    if (!placed) {
      SolveFailure f;
      f.kind = FailKind::NoMoveAvailable;
      f.vertex = v;
      f.detail = "no donor with <= 1 neighbor in class " + std::to_string(receiver);
      return f;
    }
    if (state.debug_checks()) check_prefix(state, cap);
  }
  return std::nullopt;
}

}  // namespace equitree
