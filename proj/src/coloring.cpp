#include "coloring.hpp"

#include <cstdlib>
#include <string>

namespace equitree {

bool debug_checks_env() {
  const char* v = std::getenv("EQUITREE_DEBUG_CHECKS");
  return v != nullptr && std::string(v) == "1";
}

PartialColoring::PartialColoring(const Graph& g, int k)
    : g_(&g),
      k_(k),
      color_(g.n, -1),
      pos_in_class_(g.n, -1),
      members_(k),
      frozen_(g.n, 0),
      debug_checks_(debug_checks_env()) {
  if (k < 1) throw StateError("PartialColoring: k must be >= 1");
}

void PartialColoring::freeze(int v) {
  if (!is_colored(v)) throw StateError("freeze: vertex " + std::to_string(v) + " uncolored");
  frozen_[v] = 1;
}

int PartialColoring::neighbor_count(int u, int c) const {
  int count = 0;
  for (int w : g_->adj[u]) count += (color_[w] == c) ? 1 : 0;
  return count;
}

void PartialColoring::place(int u, int c) {
  if (c < 0 || c >= k_) throw StateError("place: class out of range");
  if (is_colored(u)) throw StateError("place: vertex " + std::to_string(u) + " already colored");
  if (neighbor_count(u, c) > 1)
    throw StateError("place: vertex " + std::to_string(u) + " has 2+ neighbors in class " +
                     std::to_string(c));
  color_[u] = c;
  pos_in_class_[u] = static_cast<int>(members_[c].size());
  members_[c].push_back(u);
  ++colored_;
  if (debug_checks_) check_class_is_forest(c);
}

void PartialColoring::move(int x, int to) {
  if (to < 0 || to >= k_) throw StateError("move: class out of range");
  if (!is_colored(x)) throw StateError("move: vertex " + std::to_string(x) + " uncolored");
  if (frozen_[x]) throw FrozenVertexError("move: vertex " + std::to_string(x) + " frozen");
  int from = color_[x];
  if (from == to) throw StateError("move: vertex already in target class");
  if (neighbor_count(x, to) > 1)
    throw StateError("move: vertex " + std::to_string(x) + " has 2+ neighbors in class " +
                     std::to_string(to));

  // swap-removal from the old member list
  int p = pos_in_class_[x];
  int last = members_[from].back();
  members_[from][p] = last;
  pos_in_class_[last] = p;
  members_[from].pop_back();

  color_[x] = to;
  pos_in_class_[x] = static_cast<int>(members_[to].size());
  members_[to].push_back(x);
  if (debug_checks_) {
    check_class_is_forest(from);
    check_class_is_forest(to);
  }
}

std::vector<long long> PartialColoring::class_sizes() const {
  std::vector<long long> out(k_);
  for (int c = 0; c < k_; ++c) out[c] = class_size(c);
  return out;
}

void PartialColoring::check_class_is_forest(int c) const {
  if (!induces_forest(*g_, members_[c]))
    throw StateError("debug check: class " + std::to_string(c) + " is not a forest");
  for (int v : members_[c])
    if (color_[v] != c) throw StateError("debug check: member list inconsistent");
}

}  // namespace equitree
