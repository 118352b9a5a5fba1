#pragma once

#include <stdexcept>
#include <vector>

#include "graph.hpp"

namespace equitree {

struct StateError : std::logic_error {
  using std::logic_error::logic_error;
};
struct FrozenVertexError : StateError {
  using StateError::StateError;
};

// Partial coloring of a fixed graph with k classes. Every mutation goes
// through place/move, which enforce the one-neighbor rule that keeps each
// class a forest: a vertex may enter a class only while it has at most one
// neighbor there. Class member lists use swap-removal, so member order is a
// deterministic function of the call sequence.
//
// With debug checks on (EQUITREE_DEBUG_CHECKS=1 or set_debug_checks), every
// mutation re-verifies the touched classes from scratch.
class PartialColoring {
 public:
  PartialColoring(const Graph& g, int k);

  int k() const { return k_; }
  const Graph& graph() const { return *g_; }

  int color_of(int v) const { return color_[v]; }
  bool is_colored(int v) const { return color_[v] >= 0; }
  int colored_count() const { return colored_; }

  const std::vector<int>& members(int c) const { return members_[c]; }
  long long class_size(int c) const { return static_cast<long long>(members_[c].size()); }

  bool frozen(int v) const { return frozen_[v] != 0; }
  void freeze(int v);

  // neighbors of u currently colored c
  int neighbor_count(int u, int c) const;

  // color an uncolored vertex; u must have at most one neighbor in c
  void place(int u, int c);

  // recolor x into class `to`; x must be colored, unfrozen, and have at
  // most one neighbor in the target class
  void move(int x, int to);

  std::vector<int> colors() const { return color_; }
  std::vector<long long> class_sizes() const;

  void set_debug_checks(bool on) { debug_checks_ = on; }
  bool debug_checks() const { return debug_checks_; }

 private:
  void check_class_is_forest(int c) const;

  const Graph* g_;
  int k_;
  int colored_ = 0;
  std::vector<int> color_;         // -1 while uncolored
  std::vector<int> pos_in_class_;
  std::vector<std::vector<int>> members_;
  std::vector<char> frozen_;
  bool debug_checks_ = false;
};

bool debug_checks_env();

}  // namespace equitree
