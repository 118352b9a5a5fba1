#pragma once

#include <span>
#include <string>
#include <vector>

#include "graph.hpp"

namespace equitree {

// Recomputed from scratch against the graph; never trusts solver state.
// Valid means: everything colored, colors in range, every class a forest,
// every class within the ceil(n/k) cap. The spread (max size - min size)
// and the strict flag (spread <= 1) are reported but do not gate validity.
struct VerifyReport {
  int n = 0;
  int k = 0;
  long long cap = 0;
  bool all_colored = false;
  bool colors_in_range = false;
  bool cap_ok = false;
  std::vector<long long> class_sizes;
  std::vector<char> class_forest;
  long long spread = 0;
  bool strictly_equitable = false;
  bool valid = false;
  std::vector<std::string> reasons;
};

VerifyReport verify(const Graph& g, std::span<const int> colors, int k);

// Best-effort push toward spread <= 1 on an already valid coloring: while
// the spread is at least 2, route one witness chain from a maximum-size
// class to a minimum-size class and apply it. Stops when no chain exists.
struct RebalanceResult {
  std::vector<int> colors;
  long long moves = 0;
  bool reached_strict = false;
};

RebalanceResult rebalance_strict(const Graph& g, std::span<const int> colors, int k);

}  // namespace equitree
