#pragma once

#include <vector>

#include "graph.hpp"

namespace equitree {

enum class OracleMode { CapOnly, Strict };

// CapOnly: every class a forest of at most ceil(n/k) vertices.
// Strict: additionally the class sizes differ by at most one, i.e. exactly
// n mod k classes of size ceil(n/k) when k does not divide n.
enum class OracleStatus { Found, NotExist, BudgetExceeded };

struct OracleResult {
  OracleStatus status = OracleStatus::NotExist;
  std::vector<int> colors;  // filled on Found
  long long nodes = 0;      // decisions explored
};

// Exhaustive backtracking over vertices in id order, acyclicity maintained
// by a union-find with undo. Symmetry breaking: a vertex may open at most
// one new class, the lowest unused id. Intended for graphs of at most 20
// vertices.
OracleResult oracle_solve(const Graph& g, int k, OracleMode mode,
                          long long node_limit = 50'000'000);

struct MinKResult {
  OracleStatus status = OracleStatus::NotExist;
  int k = -1;
  long long nodes = 0;
};

// Smallest k admitting a coloring; scans k = 1, 2, ... (k = n always works).
MinKResult oracle_min_k(const Graph& g, OracleMode mode, long long node_limit = 50'000'000);

}  // namespace equitree
