#pragma once

#include <array>
#include <optional>
#include <vector>

#include "common.hpp"

namespace equitree {

struct ParamPair {
  int alpha;
  int beta;
};

// Guarantee table, ascending alpha / descending beta. A pair applies to an
// instance when k >= alpha*d and n >= beta*max_degree.
const std::array<ParamPair, 12>& param_table();

enum class Branch { SmallT, Layered, BestEffort };
const char* to_string(Branch b);

// Base-3 ladder for the per-class size cap t: digits of t most significant
// first (leading digit nonzero), quota[i] = 3*quota[i-1] + digit[i] climbing
// from 0 to t, and per-stage class caps
//   caps[i] = ceil((2a-3)*quota[i] / (2a-5))   for 1 <= i <= stages,
//   caps[stages+1] = t.
struct Base3Plan {
  long long t = 0;
  int alpha = 0;
  int stages = 0;                 // number of seeded layers; digits = stages+1
  std::vector<int> digits;        // [1..stages+1], index 0 unused
  std::vector<long long> quota;   // [0..stages+1]
  std::vector<long long> caps;    // [1..stages+1], index 0 unused
};

Base3Plan base3_decompose(long long t, int alpha);

struct SolvePlan {
  long long n = 0;
  int k = 0;
  int d = 0;
  int max_deg = 0;
  long long t = 0;        // ceil(n/k), the per-class cap
  int alpha = 0;
  int beta = 0;
  bool guaranteed = false;  // false: best-effort fallback parameters
  Branch branch = Branch::SmallT;
  std::optional<Base3Plan> base3;  // present iff branch == Layered
};

// Pick the first applicable table pair; with none the plan falls back to
// best-effort parameters alpha' = max(8, k/max(d,1)), beta' = n/max(Delta,1).
// Branch: small-t iff alpha*t <= (2*alpha-1)*beta, layered otherwise, and
// edgeless graphs (d = 0) always take the small-t path.
SolvePlan select_params(long long n, int d, int max_deg, int k);

}  // namespace equitree
