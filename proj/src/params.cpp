#include "params.hpp"

#include <algorithm>
#include <stdexcept>

namespace equitree {

const char* to_string(FailKind k) {
  switch (k) {
    case FailKind::NoMoveAvailable: return "no_move_available";
    case FailKind::NotEnoughVertices: return "not_enough_vertices";
    case FailKind::NoClassAvailable: return "no_class_available";
    case FailKind::NoAugmentingClass: return "no_augmenting_class";
    case FailKind::EmptyDeficitSet: return "empty_deficit_set";
  }
  return "unknown";
}

const char* to_string(Branch b) {
  switch (b) {
    case Branch::SmallT: return "small_t";
    case Branch::Layered: return "layered";
    case Branch::BestEffort: return "best_effort";
  }
  return "unknown";
}

const std::array<ParamPair, 12>& param_table() {
  static const std::array<ParamPair, 12> table = {{{8, 56},
                                                   {9, 26},
                                                   {10, 18},
                                                   {11, 15},
                                                   {12, 13},
                                                   {13, 12},
                                                   {14, 11},
                                                   {15, 10},
                                                   {17, 9},
                                                   {20, 8},
                                                   {27, 7},
                                                   {52, 6}}};
  return table;
}

Base3Plan base3_decompose(long long t, int alpha) {
  if (t < 1) throw std::invalid_argument("base3_decompose: t must be >= 1");
  if (alpha < 8) throw std::invalid_argument("base3_decompose: alpha must be >= 8");

  Base3Plan p;
  p.t = t;
  p.alpha = alpha;

  std::vector<int> rev;
  for (long long x = t; x > 0; x /= 3) rev.push_back(static_cast<int>(x % 3));
  int digits = static_cast<int>(rev.size());
  p.stages = digits - 1;

  p.digits.assign(digits + 1, 0);
  for (int i = 1; i <= digits; ++i) p.digits[i] = rev[digits - i];

  p.quota.assign(digits + 1, 0);
  for (int i = 1; i <= digits; ++i) p.quota[i] = 3 * p.quota[i - 1] + p.digits[i];
  // quota climbs to exactly t
  if (p.quota[digits] != t) throw std::logic_error("base3_decompose: bad ladder");

  const long long num = 2LL * alpha - 3;
  const long long den = 2LL * alpha - 5;
  p.caps.assign(digits + 1, 0);
  for (int i = 1; i <= p.stages; ++i) p.caps[i] = ceil_div(num * p.quota[i], den);
  p.caps[digits] = t;
  return p;
}

SolvePlan select_params(long long n, int d, int max_deg, int k) {
  if (k < 1) throw std::invalid_argument("select_params: k must be >= 1");
  if (n < 0 || d < 0 || max_deg < 0) throw std::invalid_argument("select_params: negative input");

  SolvePlan plan;
  plan.n = n;
  plan.k = k;
  plan.d = d;
  plan.max_deg = max_deg;
  plan.t = ceil_div(n, k);

  plan.guaranteed = false;
  for (const auto& pair : param_table()) {
    if (static_cast<long long>(k) >= static_cast<long long>(pair.alpha) * d &&
        n >= static_cast<long long>(pair.beta) * max_deg) {
      plan.alpha = pair.alpha;
      plan.beta = pair.beta;
      plan.guaranteed = true;
      break;
    }
  }

  if (!plan.guaranteed) {
    plan.alpha = static_cast<int>(std::max(8LL, static_cast<long long>(k) / std::max(d, 1)));
    plan.beta = static_cast<int>(n / std::max(max_deg, 1));
    plan.branch = Branch::BestEffort;
    return plan;
  }

  const long long lhs = static_cast<long long>(plan.alpha) * plan.t;
  const long long rhs = (2LL * plan.alpha - 1) * plan.beta;
  if (d == 0 || lhs <= rhs) {
    plan.branch = Branch::SmallT;
  } else {
    plan.branch = Branch::Layered;
    plan.base3 = base3_decompose(plan.t, plan.alpha);
  }
  return plan;
}

}  // namespace equitree
