#pragma once

#include <optional>
#include <string>
#include <vector>

#include "graph.hpp"
#include "layered.hpp"
#include "params.hpp"
#include "verifier.hpp"

namespace equitree {

struct SolveOptions {
  bool diagnostics = false;    // audit the layer construction (layered runs)
  bool rebalance = false;      // push a valid coloring toward spread <= 1
  bool force_layered = false;  // take the layered path even off-plan
  std::optional<bool> debug_checks;  // default: EQUITREE_DEBUG_CHECKS env
};

// One end-to-end run: ordering, parameter selection, branch dispatch,
// unconditional re-verification, optional diagnostics and rebalance.
struct RunRecord {
  SolvePlan plan;
  bool success = false;   // solver claimed a complete coloring
  std::optional<SolveFailure> failure;
  std::vector<int> colors;  // -1 for uncolored slots on failure
  VerifyReport report;
  std::optional<DiagnosticsReport> diagnostics;
  LayeredStats layered_stats;
  bool rebalanced = false;
  long long millis = 0;

  // 0 valid, 2 claimed success but failed verification, 3 solver failure
  int status() const;
};

RunRecord run_solve(const Graph& g, int k, const SolveOptions& opt);

// Canonical JSON for a run; identical inputs yield identical bytes.
std::string run_record_json(const RunRecord& rec);

std::string verify_report_json(const VerifyReport& rep);

}  // namespace equitree
