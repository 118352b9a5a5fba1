#include "run.hpp"

#include <chrono>

#include <json.hpp>

#include "coloring.hpp"
#include "small_t.hpp"

namespace equitree {

int RunRecord::status() const {
  if (!success) return 3;
  if (!report.valid) return 2;
  return 0;
}

RunRecord run_solve(const Graph& g, int k, const SolveOptions& opt) {
  auto t0 = std::chrono::steady_clock::now();

  RunRecord rec;
  DegeneracyOrdering ord = degeneracy_ordering(g);
  rec.plan = select_params(g.n, ord.d, g.max_degree(), k);

  PartialColoring state(g, k);
  if (opt.debug_checks) state.set_debug_checks(*opt.debug_checks);

  const bool layered =
      rec.plan.branch == Branch::Layered ||
      (rec.plan.branch == Branch::BestEffort && opt.force_layered && g.n > 0);

  LayerPlan layer_plan;
  if (layered) {
    if (!rec.plan.base3)
      rec.plan.base3 = base3_decompose(std::max(1LL, rec.plan.t), std::max(8, rec.plan.alpha));
    rec.failure = solve_layered(g, rec.plan, state, &layer_plan, &rec.layered_stats);
  } else {
    rec.failure = solve_small_t(g, ord, rec.plan, state);
  }
  rec.success = !rec.failure.has_value();
  rec.colors = state.colors();
  rec.report = verify(g, rec.colors, k);

  if (layered && opt.diagnostics) rec.diagnostics = run_diagnostics(g, rec.plan, layer_plan);

  if (opt.rebalance && rec.success && rec.report.valid) {
    RebalanceResult rb = rebalance_strict(g, rec.colors, k);
    rec.colors = std::move(rb.colors);
    rec.report = verify(g, rec.colors, k);
    rec.rebalanced = true;
  }

  auto t1 = std::chrono::steady_clock::now();
  rec.millis = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
  return rec;
}

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json ratio_json(const Ratio& r) { return ordered_json::array({r.num, r.den}); }

ordered_json check_json(const IneqCheck& c) {
  ordered_json j;
  j["name"] = c.name;
  j["relation"] = c.relation;
  j["pass"] = c.pass;
  j["skipped"] = c.skipped;
  j["lhs"] = ratio_json(c.lhs);
  j["rhs"] = ratio_json(c.rhs);
  return j;
}

ordered_json diagnostics_json(const DiagnosticsReport& d, const LayeredStats& stats) {
  ordered_json j;
  j["violations"] = d.violations;
  j["max_witness_classes"] = stats.max_witness_classes;
  j["witness_switches"] = stats.switches;
  ordered_json layers = ordered_json::array();
  for (const auto& ld : d.layers) {
    ordered_json l;
    l["layer"] = ld.layer;
    ordered_json checks = ordered_json::array();
    for (const auto& c : ld.checks) checks.push_back(check_json(c));
    l["checks"] = checks;
    layers.push_back(l);
  }
  j["layers"] = layers;
  ordered_json global = ordered_json::array();
  for (const auto& c : d.global) global.push_back(check_json(c));
  j["global"] = global;
  return j;
}

}  // namespace

std::string run_record_json(const RunRecord& rec) {
  ordered_json j;
  j["n"] = rec.plan.n;
  j["k"] = rec.plan.k;
  j["t"] = rec.plan.t;
  j["alpha"] = rec.plan.alpha;
  j["beta"] = rec.plan.beta;
  j["branch"] = to_string(rec.plan.branch);
  j["color"] = rec.colors;
  j["class_sizes"] = rec.report.class_sizes;
  j["valid"] = rec.report.valid;
  j["spread"] = rec.report.spread;
  if (rec.diagnostics)
    j["diagnostics"] = diagnostics_json(*rec.diagnostics, rec.layered_stats);
  else
    j["diagnostics"] = nullptr;
  if (rec.failure) {
    ordered_json e;
    e["kind"] = to_string(rec.failure->kind);
    e["vertex"] = rec.failure->vertex;
    e["layer"] = rec.failure->layer;
    e["witness_classes"] = rec.failure->witness_classes;
    e["detail"] = rec.failure->detail;
    j["error"] = e;
  } else {
    j["error"] = nullptr;
  }
  return j.dump(2) + "\n";
}

std::string verify_report_json(const VerifyReport& rep) {
  ordered_json j;
  j["n"] = rep.n;
  j["k"] = rep.k;
  j["cap"] = rep.cap;
  j["all_colored"] = rep.all_colored;
  j["colors_in_range"] = rep.colors_in_range;
  j["class_sizes"] = rep.class_sizes;
  ordered_json forests = ordered_json::array();
  for (char f : rep.class_forest) forests.push_back(f != 0);
  j["class_forest"] = forests;
  j["cap_ok"] = rep.cap_ok;
  j["spread"] = rep.spread;
  j["strictly_equitable"] = rep.strictly_equitable;
  j["valid"] = rep.valid;
  j["reasons"] = rep.reasons;
  return j.dump(2) + "\n";
}

}  // namespace equitree
