#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "coloring.hpp"
#include "common.hpp"
#include "params.hpp"

namespace equitree {

// Vertex partition into stages+1 layers, built before any coloring starts.
// Layer i <= stages holds seeds[i] (extracted by maximum residual degree,
// ties by lowest id) and anchored[i] (vertices that accumulated at least
// (2*alpha-4)*d neighbors inside the growing prefix; the scan restarts from
// vertex 0 after each insertion, so the set is closed when the layer ends).
// The final layer is everything left, ascending by id.
struct LayerPlan {
  int stages = 0;
  std::vector<std::vector<int>> seeds;     // [1..stages], index 0 unused
  std::vector<std::vector<int>> anchored;  // [1..stages]
  std::vector<int> remainder;              // layer stages+1
  std::vector<long long> prefix_size;      // [0..stages]
  std::vector<int> residual_max_degree;    // [1..stages]: max degree outside prefix i

  std::vector<int> layer_vertices(int i) const;  // selection order
};

Outcome<LayerPlan> build_layer_plan(const Graph& g, const SolvePlan& plan);

// One covered class of a witness layering. Classes below the active cap are
// roots (parent -1); any other class enters when one of its unfrozen members
// (the witness) has at most one neighbor in an already covered class (the
// parent). Moving each witness into its parent frees a slot in the class at
// the top of the chain without growing anything past the cap.
struct CoveredClass {
  int cls;
  int parent;   // -1 for roots
  int witness;  // -1 for roots
};

struct WitnessLayering {
  std::vector<CoveredClass> covered;  // discovery order
  std::vector<int> index_of;          // class id -> index in covered, -1 if absent
};

// Full layering: roots are the classes with size < cap, expansion runs until
// closure. Frozen vertices never serve as witnesses.
WitnessLayering build_witness_layering(const PartialColoring& state, long long cap);

// Chain from a covered class back to its root, top first.
std::vector<CoveredClass> witness_path(const WitnessLayering& lay, int covered_index);

// Apply a chain bottom-up: the witness next to the root moves first, each
// class loses its witness before receiving the one from above. Afterwards
// the top class has a free slot and one fewer member.
void switch_witnesses(PartialColoring& state, const std::vector<CoveredClass>& path);

struct LayeredStats {
  long long max_witness_classes = 0;  // largest layering needed by any placement
  long long switches = 0;             // witness moves performed
};

// Color layer 1 in a degeneracy order of its induced subgraph: each vertex
// goes to a class with at most one neighbor and size below caps[1]
// (smallest size, ties by lowest id).
std::optional<SolveFailure> color_layer_one(const Graph& g, const SolvePlan& plan,
                                            const LayerPlan& lp, PartialColoring& state);

// Color layer i (2 <= i <= stages+1) with the previous layers frozen: each
// vertex routes through the witness layering under caps[i] (t for the last
// layer) and lands in the first covered class with at most one of its
// neighbors. The layer's vertices are frozen afterwards.
std::optional<SolveFailure> color_layer_i(const Graph& g, const SolvePlan& plan,
                                          const LayerPlan& lp, int i, PartialColoring& state,
                                          LayeredStats* stats);

std::optional<SolveFailure> solve_layered(const Graph& g, const SolvePlan& plan,
                                          PartialColoring& state, LayerPlan* out_plan,
                                          LayeredStats* stats);

// One checked inequality, sides as exact fractions.
struct Ratio {
  long long num = 0;
  long long den = 1;
};

struct IneqCheck {
  std::string name;
  std::string relation;  // "==", "<", "<=", ">="
  bool pass = true;
  bool skipped = false;
  Ratio lhs, rhs;
};

struct LayerDiagnostics {
  int layer = 0;
  std::vector<IneqCheck> checks;
};

// Post-hoc audit of a finished plan, exact integer arithmetic throughout:
// per layer the prefix bookkeeping identity, the edge-count bounds and the
// selection-sum bounds; globally the residual-degree sum bound and the
// cap-ratio ladder (consecutive caps at least doubling above the branch
// threshold).
struct DiagnosticsReport {
  std::vector<LayerDiagnostics> layers;
  std::vector<IneqCheck> global;
  int violations = 0;
};

DiagnosticsReport run_diagnostics(const Graph& g, const SolvePlan& plan, const LayerPlan& lp);

// Shared expansion core: roots seed the layering in the given order; every
// newly covered class is tested with `stop` and expansion halts early on a
// hit, returning its covered index. -1 means the layering closed first.
// Halting early never changes the discovery prefix, so the hit is the same
// class a full build followed by a scan in discovery order would select.
int expand_witness_layering(const PartialColoring& state, const std::vector<int>& roots,
                            WitnessLayering& out, const std::function<bool(int)>& stop);

}  // namespace equitree
