#pragma once

#include <optional>

#include "coloring.hpp"
#include "common.hpp"
#include "params.hpp"

namespace equitree {

// Color the whole graph in the degeneracy order, keeping every class a forest
// of at most t vertices. Direct placement goes to a class with at most one
// neighbor of the current vertex and room to spare (smallest size, ties by
// lowest class id). When all such classes are full, one donor moves out of a
// full class into a class with >= 2 neighbors of the current vertex that
// still has room, and the vertex takes the donor's slot.
//
// Edgeless graphs short-circuit to a round-robin fill.
//
// On success the state is a complete coloring; a stall is reported as
// NoMoveAvailable (only reachable outside the guaranteed parameter range).
struct SmallTStats {
  long long direct = 0;  // vertices placed without repair
  long long swaps = 0;   // donor moves
};

std::optional<SolveFailure> solve_small_t(const Graph& g, const DegeneracyOrdering& ord,
                                          const SolvePlan& plan, PartialColoring& state,
                                          SmallTStats* stats = nullptr);

}  // namespace equitree
