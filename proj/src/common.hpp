#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace equitree {

// ceiling of a/b for a >= 0, b >= 1
inline long long ceil_div(long long a, long long b) { return (a + b - 1) / b; }

enum class FailKind {
  NoMoveAvailable,    // direct placement and single-donor swap both exhausted
  NotEnoughVertices,  // layer plan ran out of vertices while seeding a layer
  NoClassAvailable,   // first layer: no class with room and at most one neighbor
  NoAugmentingClass,  // witness layering closed without a class usable for u
  EmptyDeficitSet,    // no class below the active cap, nowhere to route a witness
};

const char* to_string(FailKind k);

// Structured solver failure. These are values, not exceptions: a best-effort
// run reports where it got stuck and the caller decides what to do with it.
struct SolveFailure {
  FailKind kind;
  int vertex = -1;               // vertex being placed when the solver stalled
  int layer = -1;                // layer index for plan-construction failures
  long long witness_classes = -1;  // classes covered by the layering at failure
  std::string detail;
};

template <class T>
struct Outcome {
  std::optional<T> value;
  std::optional<SolveFailure> failure;
  bool ok() const { return value.has_value(); }
};

}  // namespace equitree
