#pragma once

#include <cstdint>
#include <string>

#include "graph.hpp"

namespace equitree {

// splitmix64: state advances by the golden-gamma constant, output is the
// finalizing mixer. Chosen so instances reproduce bit-for-bit anywhere from
// just the seed.
struct SplitMix64 {
  uint64_t state;
  explicit SplitMix64(uint64_t seed) : state(seed) {}
  uint64_t next() {
    uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }
  // uniform in [0, bound), bound >= 1, debiased by rejection
  uint64_t below(uint64_t bound);
};

enum class BackDegreeDist { Fixed, UniformUpTo };

struct GenSpec {
  int n = 0;
  int d = 0;        // back-degree budget per vertex
  int dmax = 0;     // hard cap on any vertex degree
  uint64_t seed = 0;
  BackDegreeDist dist = BackDegreeDist::Fixed;
};

// Build vertices 0..n-1 in order; vertex i draws b = min(i, sample) earlier
// neighbors uniformly without replacement from the earlier vertices whose
// degree is still below dmax (all of them when fewer than b remain). The
// insertion order is a degenerate ordering, so the result is d-degenerate
// with max degree at most dmax.
Graph generate(const GenSpec& spec);

// Same graph as edge-list text with a descriptive comment header.
std::string generate_edge_list(const GenSpec& spec);

}  // namespace equitree
