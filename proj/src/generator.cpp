#include "generator.hpp"

#include <algorithm>
#include <stdexcept>

namespace equitree {

uint64_t SplitMix64::below(uint64_t bound) {
  // rejection sampling on the low bits of a 128-bit product (Lemire)
  uint64_t x = next();
  __uint128_t m = static_cast<__uint128_t>(x) * bound;
  uint64_t lo = static_cast<uint64_t>(m);
  if (lo < bound) {
    uint64_t threshold = (0 - bound) % bound;
    while (lo < threshold) {
      x = next();
      m = static_cast<__uint128_t>(x) * bound;
      lo = static_cast<uint64_t>(m);
    }
  }
  return static_cast<uint64_t>(m >> 64);
}

Graph generate(const GenSpec& spec) {
  if (spec.n < 0 || spec.d < 0 || spec.dmax < 0)
    throw std::invalid_argument("generate: negative parameter");

  SplitMix64 rng(spec.seed);
  std::vector<std::pair<int, int>> edges;
  std::vector<int> degree(spec.n, 0);
  std::vector<int> candidates;
  candidates.reserve(spec.n);

  for (int i = 0; i < spec.n; ++i) {
    long long want = spec.d;
    if (spec.dist == BackDegreeDist::UniformUpTo && spec.d > 0)
      want = static_cast<long long>(rng.below(static_cast<uint64_t>(spec.d) + 1));
    long long b = std::min<long long>(i, std::min<long long>(want, spec.dmax));
    if (b == 0) continue;

    candidates.clear();
    for (int j = 0; j < i; ++j)
      if (degree[j] < spec.dmax) candidates.push_back(j);
    if (static_cast<long long>(candidates.size()) <= b) {
      for (int j : candidates) {
        edges.emplace_back(j, i);
        ++degree[j];
        ++degree[i];
      }
      continue;
    }
    // partial Fisher-Yates over the ascending candidate array
    for (long long s = 0; s < b; ++s) {
      long long pick = s + static_cast<long long>(
                               rng.below(static_cast<uint64_t>(candidates.size() - s)));
      std::swap(candidates[s], candidates[pick]);
    }
    std::sort(candidates.begin(), candidates.begin() + b);
    for (long long s = 0; s < b; ++s) {
      edges.emplace_back(candidates[s], i);
      ++degree[candidates[s]];
      ++degree[i];
    }
  }
  return graph_from_edges(spec.n, edges);
}

std::string generate_edge_list(const GenSpec& spec) {
  Graph g = generate(spec);
  DegeneracyOrdering ord = degeneracy_ordering(g);
  std::string out;
  out += "# gen n=" + std::to_string(spec.n) + " d=" + std::to_string(spec.d) +
         " dmax=" + std::to_string(spec.dmax) + " seed=" + std::to_string(spec.seed) +
         " realized_d=" + std::to_string(ord.d) +
         " realized_delta=" + std::to_string(g.max_degree()) + "\n";
  out += write_edge_list(g);
  return out;
}

}  // namespace equitree
