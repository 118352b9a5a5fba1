#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace equitree {

// Simple undirected graph, adjacency lists kept sorted ascending.
struct Graph {
  int n = 0;
  long long m = 0;
  std::vector<std::vector<int>> adj;

  int degree(int v) const { return static_cast<int>(adj[v].size()); }
  int max_degree() const;

  bool operator==(const Graph&) const = default;
};

struct ParseError : std::runtime_error {
  enum class Kind { SelfLoop, DuplicateEdge, BadToken, VertexOutOfRange };
  Kind kind;
  int line;
  ParseError(Kind k, int line_no, const std::string& msg);
};

// Edge-list format: optional first content line "v <n>", then one edge per
// line "<u> <v>" with 0-based decimal ids. Lines starting with '#' and blank
// lines are skipped. Self loops, repeated edges (either orientation), junk
// tokens and out-of-range ids are fatal, reported with the 1-based line
// number. Without a header the vertex count is max id + 1.
Graph parse_edge_list(std::string_view text);
Graph read_edge_list_file(const std::string& path);
std::string write_edge_list(const Graph& g);

Graph graph_from_edges(int n, const std::vector<std::pair<int, int>>& edges);

// Smallest-last ordering: repeatedly delete a minimum-degree vertex (ties by
// lowest id); order is the reverse of the deletion sequence. back_degree[v]
// is v's degree at deletion, i.e. its neighbor count among vertices placed
// earlier in the order, and d = max back_degree is the core number.
struct DegeneracyOrdering {
  std::vector<int> order;
  std::vector<int> pos;          // pos[order[i]] == i
  std::vector<int> back_degree;
  int d = 0;
};

DegeneracyOrdering degeneracy_ordering(const Graph& g);

// Number of neighbors of v inside the set (mask[u] != 0).
int neighbors_in(const Graph& g, int v, const std::vector<char>& mask);

// Does the induced subgraph on verts contain no cycle? Union-find over the
// internal edges.
bool induces_forest(const Graph& g, std::span<const int> verts);

// Max degree of the graph induced on the complement of the excluded set;
// 0 when nothing is left.
int max_degree_excluding(const Graph& g, const std::vector<char>& excluded);

// Induced subgraph with local ids 0..verts-1 assigned in ascending order of
// the original ids. Returns the subgraph and the local-to-global map.
std::pair<Graph, std::vector<int>> induced_subgraph(const Graph& g,
                                                    std::span<const int> verts);

}  // namespace equitree
