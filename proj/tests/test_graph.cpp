#include <doctest.h>

#include <algorithm>
#include <string>
#include <vector>

#include "generator.hpp"
#include "graph.hpp"
#include "helpers.hpp"

using namespace equitree;
using namespace equitree::testing;

TEST_CASE("parse: header, edges, comments") {
  Graph g = parse_edge_list("v 3\n0 1\n1 2\n");
  CHECK(g.n == 3);
  CHECK(g.m == 2);
  CHECK(g.adj[1] == std::vector<int>{0, 2});

  Graph h = parse_edge_list("# comment\n\n0 1\n\n# more\n2 3\n");
  CHECK(h.n == 4);
  CHECK(h.m == 2);

  Graph empty = parse_edge_list("");
  CHECK(empty.n == 0);
  CHECK(empty.m == 0);

  Graph no_header = parse_edge_list("0 5\n");
  CHECK(no_header.n == 6);

  Graph crlf = parse_edge_list("v 2\r\n0 1\r\n");
  CHECK(crlf.n == 2);
  CHECK(crlf.m == 1);

  Graph isolated = parse_edge_list("v 4\n0 1\n");
  CHECK(isolated.n == 4);
  CHECK(isolated.degree(3) == 0);
}

TEST_CASE("parse: errors carry kind and line number") {
  auto kind_of = [](const std::string& text) {
    try {
      parse_edge_list(text);
    } catch (const ParseError& e) {
      return std::make_pair(e.kind, e.line);
    }
    return std::make_pair(ParseError::Kind::BadToken, -1);
  };

  CHECK(kind_of("0 0\n") == std::make_pair(ParseError::Kind::SelfLoop, 1));
  CHECK(kind_of("0 1\n1 0\n") == std::make_pair(ParseError::Kind::DuplicateEdge, 2));
  CHECK(kind_of("0 1\n0 1\n") == std::make_pair(ParseError::Kind::DuplicateEdge, 2));
  CHECK(kind_of("0 x\n") == std::make_pair(ParseError::Kind::BadToken, 1));
  CHECK(kind_of("0\n") == std::make_pair(ParseError::Kind::BadToken, 1));
  CHECK(kind_of("0 1 2\n") == std::make_pair(ParseError::Kind::BadToken, 1));
  CHECK(kind_of("v 2\n0 5\n") == std::make_pair(ParseError::Kind::VertexOutOfRange, 2));
  CHECK(kind_of("v x\n") == std::make_pair(ParseError::Kind::BadToken, 1));
  CHECK(kind_of("# c\n0 0\n") == std::make_pair(ParseError::Kind::SelfLoop, 2));
  CHECK(kind_of("-1 2\n") == std::make_pair(ParseError::Kind::BadToken, 1));
  CHECK(kind_of("v 2\n0 1\n200000001 0\n") ==
        std::make_pair(ParseError::Kind::VertexOutOfRange, 3));
}

TEST_CASE("parse(write(g)) round-trips generated graphs") {
  for (uint64_t seed = 1; seed <= 50; ++seed) {
    GenSpec spec;
    spec.n = 30 + static_cast<int>(seed % 7);
    spec.d = 1 + static_cast<int>(seed % 3);
    spec.dmax = 10;
    spec.seed = seed;
    spec.dist = seed % 2 == 0 ? BackDegreeDist::Fixed : BackDegreeDist::UniformUpTo;
    Graph g = generate(spec);
    Graph back = parse_edge_list(write_edge_list(g));
    CHECK(back == g);
  }
}

TEST_CASE("degeneracy ordering on fixed shapes") {
  CHECK(degeneracy_ordering(path_graph(3)).d == 1);
  CHECK(degeneracy_ordering(cycle_graph(4)).d == 2);
  CHECK(degeneracy_ordering(complete_graph(4)).d == 3);
  CHECK(degeneracy_ordering(graph_from_edges(5, {})).d == 0);
  CHECK(degeneracy_ordering(Graph{}).d == 0);
  CHECK(degeneracy_ordering(star_graph(9)).d == 1);
}

TEST_CASE("degeneracy ordering: structure and reversal property") {
  for (uint64_t seed = 1; seed <= 40; ++seed) {
    Graph g = random_graph(14, 25, seed);
    DegeneracyOrdering ord = degeneracy_ordering(g);
    REQUIRE(ord.order.size() == static_cast<size_t>(g.n));
    for (int i = 0; i < g.n; ++i) CHECK(ord.pos[ord.order[i]] == i);

    int max_back = 0;
    for (int i = 0; i < g.n; ++i) {
      int v = ord.order[i];
      int back = 0;
      for (int w : g.adj[v])
        if (ord.pos[w] < i) ++back;
      CHECK(back == ord.back_degree[v]);
      max_back = std::max(max_back, back);
    }
    CHECK(max_back == ord.d);
    CHECK(ord.d == naive_core_number(g));
  }
}

TEST_CASE("neighbors_in") {
  Graph c4 = cycle_graph(4);
  std::vector<char> s(4, 0);
  s[1] = s[3] = 1;
  CHECK(neighbors_in(c4, 0, s) == 2);
  CHECK(neighbors_in(c4, 0, std::vector<char>(4, 0)) == 0);
  Graph k4 = complete_graph(4);
  std::vector<char> all(4, 1);
  all[0] = 0;
  CHECK(neighbors_in(k4, 0, all) == 3);
}

TEST_CASE("induces_forest on fixed shapes") {
  Graph k3 = complete_graph(3);
  std::vector<int> all3{0, 1, 2};
  CHECK_FALSE(induces_forest(k3, all3));
  CHECK(induces_forest(k3, std::vector<int>{}));
  CHECK(induces_forest(k3, std::vector<int>{2}));
  Graph c4 = cycle_graph(4);
  CHECK(induces_forest(c4, std::vector<int>{0, 1, 2}));
  CHECK_FALSE(induces_forest(c4, std::vector<int>{0, 1, 2, 3}));
}

TEST_CASE("induces_forest agrees with an independent DFS check") {
  SplitMix64 rng{97};
  int checked = 0;
  for (uint64_t seed = 1; checked < 200; ++seed) {
    Graph g = random_graph(12, 30, seed * 31);
    for (int rep = 0; rep < 5; ++rep, ++checked) {
      std::vector<int> verts;
      for (int v = 0; v < g.n; ++v)
        if (rng.below(2) == 0) verts.push_back(v);
      CHECK(induces_forest(g, verts) == dfs_is_forest(g, verts));
    }
  }
}

TEST_CASE("max_degree_excluding") {
  Graph c4 = cycle_graph(4);
  CHECK(max_degree_excluding(c4, std::vector<char>(4, 0)) == 2);
  std::vector<char> ex0(4, 0);
  ex0[0] = 1;
  CHECK(max_degree_excluding(c4, ex0) == 2);  // remaining path 1-2-3
  std::vector<char> ex01_c4(4, 0);
  ex01_c4[0] = ex01_c4[1] = 1;
  CHECK(max_degree_excluding(c4, ex01_c4) == 1);  // single edge 2-3
  Graph k4 = complete_graph(4);
  std::vector<char> ex01(4, 0);
  ex01[0] = ex01[1] = 1;
  CHECK(max_degree_excluding(k4, ex01) == 1);
  CHECK(max_degree_excluding(k4, std::vector<char>(4, 1)) == 0);
}

TEST_CASE("induced_subgraph keeps ascending id order") {
  Graph c5 = cycle_graph(5);
  auto [sub, map] = induced_subgraph(c5, std::vector<int>{4, 0, 1});
  CHECK(map == std::vector<int>{0, 1, 4});
  CHECK(sub.n == 3);
  CHECK(sub.m == 2);  // edges 0-1 and 4-0 survive
  CHECK(sub.adj[0] == std::vector<int>{1, 2});
}
