#include <doctest.h>

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "common.hpp"
#include "graph.hpp"
#include "helpers.hpp"
#include "oracle.hpp"
#include "verifier.hpp"

using namespace equitree;
using namespace equitree::testing;

namespace {

// brute force over all k^n assignments, the oracle's oracle
bool naive_exists(const Graph& g, int k, OracleMode mode) {
  long long cap = ceil_div(static_cast<long long>(g.n), static_cast<long long>(k));
  long long total = 1;
  for (int i = 0; i < g.n; ++i) total *= k;
  std::vector<int> assign(g.n, 0);
  for (long long code = 0; code < total; ++code) {
    long long rest = code;
    for (int v = 0; v < g.n; ++v) {
      assign[v] = static_cast<int>(rest % k);
      rest /= k;
    }
    std::vector<long long> sizes(k, 0);
    for (int v = 0; v < g.n; ++v) ++sizes[assign[v]];
    bool ok = true;
    if (mode == OracleMode::CapOnly) {
      for (long long s : sizes) ok = ok && s <= cap;
    } else {
      long long q = g.n / k;
      long long hi = 0;
      for (long long s : sizes) {
        if (s != q && s != q + 1) ok = false;
        if (s == q + 1) ++hi;
      }
      ok = ok && hi == g.n % k;
    }
    if (!ok) continue;
    for (int c = 0; c < k && ok; ++c) {
      std::vector<int> cls;
      for (int v = 0; v < g.n; ++v)
        if (assign[v] == c) cls.push_back(v);
      ok = dfs_is_forest(g, cls);
    }
    if (ok) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("oracle on fixed shapes") {
  Graph k4 = complete_graph(4);
  CHECK(oracle_solve(k4, 1, OracleMode::CapOnly).status == OracleStatus::NotExist);

  OracleResult r = oracle_solve(k4, 2, OracleMode::CapOnly);
  REQUIRE(r.status == OracleStatus::Found);
  CHECK(verify(k4, r.colors, 2).valid);

  Graph c5 = cycle_graph(5);
  OracleResult r5 = oracle_solve(c5, 2, OracleMode::CapOnly);
  REQUIRE(r5.status == OracleStatus::Found);
  VerifyReport rep = verify(c5, r5.colors, 2);
  CHECK(rep.valid);
  CHECK(rep.cap == 3);
}

TEST_CASE("oracle guards") {
  Graph big = graph_from_edges(21, {});
  CHECK_THROWS_AS(oracle_solve(big, 2, OracleMode::CapOnly), std::invalid_argument);
  Graph small = path_graph(3);
  CHECK_THROWS_AS(oracle_solve(small, 0, OracleMode::CapOnly), std::invalid_argument);
}

TEST_CASE("oracle agrees with naive enumeration on tiny graphs") {
  for (uint64_t seed = 1; seed <= 60; ++seed) {
    int n = 3 + static_cast<int>(seed % 4);  // 3..6
    Graph g = random_graph(n, 45, 7000 + seed);
    for (int k = 1; k <= 3; ++k) {
      for (OracleMode mode : {OracleMode::CapOnly, OracleMode::Strict}) {
        OracleResult res = oracle_solve(g, k, mode);
        REQUIRE(res.status != OracleStatus::BudgetExceeded);
        bool expect = naive_exists(g, k, mode);
        CHECK((res.status == OracleStatus::Found) == expect);
        if (res.status == OracleStatus::Found) {
          VerifyReport rep = verify(g, res.colors, k);
          CHECK(rep.valid);
          if (mode == OracleMode::Strict) CHECK(rep.spread <= 1);
        }
      }
    }
  }
}

TEST_CASE("CapOnly monotonicity in k") {
  for (uint64_t seed = 1; seed <= 30; ++seed) {
    Graph g = random_graph(8, 40, 9000 + seed);
    bool prev_found = false;
    for (int k = 1; k <= 5; ++k) {
      bool found = oracle_solve(g, k, OracleMode::CapOnly).status == OracleStatus::Found;
      if (prev_found) CHECK(found);
      prev_found = found;
    }
  }
}

TEST_CASE("min_k on fixed shapes") {
  MinKResult tree = oracle_min_k(path_graph(6), OracleMode::CapOnly);
  CHECK(tree.status == OracleStatus::Found);
  CHECK(tree.k == 1);

  MinKResult c4 = oracle_min_k(cycle_graph(4), OracleMode::CapOnly);
  CHECK(c4.k == 2);

  MinKResult k5 = oracle_min_k(complete_graph(5), OracleMode::CapOnly);
  CHECK(k5.k == 3);
}

TEST_CASE("strict mode enforces exact size multiplicities") {
  Graph k4 = complete_graph(4);
  OracleResult r = oracle_solve(k4, 3, OracleMode::Strict);
  REQUIRE(r.status == OracleStatus::Found);
  std::vector<long long> sizes(3, 0);
  for (int c : r.colors) ++sizes[c];
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<long long>{1, 1, 2});

  Graph k5 = complete_graph(5);
  OracleResult r5 = oracle_solve(k5, 3, OracleMode::Strict);
  REQUIRE(r5.status == OracleStatus::Found);
  std::vector<long long> sizes5(3, 0);
  for (int c : r5.colors) ++sizes5[c];
  std::sort(sizes5.begin(), sizes5.end());
  CHECK(sizes5 == std::vector<long long>{1, 2, 2});
}

TEST_CASE("node budget surfaces as BudgetExceeded") {
  Graph g = random_graph(12, 40, 4242);
  CHECK(oracle_solve(g, 3, OracleMode::CapOnly, 1).status == OracleStatus::BudgetExceeded);
}
