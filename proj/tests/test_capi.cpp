#include <cstring>
#include <string>
#include <vector>

#include <json.hpp>

#include "doctest.h"
#include "equitree/equitree.h"

using nlohmann::json;

namespace {

eqt_graph* must_parse(const std::string& text) {
  eqt_graph* g = nullptr;
  char* err = nullptr;
  REQUIRE(eqt_graph_parse(text.c_str(), &g, &err) == EQT_OK);
  REQUIRE(g != nullptr);
  REQUIRE(err == nullptr);
  return g;
}

const std::string kC4 = "0 1\n1 2\n2 3\n3 0\n";
const std::string kK5 = "0 1\n0 2\n0 3\n0 4\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n";

}  // namespace

TEST_CASE("version string is present") {
  const char* v = eqt_version();
  REQUIRE(v != nullptr);
  CHECK(std::strlen(v) >= 5);
}

TEST_CASE("graph parse, accessors and round-trip through the C surface") {
  eqt_graph* g = must_parse("v 5\n# comment\n0 1\n1 2\n");
  CHECK(eqt_graph_n(g) == 5);
  CHECK(eqt_graph_edge_count(g) == 2);
  CHECK(eqt_graph_degeneracy(g) == 1);
  CHECK(eqt_graph_max_degree(g) == 2);

  char* text = eqt_graph_write(g);
  REQUIRE(text != nullptr);
  eqt_graph* again = must_parse(text);
  CHECK(eqt_graph_n(again) == 5);
  CHECK(eqt_graph_edge_count(again) == 2);
  eqt_string_free(text);
  eqt_graph_free(again);
  eqt_graph_free(g);
}

TEST_CASE("parse failures come back with a message and no handle") {
  eqt_graph* g = nullptr;
  char* err = nullptr;
  CHECK(eqt_graph_parse("0 0\n", &g, &err) == EQT_ERR_USAGE);
  CHECK(g == nullptr);
  REQUIRE(err != nullptr);
  CHECK(std::strstr(err, "1") != nullptr);  // offending line number
  eqt_string_free(err);

  CHECK(eqt_graph_read_file("/nonexistent/equitree.txt", &g, &err) == EQT_ERR_USAGE);
  CHECK(g == nullptr);
  eqt_string_free(err);
}

TEST_CASE("generate produces parseable deterministic text") {
  char* a = nullptr;
  char* b = nullptr;
  REQUIRE(eqt_generate(30, 2, 7, 21, EQT_DIST_FIXED, &a, nullptr) == EQT_OK);
  REQUIRE(eqt_generate(30, 2, 7, 21, EQT_DIST_FIXED, &b, nullptr) == EQT_OK);
  CHECK(std::strcmp(a, b) == 0);
  CHECK(std::strncmp(a, "# gen n=30", 10) == 0);

  eqt_graph* g = must_parse(a);
  CHECK(eqt_graph_n(g) == 30);
  CHECK(eqt_graph_degeneracy(g) <= 2);
  eqt_graph_free(g);
  eqt_string_free(a);
  eqt_string_free(b);

  char* err = nullptr;
  CHECK(eqt_generate(-3, 1, 4, 0, EQT_DIST_FIXED, &a, &err) == EQT_ERR_USAGE);
  eqt_string_free(err);
}

TEST_CASE("solve on C4: accessors agree with the record") {
  eqt_graph* g = must_parse(kC4);
  eqt_result* r = nullptr;
  REQUIRE(eqt_solve(g, 2, 0, &r, nullptr) == EQT_OK);
  REQUIRE(r != nullptr);

  CHECK(eqt_result_valid(r) == 1);
  CHECK(eqt_result_t(r) == 2);
  CHECK(eqt_result_alpha(r) == 8);
  CHECK(eqt_result_guaranteed(r) == 0);
  CHECK(std::strcmp(eqt_result_branch(r), "best_effort") == 0);
  CHECK(eqt_result_fail_kind(r) == nullptr);
  CHECK(eqt_result_max_class(r) == 2);
  CHECK(eqt_result_min_class(r) == 2);
  CHECK(eqt_result_spread(r) == 0);
  CHECK(eqt_result_diag_violations(r) == -1);  // diagnostics not requested
  CHECK(eqt_result_millis(r) >= 0);

  long long sum = 0;
  for (int c = 0; c < 2; ++c) sum += eqt_result_class_size(r, c);
  CHECK(sum == 4);
  for (int v = 0; v < 4; ++v) {
    int col = eqt_result_color(r, v);
    CHECK(col >= 0);
    CHECK(col < 2);
  }
  CHECK(eqt_result_color(r, 99) == -1);

  const char* js = eqt_result_json(r);
  REQUIRE(js != nullptr);
  json j = json::parse(js);
  CHECK(j["valid"] == true);
  CHECK(js == eqt_result_json(r));  // cached, same pointer

  eqt_result_free(r);
  eqt_graph_free(g);
}

TEST_CASE("solve failure surfaces the fail kind") {
  eqt_graph* g = must_parse(kK5);
  eqt_result* r = nullptr;
  CHECK(eqt_solve(g, 2, 0, &r, nullptr) == EQT_ERR_SOLVE);
  REQUIRE(r != nullptr);
  CHECK(eqt_result_valid(r) == 0);
  REQUIRE(eqt_result_fail_kind(r) != nullptr);
  CHECK(std::strcmp(eqt_result_fail_kind(r), "no_move_available") == 0);
  eqt_result_free(r);

  CHECK(eqt_solve(g, 0, 0, &r, nullptr) == EQT_ERR_USAGE);
  CHECK(eqt_solve(nullptr, 2, 0, &r, nullptr) == EQT_ERR_USAGE);
  eqt_graph_free(g);
}

TEST_CASE("diagnostics flag wires violation counts through") {
  char* text = nullptr;
  REQUIRE(eqt_generate(848, 1, 15, 4242, EQT_DIST_UNIFORM, &text, nullptr) == EQT_OK);
  eqt_graph* g = must_parse(text);
  eqt_string_free(text);

  eqt_result* r = nullptr;
  REQUIRE(eqt_solve(g, 8, EQT_SOLVE_DIAGNOSTICS, &r, nullptr) == EQT_OK);
  CHECK(std::strcmp(eqt_result_branch(r), "layered") == 0);
  CHECK(eqt_result_diag_violations(r) == 0);
  eqt_result_free(r);
  eqt_graph_free(g);
}

TEST_CASE("verify and rebalance through the C surface") {
  eqt_graph* g = must_parse(kC4);
  int good[4] = {0, 1, 0, 1};
  char* report = nullptr;
  CHECK(eqt_verify(g, good, 4, 2, &report) == EQT_OK);
  REQUIRE(report != nullptr);
  CHECK(json::parse(report)["valid"] == true);
  eqt_string_free(report);

  int bad[4] = {0, 0, 0, 0};  // the whole cycle in one class
  CHECK(eqt_verify(g, bad, 4, 1, &report) == EQT_ERR_INVALID);
  REQUIRE(report != nullptr);
  CHECK(json::parse(report)["valid"] == false);
  eqt_string_free(report);

  CHECK(eqt_verify(g, good, 3, 2, nullptr) == EQT_ERR_USAGE);  // length mismatch
  eqt_graph_free(g);

  eqt_graph* e4 = must_parse("v 4\n");
  int skew[4] = {0, 0, 1, 1};
  long long moves = -1;
  CHECK(eqt_rebalance(e4, skew, 4, 3, &moves) == EQT_OK);
  CHECK(moves >= 1);
  long long sizes[3] = {0, 0, 0};
  for (int v = 0; v < 4; ++v) ++sizes[skew[v]];
  long long mx = 0, mn = 4;
  for (long long s : sizes) {
    mx = std::max(mx, s);
    mn = std::min(mn, s);
  }
  CHECK(mx - mn <= 1);
  eqt_graph_free(e4);
}

TEST_CASE("oracle statuses and min_k through the C surface") {
  eqt_graph* c4 = must_parse(kC4);
  char* coloring = nullptr;
  REQUIRE(eqt_oracle_solve(c4, 2, EQT_MODE_CAP_ONLY, 0, &coloring, nullptr) == EQT_OK);
  REQUIRE(coloring != nullptr);
  json j = json::parse(coloring);
  CHECK(j["k"] == 2);
  CHECK(j["colors"].size() == 4);
  eqt_string_free(coloring);

  // a node budget of 1 cannot finish any real search
  CHECK(eqt_oracle_solve(c4, 2, EQT_MODE_CAP_ONLY, 1, &coloring, nullptr) ==
        EQT_BUDGET_EXCEEDED);

  int mk = -1;
  CHECK(eqt_oracle_min_k(c4, EQT_MODE_CAP_ONLY, 0, &mk, nullptr) == EQT_OK);
  CHECK(mk == 2);
  eqt_graph_free(c4);

  eqt_graph* k5 = must_parse(kK5);
  CHECK(eqt_oracle_solve(k5, 2, EQT_MODE_CAP_ONLY, 0, &coloring, nullptr) == EQT_NOT_EXIST);
  CHECK(eqt_oracle_min_k(k5, EQT_MODE_CAP_ONLY, 0, &mk, nullptr) == EQT_OK);
  CHECK(mk == 3);
  eqt_graph_free(k5);
}
