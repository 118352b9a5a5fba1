#include "equitree/equitree.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "generator.hpp"
#include "graph.hpp"
#include "oracle.hpp"
#include "run.hpp"
#include "verifier.hpp"

using equitree::Graph;

struct eqt_graph {
  Graph g;
};

struct eqt_result {
  equitree::RunRecord rec;
  std::string json_cache;
};

namespace {

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out != nullptr) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void set_err(char** err_msg, const std::string& s) {
  if (err_msg != nullptr) *err_msg = dup_string(s);
}

}  // namespace

extern "C" {

const char* eqt_version(void) { return "1.0.0"; }

void eqt_string_free(char* s) { std::free(s); }

int eqt_graph_parse(const char* text, eqt_graph** out, char** err_msg) {
  if (text == nullptr || out == nullptr) return EQT_ERR_USAGE;
  try {
    auto* h = new eqt_graph{equitree::parse_edge_list(text)};
    *out = h;
    return EQT_OK;
  } catch (const equitree::ParseError& e) {
    set_err(err_msg, e.what());
    return EQT_ERR_USAGE;
  } catch (const std::exception& e) {
    set_err(err_msg, e.what());
    return EQT_ERR_INTERNAL;
  }
}

int eqt_graph_read_file(const char* path, eqt_graph** out, char** err_msg) {
  if (path == nullptr || out == nullptr) return EQT_ERR_USAGE;
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    set_err(err_msg, std::string("cannot open ") + path);
    return EQT_ERR_USAGE;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return eqt_graph_parse(buf.str().c_str(), out, err_msg);
}

void eqt_graph_free(eqt_graph* g) { delete g; }

char* eqt_graph_write(const eqt_graph* g) {
  if (g == nullptr) return nullptr;
  return dup_string(equitree::write_edge_list(g->g));
}

int eqt_graph_n(const eqt_graph* g) { return g == nullptr ? -1 : g->g.n; }

long long eqt_graph_edge_count(const eqt_graph* g) { return g == nullptr ? -1 : g->g.m; }

int eqt_graph_degeneracy(const eqt_graph* g) {
  if (g == nullptr) return -1;
  return equitree::degeneracy_ordering(g->g).d;
}

int eqt_graph_max_degree(const eqt_graph* g) {
  if (g == nullptr) return -1;
  return g->g.max_degree();
}

int eqt_generate(int n, int d, int dmax, unsigned long long seed, int dist, char** out_text,
                 char** err_msg) {
  if (out_text == nullptr) return EQT_ERR_USAGE;
  try {
    equitree::GenSpec spec;
    spec.n = n;
    spec.d = d;
    spec.dmax = dmax;
    spec.seed = seed;
    spec.dist = dist == EQT_DIST_UNIFORM ? equitree::BackDegreeDist::UniformUpTo
                                         : equitree::BackDegreeDist::Fixed;
    *out_text = dup_string(equitree::generate_edge_list(spec));
    return EQT_OK;
  } catch (const std::exception& e) {
    set_err(err_msg, e.what());
    return EQT_ERR_USAGE;
  }
}

int eqt_solve(const eqt_graph* g, int k, unsigned flags, eqt_result** out, char** err_msg) {
  if (g == nullptr || out == nullptr) return EQT_ERR_USAGE;
  if (k < 1) {
    set_err(err_msg, "k must be at least 1");
    return EQT_ERR_USAGE;
  }
  try {
    equitree::SolveOptions opt;
    opt.diagnostics = (flags & EQT_SOLVE_DIAGNOSTICS) != 0;
    opt.rebalance = (flags & EQT_SOLVE_REBALANCE) != 0;
    if ((flags & EQT_SOLVE_DEBUG_CHECKS) != 0) opt.debug_checks = true;
    auto* h = new eqt_result{equitree::run_solve(g->g, k, opt), {}};
    *out = h;
    return h->rec.status();
  } catch (const std::exception& e) {
    set_err(err_msg, e.what());
    return EQT_ERR_INTERNAL;
  }
}

void eqt_result_free(eqt_result* r) { delete r; }

int eqt_result_valid(const eqt_result* r) {
  return r != nullptr && r->rec.report.valid ? 1 : 0;
}

long long eqt_result_t(const eqt_result* r) { return r == nullptr ? -1 : r->rec.plan.t; }

int eqt_result_alpha(const eqt_result* r) { return r == nullptr ? -1 : r->rec.plan.alpha; }

int eqt_result_beta(const eqt_result* r) { return r == nullptr ? -1 : r->rec.plan.beta; }

int eqt_result_guaranteed(const eqt_result* r) {
  return r != nullptr && r->rec.plan.guaranteed ? 1 : 0;
}

const char* eqt_result_branch(const eqt_result* r) {
  if (r == nullptr) return nullptr;
  return equitree::to_string(r->rec.plan.branch);
}

const char* eqt_result_fail_kind(const eqt_result* r) {
  if (r == nullptr || !r->rec.failure.has_value()) return nullptr;
  return equitree::to_string(r->rec.failure->kind);
}

int eqt_result_color(const eqt_result* r, int v) {
  if (r == nullptr || v < 0 || v >= static_cast<int>(r->rec.colors.size())) return -1;
  return r->rec.colors[static_cast<size_t>(v)];
}

long long eqt_result_class_size(const eqt_result* r, int c) {
  if (r == nullptr || c < 0 || c >= static_cast<int>(r->rec.report.class_sizes.size())) return -1;
  return r->rec.report.class_sizes[static_cast<size_t>(c)];
}

long long eqt_result_max_class(const eqt_result* r) {
  if (r == nullptr || r->rec.report.class_sizes.empty()) return -1;
  long long mx = 0;
  for (long long s : r->rec.report.class_sizes) mx = std::max(mx, s);
  return mx;
}

long long eqt_result_min_class(const eqt_result* r) {
  if (r == nullptr || r->rec.report.class_sizes.empty()) return -1;
  long long mn = r->rec.report.class_sizes.front();
  for (long long s : r->rec.report.class_sizes) mn = std::min(mn, s);
  return mn;
}

long long eqt_result_spread(const eqt_result* r) {
  return r == nullptr ? -1 : r->rec.report.spread;
}

long long eqt_result_diag_violations(const eqt_result* r) {
  if (r == nullptr || !r->rec.diagnostics.has_value()) return -1;
  return r->rec.diagnostics->violations;
}

long long eqt_result_millis(const eqt_result* r) { return r == nullptr ? -1 : r->rec.millis; }

const char* eqt_result_json(eqt_result* r) {
  if (r == nullptr) return nullptr;
  if (r->json_cache.empty()) r->json_cache = equitree::run_record_json(r->rec);
  return r->json_cache.c_str();
}

int eqt_verify(const eqt_graph* g, const int* colors, int n_colors, int k, char** report_json) {
  if (g == nullptr || colors == nullptr || n_colors != g->g.n || k < 1) return EQT_ERR_USAGE;
  std::vector<int> cv(colors, colors + n_colors);
  equitree::VerifyReport rep = equitree::verify(g->g, cv, k);
  if (report_json != nullptr) *report_json = dup_string(equitree::verify_report_json(rep));
  return rep.valid ? EQT_OK : EQT_ERR_INVALID;
}

int eqt_rebalance(const eqt_graph* g, int* colors, int n_colors, int k, long long* moves) {
  if (g == nullptr || colors == nullptr || n_colors != g->g.n || k < 1) return EQT_ERR_USAGE;
  std::vector<int> cv(colors, colors + n_colors);
  equitree::VerifyReport rep = equitree::verify(g->g, cv, k);
  if (!rep.valid) return EQT_ERR_INVALID;
  try {
    equitree::RebalanceResult rr = equitree::rebalance_strict(g->g, cv, k);
    for (int i = 0; i < n_colors; ++i) colors[i] = rr.colors[static_cast<size_t>(i)];
    if (moves != nullptr) *moves = rr.moves;
    return EQT_OK;
  } catch (const std::exception&) {
    return EQT_ERR_INTERNAL;
  }
}

int eqt_oracle_solve(const eqt_graph* g, int k, int mode, long long node_limit,
                     char** coloring_json, char** err_msg) {
  if (g == nullptr) return EQT_ERR_USAGE;
  try {
    equitree::OracleResult res = equitree::oracle_solve(
        g->g, k,
        mode == EQT_MODE_STRICT ? equitree::OracleMode::Strict : equitree::OracleMode::CapOnly,
        node_limit > 0 ? node_limit : 50'000'000);
    if (res.status == equitree::OracleStatus::Found) {
      if (coloring_json != nullptr) {
        nlohmann::ordered_json j;
        j["k"] = k;
        j["colors"] = res.colors;
        *coloring_json = dup_string(j.dump());
      }
      return EQT_OK;
    }
    return res.status == equitree::OracleStatus::NotExist ? EQT_NOT_EXIST : EQT_BUDGET_EXCEEDED;
  } catch (const std::exception& e) {
    set_err(err_msg, e.what());
    return EQT_ERR_USAGE;
  }
}

int eqt_oracle_min_k(const eqt_graph* g, int mode, long long node_limit, int* out_k,
                     char** err_msg) {
  if (g == nullptr || out_k == nullptr) return EQT_ERR_USAGE;
  try {
    equitree::MinKResult res = equitree::oracle_min_k(
        g->g,
        mode == EQT_MODE_STRICT ? equitree::OracleMode::Strict : equitree::OracleMode::CapOnly,
        node_limit > 0 ? node_limit : 50'000'000);
    if (res.status == equitree::OracleStatus::BudgetExceeded) return EQT_BUDGET_EXCEEDED;
    *out_k = res.k;
    return EQT_OK;
  } catch (const std::exception& e) {
    set_err(err_msg, e.what());
    return EQT_ERR_USAGE;
  }
}

}  // extern "C"
