#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "equitree/equitree.h"

namespace {

struct GraphHandle {
  eqt_graph* g = nullptr;
  ~GraphHandle() { eqt_graph_free(g); }
};

struct ResultHandle {
  eqt_result* r = nullptr;
  ~ResultHandle() { eqt_result_free(r); }
};

struct CStr {
  char* s = nullptr;
  ~CStr() { eqt_string_free(s); }
};

bool read_text(const std::string& path, std::string& out) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    out = buf.str();
    return true;
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream buf;
  buf << in.rdbuf();
  out = buf.str();
  return true;
}

bool write_text(const std::string& path, const std::string& content) {
  if (path == "-") {
    std::cout << content;
    return static_cast<bool>(std::cout);
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) return false;
  out << content;
  return static_cast<bool>(out);
}

int load_graph(const std::string& path, GraphHandle& gh) {
  std::string text;
  if (!read_text(path, text)) {
    std::cerr << "error: cannot read " << path << "\n";
    return EQT_ERR_USAGE;
  }
  CStr err;
  int rc = eqt_graph_parse(text.c_str(), &gh.g, &err.s);
  if (rc != EQT_OK) {
    std::cerr << "error: " << (err.s != nullptr ? err.s : "parse failed") << "\n";
    return EQT_ERR_USAGE;
  }
  return EQT_OK;
}

int cmd_color(const std::string& input, int k, bool diagnostics, bool rebalance,
              const std::string& json_out) {
  if (k < 1) {
    std::cerr << "error: k must be at least 1\n";
    return EQT_ERR_USAGE;
  }
  GraphHandle gh;
  if (int rc = load_graph(input, gh); rc != EQT_OK) return rc;

  unsigned flags = 0;
  if (diagnostics) flags |= EQT_SOLVE_DIAGNOSTICS;
  if (rebalance) flags |= EQT_SOLVE_REBALANCE;

  ResultHandle rh;
  CStr err;
  int rc = eqt_solve(gh.g, k, flags, &rh.r, &err.s);
  if (rh.r == nullptr) {
    std::cerr << "error: " << (err.s != nullptr ? err.s : "solve failed") << "\n";
    return rc == EQT_OK ? EQT_ERR_INTERNAL : rc;
  }
  const char* json = eqt_result_json(rh.r);
  if (json == nullptr || !write_text(json_out, json)) {
    std::cerr << "error: cannot write " << json_out << "\n";
    return EQT_ERR_USAGE;
  }
  return rc;
}

int cmd_verify(const std::string& graph_path, const std::string& coloring_path, int k_flag) {
  GraphHandle gh;
  if (int rc = load_graph(graph_path, gh); rc != EQT_OK) return rc;

  std::string text;
  if (!read_text(coloring_path, text)) {
    std::cerr << "error: cannot read " << coloring_path << "\n";
    return EQT_ERR_USAGE;
  }
  // Either the solver's JSON record (object with "color", "k") or a bare
  // array of colors.
  std::vector<int> colors;
  int k = k_flag;
  try {
    nlohmann::json j = nlohmann::json::parse(text);
    const nlohmann::json* arr = nullptr;
    if (j.is_array()) {
      arr = &j;
    } else if (j.is_object() && j.contains("color") && j["color"].is_array()) {
      arr = &j["color"];
      if (k < 1 && j.contains("k") && j["k"].is_number_integer()) k = j["k"].get<int>();
    } else {
      std::cerr << "error: coloring must be an array or an object with a color array\n";
      return EQT_ERR_USAGE;
    }
    colors = arr->get<std::vector<int>>();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return EQT_ERR_USAGE;
  }
  if (k < 1) {
    int mx = 0;
    for (int c : colors) mx = std::max(mx, c);
    k = mx + 1;
  }

  CStr report;
  int rc = eqt_verify(gh.g, colors.data(), static_cast<int>(colors.size()), k, &report.s);
  if (rc != EQT_OK && rc != EQT_ERR_INVALID) {
    std::cerr << "error: coloring has " << colors.size() << " entries for a graph on "
              << eqt_graph_n(gh.g) << " vertices\n";
    return EQT_ERR_USAGE;
  }
  if (report.s != nullptr) std::cout << report.s;
  return rc;
}

int cmd_gen(int n, int d, int dmax, unsigned long long seed, const std::string& dist,
            const std::string& out_path) {
  CStr text;
  CStr err;
  int rc = eqt_generate(n, d, dmax, seed, dist == "uniform" ? EQT_DIST_UNIFORM : EQT_DIST_FIXED,
                        &text.s, &err.s);
  if (rc != EQT_OK) {
    std::cerr << "error: " << (err.s != nullptr ? err.s : "generation failed") << "\n";
    return EQT_ERR_USAGE;
  }
  if (!write_text(out_path, text.s)) {
    std::cerr << "error: cannot write " << out_path << "\n";
    return EQT_ERR_USAGE;
  }
  return EQT_OK;
}

int cmd_oracle(const std::string& graph_path, int k, const std::string& mode, bool min_k,
               long long node_limit) {
  GraphHandle gh;
  if (int rc = load_graph(graph_path, gh); rc != EQT_OK) return rc;
  int m = mode == "strict" ? EQT_MODE_STRICT : EQT_MODE_CAP_ONLY;

  if (min_k) {
    int out_k = -1;
    CStr err;
    int rc = eqt_oracle_min_k(gh.g, m, node_limit, &out_k, &err.s);
    if (rc == EQT_OK) {
      std::cout << "{\"min_k\":" << out_k << "}\n";
      return EQT_OK;
    }
    if (rc == EQT_BUDGET_EXCEEDED) {
      std::cout << "BudgetExceeded\n";
      return EQT_BUDGET_EXCEEDED;
    }
    std::cerr << "error: " << (err.s != nullptr ? err.s : "oracle failed") << "\n";
    return EQT_ERR_USAGE;
  }

  if (k < 1) {
    std::cerr << "error: k must be at least 1\n";
    return EQT_ERR_USAGE;
  }
  CStr coloring;
  CStr err;
  int rc = eqt_oracle_solve(gh.g, k, m, node_limit, &coloring.s, &err.s);
  if (rc == EQT_OK) {
    std::cout << "Found\n";
    if (coloring.s != nullptr) std::cout << coloring.s << "\n";
    return EQT_OK;
  }
  if (rc == EQT_NOT_EXIST) {
    std::cout << "NotExist\n";
    return EQT_NOT_EXIST;
  }
  if (rc == EQT_BUDGET_EXCEEDED) {
    std::cout << "BudgetExceeded\n";
    return EQT_BUDGET_EXCEEDED;
  }
  std::cerr << "error: " << (err.s != nullptr ? err.s : "oracle failed") << "\n";
  return EQT_ERR_USAGE;
}

int cmd_bench(const std::vector<int>& ns, const std::vector<int>& ds, const std::vector<int>& ks,
              const std::vector<int>& dmaxs, const std::vector<unsigned long long>& seeds,
              const std::string& dist, bool timing, const std::string& csv_out) {
  std::ostringstream csv;
  csv << "n,m,d,delta,k,t,alpha,beta,branch,success,fail_kind,ms,max_class,min_class,"
         "diag_violations\n";
  for (int n : ns) {
    for (int d : ds) {
      for (int k : ks) {
        for (int dmax : dmaxs) {
          for (unsigned long long seed : seeds) {
            CStr text;
            CStr gen_err;
            if (eqt_generate(n, d, dmax, seed,
                             dist == "uniform" ? EQT_DIST_UNIFORM : EQT_DIST_FIXED, &text.s,
                             &gen_err.s) != EQT_OK) {
              std::cerr << "error: " << (gen_err.s != nullptr ? gen_err.s : "generation failed")
                        << "\n";
              return EQT_ERR_USAGE;
            }
            GraphHandle gh;
            CStr parse_err;
            if (eqt_graph_parse(text.s, &gh.g, &parse_err.s) != EQT_OK) {
              std::cerr << "error: "
                        << (parse_err.s != nullptr ? parse_err.s : "parse failed") << "\n";
              return EQT_ERR_USAGE;
            }
            if (k < 1) {
              std::cerr << "error: k must be at least 1\n";
              return EQT_ERR_USAGE;
            }
            ResultHandle rh;
            CStr solve_err;
            int rc = eqt_solve(gh.g, k, EQT_SOLVE_DIAGNOSTICS, &rh.r, &solve_err.s);
            if (rh.r == nullptr) {
              std::cerr << "error: "
                        << (solve_err.s != nullptr ? solve_err.s : "solve failed") << "\n";
              return EQT_ERR_USAGE;
            }
            const char* fail = eqt_result_fail_kind(rh.r);
            long long viol = eqt_result_diag_violations(rh.r);
            csv << eqt_graph_n(gh.g) << ',' << eqt_graph_edge_count(gh.g) << ','
                << eqt_graph_degeneracy(gh.g) << ',' << eqt_graph_max_degree(gh.g) << ',' << k
                << ',' << eqt_result_t(rh.r) << ',' << eqt_result_alpha(rh.r) << ','
                << eqt_result_beta(rh.r) << ',' << eqt_result_branch(rh.r) << ','
                << (rc == EQT_OK ? "true" : "false") << ',' << (fail != nullptr ? fail : "")
                << ',' << (timing ? eqt_result_millis(rh.r) : 0LL) << ','
                << eqt_result_max_class(rh.r) << ',' << eqt_result_min_class(rh.r) << ','
                << (viol < 0 ? 0LL : viol) << '\n';
          }
        }
      }
    }
  }
  if (!write_text(csv_out, csv.str())) {
    std::cerr << "error: cannot write " << csv_out << "\n";
    return EQT_ERR_USAGE;
  }
  return EQT_OK;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"equitable forest colorings of degenerate graphs"};
  app.require_subcommand(1);
  app.set_version_flag("--version", eqt_version());

  // color
  std::string color_input;
  int color_k = 0;
  bool color_diag = false;
  bool color_rebalance = false;
  std::string color_json = "-";
  auto* color = app.add_subcommand("color", "solve an instance and print the run record");
  color->add_option("input", color_input, "edge-list file, - for stdin")->required();
  color->add_option("-k,--k", color_k, "number of classes")->required();
  color->add_flag("--diagnostics", color_diag, "audit the layer construction");
  color->add_flag("--rebalance", color_rebalance, "push class sizes to spread <= 1");
  color->add_option("--json", color_json, "output path, - for stdout");

  // verify
  std::string verify_graph;
  std::string verify_coloring;
  int verify_k = 0;
  auto* verify = app.add_subcommand("verify", "check a coloring against a graph");
  verify->add_option("graph", verify_graph, "edge-list file, - for stdin")->required();
  verify->add_option("coloring", verify_coloring, "JSON coloring (run record or bare array)")
      ->required();
  verify->add_option("-k,--k", verify_k, "number of classes (default: from the JSON)");

  // gen
  int gen_n = 0;
  int gen_d = 0;
  int gen_dmax = 0;
  unsigned long long gen_seed = 0;
  std::string gen_dist = "fixed";
  std::string gen_out = "-";
  auto* gen = app.add_subcommand("gen", "generate a reproducible degenerate graph");
  gen->add_option("--n", gen_n, "vertex count")->required();
  gen->add_option("--d", gen_d, "back-degree budget")->required();
  gen->add_option("--dmax", gen_dmax, "max degree cap")->required();
  gen->add_option("--seed", gen_seed, "RNG seed")->required();
  gen->add_option("--dist", gen_dist, "back-degree distribution")
      ->check(CLI::IsMember({"fixed", "uniform"}));
  gen->add_option("--out", gen_out, "output path, - for stdout");

  // oracle
  std::string oracle_graph;
  int oracle_k = 0;
  std::string oracle_mode = "cap";
  bool oracle_min_k = false;
  long long oracle_nodes = 0;
  auto* oracle = app.add_subcommand("oracle", "exhaustive search on small graphs");
  oracle->add_option("graph", oracle_graph, "edge-list file, - for stdin")->required();
  oracle->add_option("-k,--k", oracle_k, "number of classes");
  oracle->add_option("--mode", oracle_mode, "cap or strict")
      ->check(CLI::IsMember({"cap", "strict"}));
  oracle->add_flag("--min-k", oracle_min_k, "smallest k admitting a coloring");
  oracle->add_option("--node-limit", oracle_nodes, "search node budget (0: default)");

  // bench
  std::vector<int> bench_n;
  std::vector<int> bench_d;
  std::vector<int> bench_k;
  std::vector<int> bench_dmax;
  std::vector<unsigned long long> bench_seeds;
  std::string bench_dist = "fixed";
  bool bench_timing = false;
  std::string bench_csv = "-";
  auto* bench = app.add_subcommand("bench", "run a generated grid, one CSV row per instance");
  bench->add_option("--n", bench_n, "vertex counts")->required()->delimiter(',');
  bench->add_option("--d", bench_d, "back-degree budgets")->required()->delimiter(',');
  bench->add_option("--k", bench_k, "class counts")->required()->delimiter(',');
  bench->add_option("--dmax", bench_dmax, "max degree caps")->required()->delimiter(',');
  bench->add_option("--seeds", bench_seeds, "RNG seeds")->required()->delimiter(',');
  bench->add_option("--dist", bench_dist, "back-degree distribution")
      ->check(CLI::IsMember({"fixed", "uniform"}));
  bench->add_flag("--timing", bench_timing, "report wall time (off: ms column is 0)");
  bench->add_option("--csv", bench_csv, "output path, - for stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return EQT_ERR_USAGE;
  }

  if (color->parsed())
    return cmd_color(color_input, color_k, color_diag, color_rebalance, color_json);
  if (verify->parsed()) return cmd_verify(verify_graph, verify_coloring, verify_k);
  if (gen->parsed()) return cmd_gen(gen_n, gen_d, gen_dmax, gen_seed, gen_dist, gen_out);
  if (oracle->parsed())
    return cmd_oracle(oracle_graph, oracle_k, oracle_mode, oracle_min_k, oracle_nodes);
  if (bench->parsed())
    return cmd_bench(bench_n, bench_d, bench_k, bench_dmax, bench_seeds, bench_dist, bench_timing,
                     bench_csv);
  return EQT_ERR_USAGE;
}
