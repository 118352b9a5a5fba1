#include "layered.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace equitree {

namespace {

// residual ordering for seed extraction: max degree first, ties by lowest id
struct MaxDegOrder {
  bool operator()(const std::pair<int, int>& a, const std::pair<int, int>& b) const {
    if (a.first != b.first) return a.first > b.first;
    return a.second < b.second;
  }
};

const Base3Plan& require_base3(const SolvePlan& plan) {
  if (!plan.base3) throw std::logic_error("layered: plan has no base-3 ladder");
  return *plan.base3;
}

}  // namespace

std::vector<int> LayerPlan::layer_vertices(int i) const {
  if (i == stages + 1) return remainder;
  std::vector<int> out = seeds[i];
  out.insert(out.end(), anchored[i].begin(), anchored[i].end());
  return out;
}

Outcome<LayerPlan> build_layer_plan(const Graph& g, const SolvePlan& plan) {
  const Base3Plan& b3 = require_base3(plan);
  const long long attach_threshold = (2LL * plan.alpha - 4) * plan.d;

  Outcome<LayerPlan> out;
  LayerPlan lp;
  lp.stages = b3.stages;
  lp.seeds.assign(lp.stages + 1, {});
  lp.anchored.assign(lp.stages + 1, {});
  lp.prefix_size.assign(lp.stages + 1, 0);
  lp.residual_max_degree.assign(lp.stages + 1, 0);

  std::vector<char> in_prefix(g.n, 0);
  std::vector<long long> attach_count(g.n, 0);
  std::vector<int> deg(g.n);
  std::set<std::pair<int, int>, MaxDegOrder> live;
  for (int v = 0; v < g.n; ++v) {
    deg[v] = g.degree(v);
    live.insert({deg[v], v});
  }

  auto enter_prefix = [&](int v) {
    live.erase({deg[v], v});
    in_prefix[v] = 1;
    for (int w : g.adj[v]) {
      ++attach_count[w];
      if (!in_prefix[w]) {
        live.erase({deg[w], w});
        --deg[w];
        live.insert({deg[w], w});
      }
    }
  };

  long long remaining = g.n;
  for (int i = 1; i <= lp.stages; ++i) {
    const long long need = (b3.quota[i] - b3.quota[i - 1]) * plan.k;
    if (remaining < need) {
      SolveFailure f;
      f.kind = FailKind::NotEnoughVertices;
      f.layer = i;
      f.detail = "layer " + std::to_string(i) + " needs " + std::to_string(need) +
                 " seeds, only " + std::to_string(remaining) + " vertices left";
      out.failure = f;
      return out;
    }
    for (long long c = 0; c < need; ++c) {
      int v = live.begin()->second;
      enter_prefix(v);
      lp.seeds[i].push_back(v);
    }
    remaining -= need;

    // absorb everything strongly attached to the prefix; restart the scan
    // after each insertion so the set is closed on exit. A zero threshold
    // (d = 0, reachable only when the layered path is forced) would absorb
    // every vertex, so the anchored rule is inert there.
    for (; attach_threshold > 0;) {
      int found = -1;
      for (int v = 0; v < g.n; ++v) {
        if (!in_prefix[v] && attach_count[v] >= attach_threshold) {
          found = v;
          break;
        }
      }
      if (found < 0) break;
      enter_prefix(found);
      lp.anchored[i].push_back(found);
      --remaining;
    }

    lp.prefix_size[i] = g.n - remaining;
    lp.residual_max_degree[i] = max_degree_excluding(g, in_prefix);
  }

  for (int v = 0; v < g.n; ++v)
    if (!in_prefix[v]) lp.remainder.push_back(v);

  out.value = std::move(lp);
  return out;
}

int expand_witness_layering(const PartialColoring& state, const std::vector<int>& roots,
                            WitnessLayering& out, const std::function<bool(int)>& stop) {
  const Graph& g = state.graph();
  const int k = state.k();
  out.covered.clear();
  out.index_of.assign(k, -1);

  auto cover = [&](int cls, int parent, int witness) -> int {
    out.index_of[cls] = static_cast<int>(out.covered.size());
    out.covered.push_back({cls, parent, witness});
    if (stop && stop(cls)) return static_cast<int>(out.covered.size()) - 1;
    return -1;
  };

  for (int c : roots) {
    int hit = cover(c, -1, -1);
    if (hit >= 0) return hit;
  }

  std::vector<int> cnt(k, 0);
  std::vector<int> touched;
  touched.reserve(16);

  bool progress = true;
  while (progress) {
    progress = false;
    for (int c = 0; c < k && !progress; ++c) {
      if (out.index_of[c] >= 0) continue;
      for (int x : state.members(c)) {
        if (state.frozen(x)) continue;
        for (int t : touched) cnt[t] = 0;
        touched.clear();
        for (int w : g.adj[x]) {
          int cw = state.color_of(w);
          if (cw < 0) continue;
          if (cnt[cw] == 0) touched.push_back(cw);
          ++cnt[cw];
        }
        int parent = -1;
        for (const auto& e : out.covered) {
          if (cnt[e.cls] <= 1) {
            parent = e.cls;
            break;
          }
        }
        if (parent >= 0) {
          int hit = cover(c, parent, x);
          if (hit >= 0) return hit;
          progress = true;  // restart the class scan
          break;
        }
      }
    }
  }
  return -1;
}

WitnessLayering build_witness_layering(const PartialColoring& state, long long cap) {
  std::vector<int> roots;
  for (int c = 0; c < state.k(); ++c)
    if (state.class_size(c) < cap) roots.push_back(c);
  WitnessLayering lay;
  expand_witness_layering(state, roots, lay, nullptr);
  return lay;
}

std::vector<CoveredClass> witness_path(const WitnessLayering& lay, int covered_index) {
  std::vector<CoveredClass> path;
  int idx = covered_index;
  for (;;) {
    const CoveredClass& e = lay.covered[idx];
    path.push_back(e);
    if (e.parent < 0) break;
    idx = lay.index_of[e.parent];
  }
  return path;
}

void switch_witnesses(PartialColoring& state, const std::vector<CoveredClass>& path) {
  // the root end moves first: each class has already lost its witness when
  // the one from above arrives
  for (int i = static_cast<int>(path.size()) - 2; i >= 0; --i)
    state.move(path[i].witness, path[i + 1].cls);
}

std::optional<SolveFailure> color_layer_one(const Graph& g, const SolvePlan& plan,
                                            const LayerPlan& lp, PartialColoring& state) {
  const Base3Plan& b3 = require_base3(plan);
  const long long cap = b3.caps[1];
  const int k = state.k();

  std::vector<int> verts = lp.layer_vertices(1);
  auto [sub, to_global] = induced_subgraph(g, verts);
  DegeneracyOrdering ord = degeneracy_ordering(sub);

  std::vector<int> cnt(k, 0);
  std::vector<int> touched;
  for (int local : ord.order) {
    const int u = to_global[local];
    for (int t : touched) cnt[t] = 0;
    touched.clear();
    for (int w : g.adj[u]) {
      int cw = state.color_of(w);
      if (cw < 0) continue;
      if (cnt[cw] == 0) touched.push_back(cw);
      ++cnt[cw];
    }
    int best = -1;
    long long best_size = cap;
    for (int c = 0; c < k; ++c) {
      if (cnt[c] >= 2) continue;
      long long sz = state.class_size(c);
      if (sz < best_size) {
        best_size = sz;
        best = c;
      }
    }
    if (best < 0) {
      SolveFailure f;
      f.kind = FailKind::NoClassAvailable;
      f.vertex = u;
      f.layer = 1;
      f.detail = "no class under the layer-1 cap with <= 1 neighbor";
      return f;
    }
    state.place(u, best);
  }
  return std::nullopt;
}

std::optional<SolveFailure> color_layer_i(const Graph& g, const SolvePlan& plan,
                                          const LayerPlan& lp, int i, PartialColoring& state,
                                          LayeredStats* stats) {
  const Base3Plan& b3 = require_base3(plan);
  const long long cap = b3.caps[i];
  const int k = state.k();

  std::vector<int> verts = lp.layer_vertices(i);
  auto [sub, to_global] = induced_subgraph(g, verts);
  DegeneracyOrdering ord = degeneracy_ordering(sub);

  std::vector<int> u_cnt(k, 0);
  std::vector<int> touched;
  std::vector<int> roots;
  WitnessLayering lay;

  for (int local : ord.order) {
    const int u = to_global[local];
    for (int t : touched) u_cnt[t] = 0;
    touched.clear();
    for (int w : g.adj[u]) {
      int cw = state.color_of(w);
      if (cw < 0) continue;
      if (u_cnt[cw] == 0) touched.push_back(cw);
      ++u_cnt[cw];
    }

    roots.clear();
    for (int c = 0; c < k; ++c)
      if (state.class_size(c) < cap) roots.push_back(c);
    if (roots.empty()) {
      SolveFailure f;
      f.kind = FailKind::EmptyDeficitSet;
      f.vertex = u;
      f.layer = i;
      f.detail = "every class already at the layer cap";
      return f;
    }

    int hit = expand_witness_layering(state, roots, lay,
                                      [&](int cls) { return u_cnt[cls] <= 1; });
    if (stats)
      stats->max_witness_classes =
          std::max(stats->max_witness_classes, static_cast<long long>(lay.covered.size()));
    if (hit < 0) {
      SolveFailure f;
      f.kind = FailKind::NoAugmentingClass;
      f.vertex = u;
      f.layer = i;
      f.witness_classes = static_cast<long long>(lay.covered.size());
      f.detail = "layering closed with no class having <= 1 neighbor of the vertex";
      return f;
    }
    std::vector<CoveredClass> path = witness_path(lay, hit);
    switch_witnesses(state, path);
    if (stats) stats->switches += static_cast<long long>(path.size()) - 1;
    state.place(u, path.front().cls);
  }

  for (int v : verts) state.freeze(v);
  return std::nullopt;
}

std::optional<SolveFailure> solve_layered(const Graph& g, const SolvePlan& plan,
                                          PartialColoring& state, LayerPlan* out_plan,
                                          LayeredStats* stats) {
  SolvePlan eff = plan;
  if (!eff.base3) eff.base3 = base3_decompose(std::max(1LL, eff.t), std::max(8, eff.alpha));

  Outcome<LayerPlan> built = build_layer_plan(g, eff);
  if (!built.ok()) return built.failure;
  const LayerPlan& lp = *built.value;
  if (out_plan) *out_plan = lp;

  if (auto fail = color_layer_one(g, eff, lp, state)) return fail;
  for (int v : lp.layer_vertices(1)) state.freeze(v);

  for (int i = 2; i <= lp.stages + 1; ++i)
    if (auto fail = color_layer_i(g, eff, lp, i, state, stats)) return fail;
  return std::nullopt;
}

namespace {

IneqCheck make_check(std::string name, std::string rel, Ratio lhs, Ratio rhs, bool pass,
                     bool skipped = false) {
  IneqCheck c;
  c.name = std::move(name);
  c.relation = std::move(rel);
  c.lhs = lhs;
  c.rhs = rhs;
  c.pass = pass;
  c.skipped = skipped;
  return c;
}

}  // namespace

DiagnosticsReport run_diagnostics(const Graph& g, const SolvePlan& plan, const LayerPlan& lp) {
  const Base3Plan& b3 = require_base3(plan);
  const long long alpha = plan.alpha;
  const long long d = plan.d;
  const long long k = plan.k;
  const long long t = b3.t;
  const long long den = 2 * alpha - 5;
  const long long attach_threshold = (2 * alpha - 4) * d;

  DiagnosticsReport rep;
  std::vector<char> in_prefix(g.n, 0);
  long long edges_in = 0;
  long long anchored_sum = 0;

  for (int i = 1; i <= lp.stages; ++i) {
    for (int v : lp.layer_vertices(i)) {
      edges_in += neighbors_in(g, v, in_prefix);
      in_prefix[v] = 1;
    }
    anchored_sum += static_cast<long long>(lp.anchored[i].size());
    const long long h = lp.prefix_size[i];
    const long long qk = b3.quota[i] * k;

    LayerDiagnostics ld;
    ld.layer = i;
    ld.checks.push_back(make_check("prefix_count_identity", "==", {h, 1},
                                   {qk + anchored_sum, 1}, h == qk + anchored_sum));
    ld.checks.push_back(make_check("anchored_edge_floor", ">=", {edges_in, 1},
                                   {attach_threshold * anchored_sum, 1},
                                   edges_in >= attach_threshold * anchored_sum));
    {
      bool skip = (d * h == 0);
      ld.checks.push_back(make_check("prefix_edge_ceiling", "<", {edges_in, 1}, {d * h, 1},
                                     skip || edges_in < d * h, skip));
    }
    ld.checks.push_back(make_check("anchored_share_bound", "<", {anchored_sum, 1}, {qk, den},
                                   anchored_sum * den < qk));
    ld.checks.push_back(make_check("prefix_share_bound", "<", {h, 1},
                                   {(2 * alpha - 4) * qk, den}, h * den < (2 * alpha - 4) * qk));
    rep.layers.push_back(std::move(ld));
  }

  if (lp.stages >= 1) {
    long long lhs = b3.quota[1] * plan.max_deg;
    for (int i = 1; i <= lp.stages; ++i)
      lhs += (b3.quota[i + 1] - b3.quota[i]) * lp.residual_max_degree[i];
    long long rhs_num = 6LL * plan.max_deg + 10 * d * t;
    rep.global.push_back(make_check("residual_degree_sum", "<=", {lhs, 1}, {rhs_num, 3},
                                    3 * lhs <= rhs_num));
  }

  const bool above_threshold = alpha * t >= (2 * alpha - 1) * plan.beta;
  for (int i = 2; i <= lp.stages + 1; ++i) {
    bool pass = 2 * b3.caps[i - 1] <= b3.caps[i];
    rep.global.push_back(make_check("cap_ratio_" + std::to_string(i), "<=",
                                    {2 * b3.caps[i - 1], 1}, {b3.caps[i], 1},
                                    !above_threshold || pass, !above_threshold));
  }

  for (const auto& ld : rep.layers)
    for (const auto& c : ld.checks)
      if (!c.pass && !c.skipped) ++rep.violations;
  for (const auto& c : rep.global)
    if (!c.pass && !c.skipped) ++rep.violations;
  return rep;
}

}  // namespace equitree
