#include "oracle.hpp"

#include <algorithm>
#include <stdexcept>

#include "common.hpp"

namespace equitree {

namespace {

// union-find with an undo stack; no path compression so undo stays exact
struct RollbackUF {
  std::vector<int> parent, rank_;
  struct Change { int child, old_rank_root; };
  std::vector<Change> log;

  explicit RollbackUF(int n) : parent(n), rank_(n, 0) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int x) const {
    while (parent[x] != x) x = parent[x];
    return x;
  }
  // false and no change when both ends already share a root
  bool unite(int a, int b) {
    int ra = find(a), rb = find(b);
    if (ra == rb) return false;
    if (rank_[ra] > rank_[rb]) std::swap(ra, rb);
    log.push_back({ra, (rank_[ra] == rank_[rb]) ? rb : -1});
    parent[ra] = rb;
    if (rank_[ra] == rank_[rb]) ++rank_[rb];
    return true;
  }
  size_t mark() const { return log.size(); }
  void rollback(size_t to) {
    while (log.size() > to) {
      auto ch = log.back();
      log.pop_back();
      int root = parent[ch.child];
      parent[ch.child] = ch.child;
      if (ch.old_rank_root >= 0) --rank_[root];
    }
  }
};

struct Search {
  const Graph& g;
  int k;
  OracleMode mode;
  long long node_limit;
  long long q, r;  // n = q*k + r
  long long cap_hi;

  std::vector<int> color;
  std::vector<long long> size;
  int hi_classes = 0;  // classes at size q+1 (strict mode bookkeeping)
  int used_classes = 0;
  RollbackUF uf;
  long long nodes = 0;
  bool budget_hit = false;

  Search(const Graph& g_, int k_, OracleMode mode_, long long limit)
      : g(g_), k(k_), mode(mode_), node_limit(limit), uf(g_.n) {
    color.assign(g.n, -1);
    size.assign(k, 0);
    q = g.n / k;
    r = g.n % k;
    cap_hi = ceil_div(g.n, k);
  }

  long long class_cap(int c) const {
    if (mode == OracleMode::CapOnly) return cap_hi;
    // strict: at most r classes may reach q+1
    if (r == 0) return q;
    return (size[c] == q && hi_classes >= r) ? q : q + 1;
  }

  // lower-bound feasibility for strict mode: the remaining vertices must be
  // able to lift every class to at least q
  bool strict_feasible(int placed) const {
    if (mode == OracleMode::CapOnly) return true;
    long long deficit = 0;
    for (int c = 0; c < k; ++c)
      if (size[c] < q) deficit += q - size[c];
    return deficit <= g.n - placed;
  }

  bool dfs(int v) {
    if (v == g.n) return true;
    if (nodes >= node_limit) {
      budget_hit = true;
      return false;
    }
    int try_up_to = std::min(used_classes, k - 1);  // one fresh class at most
    for (int c = 0; c <= try_up_to; ++c) {
      ++nodes;
      if (size[c] + 1 > class_cap(c)) continue;

      size_t mk = uf.mark();
      bool cycle = false;
      for (int w : g.adj[v]) {
        if (w > v || color[w] != c) continue;
        if (!uf.unite(v, w)) {
          cycle = true;
          break;
        }
      }
      if (!cycle) {
        color[v] = c;
        ++size[c];
        bool was_hi = (size[c] == q + 1);
        if (was_hi) ++hi_classes;
        bool was_fresh = (c == used_classes);
        if (was_fresh) ++used_classes;

        if (strict_feasible(v + 1) && dfs(v + 1)) return true;

        if (was_fresh) --used_classes;
        if (was_hi) --hi_classes;
        --size[c];
        color[v] = -1;
      }
      uf.rollback(mk);
      if (budget_hit) return false;
    }
    return false;
  }
};

}  // namespace

OracleResult oracle_solve(const Graph& g, int k, OracleMode mode, long long node_limit) {
  if (g.n > 20) throw std::invalid_argument("oracle_solve: graphs larger than 20 vertices");
  if (k < 1) throw std::invalid_argument("oracle_solve: k must be >= 1");

  OracleResult res;
  if (g.n == 0) {
    res.status = OracleStatus::Found;
    return res;
  }
  Search s(g, k, mode, node_limit);
  bool ok = s.dfs(0);
  res.nodes = s.nodes;
  if (ok) {
    res.status = OracleStatus::Found;
    res.colors = s.color;
  } else {
    res.status = s.budget_hit ? OracleStatus::BudgetExceeded : OracleStatus::NotExist;
  }
  return res;
}

MinKResult oracle_min_k(const Graph& g, OracleMode mode, long long node_limit) {
  MinKResult out;
  for (int k = 1; k <= std::max(1, g.n); ++k) {
    OracleResult r = oracle_solve(g, k, mode, node_limit);
    out.nodes += r.nodes;
    if (r.status == OracleStatus::Found) {
      out.status = OracleStatus::Found;
      out.k = k;
      return out;
    }
    if (r.status == OracleStatus::BudgetExceeded) {
      out.status = OracleStatus::BudgetExceeded;
      out.k = k;
      return out;
    }
  }
  out.status = OracleStatus::NotExist;  // unreachable: k = n always succeeds
  return out;
}

}  // namespace equitree
