#include "graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <unordered_set>

namespace equitree {

namespace {

const char* kind_name(ParseError::Kind k) {
  switch (k) {
    case ParseError::Kind::SelfLoop: return "self loop";
    case ParseError::Kind::DuplicateEdge: return "duplicate edge";
    case ParseError::Kind::BadToken: return "bad token";
    case ParseError::Kind::VertexOutOfRange: return "vertex out of range";
  }
  return "parse error";
}

// decimal unsigned int, full token must be consumed
bool parse_id(std::string_view tok, long long& out) {
  if (tok.empty()) return false;
  auto res = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return res.ec == std::errc() && res.ptr == tok.data() + tok.size() && out >= 0;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

constexpr long long kMaxVertexId = 100'000'000;

}  // namespace

ParseError::ParseError(Kind k, int line_no, const std::string& msg)
    : std::runtime_error("line " + std::to_string(line_no) + ": " + kind_name(k) +
                         (msg.empty() ? "" : ": " + msg)),
      kind(k),
      line(line_no) {}

int Graph::max_degree() const {
  int best = 0;
  for (const auto& a : adj) best = std::max(best, static_cast<int>(a.size()));
  return best;
}

Graph parse_edge_list(std::string_view text) {
  std::vector<std::pair<int, int>> edges;
  std::unordered_set<long long> seen;
  long long declared_n = -1;
  long long max_id = -1;
  bool any_content = false;

  int line_no = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, (nl == std::string_view::npos ? text.size() : nl) - pos);
    pos = (nl == std::string_view::npos) ? text.size() + 1 : nl + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    if (line[0] == '#') continue;

    auto toks = split_ws(line);
    if (toks.empty()) continue;

    if (!any_content && toks[0] == "v") {
      any_content = true;
      long long n = -1;
      if (toks.size() != 2 || !parse_id(toks[1], n) || n > kMaxVertexId)
        throw ParseError(ParseError::Kind::BadToken, line_no, "malformed header");
      declared_n = n;
      continue;
    }
    any_content = true;

    long long u = -1, v = -1;
    if (toks.size() != 2 || !parse_id(toks[0], u) || !parse_id(toks[1], v))
      throw ParseError(ParseError::Kind::BadToken, line_no, std::string(line));
    if (u > kMaxVertexId || v > kMaxVertexId)
      throw ParseError(ParseError::Kind::VertexOutOfRange, line_no, std::string(line));
    if (declared_n >= 0 && (u >= declared_n || v >= declared_n))
      throw ParseError(ParseError::Kind::VertexOutOfRange, line_no, std::string(line));
    if (u == v) throw ParseError(ParseError::Kind::SelfLoop, line_no, std::string(line));

    long long lo = std::min(u, v), hi = std::max(u, v);
    long long key = lo * (kMaxVertexId + 1) + hi;
    if (!seen.insert(key).second)
      throw ParseError(ParseError::Kind::DuplicateEdge, line_no, std::string(line));
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    max_id = std::max(max_id, hi);
  }

  int n = static_cast<int>(declared_n >= 0 ? declared_n : max_id + 1);
  return graph_from_edges(n, edges);
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_edge_list(ss.str());
}

std::string write_edge_list(const Graph& g) {
  std::string out = "v " + std::to_string(g.n) + "\n";
  for (int u = 0; u < g.n; ++u)
    for (int w : g.adj[u])
      if (w > u) {
        out += std::to_string(u);
        out += ' ';
        out += std::to_string(w);
        out += '\n';
      }
  return out;
}

Graph graph_from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g;
  g.n = n;
  g.m = static_cast<long long>(edges.size());
  g.adj.assign(n, {});
  for (auto [u, v] : edges) {
    g.adj[u].push_back(v);
    g.adj[v].push_back(u);
  }
  for (auto& a : g.adj) std::sort(a.begin(), a.end());
  return g;
}

DegeneracyOrdering degeneracy_ordering(const Graph& g) {
  DegeneracyOrdering out;
  out.order.resize(g.n);
  out.pos.resize(g.n);
  out.back_degree.assign(g.n, 0);
  out.d = 0;

  std::vector<int> deg(g.n);
  std::set<std::pair<int, int>> live;  // (degree, id), min first
  for (int v = 0; v < g.n; ++v) {
    deg[v] = g.degree(v);
    live.insert({deg[v], v});
  }
  std::vector<char> removed(g.n, 0);
  for (int i = 0; i < g.n; ++i) {
    auto [dv, v] = *live.begin();
    live.erase(live.begin());
    removed[v] = 1;
    out.back_degree[v] = dv;
    out.d = std::max(out.d, dv);
    out.order[g.n - 1 - i] = v;  // ordering is the reversed deletion sequence
    for (int w : g.adj[v]) {
      if (removed[w]) continue;
      live.erase({deg[w], w});
      --deg[w];
      live.insert({deg[w], w});
    }
  }
  for (int i = 0; i < g.n; ++i) out.pos[out.order[i]] = i;
  return out;
}

int neighbors_in(const Graph& g, int v, const std::vector<char>& mask) {
  int c = 0;
  for (int w : g.adj[v]) c += mask[w] ? 1 : 0;
  return c;
}

namespace {
int uf_find(std::vector<int>& parent, int x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}
}  // namespace

bool induces_forest(const Graph& g, std::span<const int> verts) {
  if (verts.empty()) return true;
  std::vector<int> local(g.n, -1);
  for (size_t i = 0; i < verts.size(); ++i) local[verts[i]] = static_cast<int>(i);
  std::vector<int> parent(verts.size());
  for (size_t i = 0; i < verts.size(); ++i) parent[i] = static_cast<int>(i);
  for (int v : verts) {
    for (int w : g.adj[v]) {
      if (w >= v || local[w] < 0) continue;  // each internal edge once
      int a = uf_find(parent, local[v]);
      int b = uf_find(parent, local[w]);
      if (a == b) return false;
      parent[a] = b;
    }
  }
  return true;
}

int max_degree_excluding(const Graph& g, const std::vector<char>& excluded) {
  int best = 0;
  for (int v = 0; v < g.n; ++v) {
    if (excluded[v]) continue;
    int d = 0;
    for (int w : g.adj[v]) d += excluded[w] ? 0 : 1;
    best = std::max(best, d);
  }
  return best;
}

std::pair<Graph, std::vector<int>> induced_subgraph(const Graph& g,
                                                    std::span<const int> verts) {
  std::vector<int> vs(verts.begin(), verts.end());
  std::sort(vs.begin(), vs.end());
  std::vector<int> local(g.n, -1);
  for (size_t i = 0; i < vs.size(); ++i) local[vs[i]] = static_cast<int>(i);
  std::vector<std::pair<int, int>> edges;
  for (int v : vs)
    for (int w : g.adj[v])
      if (w < v && local[w] >= 0) edges.emplace_back(local[v], local[w]);
  return {graph_from_edges(static_cast<int>(vs.size()), edges), vs};
}

}  // namespace equitree
