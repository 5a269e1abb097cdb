#include "stdeg/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "json.hpp"

namespace stdeg {

Graph::Graph(int n) : n_(n) {
  if (n < 0) throw std::invalid_argument("graph: negative vertex count");
  adj_.resize(n);
}

Graph Graph::from_edges(int n, const std::vector<Edge>& edges, bool* dup_warning) {
  Graph g(n);
  if (dup_warning) *dup_warning = false;
  std::set<Edge> seen;
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("graph: vertex index out of bounds");
    if (u == v) throw std::invalid_argument("graph: self-loop");
    Edge e{std::min(u, v), std::max(u, v)};
    if (!seen.insert(e).second) {
      if (dup_warning) *dup_warning = true;
      continue;
    }
    g.adj_[e.first].push_back(e.second);
    g.adj_[e.second].push_back(e.first);
    ++g.m_;
  }
  for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());
  return g;
}

const std::vector<VertexId>& Graph::neighbors(VertexId v) const {
  if (!has_vertex(v)) throw std::out_of_range("graph: no such vertex");
  return adj_[v];
}

bool Graph::adjacent(VertexId u, VertexId v) const {
  const auto& nb = neighbors(u);
  if (!has_vertex(v)) throw std::out_of_range("graph: no such vertex");
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (VertexId u = 0; u < n_; ++u)
    for (VertexId v : adj_[u])
      if (u < v) out.push_back({u, v});
  return out;
}

// --- families ------------------------------------------------------------

Graph path_graph(int k) {
  if (k < 1) throw std::invalid_argument("path: need k >= 1");
  std::vector<Edge> e;
  for (int i = 0; i + 1 < k; ++i) e.push_back({i, i + 1});
  return Graph::from_edges(k, e);
}

Graph cycle_graph(int k) {
  if (k < 3) throw std::invalid_argument("cycle: need k >= 3");
  std::vector<Edge> e;
  for (int i = 0; i < k; ++i) e.push_back({i, (i + 1) % k});
  return Graph::from_edges(k, e);
}

Graph complete_bipartite_graph(int m, int n) {
  if (m < 1 || n < 1) throw std::invalid_argument("complete_bipartite: need m, n >= 1");
  std::vector<Edge> e;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) e.push_back({i, m + j});
  return Graph::from_edges(m + n, e);
}

Graph complete_multipartite_graph(const std::vector<int>& parts) {
  if (parts.empty()) throw std::invalid_argument("complete_multipartite: need >= 1 part");
  for (int p : parts)
    if (p < 1) throw std::invalid_argument("complete_multipartite: part sizes must be >= 1");
  int n = std::accumulate(parts.begin(), parts.end(), 0);
  std::vector<int> part_of(n);
  int at = 0;
  for (size_t p = 0; p < parts.size(); ++p)
    for (int i = 0; i < parts[p]; ++i) part_of[at++] = static_cast<int>(p);
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (part_of[u] != part_of[v]) e.push_back({u, v});
  return Graph::from_edges(n, e);
}

Graph edgeless_graph(int n) {
  if (n < 0) throw std::invalid_argument("edgeless: need n >= 0");
  return Graph(n);
}

Graph build_family(const FamilySpec& spec) {
  using K = FamilySpec::Kind;
  auto want = [&](size_t k) {
    if (spec.params.size() != k)
      throw std::invalid_argument("family: wrong parameter count");
  };
  switch (spec.kind) {
    case K::path: want(1); return path_graph(spec.params[0]);
    case K::cycle: want(1); return cycle_graph(spec.params[0]);
    case K::complete_bipartite:
      want(2);
      return complete_bipartite_graph(spec.params[0], spec.params[1]);
    case K::complete_multipartite:
      return complete_multipartite_graph(spec.params);
    case K::single_vertex: want(0); return Graph(1);
    case K::edgeless: want(1); return edgeless_graph(spec.params[0]);
  }
  throw std::invalid_argument("family: unknown kind");
}

Graph subdivide(const Graph& h, const std::map<Edge, int>& lengths) {
  auto he = h.edges();
  for (const auto& e : he)
    if (!lengths.count(e))
      throw std::invalid_argument("subdivide: missing length for an edge");
  if (lengths.size() != he.size())
    throw std::invalid_argument("subdivide: length given for a non-edge");
  int n = h.vertex_count();
  std::vector<Edge> out;
  int next = n;
  for (const auto& e : he) {  // sorted edge order fixes fresh-id allocation
    int len = lengths.at(e);
    if (len < 1) throw std::invalid_argument("subdivide: lengths must be >= 1");
    int prev = e.first;
    for (int i = 1; i < len; ++i) {
      out.push_back({prev, next});
      prev = next++;
    }
    out.push_back({prev, e.second});
  }
  return Graph::from_edges(next, out);
}

Graph subdivide_uniform(const Graph& h, int length) {
  std::map<Edge, int> lengths;
  for (const auto& e : h.edges()) lengths[e] = length;
  return subdivide(h, lengths);
}

// --- structure -----------------------------------------------------------

KCoreResult k_core(const Graph& g, int k) {
  if (k < 0) throw std::invalid_argument("k_core: need k >= 0");
  int n = g.vertex_count();
  std::vector<bool> present(n, true);
  std::vector<int> deg(n);
  for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
  KCoreResult res;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int v = 0; v < n; ++v) {
      if (present[v] && deg[v] < k) {
        present[v] = false;
        res.deletion_order.push_back(v);
        for (VertexId w : g.neighbors(v))
          if (present[w]) --deg[w];
        changed = true;
        break;  // restart the scan so the smallest eligible id goes first
      }
    }
  }
  for (int v = 0; v < n; ++v)
    if (present[v]) res.core.push_back(v);
  return res;
}

StructureReport structure_queries(const Graph& g) {
  int n = g.vertex_count();
  StructureReport rep;
  std::vector<int> comp(n, -1);
  int nc = 0;
  for (int s = 0; s < n; ++s) {
    if (comp[s] != -1) continue;
    std::vector<VertexId> stack{s}, verts;
    comp[s] = nc;
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      verts.push_back(v);
      for (VertexId w : g.neighbors(v))
        if (comp[w] == -1) {
          comp[w] = nc;
          stack.push_back(w);
        }
    }
    std::sort(verts.begin(), verts.end());
    rep.components.push_back(std::move(verts));
    ++nc;
  }
  // components are discovered from their min id upward, so already ordered

  rep.is_linear_forest = true;
  for (const auto& c : rep.components) {
    int edges_in = 0, maxdeg = 0;
    for (VertexId v : c) {
      maxdeg = std::max(maxdeg, g.degree(v));
      edges_in += g.degree(v);
    }
    edges_in /= 2;
    if (maxdeg > 2 || edges_in != static_cast<int>(c.size()) - 1)
      rep.is_linear_forest = false;
  }

  rep.is_unicyclic = (nc == 1 && n >= 1 && g.edge_count() == n);
  if (rep.is_unicyclic) {
    // strip degree-1 vertices until only the cycle remains, then walk it
    std::vector<bool> present(n, true);
    std::vector<int> deg(n);
    for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
    bool changed = true;
    while (changed) {
      changed = false;
      for (int v = 0; v < n; ++v)
        if (present[v] && deg[v] <= 1) {
          present[v] = false;
          for (VertexId w : g.neighbors(v))
            if (present[w]) --deg[w];
          changed = true;
        }
    }
    VertexId start = -1;
    for (int v = 0; v < n && start == -1; ++v)
      if (present[v]) start = v;
    std::vector<VertexId> cyc{start};
    VertexId prev = -1, cur = start;
    while (true) {
      VertexId nxt = -1;
      for (VertexId w : g.neighbors(cur))
        if (present[w] && w != prev) {
          nxt = w;
          break;
        }
      if (nxt == start || nxt == -1) break;
      cyc.push_back(nxt);
      prev = cur;
      cur = nxt;
    }
    rep.cycle = std::move(cyc);
  }
  return rep;
}

bool is_independent_set(const Graph& g, const std::vector<VertexId>& x) {
  for (VertexId v : x)
    if (!g.has_vertex(v)) throw std::out_of_range("is_independent_set: bad vertex id");
  for (size_t i = 0; i < x.size(); ++i)
    for (size_t j = i + 1; j < x.size(); ++j)
      if (x[i] == x[j] || g.adjacent(x[i], x[j])) return false;
  return true;
}

DegeneracyOrdering degeneracy_ordering(const Graph& g) {
  int n = g.vertex_count();
  DegeneracyOrdering res;
  if (n == 0) return res;
  std::vector<bool> present(n, true);
  std::vector<int> deg(n);
  for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
  std::vector<VertexId> removal;
  int maxback = 0;
  for (int step = 0; step < n; ++step) {
    VertexId best = -1;
    for (int v = 0; v < n; ++v)
      if (present[v] && (best == -1 || deg[v] < deg[best])) best = v;
    maxback = std::max(maxback, deg[best]);
    present[best] = false;
    removal.push_back(best);
    for (VertexId w : g.neighbors(best))
      if (present[w]) --deg[w];
  }
  res.order.assign(removal.rbegin(), removal.rend());
  res.col = maxback + 1;
  return res;
}

Graph induced_subgraph(const Graph& g, std::vector<VertexId> verts,
                       std::vector<VertexId>* old_ids) {
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  std::vector<int> newid(g.vertex_count(), -1);
  for (size_t i = 0; i < verts.size(); ++i) {
    if (!g.has_vertex(verts[i]))
      throw std::out_of_range("induced_subgraph: bad vertex id");
    newid[verts[i]] = static_cast<int>(i);
  }
  std::vector<Edge> e;
  for (VertexId u : verts)
    for (VertexId v : g.neighbors(u))
      if (u < v && newid[v] != -1) e.push_back({newid[u], newid[v]});
  if (old_ids) *old_ids = verts;
  return Graph::from_edges(static_cast<int>(verts.size()), e);
}

// --- serialization -------------------------------------------------------

namespace {

Graph parse_edge_json(const std::string& text, bool* dup_warning) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw GraphParseError(std::string("edge_json: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("edges") ||
      !j["n"].is_number_integer() || !j["edges"].is_array())
    throw GraphParseError("edge_json: expected {\"n\": int, \"edges\": [[u,v],...]}");
  int n = j["n"].get<int>();
  if (n < 0) throw GraphParseError("edge_json: negative n");
  std::vector<Edge> edges;
  for (const auto& item : j["edges"]) {
    if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer() ||
        !item[1].is_number_integer())
      throw GraphParseError("edge_json: each edge must be [u, v]");
    edges.push_back({item[0].get<int>(), item[1].get<int>()});
  }
  try {
    return Graph::from_edges(n, edges, dup_warning);
  } catch (const std::invalid_argument& e) {
    throw GraphParseError(std::string("edge_json: ") + e.what());
  }
}

std::string strip_graph6_header(const std::string& text) {
  std::string s = text;
  const std::string hdr = ">>graph6<<";
  if (s.rfind(hdr, 0) == 0) s = s.substr(hdr.size());
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
  return s;
}

Graph parse_graph6(const std::string& text) {
  std::string s = strip_graph6_header(text);
  if (s.empty()) throw GraphParseError("graph6: empty input");
  for (char c : s)
    if (c < 63 || c > 126) throw GraphParseError("graph6: character out of range");
  if (s[0] == 126) throw GraphParseError("graph6: long form (n > 62) not supported");
  int n = s[0] - 63;
  long long bits = static_cast<long long>(n) * (n - 1) / 2;
  long long need = (bits + 5) / 6;
  if (static_cast<long long>(s.size()) - 1 != need)
    throw GraphParseError("graph6: wrong length for header");
  std::vector<Edge> edges;
  long long k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k) {
      int chunk = s[1 + k / 6] - 63;
      if ((chunk >> (5 - k % 6)) & 1) edges.push_back({i, j});
    }
  // padding bits must be zero
  for (long long p = bits; p < need * 6; ++p) {
    int chunk = s[1 + p / 6] - 63;
    if ((chunk >> (5 - p % 6)) & 1)
      throw GraphParseError("graph6: nonzero padding bits");
  }
  return Graph::from_edges(n, edges);
}

std::string serialize_graph6(const Graph& g) {
  int n = g.vertex_count();
  if (n > 62)
    throw std::invalid_argument("graph6: short form supports at most 62 vertices");
  std::string out(1, static_cast<char>(n + 63));
  long long bits = static_cast<long long>(n) * (n - 1) / 2;
  long long chars = (bits + 5) / 6;
  std::string body(chars, 0);
  long long k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k)
      if (g.adjacent(i, j)) body[k / 6] |= static_cast<char>(1 << (5 - k % 6));
  for (char& c : body) c = static_cast<char>(c + 63);
  return out + body;
}

}  // namespace

Graph parse_graph(const std::string& text, GraphFormat format, bool* dup_warning) {
  if (dup_warning) *dup_warning = false;
  switch (format) {
    case GraphFormat::edge_json: return parse_edge_json(text, dup_warning);
    case GraphFormat::graph6: return parse_graph6(text);
  }
  throw GraphParseError("unknown graph format");
}

std::string serialize_graph(const Graph& g, GraphFormat format) {
  switch (format) {
    case GraphFormat::edge_json: {
      nlohmann::json j;
      j["n"] = g.vertex_count();
      auto arr = nlohmann::json::array();
      for (auto [u, v] : g.edges()) arr.push_back({u, v});
      j["edges"] = arr;
      return j.dump();
    }
    case GraphFormat::graph6: return serialize_graph6(g);
  }
  throw std::invalid_argument("unknown graph format");
}

}  // namespace stdeg
