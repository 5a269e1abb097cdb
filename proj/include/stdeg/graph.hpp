#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace stdeg {

using VertexId = int;
using Edge = std::pair<VertexId, VertexId>;  // always stored with first < second

// Simple undirected graph on dense 0-based vertex ids. The empty graph
// (n = 0) is a first-class value. Adjacency lists are kept sorted so that
// neighbor iteration order is deterministic everywhere.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  // Builds from an edge list. Out-of-range endpoints and self-loops throw;
  // duplicate edges are deduplicated, and *dup_warning (if non-null) is set
  // when at least one duplicate was dropped.
  static Graph from_edges(int n, const std::vector<Edge>& edges,
                          bool* dup_warning = nullptr);

  int vertex_count() const { return n_; }
  int edge_count() const { return m_; }
  const std::vector<VertexId>& neighbors(VertexId v) const;
  int degree(VertexId v) const { return static_cast<int>(neighbors(v).size()); }
  bool adjacent(VertexId u, VertexId v) const;
  bool has_vertex(VertexId v) const { return v >= 0 && v < n_; }

  // All edges as (min,max) pairs in lexicographic order.
  std::vector<Edge> edges() const;

  bool operator==(const Graph&) const = default;

 private:
  int n_ = 0;
  int m_ = 0;
  std::vector<std::vector<VertexId>> adj_;
};

// --- family builders ---------------------------------------------------

struct FamilySpec {
  enum class Kind {
    path,                  // params: {k}, k >= 1 vertices
    cycle,                 // params: {k}, k >= 3
    complete_bipartite,    // params: {m, n}, m, n >= 1
    complete_multipartite, // params: part sizes, each >= 1
    single_vertex,         // no params
    edgeless,              // params: {n}, n >= 0
  };
  Kind kind;
  std::vector<int> params;
};

Graph build_family(const FamilySpec& spec);

// Convenience wrappers used throughout the tests and generators.
Graph path_graph(int k);
Graph cycle_graph(int k);
Graph complete_bipartite_graph(int m, int n);
Graph complete_multipartite_graph(const std::vector<int>& parts);
Graph edgeless_graph(int n);

// Replaces every edge of h by a path with lengths[e] edges (length 1 keeps
// the edge). Every edge of h must have an entry; subdivision vertices get
// fresh ids starting at h.vertex_count(), allocated in sorted edge order.
Graph subdivide(const Graph& h, const std::map<Edge, int>& lengths);
Graph subdivide_uniform(const Graph& h, int length);

// --- structure queries --------------------------------------------------

struct KCoreResult {
  std::vector<VertexId> core;            // sorted; empty when the core is empty
  std::vector<VertexId> deletion_order;  // vertices deleted, in deletion order
};

// Maximal induced subgraph of minimum degree >= k, computed by repeatedly
// deleting the smallest-id vertex of degree < k.
KCoreResult k_core(const Graph& g, int k);

struct StructureReport {
  std::vector<std::vector<VertexId>> components;  // each sorted; ordered by min id
  bool is_linear_forest = false;  // every component is a path (K_1 counts)
  bool is_unicyclic = false;      // connected with exactly one cycle
  std::optional<std::vector<VertexId>> cycle;  // the unique cycle, in cyclic order
};

StructureReport structure_queries(const Graph& g);

bool is_independent_set(const Graph& g, const std::vector<VertexId>& x);

struct DegeneracyOrdering {
  std::vector<VertexId> order;  // each vertex's earlier neighbors number < col
  int col = 0;                  // degeneracy + 1 (coloring number); 0 for n = 0
};

// Repeated minimum-degree removal (smallest id breaks ties); order is the
// reverse of the removal order, so back-degrees are bounded by col - 1.
DegeneracyOrdering degeneracy_ordering(const Graph& g);

// Induced subgraph on the given vertices (sorted, deduplicated), reindexed
// densely; old_ids (if non-null) receives new-id -> original-id.
Graph induced_subgraph(const Graph& g, std::vector<VertexId> verts,
                       std::vector<VertexId>* old_ids = nullptr);

// --- serialization ------------------------------------------------------

enum class GraphFormat { edge_json, graph6 };

struct GraphParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// edge_json: {"n": <int>, "edges": [[u,v], ...]} with the same duplicate
// policy as from_edges. graph6: standard short form, one graph per line,
// n <= 62; an optional ">>graph6<<" prefix is tolerated.
Graph parse_graph(const std::string& text, GraphFormat format,
                  bool* dup_warning = nullptr);
std::string serialize_graph(const Graph& g, GraphFormat format);

}  // namespace stdeg
