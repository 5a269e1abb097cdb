#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "stdeg/graph.hpp"
#include "stdeg/search.hpp"

namespace stdeg {

// An a-fold cover of the base graph: vertex v's fiber is the color block
// {0..a-1} (cover vertex = v*a + color), and each base edge carries a
// partial matching between the two fibers, stored as (color in u's fiber,
// color in v's fiber) pairs for the edge's sorted (u, v) orientation.
struct Cover {
  int a = 1;
  std::vector<Edge> edge_list;  // base edges, sorted
  std::vector<std::vector<std::pair<int, int>>> matchings;  // parallel to edge_list
};

struct CoverSpec {
  enum class Kind { identity, permutation_on_edges, random };
  Kind kind = Kind::identity;
  // permutation_on_edges: perm[e][i] = matched color on the higher endpoint;
  // edges not listed get the identity
  std::map<Edge, std::vector<int>> perms;
  uint64_t seed = 0;  // random: one uniform permutation per edge
};

Cover build_cover(const Graph& g, int a, const CoverSpec& spec);

// Checks fiber layout, edge coverage, color ranges, and that every matching
// is one-to-one in both directions. Throws std::invalid_argument on failure.
void validate_cover(const Graph& g, const Cover& cover);

// A b-fold independent transversal: b colors chosen in every fiber, no two
// chosen cover-vertices joined by a matching edge.
struct Transversal {
  std::vector<std::vector<int>> chosen;  // per base vertex, sorted colors
};

std::optional<Transversal> find_transversal(const Graph& g, const Cover& cover,
                                            int b);

// Re-checks a claimed transversal from scratch (sizes, color ranges,
// independence across every matching).
bool validate_transversal(const Graph& g, const Cover& cover,
                          const Transversal& t, int b);

enum class DpVerdict { holds, refuted, inconclusive };

struct Strategy {
  enum class Kind { exhaustive_normalized, sampled } kind =
      Kind::exhaustive_normalized;
  long long samples = 200;  // sampled only
  uint64_t seed = 1;        // sampled only
};

struct DpCheckResult {
  DpVerdict verdict = DpVerdict::inconclusive;
  long long covers_checked = 0;
  long long covers_total = -1;  // size of the enumerated space, when finite
  std::optional<Cover> witness;  // a cover with no transversal, when refuted
};

// Decides (a, b)-DP-colorability as far as the strategy allows. Matchings
// may be normalized to the identity on a spanning tree (relabeling fibers),
// and a cover with a partial matching admits at least the transversals of
// its perfect completion, so the exhaustive strategy enumerates exactly the
// perfect-matching covers that are identity on a BFS spanning tree — "holds"
// is only ever reported from that exhaustive enumeration (connected g only).
// The sampled strategy draws seeded random normalized covers and can only
// refute or be inconclusive.
DpCheckResult check_dp_colorable(const Graph& g, int a, int b,
                                 const Strategy& strategy);

struct StdpReport {
  Answer degeneracy = Answer::budget_exhausted;
  long long states_expanded = 0;
  bool dp_checked = false;
  DpCheckResult dp;
  // true iff degenerate at (s, t) yet some (s+t, t) cover has no transversal,
  // which would contradict the implication the toolkit is built around
  bool counterexample = false;
};

// Cross-check: unrestricted (s, t)-degeneracy implies (s+t, t)-DP-colorable.
StdpReport check_stdp_implication(const Graph& g, int s, int t,
                                  const Strategy& strategy,
                                  const SearchConfig& cfg = {});

struct MultipartiteBound {
  double bound = 1.0;                // 1 / p_star[0]
  std::vector<double> p_star;        // p*_1 .. p*_m (p*_m = 1)
  std::vector<double> residuals;     // |p - p*_{j+1} (1-p)^{n_j}| at each root
  bool order_scan = false;           // exploratory: set when scanning orders
  double order_min = 0, order_max = 0;
};

// Fractional DP bound for the complete multipartite graph with the given
// part sizes: p*_m = 1 and p*_j solves p = p*_{j+1} (1-p)^{n_j}, each root
// found by bisection to 1e-12; the bound is 1/p*_1. order_scan additionally
// evaluates every part ordering (exploratory; the written bound fixes the
// given order).
MultipartiteBound multipartite_bound(const std::vector<int>& parts,
                                     bool order_scan = false);

}  // namespace stdeg
