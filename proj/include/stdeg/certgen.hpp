#pragma once

#include <vector>

#include "stdeg/engine.hpp"
#include "stdeg/graph.hpp"

namespace stdeg {

// --- family plans and certificates ---------------------------------------
//
// Each closed-form family comes in two flavors: the staged plan with the
// exact non-uniform weights the construction is proved at, and the uniform
// certificate obtained by the monotone lift. Vertex v_i of the write-up
// maps to id i-1. All outputs verify complete (the generators replay their
// own output before returning it).

// C_{2r} plan at the staged weights: stage mu = t down to 1 shades each even
// vertex once, saving its odd predecessor; then t shades of each odd vertex.
// 2rt ops. Requires r >= 2, t >= 1.
Certificate even_cycle_plan(int r, int t);

// The plan lifted to uniform (t+1, t) on C_{2r}.
Certificate cert_even_cycle(int r, int t);

// P_k with endpoint shields 1, interior shields r+1, targets r. Requires
// k = 1 (single vertex, r shades) or k >= 2r-1; k*r ops. Longer paths are
// peeled from the far end (r shades of v_k) down to the k = 2r-1 core plan.
Certificate cert_path(int k, int r);

// C_{2r+1} at uniform (r+1, r): r shades of v_2r, r shades of v_2r+1, then
// the surviving path's plan. (2r+1)r ops. Requires r >= 1.
Certificate cert_odd_cycle(int r);

// K_{m,n} plan at the staged weights (parts A of size m, B of size n; B ids
// follow A ids): stage mu = t down to 1 shades every a in A once per b in B,
// saving that b; then nt shades of each B vertex. (m+n)nt ops.
// Requires 2 <= m <= n, t >= 1.
Certificate complete_bipartite_plan(int m, int n, int t);

// The plan lifted to uniform (m(n-1)t + 1, nt) on K_{m,n}.
Certificate cert_complete_bipartite(int m, int n, int t);

// --- reduction and transformers ------------------------------------------

// For x an independent set containing every vertex of degree >= 3, where
// g - x is a linear forest whose components have order >= 2r-1: shades each
// x vertex r times (ascending id), then runs each component's path plan,
// lifted from the lemma's lower-bound shields to the replayed post-shade
// shields. Output verifies complete on g at uniform (r+1, r).
Certificate cert_linear_forest_reduction(const Graph& g,
                                         const std::vector<VertexId>& x, int r);

// base must verify complete on g_prime minus z (densely reindexed,
// preserving relative id order). Requires shield_z >= sum of base targets
// over z's neighbors. Output: base ops (ids remapped into g_prime), then
// target_z shades of z.
Certificate cert_append_vertex(const Graph& g_prime, VertexId z,
                               const Certificate& base, int shield_z,
                               int target_z);

// core_cert must verify complete on the k-core of g at uniform (s, t) with
// s >= (k-1)t. Re-appends the deleted vertices in reverse deletion order,
// yielding a uniform (s, t) certificate on all of g.
Certificate cert_kcore_lift(const Graph& g, int k, const Certificate& core_cert,
                            int s, int t);

// One certificate per component (components in graph order, each on the
// densely reindexed component); concatenates them into a certificate on g.
Certificate cert_components(const Graph& g,
                            const std::vector<Certificate>& per_component);

// Monotone lift: base verifies complete at (S, T); given pointwise
// shield_hi >= S and 1 <= target_lo <= T, emits a complete certificate at
// (shield_hi, target_lo). Ops whose vertex already owes fewer shadings are
// skipped; surviving ops keep exactly the saved vertices whose lifted
// shield still equals the base shield. Never enlarges a save set; emits
// exactly sum(target_lo) ops.
Certificate lift_certificate(const Graph& g, const Certificate& base,
                             const std::vector<int>& shield_hi,
                             const std::vector<int>& target_lo);

// Replaces every op by k consecutive copies, scaling the weights to
// (k*S, k*T). base must replay legally; completeness is preserved.
Certificate scale_certificate(const Graph& g, const Certificate& base, int k);

// Shade-only certificate from a vertex ordering: for each order[i] in turn,
// target[order[i]] shades. Requires, for every i, shield(order[i]) >= sum of
// targets over its neighbors among order[0..i-1]; throws listing the first
// vertex that violates it. Valid in both modes.
Certificate greedy_certificate(const Graph& g, const std::vector<VertexId>& order,
                               const std::vector<int>& shield,
                               const std::vector<int>& target);

}  // namespace stdeg
