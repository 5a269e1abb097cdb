#include "stdeg/certgen.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace stdeg {

namespace {

void append_shades(std::vector<Op>& ops, VertexId v, int count) {
  for (int i = 0; i < count; ++i) ops.push_back({v, {}});
}

// Internal sanity check: generators must never hand out a bad certificate.
void must_be_complete(const Graph& g, const Certificate& c, const char* who) {
  auto res = verify_certificate(g, c);
  if (!res.ok())
    throw std::logic_error(std::string(who) + ": emitted certificate fails (" +
                           res.reason + " at op " +
                           std::to_string(res.fail_index) + ")");
}

}  // namespace

// --- even cycles -----------------------------------------------------------

Certificate even_cycle_plan(int r, int t) {
  if (r < 2 || t < 1)
    throw std::invalid_argument("even_cycle_plan: need r >= 2, t >= 1");
  int n = 2 * r;
  Certificate c;
  c.mode = Mode::type4;
  c.shield.assign(n, t + 1);
  c.shield[0] = t;  // v_1 starts one below the rest
  c.target.assign(n, t);
  for (int mu = t; mu >= 1; --mu)
    for (int i = 1; i <= r; ++i)
      c.ops.push_back({2 * i - 1, {2 * i - 2}});  // shade v_2i, save v_2i-1
  for (int v = 0; v < n; v += 2) append_shades(c.ops, v, t);
  must_be_complete(cycle_graph(n), c, "even_cycle_plan");
  return c;
}

Certificate cert_even_cycle(int r, int t) {
  Certificate plan = even_cycle_plan(r, t);
  int n = 2 * r;
  Certificate c = lift_certificate(cycle_graph(n), plan,
                                   std::vector<int>(n, t + 1),
                                   std::vector<int>(n, t));
  must_be_complete(cycle_graph(n), c, "cert_even_cycle");
  return c;
}

// --- paths ------------------------------------------------------------------

Certificate cert_path(int k, int r) {
  if (r < 1) throw std::invalid_argument("cert_path: need r >= 1");
  if (k < 1) throw std::invalid_argument("cert_path: need k >= 1");
  Certificate c;
  c.mode = Mode::type4;
  if (k == 1) {
    // single vertex: nothing to protect against, r plain shades
    c.shield = {1};
    c.target = {r};
    append_shades(c.ops, 0, r);
    must_be_complete(path_graph(1), c, "cert_path");
    return c;
  }
  if (k < 2 * r - 1)
    throw std::invalid_argument("cert_path: need k = 1 or k >= 2r-1");
  c.shield.assign(k, r + 1);
  c.shield[0] = c.shield[k - 1] = 1;
  c.target.assign(k, r);
  // peel trailing vertices down to the P_{2r-1} core
  for (int j = k; j >= 2 * r; --j) append_shades(c.ops, j - 1, r);
  // core plan on v_1..v_2r-1: ascending stages, each shading one even vertex
  for (int mu = 1; mu <= r - 1; ++mu)
    for (int i = 0; i < r - mu; ++i)
      c.ops.push_back({2 * mu - 1, {2 * mu - 2}});  // shade v_2mu, save v_2mu-1
  for (int mu = r; mu <= 2 * r - 2; ++mu)
    for (int i = 0; i < 2 * r - mu - 1; ++i)
      c.ops.push_back(
          {2 * (2 * r - mu) - 3, {2 * (2 * r - mu) - 2}});  // save the far side
  for (int v = 0; v <= 2 * r - 2; v += 2) append_shades(c.ops, v, r);
  must_be_complete(path_graph(k), c, "cert_path");
  return c;
}

// --- odd cycles --------------------------------------------------------------

Certificate cert_odd_cycle(int r) {
  if (r < 1) throw std::invalid_argument("cert_odd_cycle: need r >= 1");
  int n = 2 * r + 1;
  Certificate c;
  c.mode = Mode::type4;
  c.shield.assign(n, r + 1);
  c.target.assign(n, r);
  append_shades(c.ops, n - 2, r);  // v_2r
  append_shades(c.ops, n - 1, r);  // v_2r+1; the rest is a path on v_1..v_2r-1
  Certificate tail = cert_path(2 * r - 1, r);
  c.ops.insert(c.ops.end(), tail.ops.begin(), tail.ops.end());
  must_be_complete(cycle_graph(n), c, "cert_odd_cycle");
  return c;
}

// --- complete bipartite -------------------------------------------------------

Certificate complete_bipartite_plan(int m, int n, int t) {
  if (m < 2 || n < m || t < 1)
    throw std::invalid_argument("complete_bipartite_plan: need 2 <= m <= n, t >= 1");
  Certificate c;
  c.mode = Mode::type4;
  int nv = m + n;
  c.shield.assign(nv, 0);
  c.target.assign(nv, n * t);
  for (int a = 0; a < m; ++a) c.shield[a] = m * (n - 1) * t + 1;
  for (int b = 0; b < n; ++b) c.shield[m + b] = m * (n - 1) * t;
  for (int mu = t; mu >= 1; --mu)
    for (int i = 1; i <= m * n; ++i) {
      int q = (i - 1) / n, rr = (i - 1) % n;
      c.ops.push_back({q, {m + rr}});  // shade a_q+1, save b_rr+1
    }
  for (int b = 0; b < n; ++b) append_shades(c.ops, m + b, n * t);
  must_be_complete(complete_bipartite_graph(m, n), c, "complete_bipartite_plan");
  return c;
}

Certificate cert_complete_bipartite(int m, int n, int t) {
  Certificate plan = complete_bipartite_plan(m, n, t);
  int nv = m + n;
  Certificate c = lift_certificate(complete_bipartite_graph(m, n), plan,
                                   std::vector<int>(nv, m * (n - 1) * t + 1),
                                   std::vector<int>(nv, n * t));
  must_be_complete(complete_bipartite_graph(m, n), c, "cert_complete_bipartite");
  return c;
}

// --- monotone lift -------------------------------------------------------------

Certificate lift_certificate(const Graph& g, const Certificate& base,
                             const std::vector<int>& shield_hi,
                             const std::vector<int>& target_lo) {
  size_t n = static_cast<size_t>(g.vertex_count());
  if (shield_hi.size() != n || target_lo.size() != n)
    throw std::invalid_argument("lift: shield/target length must match vertex count");
  for (size_t v = 0; v < n; ++v) {
    if (shield_hi[v] < base.shield[v])
      throw std::invalid_argument("lift: lifted shield below base shield");
    if (target_lo[v] < 1 || target_lo[v] > base.target[v])
      throw std::invalid_argument("lift: lifted target must be in [1, base target]");
  }
  State un(g, base.shield, base.target);
  State pr(g, shield_hi, target_lo);
  Certificate out;
  out.mode = base.mode;
  out.shield = shield_hi;
  out.target = target_lo;
  for (size_t i = 0; i < base.ops.size(); ++i) {
    const Op& op = base.ops[i];
    auto chk = is_legal(un, op);  // throws OpError on structural problems
    if (!chk.legal)
      throw std::invalid_argument("lift: base certificate is not a legal sequence (op " +
                                  std::to_string(i) + ")");
    if (pr.target(op.u) < un.target(op.u)) {
      // the lifted side owes fewer shadings of u; absorb this one silently
      un = apply_shadesave(un, op);
      continue;
    }
    // targets agree: keep exactly the saves whose shields still agree
    Op lifted{op.u, {}};
    for (VertexId w : op.save)
      if (pr.shield(w) == un.shield(w)) lifted.save.push_back(w);
    auto chk2 = is_legal(pr, lifted);
    if (!chk2.legal)
      throw std::logic_error("lift: internal legality failure");  // must not happen
    un = apply_shadesave(un, op);
    pr = apply_shadesave(pr, lifted);
    out.ops.push_back(std::move(lifted));
  }
  if (!un.finished())
    throw std::invalid_argument("lift: base certificate is not complete");
  if (!pr.finished()) throw std::logic_error("lift: lifted replay did not finish");
  return out;
}

// --- scaling ----------------------------------------------------------------------

Certificate scale_certificate(const Graph& g, const Certificate& base, int k) {
  if (k < 1) throw std::invalid_argument("scale: need k >= 1");
  auto rep = apply_sequence(g, base);
  if (!rep.ok())
    throw std::invalid_argument("scale: base does not replay legally (op " +
                                std::to_string(rep.failure->index) + ": " +
                                rep.failure->reason + ")");
  Certificate out;
  out.mode = base.mode;
  out.shield.reserve(base.shield.size());
  out.target.reserve(base.target.size());
  for (int s : base.shield) out.shield.push_back(k * s);
  for (int t : base.target) out.target.push_back(k * t);
  for (const Op& op : base.ops)
    for (int i = 0; i < k; ++i) out.ops.push_back(op);
  auto rep2 = apply_sequence(g, out);
  if (!rep2.ok()) throw std::logic_error("scale: scaled replay failed");
  if (rep.final.finished() && !rep2.final.finished())
    throw std::logic_error("scale: completeness was lost");
  return out;
}

// --- greedy (back-degree) ------------------------------------------------------------

Certificate greedy_certificate(const Graph& g, const std::vector<VertexId>& order,
                               const std::vector<int>& shield,
                               const std::vector<int>& target) {
  size_t n = static_cast<size_t>(g.vertex_count());
  if (order.size() != n || shield.size() != n || target.size() != n)
    throw std::invalid_argument("greedy: order/shield/target length must match");
  std::vector<int> pos(n, -1);
  for (size_t i = 0; i < order.size(); ++i) {
    if (!g.has_vertex(order[i]) || pos[order[i]] != -1)
      throw std::invalid_argument("greedy: order is not a permutation of the vertices");
    pos[order[i]] = static_cast<int>(i);
  }
  for (size_t i = 0; i < order.size(); ++i) {
    VertexId v = order[i];
    long long back = 0;
    for (VertexId w : g.neighbors(v))
      if (pos[w] < static_cast<int>(i)) back += target[w];
    if (shield[v] < back)
      throw std::invalid_argument(
          "greedy: back-neighbor targets exceed the shield at vertex " +
          std::to_string(v));
  }
  Certificate c;
  c.mode = Mode::type4;
  c.shield = shield;
  c.target = target;
  for (VertexId v : order) append_shades(c.ops, v, target[v]);
  must_be_complete(g, c, "greedy_certificate");
  return c;
}

// --- append / k-core ------------------------------------------------------------------

Certificate cert_append_vertex(const Graph& g_prime, VertexId z,
                               const Certificate& base, int shield_z,
                               int target_z) {
  if (!g_prime.has_vertex(z))
    throw std::invalid_argument("append: z is not a vertex of the graph");
  if (target_z < 1) throw std::invalid_argument("append: need target_z >= 1");
  int n = g_prime.vertex_count();
  std::vector<VertexId> rest;
  for (VertexId v = 0; v < n; ++v)
    if (v != z) rest.push_back(v);
  Graph g_minus = induced_subgraph(g_prime, rest);
  auto res = verify_certificate(g_minus, base);
  if (!res.ok())
    throw std::invalid_argument("append: base certificate does not verify complete");
  auto dense = [&](VertexId v) { return v < z ? v : v - 1; };
  long long need = 0;
  for (VertexId v : g_prime.neighbors(z)) need += base.target[dense(v)];
  if (shield_z < need)
    throw std::invalid_argument(
        "append: shield_z must cover the targets of z's neighbors");
  Certificate out;
  out.mode = base.mode;
  out.shield.assign(n, 0);
  out.target.assign(n, 0);
  for (VertexId v = 0; v < n; ++v) {
    if (v == z) {
      out.shield[v] = shield_z;
      out.target[v] = target_z;
    } else {
      out.shield[v] = base.shield[dense(v)];
      out.target[v] = base.target[dense(v)];
    }
  }
  auto undense = [&](VertexId d) { return d < z ? d : d + 1; };
  for (const Op& op : base.ops) {
    Op o{undense(op.u), {}};
    for (VertexId w : op.save) o.save.push_back(undense(w));
    out.ops.push_back(std::move(o));
  }
  append_shades(out.ops, z, target_z);
  must_be_complete(g_prime, out, "cert_append_vertex");
  return out;
}

Certificate cert_kcore_lift(const Graph& g, int k, const Certificate& core_cert,
                            int s, int t) {
  if (t < 1 || s < (k - 1) * t)
    throw std::invalid_argument("kcore_lift: need t >= 1 and s >= (k-1)t");
  KCoreResult kc = k_core(g, k);
  Graph core_graph = induced_subgraph(g, kc.core);
  for (size_t v = 0; v < core_cert.shield.size(); ++v)
    if (core_cert.shield[v] != s || core_cert.target[v] != t)
      throw std::invalid_argument("kcore_lift: core certificate is not uniform (s, t)");
  auto res = verify_certificate(core_graph, core_cert);
  if (!res.ok())
    throw std::invalid_argument(
        "kcore_lift: core certificate does not verify complete on the core");

  std::vector<VertexId> cur_set = kc.core;
  Certificate cur = core_cert;
  for (auto it = kc.deletion_order.rbegin(); it != kc.deletion_order.rend(); ++it) {
    VertexId w = *it;
    std::vector<VertexId> new_set = cur_set;
    new_set.insert(std::upper_bound(new_set.begin(), new_set.end(), w), w);
    Graph new_graph = induced_subgraph(g, new_set);
    int z = static_cast<int>(std::lower_bound(new_set.begin(), new_set.end(), w) -
                             new_set.begin());
    cur = cert_append_vertex(new_graph, z, cur, s, t);
    cur_set = std::move(new_set);
  }
  must_be_complete(g, cur, "cert_kcore_lift");
  return cur;
}

// --- components --------------------------------------------------------------------------

Certificate cert_components(const Graph& g,
                            const std::vector<Certificate>& per_component) {
  auto rep = structure_queries(g);
  if (rep.components.size() != per_component.size())
    throw std::invalid_argument("components: need exactly one certificate per component");
  Certificate out;
  out.mode = Mode::type4;
  for (const auto& c : per_component)
    if (c.mode == Mode::type3) out.mode = Mode::type3;
  int n = g.vertex_count();
  out.shield.assign(n, 0);
  out.target.assign(n, 1);
  for (size_t i = 0; i < rep.components.size(); ++i) {
    const auto& verts = rep.components[i];
    Graph comp = induced_subgraph(g, verts);
    auto res = verify_certificate(comp, per_component[i]);
    if (!res.ok())
      throw std::invalid_argument("components: certificate " + std::to_string(i) +
                                  " does not verify complete on its component");
    for (size_t d = 0; d < verts.size(); ++d) {
      out.shield[verts[d]] = per_component[i].shield[d];
      out.target[verts[d]] = per_component[i].target[d];
    }
    for (const Op& op : per_component[i].ops) {
      Op o{verts[op.u], {}};
      for (VertexId w : op.save) o.save.push_back(verts[w]);
      out.ops.push_back(std::move(o));
    }
  }
  must_be_complete(g, out, "cert_components");
  return out;
}

// --- linear forest reduction -----------------------------------------------------------------

Certificate cert_linear_forest_reduction(const Graph& g,
                                         const std::vector<VertexId>& x, int r) {
  if (r < 1) throw std::invalid_argument("linear_forest: need r >= 1");
  {
    std::set<VertexId> seen;
    for (VertexId v : x) {
      if (!g.has_vertex(v))
        throw std::invalid_argument("linear_forest: x names a vertex outside the graph");
      if (!seen.insert(v).second)
        throw std::invalid_argument("linear_forest: x contains duplicates");
    }
  }
  if (!is_independent_set(g, x))
    throw std::invalid_argument("linear_forest: x is not an independent set");
  std::vector<bool> in_x(g.vertex_count(), false);
  for (VertexId v : x) in_x[v] = true;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (!in_x[v] && g.degree(v) >= 3)
      throw std::invalid_argument(
          "linear_forest: a vertex of degree >= 3 lies outside x");
  std::vector<VertexId> rest;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (!in_x[v]) rest.push_back(v);
  std::vector<VertexId> to_orig;
  Graph forest = induced_subgraph(g, rest, &to_orig);
  auto rep = structure_queries(forest);
  if (forest.vertex_count() > 0 && !rep.is_linear_forest)
    throw std::invalid_argument("linear_forest: g - x is not a linear forest");
  for (const auto& comp : rep.components)
    if (static_cast<int>(comp.size()) < 2 * r - 1)
      throw std::invalid_argument(
          "linear_forest: a component of g - x has order < 2r-1");

  Certificate out;
  out.mode = Mode::type4;
  out.shield.assign(g.vertex_count(), r + 1);
  out.target.assign(g.vertex_count(), r);
  std::vector<VertexId> xs = x;
  std::sort(xs.begin(), xs.end());
  for (VertexId v : xs) append_shades(out.ops, v, r);

  // replay the shades to learn the true residual shields, then lift each
  // component's path plan from the lemma's lower bounds up to them
  State st(g, out.shield, out.target);
  for (const Op& op : out.ops) st = apply_shadesave(st, op);

  for (const auto& comp : rep.components) {
    int k = static_cast<int>(comp.size());
    std::vector<VertexId> order_orig;  // component in path order, original ids
    if (k == 1) {
      order_orig = {to_orig[comp[0]]};
    } else {
      std::vector<VertexId> ends;
      for (VertexId v : comp)
        if (forest.degree(v) <= 1) ends.push_back(v);
      VertexId cur = *std::min_element(ends.begin(), ends.end());
      VertexId prev = -1;
      while (true) {
        order_orig.push_back(to_orig[cur]);
        VertexId nxt = -1;
        for (VertexId w : forest.neighbors(cur))
          if (w != prev) nxt = w;
        if (nxt == -1) break;
        prev = cur;
        cur = nxt;
      }
    }
    Certificate base;
    if (k == 1) {
      // an isolated leftover only survives the shades when r = 1 and it had
      // at most two x-neighbors; its lower-bound shield is 1 unless both
      // neighbors were in x
      int xdeg = g.degree(order_orig[0]);
      base.mode = Mode::type4;
      base.shield = {xdeg >= 2 ? 0 : 1};
      base.target = {r};
      append_shades(base.ops, 0, r);
    } else {
      base = cert_path(k, r);
    }
    std::vector<int> hi(k), lo(k, r);
    for (int p = 0; p < k; ++p) hi[p] = st.shield(order_orig[p]);
    Certificate lifted = lift_certificate(path_graph(k), base, hi, lo);
    for (const Op& op : lifted.ops) {
      Op o{order_orig[op.u], {}};
      for (VertexId w : op.save) o.save.push_back(order_orig[w]);
      out.ops.push_back(std::move(o));
    }
  }
  must_be_complete(g, out, "cert_linear_forest_reduction");
  return out;
}

}  // namespace stdeg
