#include "stdeg/selfcheck.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <random>
#include <set>
#include <sstream>

#include "stdeg/certgen.hpp"
#include "stdeg/cover.hpp"
#include "stdeg/engine.hpp"
#include "stdeg/graph.hpp"
#include "stdeg/search.hpp"

namespace stdeg {

namespace {

struct Checker {
  bool pass = true;
  std::string detail;
  int failures = 0;

  void fail(const std::string& msg) {
    pass = false;
    ++failures;
    if (failures <= 3) {
      if (!detail.empty()) detail += "; ";
      detail += msg;
    } else if (failures == 4) {
      detail += "; ...";
    }
  }
  void require(bool cond, const std::string& msg) {
    if (!cond) fail(msg);
  }
  void note(const std::string& stats) {
    if (pass) detail = stats;
  }
};

std::string vec_str(const std::vector<int>& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

// Compares a replayed state against expected shields/targets (dead = 0,0).
void expect_state(Checker& c, const State& st, const std::vector<int>& s,
                  const std::vector<int>& t, const std::string& where) {
  if (st.shields() != s || st.targets() != t)
    c.fail(where + ": got S=" + vec_str(st.shields()) + " T=" +
           vec_str(st.targets()) + ", want S=" + vec_str(s) + " T=" +
           vec_str(t));
}

// --- check 1: worked-example replays --------------------------------------

CheckRow crit_replays() {
  CheckRow row{1, "worked-example replays"};
  Checker c;

  // one op on a 4-cycle drawn with crossed chords (ids keep the drawing's
  // vertex numbering: edges 0-1, 0-2, 1-3, 2-3)
  Graph c4x = Graph::from_edges(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  {
    State st(c4x, {3, 2, 2, 3}, {1, 2, 2, 2});
    Op op{3, {2}};
    c.require(is_legal(st, op).legal, "single op: expected legal");
    State nxt = apply_shadesave(st, op);
    expect_state(c, nxt, {3, 1, 2, 3}, {1, 2, 2, 1}, "single op");
  }

  // three ops on the same graph from uniform (3, 2)
  {
    Certificate cert;
    cert.mode = Mode::type4;
    cert.shield = {3, 3, 3, 3};
    cert.target = {2, 2, 2, 2};
    cert.ops = {{0, {}}, {3, {2}}, {3, {1}}};
    auto rr = apply_sequence(c4x, cert, true);
    c.require(rr.ok(), "three-op sequence: replay failed");
    if (rr.ok()) {
      expect_state(c, rr.trace[0], {3, 2, 2, 3}, {1, 2, 2, 2}, "3-op step 1");
      expect_state(c, rr.trace[1], {3, 1, 2, 3}, {1, 2, 2, 1}, "3-op step 2");
      expect_state(c, rr.trace[2], {3, 1, 1, 0}, {1, 2, 2, 0}, "3-op step 3");
    }
  }

  // first stage of the 6-cycle staged plan at t = 2
  {
    Certificate plan = even_cycle_plan(3, 2);
    c.require(plan.shield == std::vector<int>({2, 3, 3, 3, 3, 3}) &&
                  plan.target == std::vector<int>(6, 2),
              "6-cycle plan: unexpected initial weights");
    Certificate prefix = plan;
    prefix.ops.resize(3);
    auto rr = apply_sequence(cycle_graph(6), prefix, true);
    c.require(rr.ok(), "6-cycle stage: replay failed");
    if (rr.ok()) {
      expect_state(c, rr.trace[0], {2, 3, 2, 3, 3, 3}, {2, 1, 2, 2, 2, 2},
                   "6-cycle step 1");
      expect_state(c, rr.trace[1], {2, 3, 2, 3, 2, 3}, {2, 1, 2, 1, 2, 2},
                   "6-cycle step 2");
      expect_state(c, rr.trace[2], {1, 3, 2, 3, 2, 3}, {2, 1, 2, 1, 2, 1},
                   "6-cycle step 3");
    }
  }

  // first six ops of the 7-cycle certificate at (4, 3)
  {
    Certificate cert = cert_odd_cycle(3);
    c.require(cert.shield == std::vector<int>(7, 4) &&
                  cert.target == std::vector<int>(7, 3),
              "7-cycle: unexpected uniform weights");
    Certificate prefix = cert;
    prefix.ops.resize(6);
    auto rr = apply_sequence(cycle_graph(7), prefix, true);
    c.require(rr.ok(), "7-cycle prefix: replay failed");
    if (rr.ok()) {
      expect_state(c, rr.trace[0], {4, 4, 4, 4, 3, 4, 3},
                   {3, 3, 3, 3, 3, 2, 3}, "7-cycle step 1");
      expect_state(c, rr.trace[1], {4, 4, 4, 4, 2, 4, 2},
                   {3, 3, 3, 3, 3, 1, 3}, "7-cycle step 2");
      expect_state(c, rr.trace[2], {4, 4, 4, 4, 1, 0, 1},
                   {3, 3, 3, 3, 3, 0, 3}, "7-cycle step 3");
      expect_state(c, rr.trace[3], {3, 4, 4, 4, 1, 0, 1},
                   {3, 3, 3, 3, 3, 0, 2}, "7-cycle step 4");
      expect_state(c, rr.trace[4], {2, 4, 4, 4, 1, 0, 1},
                   {3, 3, 3, 3, 3, 0, 1}, "7-cycle step 5");
      expect_state(c, rr.trace[5], {1, 4, 4, 4, 1, 0, 0},
                   {3, 3, 3, 3, 3, 0, 0}, "7-cycle step 6");
    }
  }

  // first stage (six ops) of the K_{2,3} staged plan at t = 2
  {
    Certificate plan = complete_bipartite_plan(2, 3, 2);
    c.require(plan.shield == std::vector<int>({9, 9, 8, 8, 8}) &&
                  plan.target == std::vector<int>(5, 6),
              "K_{2,3} plan: unexpected initial weights");
    Certificate prefix = plan;
    prefix.ops.resize(6);
    auto rr = apply_sequence(complete_bipartite_graph(2, 3), prefix, true);
    c.require(rr.ok(), "K_{2,3} stage: replay failed");
    if (rr.ok()) {
      expect_state(c, rr.trace[0], {9, 9, 8, 7, 7}, {5, 6, 6, 6, 6},
                   "K_{2,3} step 1");
      expect_state(c, rr.trace[1], {9, 9, 7, 7, 6}, {4, 6, 6, 6, 6},
                   "K_{2,3} step 2");
      expect_state(c, rr.trace[2], {9, 9, 6, 6, 6}, {3, 6, 6, 6, 6},
                   "K_{2,3} step 3");
      expect_state(c, rr.trace[3], {9, 9, 6, 5, 5}, {3, 5, 6, 6, 6},
                   "K_{2,3} step 4");
      expect_state(c, rr.trace[4], {9, 9, 5, 5, 4}, {3, 4, 6, 6, 6},
                   "K_{2,3} step 5");
      expect_state(c, rr.trace[5], {9, 9, 4, 4, 4}, {3, 3, 6, 6, 6},
                   "K_{2,3} step 6");
    }
  }

  row.pass = c.pass;
  row.detail = c.detail;
  return row;
}

// --- check 2: even-cycle stage closed forms --------------------------------

// Expected weights on C_2r mid-stage: stage mu (counting t down to 1), after
// in-stage op i (i in [0:r]). Vertex index k is 1-based; dead entries are
// (0, 0). In the final stage (mu = 1) the even vertices die as they are
// shaded; earlier stages leave the graph intact.
void stage_expectation(int r, int t, int mu, int i, std::vector<int>& s_out,
                       std::vector<int>& t_out) {
  int n = 2 * r;
  s_out.assign(n, 0);
  t_out.assign(n, 0);
  for (int k = 1; k <= n; ++k) {
    int& S = s_out[k - 1];
    int& T = t_out[k - 1];
    if (k % 2 == 0) {
      bool shaded = (k / 2) <= i;  // this stage already shaded v_k
      if (mu == 1 && shaded) continue;  // removed: stays (0, 0)
      S = t + 1;
      T = shaded ? mu - 1 : mu;
    } else if (k == 1) {
      S = (i == r) ? mu - 1 : mu;
      T = t;
    } else {
      int ell = (k - 1) / 2;
      S = (ell <= i) ? mu : mu + 1;
      T = t;
    }
  }
}

CheckRow crit_stage_forms() {
  CheckRow row{2, "even-cycle stage closed forms"};
  Checker c;
  int compared = 0;
  for (int r : {2, 3, 4}) {
    for (int t : {1, 2, 3}) {
      Certificate plan = even_cycle_plan(r, t);
      auto rr = apply_sequence(cycle_graph(2 * r), plan, true);
      if (!rr.ok()) {
        c.fail("plan r=" + std::to_string(r) + " t=" + std::to_string(t) +
               ": replay failed");
        continue;
      }
      State initial(cycle_graph(2 * r), plan.shield, plan.target);
      std::vector<int> want_s, want_t;
      for (int stage = 0; stage < t; ++stage) {
        int mu = t - stage;
        for (int i = 0; i <= r; ++i) {
          int ops_done = stage * r + i;
          stage_expectation(r, t, mu, i, want_s, want_t);
          const std::vector<int>& got_s =
              ops_done == 0 ? plan.shield : rr.trace[ops_done - 1].shields();
          const std::vector<int>& got_t =
              ops_done == 0 ? plan.target : rr.trace[ops_done - 1].targets();
          ++compared;
          if (got_s != want_s || got_t != want_t)
            c.fail("r=" + std::to_string(r) + " t=" + std::to_string(t) +
                   " stage mu=" + std::to_string(mu) + " i=" +
                   std::to_string(i) + ": got S=" + vec_str(got_s) + " T=" +
                   vec_str(got_t) + ", want S=" + vec_str(want_s) + " T=" +
                   vec_str(want_t));
        }
      }
    }
  }
  c.note(std::to_string(compared) + " states compared");
  row.pass = c.pass;
  row.detail = c.detail;
  return row;
}

// --- check 3: odd cycles ----------------------------------------------------

CheckRow crit_odd_cycles(const AcceptanceConfig& cfg) {
  CheckRow row{3, "odd cycles: certificates and refutation grid"};
  Checker c;

  for (int r = 1; r <= 5; ++r) {
    Certificate cert = cert_odd_cycle(r);
    Graph g = cycle_graph(2 * r + 1);
    auto vr = verify_certificate(g, cert);
    c.require(vr.ok(), "cert r=" + std::to_string(r) + ": " + vr.reason);
    c.require(cert.mode == Mode::type4,
              "cert r=" + std::to_string(r) + ": wrong mode");
    c.require(cert.shield == std::vector<int>(2 * r + 1, r + 1) &&
                  cert.target == std::vector<int>(2 * r + 1, r),
              "cert r=" + std::to_string(r) + ": wrong uniform weights");
    Ratio ratio(cert.shield[0] + cert.target[0], cert.target[0]);
    c.require(ratio == Ratio(2 * r + 1, r),
              "cert r=" + std::to_string(r) + ": wrong ratio");
  }

  long long states = 0;
  SearchConfig sc;
  sc.mode = Mode::type4;
  sc.max_states = cfg.budget;
  for (int r : {2, 3}) {
    int n = 2 * r + 1;
    Graph g = cycle_graph(n);
    Search search(g, sc);
    for (int t = 1; t <= 3; ++t) {
      // refute every s with (s+t)/t < 2 + 1/r, largest s first so the
      // refuted tables absorb the smaller grid points
      int s_hi = (t * (r + 1) - 1) / r;  // last s with s*r < (r+1)*t
      for (int s = s_hi; s >= 0; --s) {
        auto res = search.decide(std::vector<int>(n, s), std::vector<int>(n, t));
        states += res.states_expanded;
        if (res.answer != Answer::no)
          c.fail("n=" + std::to_string(n) + " (s,t)=(" + std::to_string(s) +
                 "," + std::to_string(t) + "): expected refutation, got " +
                 (res.answer == Answer::yes ? "yes" : "budget_exhausted"));
      }
    }
  }
  c.note("states_expanded=" + std::to_string(states));
  row.pass = c.pass;
  row.detail = c.detail;
  return row;
}

// --- check 4: even cycles ---------------------------------------------------

CheckRow crit_even_cycles(const AcceptanceConfig& cfg) {
  CheckRow row{4, "even cycles: certificates and minimum shields"};
  Checker c;
  long long states = 0;
  SearchConfig sc;
  sc.mode = Mode::type4;
  sc.max_states = cfg.budget;
  for (int r : {2, 3}) {
    Graph g = cycle_graph(2 * r);
    for (int t = 1; t <= 4; ++t) {
      Certificate cert = cert_even_cycle(r, t);
      auto vr = verify_certificate(g, cert);
      c.require(vr.ok(), "cert r=" + std::to_string(r) + " t=" +
                             std::to_string(t) + ": " + vr.reason);
      c.require(cert.shield == std::vector<int>(2 * r, t + 1) &&
                    cert.target == std::vector<int>(2 * r, t),
                "cert r=" + std::to_string(r) + " t=" + std::to_string(t) +
                    ": wrong uniform weights");
    }
    for (int t = 1; t <= 3; ++t) {
      auto ms = min_uniform_shield(g, t, sc);
      states += ms.states_expanded;
      if (ms.exhausted)
        c.fail("n=" + std::to_string(2 * r) + " t=" + std::to_string(t) +
               ": budget exhausted");
      else
        c.require(ms.s_min == t + 1,
                  "n=" + std::to_string(2 * r) + " t=" + std::to_string(t) +
                      ": s_min=" + std::to_string(ms.s_min) + ", want " +
                      std::to_string(t + 1));
    }
  }
  c.note("states_expanded=" + std::to_string(states));
  row.pass = c.pass;
  row.detail = c.detail;
  return row;
}

// --- check 5: complete bipartite ratios -------------------------------------

CheckRow crit_bipartite(const AcceptanceConfig&) {
  CheckRow row{5, "complete bipartite graphs: exact ratios"};
  Checker c;
  auto check_one = [&](int m, int n, int t) {
    Certificate cert = cert_complete_bipartite(m, n, t);
    Graph g = complete_bipartite_graph(m, n);
    auto vr = verify_certificate(g, cert);
    std::string tag = "K_{" + std::to_string(m) + "," + std::to_string(n) +
                      "} t=" + std::to_string(t);
    c.require(vr.ok(), tag + ": " + vr.reason);
    int S = m * (n - 1) * t + 1, T = n * t;
    c.require(cert.shield == std::vector<int>(m + n, S) &&
                  cert.target == std::vector<int>(m + n, T),
              tag + ": wrong uniform weights");
    Ratio got(S + T, T);
    Ratio want = Ratio(m + 1, 1) - Ratio(m, n) + Ratio(1, n * t);
    c.require(got == want, tag + ": ratio mismatch");
    return got;
  };
  for (int m = 2; m <= 4; ++m)
    for (int n = m; n <= 4; ++n)
      for (int t = 1; t <= 2; ++t) check_one(m, n, t);
  Ratio k23_t2 = check_one(2, 3, 2);
  c.require(k23_t2 == Ratio(5, 2), "K_{2,3} t=2: ratio should be 5/2");
  Ratio k23_t4 = check_one(2, 3, 4);
  c.require(k23_t4 == Ratio(29, 12), "K_{2,3} t=4: ratio should be 29/12");
  c.require(k23_t2 < Ratio(2619, 1000) && k23_t4 < Ratio(2619, 1000),
            "K_{2,3}: ratios should sit below 2.619");
  row.pass = c.pass;
  row.detail = c.detail;
  return row;
}

// --- check 6: subdivisions --------------------------------------------------

CheckRow crit_subdivisions(const AcceptanceConfig&) {
  CheckRow row{6, "subdivided complete graphs via the linear-forest reduction"};
  Checker c;
  for (int n : {4, 5}) {
    Graph kn = complete_multipartite_graph(std::vector<int>(n, 1));
    Graph g = subdivide_uniform(kn, 4);
    std::vector<VertexId> x(n);
    for (int i = 0; i < n; ++i) x[i] = i;
    Certificate cert = cert_linear_forest_reduction(g, x, 2);
    auto vr = verify_certificate(g, cert);
    std::string tag = "subdivided K_" + std::to_string(n);
    c.require(vr.ok(), tag + ": " + vr.reason);
    c.require(cert.mode == Mode::type4, tag + ": wrong mode");
    c.require(cert.shield == std::vector<int>(g.vertex_count(), 3) &&
                  cert.target == std::vector<int>(g.vertex_count(), 2),
              tag + ": expected uniform (3, 2)");
  }
  c.note("ratio 5/2 certified on both");
  row.pass = c.pass;
  row.detail = c.detail;
  return row;
}

// --- check 7: degeneracy vs cover cross-check -------------------------------

// All connected graphs on n vertices up to isomorphism, as edge lists on
// ids 0..n-1 (canonical form: lexicographically smallest adjacency
// bitstring over all vertex permutations).
std::vector<Graph> connected_graphs_up_to_iso(int n) {
  std::vector<Graph> out;
  if (n == 1) {
    out.push_back(edgeless_graph(1));
    return out;
  }
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) slots.push_back({i, j});
  int bits = static_cast<int>(slots.size());
  std::vector<int> perm(n);
  std::set<uint64_t> seen;
  for (uint64_t mask = 0; mask < (uint64_t(1) << bits); ++mask) {
    std::vector<Edge> edges;
    for (int b = 0; b < bits; ++b)
      if ((mask >> b) & 1) edges.push_back(slots[b]);
    Graph g = Graph::from_edges(n, edges);
    if (structure_queries(g).components.size() != 1) continue;
    // canonical form over all relabelings
    for (int i = 0; i < n; ++i) perm[i] = i;
    uint64_t best = ~uint64_t(0);
    do {
      uint64_t m = 0;
      for (int b = 0; b < bits; ++b) {
        auto [i, j] = slots[b];
        int pi = perm[i], pj = perm[j];
        if (g.adjacent(std::min(pi, pj), std::max(pi, pj)))
          m |= uint64_t(1) << b;
      }
      best = std::min(best, m);
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (seen.insert(best).second) {
      std::vector<Edge> canon;
      for (int b = 0; b < bits; ++b)
        if ((best >> b) & 1) canon.push_back(slots[b]);
      out.push_back(Graph::from_edges(n, canon));
    }
  }
  return out;
}

CheckRow crit_cross_check(const AcceptanceConfig& cfg) {
  CheckRow row{7, "degeneracy vs cover cross-check on small graphs"};
  Checker c;
  const int expected_counts[] = {0, 1, 1, 2, 6, 21};
  long long points = 0, dp_checks = 0;
  for (int n = 1; n <= 5; ++n) {
    auto graphs = connected_graphs_up_to_iso(n);
    c.require(static_cast<int>(graphs.size()) == expected_counts[n],
              "n=" + std::to_string(n) + ": enumerated " +
                  std::to_string(graphs.size()) + " graphs, want " +
                  std::to_string(expected_counts[n]));
    for (size_t gi = 0; gi < graphs.size(); ++gi) {
      const Graph& g = graphs[gi];
      int rank = g.edge_count() - (n - 1);  // co-tree rank, g connected
      SearchConfig sc;
      sc.mode = Mode::type3;
      sc.max_states = cfg.budget;
      for (int s = 0; s <= 3; ++s) {
        for (int t = 1; t <= 2; ++t) {
          ++points;
          Strategy strat;
          if (rank <= 2) {
            strat.kind = Strategy::Kind::exhaustive_normalized;
          } else {
            strat.kind = Strategy::Kind::sampled;
            strat.samples = 200;
            strat.seed = 1;
          }
          auto rep = check_stdp_implication(g, s, t, strat, sc);
          std::string tag = "n=" + std::to_string(n) + " #" +
                            std::to_string(gi) + " (s,t)=(" +
                            std::to_string(s) + "," + std::to_string(t) + ")";
          c.require(rep.degeneracy != Answer::budget_exhausted,
                    tag + ": search budget exhausted");
          if (rep.dp_checked) {
            ++dp_checks;
            c.require(!rep.counterexample, tag + ": cover refutation found");
            if (rank <= 2)
              c.require(rep.dp.verdict == DpVerdict::holds,
                        tag + ": exhaustive check did not complete");
          }
        }
      }
    }
  }
  c.note(std::to_string(points) + " grid points, " +
         std::to_string(dp_checks) + " cover checks, 0 counterexamples");
  row.pass = c.pass;
  row.detail = c.detail;
  return row;
}

// --- check 8: cover refutation counts ---------------------------------------

CheckRow crit_cover_counts(const AcceptanceConfig&) {
  CheckRow row{8, "cover refutation and confirmation counts"};
  Checker c;
  Strategy ex;
  ex.kind = Strategy::Kind::exhaustive_normalized;

  auto r1 = check_dp_colorable(cycle_graph(4), 2, 1, ex);
  c.require(r1.verdict == DpVerdict::refuted, "C_4 (2,1): expected refuted");
  c.require(r1.covers_total == 2, "C_4 (2,1): expected 2 normalized covers");

  auto r2 = check_dp_colorable(cycle_graph(4), 4, 2, ex);
  c.require(r2.verdict == DpVerdict::refuted, "C_4 (4,2): expected refuted");
  c.require(r2.covers_total == 24, "C_4 (4,2): expected 24 normalized covers");

  auto r3 = check_dp_colorable(cycle_graph(5), 5, 2, ex);
  c.require(r3.verdict == DpVerdict::holds, "C_5 (5,2): expected holds");
  c.require(r3.covers_total == 120 && r3.covers_checked == 120,
            "C_5 (5,2): expected all 120 normalized covers checked");

  c.note("checked " +
         std::to_string(r1.covers_checked + r2.covers_checked +
                        r3.covers_checked) +
         " covers");
  row.pass = c.pass;
  row.detail = c.detail;
  return row;
}

// --- check 9: transformer properties ----------------------------------------

// Greedy left-to-right embedding of the lifted ops into the base ops: each
// lifted op must match a later base op with the same vertex whose save set
// contains the lifted save set. Earliest-feasible matching is complete for
// subsequence embedding, so failure means no embedding exists.
bool saves_embed(const Certificate& base, const Certificate& lifted) {
  size_t bi = 0;
  for (const Op& op : lifted.ops) {
    bool found = false;
    while (bi < base.ops.size() && !found) {
      const Op& b = base.ops[bi++];
      found = b.u == op.u &&
              std::all_of(op.save.begin(), op.save.end(), [&](VertexId w) {
                return std::find(b.save.begin(), b.save.end(), w) !=
                       b.save.end();
              });
    }
    if (!found) return false;
  }
  return true;
}

CheckRow crit_transformers(const AcceptanceConfig&) {
  CheckRow row{9, "transformer properties on random cases"};
  Checker c;
  std::mt19937_64 rng(20260816ULL);
  auto pick = [&](int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<uint64_t>(hi - lo + 1));
  };

  int cases = 0;
  for (int iter = 0; iter < 200 && c.failures < 3; ++iter) {
    Graph g;
    Certificate base;
    switch (pick(0, 4)) {
      case 0: {
        int r = pick(1, 3);
        int k = (r == 1) ? pick(1, 6) : pick(2 * r - 1, 6);
        g = path_graph(k);
        base = cert_path(k, r);
        break;
      }
      case 1: {
        int r = pick(2, 4), t = pick(1, 3);
        g = cycle_graph(2 * r);
        base = even_cycle_plan(r, t);
        break;
      }
      case 2: {
        int r = pick(2, 4), t = pick(1, 3);
        g = cycle_graph(2 * r);
        base = cert_even_cycle(r, t);
        break;
      }
      case 3: {
        int r = pick(1, 4);
        g = cycle_graph(2 * r + 1);
        base = cert_odd_cycle(r);
        break;
      }
      default: {
        int m = pick(2, 3), n = pick(m, 4), t = pick(1, 2);
        g = complete_bipartite_graph(m, n);
        base = (pick(0, 1) == 0) ? complete_bipartite_plan(m, n, t)
                                 : cert_complete_bipartite(m, n, t);
        break;
      }
    }
    ++cases;
    std::string tag = "case " + std::to_string(iter);

    // random monotone lift
    std::vector<int> hi(g.vertex_count()), lo(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) {
      hi[v] = base.shield[v] + pick(0, 2);
      lo[v] = pick(1, base.target[v]);
    }
    Certificate lifted = lift_certificate(g, base, hi, lo);
    auto vl = verify_certificate(g, lifted);
    c.require(vl.ok(), tag + " lift: " + vl.reason);
    c.require(lifted.shield == hi && lifted.target == lo,
              tag + " lift: weights not adopted");
    c.require(saves_embed(base, lifted), tag + " lift: a save set grew");

    // scaling
    int k = pick(2, 3);
    Certificate scaled = scale_certificate(g, base, k);
    auto vs = verify_certificate(g, scaled);
    c.require(vs.ok(), tag + " scale: " + vs.reason);
    c.require(scaled.mode == base.mode, tag + " scale: mode changed");
    c.require(scaled.ops.size() == base.ops.size() * k,
              tag + " scale: wrong op count");
  }
  c.note(std::to_string(cases) + " cases");
  row.pass = c.pass;
  row.detail = c.detail;
  return row;
}

// --- check 10: multipartite bound -------------------------------------------

CheckRow crit_multipartite(const AcceptanceConfig&) {
  CheckRow row{10, "multipartite probabilistic bound"};
  Checker c;
  for (int m = 2; m <= 6; ++m) {
    auto b = multipartite_bound({2, m});
    c.require(std::abs(b.bound - 2.6180339887) <= 1e-6,
              "parts (2," + std::to_string(m) + "): bound " +
                  std::to_string(b.bound));
    for (double res : b.residuals)
      c.require(res <= 1e-10, "parts (2," + std::to_string(m) +
                                  "): residual " + std::to_string(res));
  }
  c.note("bound 2.6180339887 reproduced for all part pairs");
  row.pass = c.pass;
  row.detail = c.detail;
  return row;
}

// --- check 11: star refutation grid -----------------------------------------

CheckRow crit_star(const AcceptanceConfig& cfg) {
  CheckRow row{11, "star refutation grid"};
  Checker c;
  Graph g = complete_bipartite_graph(1, 5);
  SearchConfig sc;
  sc.mode = Mode::type4;
  sc.max_states = cfg.budget;
  Search search(g, sc);
  long long states = 0;
  for (int t = 2; t >= 1; --t) {
    for (int s = t - 1; s >= 0; --s) {
      auto res = search.decide(std::vector<int>(6, s), std::vector<int>(6, t));
      states += res.states_expanded;
      if (res.answer != Answer::no)
        c.fail("(s,t)=(" + std::to_string(s) + "," + std::to_string(t) +
               "): expected refutation, got " +
               (res.answer == Answer::yes ? "yes" : "budget_exhausted"));
    }
  }
  c.note("states_expanded=" + std::to_string(states));
  row.pass = c.pass;
  row.detail = c.detail;
  return row;
}

}  // namespace

std::vector<CheckRow> run_acceptance(const AcceptanceConfig& cfg,
                                     std::vector<int> which) {
  using Runner = CheckRow (*)(const AcceptanceConfig&);
  static const Runner runners[] = {
      [](const AcceptanceConfig&) { return crit_replays(); },
      [](const AcceptanceConfig&) { return crit_stage_forms(); },
      crit_odd_cycles,
      crit_even_cycles,
      crit_bipartite,
      crit_subdivisions,
      crit_cross_check,
      crit_cover_counts,
      crit_transformers,
      crit_multipartite,
      crit_star,
  };
  if (which.empty())
    for (int i = 1; i <= 11; ++i) which.push_back(i);
  std::sort(which.begin(), which.end());
  which.erase(std::unique(which.begin(), which.end()), which.end());

  std::vector<CheckRow> rows;
  for (int id : which) {
    if (id < 1 || id > 11) {
      rows.push_back({id, "unknown check", false, "no such check", 0});
      continue;
    }
    auto start = std::chrono::steady_clock::now();
    CheckRow row;
    try {
      row = runners[id - 1](cfg);
    } catch (const std::exception& e) {
      row.id = id;
      row.label = "check " + std::to_string(id);
      row.pass = false;
      row.detail = std::string("exception: ") + e.what();
    }
    row.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string format_check_row(const CheckRow& row) {
  std::ostringstream os;
  os << "check " << row.id << "  " << row.label << " ... "
     << (row.pass ? "PASS" : "FAIL");
  os.setf(std::ios::fixed);
  os.precision(2);
  os << " (" << row.wall_seconds << "s)";
  if (!row.detail.empty()) os << "  [" << row.detail << "]";
  return os.str();
}

}  // namespace stdeg
