#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "oracles.hpp"
#include "stdeg/engine.hpp"
#include "stdeg/graph.hpp"

using namespace stdeg;

TEST_CASE("state basics and death convention") {
  Graph p3 = path_graph(3);
  State st(p3, {1, 2, 1}, {1, 2, 1});
  CHECK(st.alive_count() == 3);
  CHECK(st.total_target() == 4);
  CHECK(!st.finished());
  CHECK(st.alive_vertices() == std::vector<VertexId>{0, 1, 2});

  // shading the end vertex kills it and strips the neighbor's shield
  State st2 = apply_shadesave(st, {0, {}});
  CHECK(!st2.alive(0));
  CHECK(st2.shield(0) == 0);
  CHECK(st2.target(0) == 0);
  CHECK(st2.shield(1) == 1);
  CHECK(st2.target(1) == 2);
  CHECK(st2.shield(2) == 1);  // not a neighbor of 0
  CHECK(st2.alive_count() == 2);

  // multi-target vertex survives its first shading
  State st3 = apply_shadesave(st2, {1, {}});
  CHECK(st3.alive(1));
  CHECK(st3.target(1) == 1);
  CHECK(st3.shield(1) == 1);  // own shield untouched
  CHECK(st3.shield(2) == 0);

  // target 0 is a valid mid-game position: the vertex starts dead and its
  // shield is normalized away
  State dead_mid(p3, {1, 1, 1}, {1, 0, 1});
  CHECK(dead_mid.alive_count() == 2);
  CHECK(!dead_mid.alive(1));
  CHECK(dead_mid.shield(1) == 0);

  CHECK_THROWS_AS(State(p3, {1, 1}, {1, 1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(State(p3, {1, -1, 1}, {1, 1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(State(p3, {1, 1, 1}, {1, -1, 1}), std::invalid_argument);
}

TEST_CASE("canonical keys separate distinct positions") {
  Graph p3 = path_graph(3);
  State a(p3, {1, 2, 1}, {1, 1, 1});
  State b(p3, {2, 1, 1}, {1, 1, 1});
  State c(p3, {1, 2, 1}, {1, 1, 2});
  CHECK(a.canonical_key() != b.canonical_key());
  CHECK(a.canonical_key() != c.canonical_key());
  CHECK(a.canonical_key() == State(p3, {1, 2, 1}, {1, 1, 1}).canonical_key());
}

TEST_CASE("legality: budget and shield underflow") {
  Graph p3 = path_graph(3);

  // saving is paid for out of S(u) + T(u), strictly
  State tight(p3, {1, 2, 9}, {1, 1, 1});
  CHECK(is_legal(tight, {1, {0}}).legal);  // 2+1 > 1+1
  auto fail = is_legal(tight, {1, {2}});   // 2+1 is not > 9+1
  CHECK(!fail.legal);
  CHECK(fail.reason == LegalFail::budget);
  auto both = is_legal(tight, {1, {0, 2}});
  CHECK(!both.legal);
  CHECK(both.reason == LegalFail::budget);

  // every alive unsaved neighbor needs a shield to burn
  State bare(p3, {0, 5, 1}, {1, 1, 1});
  auto under = is_legal(bare, {1, {2}});
  CHECK(!under.legal);
  CHECK(under.reason == LegalFail::shield_underflow);
  CHECK(is_legal(bare, {1, {0}}).legal);
  CHECK(is_legal(bare, {0, {}}).legal);  // 0 itself may shade; 1 has shield

  // dead neighbors are ignored by both conditions
  State mid = apply_shadesave(State(p3, {9, 5, 1}, {1, 1, 1}), {0, {1}});
  CHECK(!mid.alive(0));
  CHECK(is_legal(mid, {1, {}}).legal);  // 0 is dead, 2 has shield 1
}

TEST_CASE("structural op problems throw instead of reporting illegal") {
  Graph p3 = path_graph(3);
  State st(p3, {3, 1, 1}, {1, 1, 1});
  State dead0 = apply_shadesave(st, {0, {1}});
  CHECK_THROWS_AS(is_legal(dead0, {0, {}}), OpError);   // dead vertex
  CHECK_THROWS_AS(is_legal(st, {0, {2}}), OpError);     // not a neighbor
  CHECK_THROWS_AS(is_legal(st, {1, {0, 0}}), OpError);  // duplicate save
  CHECK_THROWS_AS(is_legal(st, {7, {}}), OpError);      // no such vertex
  CHECK_THROWS_AS(is_legal(dead0, {1, {0}}), OpError);  // saving the dead
  CHECK_THROWS_AS(apply_shadesave(st, {1, {9}}), OpError);
}

TEST_CASE("apply refuses illegal ops") {
  Graph p3 = path_graph(3);
  State st(p3, {0, 0, 0}, {1, 1, 1});
  CHECK_THROWS_AS(apply_shadesave(st, {1, {}}), std::logic_error);
}

TEST_CASE("sequence replay reports the first failure") {
  Graph c4 = cycle_graph(4);  // edges 01, 03, 12, 23

  Certificate good{Mode::type4, {2, 2, 2, 2}, {1, 1, 1, 1},
                   {{0, {}}, {1, {}}, {2, {}}, {3, {}}}};
  auto rep = apply_sequence(c4, good, true);
  CHECK(rep.ok());
  CHECK(rep.final.finished());
  CHECK(rep.trace.size() == 4);
  CHECK(!rep.trace[0].alive(0));
  CHECK(rep.trace[0].shield(1) == 1);
  CHECK(rep.trace[0].shield(3) == 1);
  CHECK(rep.trace[0].shield(2) == 2);

  // at unit shields, vertex 3 is broke by the time 2 shades
  Certificate bad = good;
  bad.shield = {1, 1, 1, 1};
  auto rep2 = apply_sequence(c4, bad, true);
  CHECK(!rep2.ok());
  CHECK(rep2.failure->index == 2);
  CHECK(!rep2.failure->reason.empty());
  CHECK(rep2.trace.size() == 2);
}

TEST_CASE("verifier verdicts") {
  Graph c4 = cycle_graph(4);

  Certificate good{Mode::type4, {2, 2, 2, 2}, {1, 1, 1, 1},
                   {{0, {}}, {1, {}}, {2, {}}, {3, {}}}};
  auto vr = verify_certificate(c4, good);
  CHECK(vr.verdict == Verdict::complete);
  CHECK(vr.ok());
  CHECK(vr.ops_applied == 4);

  Certificate partial = good;
  partial.ops.pop_back();
  auto vp = verify_certificate(c4, partial);
  CHECK(vp.verdict == Verdict::legal_but_incomplete);
  CHECK(!vp.ok());
  CHECK(vp.ops_applied == 3);

  Certificate illegal = good;
  illegal.shield = {0, 0, 0, 0};
  auto vi = verify_certificate(c4, illegal);
  CHECK(vi.verdict == Verdict::illegal_at);
  CHECK(vi.fail_index == 0);
  CHECK(!vi.reason.empty());

  Certificate shape = good;
  shape.target = {1, 1, 1};
  CHECK(verify_certificate(c4, shape).verdict == Verdict::illegal_at);
  shape = good;
  shape.target = {1, 1, 1, 0};
  CHECK(verify_certificate(c4, shape).verdict == Verdict::illegal_at);
  shape = good;
  shape.shield = {1, 1, 1, -1};
  CHECK(verify_certificate(c4, shape).verdict == Verdict::illegal_at);

  // structurally broken ops are verdicts here, not exceptions
  Certificate stray = good;
  stray.ops[0] = {0, {2}};
  CHECK(verify_certificate(c4, stray).verdict == Verdict::illegal_at);
  Certificate dup = good;
  dup.mode = Mode::type3;
  dup.ops[0] = {0, {1, 1}};
  CHECK(verify_certificate(c4, dup).verdict == Verdict::illegal_at);
}

TEST_CASE("save-set width separates the two modes") {
  // star: the center can buy all three leaves at once, but only when
  // arbitrary save sets are allowed
  Graph star = complete_bipartite_graph(1, 3);
  Certificate wide{Mode::type4, {7, 1, 1, 1}, {1, 1, 1, 1},
                   {{0, {1, 2, 3}}, {1, {}}, {2, {}}, {3, {}}}};
  auto vw = verify_certificate(star, wide);
  CHECK(vw.verdict == Verdict::illegal_at);
  CHECK(vw.fail_index == 0);
  wide.mode = Mode::type3;
  CHECK(verify_certificate(star, wide).verdict == Verdict::complete);
}

TEST_CASE("complete certificates spend exactly the total target") {
  Graph c4 = cycle_graph(4);
  // a trailing op would have to shade a dead vertex, which cannot be legal
  Certificate extra{Mode::type4, {2, 2, 2, 2}, {1, 1, 1, 1},
                    {{0, {}}, {1, {}}, {2, {}}, {3, {}}, {0, {}}}};
  auto ve = verify_certificate(c4, extra);
  CHECK(ve.verdict == Verdict::illegal_at);
  CHECK(ve.fail_index == 4);
}

TEST_CASE("empty graph: the empty certificate is complete") {
  Graph g;
  Certificate cert{Mode::type4, {}, {}, {}};
  CHECK(verify_certificate(g, cert).verdict == Verdict::complete);
}

TEST_CASE("legality matches the budget formula on every single-save op") {
  Graph c4 = cycle_graph(4);
  State st(c4, {2, 2, 2, 2}, {1, 1, 1, 1});
  for (VertexId u = 0; u < 4; ++u) {
    for (int save_choice = -1; save_choice < 2; ++save_choice) {
      Op op{u, {}};
      auto nbrs = c4.neighbors(u);
      if (save_choice >= 0) op.save = {nbrs[save_choice]};
      long long spend = 0;
      for (VertexId w : op.save) spend += st.shield(w) + st.target(w);
      bool expect = st.shield(u) + st.target(u) > spend;
      CHECK(is_legal(st, op).legal == expect);
    }
  }
}
