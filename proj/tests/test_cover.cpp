#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "oracles.hpp"
#include "stdeg/cover.hpp"
#include "stdeg/graph.hpp"

using namespace stdeg;

TEST_CASE("cover construction and validation") {
  Graph c4 = cycle_graph(4);
  Cover id = build_cover(c4, 2, {});
  CHECK(id.a == 2);
  CHECK(id.edge_list == c4.edges());
  for (const auto& m : id.matchings)
    CHECK(m == std::vector<std::pair<int, int>>{{0, 0}, {1, 1}});
  validate_cover(c4, id);

  CoverSpec twist;
  twist.kind = CoverSpec::Kind::permutation_on_edges;
  twist.perms[{0, 3}] = {1, 0};
  Cover tw = build_cover(c4, 2, twist);
  validate_cover(c4, tw);
  CHECK(tw.matchings[1] ==
        std::vector<std::pair<int, int>>{{0, 1}, {1, 0}});  // edge (0,3)

  CoverSpec bad = twist;
  bad.perms[{0, 3}] = {1, 1};
  CHECK_THROWS_AS(build_cover(c4, 2, bad), std::invalid_argument);
  bad.perms[{0, 3}] = {0};
  CHECK_THROWS_AS(build_cover(c4, 2, bad), std::invalid_argument);
  CoverSpec nonedge = twist;
  nonedge.perms[{0, 2}] = {0, 1};
  CHECK_THROWS_AS(build_cover(c4, 2, nonedge), std::invalid_argument);

  CHECK_THROWS_AS(build_cover(c4, 0, {}), std::invalid_argument);

  CoverSpec rnd;
  rnd.kind = CoverSpec::Kind::random;
  rnd.seed = 42;
  Cover r1 = build_cover(c4, 3, rnd);
  validate_cover(c4, r1);
  Cover r2 = build_cover(c4, 3, rnd);
  CHECK(r1.matchings == r2.matchings);  // same seed, same cover
}

TEST_CASE("validate_cover rejects malformed covers") {
  Graph c4 = cycle_graph(4);
  Cover ok = build_cover(c4, 2, {});

  Cover wrong_edges = ok;
  wrong_edges.edge_list.pop_back();
  wrong_edges.matchings.pop_back();
  CHECK_THROWS_AS(validate_cover(c4, wrong_edges), std::invalid_argument);

  Cover doubled = ok;
  doubled.matchings[0] = {{0, 0}, {0, 1}};  // left color used twice
  CHECK_THROWS_AS(validate_cover(c4, doubled), std::invalid_argument);

  Cover range = ok;
  range.matchings[0] = {{0, 0}, {1, 2}};
  CHECK_THROWS_AS(validate_cover(c4, range), std::invalid_argument);

  // a partial matching is fine
  Cover partial = ok;
  partial.matchings[0] = {{0, 0}};
  validate_cover(c4, partial);
}

TEST_CASE("transversals: parity of the twist decides C_4 at one per fiber") {
  Graph c4 = cycle_graph(4);

  // identity cover: conflicts are equalities, so any proper 2-coloring works
  auto t_id = find_transversal(c4, build_cover(c4, 2, {}), 1);
  REQUIRE(t_id.has_value());
  CHECK(validate_transversal(c4, build_cover(c4, 2, {}), *t_id, 1));

  // one flipped edge: the constraint graph is an odd cycle, no transversal
  CoverSpec twist;
  twist.kind = CoverSpec::Kind::permutation_on_edges;
  twist.perms[{0, 3}] = {1, 0};
  auto t_tw = find_transversal(c4, build_cover(c4, 2, twist), 1);
  CHECK(!t_tw.has_value());

  // two flips restore even parity
  twist.perms[{1, 2}] = {1, 0};
  auto t_two = find_transversal(c4, build_cover(c4, 2, twist), 1);
  CHECK(t_two.has_value());
}

TEST_CASE("transversals on odd cycles need three colors") {
  Graph c5 = cycle_graph(5);
  CHECK(!find_transversal(c5, build_cover(c5, 2, {}), 1).has_value());
  auto t3 = find_transversal(c5, build_cover(c5, 3, {}), 1);
  REQUIRE(t3.has_value());
  CHECK(validate_transversal(c5, build_cover(c5, 3, {}), *t3, 1));
}

TEST_CASE("width-b transversals") {
  Graph p2 = path_graph(2);
  Cover id4 = build_cover(p2, 4, {});
  // b = 2 needs 2 colors per side avoiding equality: pick {0,1} and {2,3}
  auto t = find_transversal(p2, id4, 2);
  REQUIRE(t.has_value());
  CHECK(t->chosen[0].size() == 2);
  // b = 3 from 4 colors forces an overlap across the edge
  CHECK(!find_transversal(p2, id4, 3).has_value());

  // zero width is trivially satisfiable
  auto empty = find_transversal(p2, id4, 0);
  REQUIRE(empty.has_value());
  CHECK(empty->chosen[0].empty());

  CHECK_THROWS_AS(find_transversal(p2, id4, 5), std::invalid_argument);
}

TEST_CASE("validate_transversal rejects doctored answers") {
  Graph c4 = cycle_graph(4);
  Cover id = build_cover(c4, 2, {});
  auto t = find_transversal(c4, id, 1);
  REQUIRE(t.has_value());
  Transversal broken = *t;
  broken.chosen[1] = broken.chosen[0];  // force a matching-edge conflict
  bool any_conflict_now = false;
  // 0 and 1 are adjacent in C_4 and the matching is the identity
  if (broken.chosen[0] == broken.chosen[1]) any_conflict_now = true;
  CHECK(any_conflict_now);
  CHECK(!validate_transversal(c4, id, broken, 1));

  Transversal wide = *t;
  wide.chosen[2].push_back(9);
  CHECK(!validate_transversal(c4, id, wide, 1));
}

TEST_CASE("exhaustive checking counts normalized covers") {
  // C_4, one co-tree edge: (a,b) = (2,1) sees both parities and refutes
  Graph c4 = cycle_graph(4);
  auto r21 = check_dp_colorable(c4, 2, 1, {});
  CHECK(r21.verdict == DpVerdict::refuted);
  CHECK(r21.covers_total == 2);
  REQUIRE(r21.witness.has_value());
  CHECK(!find_transversal(c4, *r21.witness, 1).has_value());

  // three colors are enough for any C_4 cover
  auto r31 = check_dp_colorable(c4, 3, 1, {});
  CHECK(r31.verdict == DpVerdict::holds);
  CHECK(r31.covers_total == 6);
  CHECK(r31.covers_checked == 6);
  CHECK(!r31.witness.has_value());

  // trees have a single normalized cover
  Graph p3 = path_graph(3);
  auto tree = check_dp_colorable(p3, 2, 1, {});
  CHECK(tree.verdict == DpVerdict::holds);
  CHECK(tree.covers_total == 1);

  // C_5 at (2,1): odd girth blocks 2 colors on the identity cover already
  auto c5 = check_dp_colorable(cycle_graph(5), 2, 1, {});
  CHECK(c5.verdict == DpVerdict::refuted);
}

TEST_CASE("exhaustive checking guards its feasibility") {
  Graph k4 = complete_multipartite_graph({1, 1, 1, 1});
  // co-tree rank 3 at a = 6: 720^3 normalized covers is past the guard
  CHECK_THROWS_AS(check_dp_colorable(k4, 6, 1, {}), std::invalid_argument);
  // disconnected graphs have no spanning tree to normalize against
  Graph two = edgeless_graph(2);
  CHECK_THROWS_AS(check_dp_colorable(two, 1, 1, {}), std::invalid_argument);
  CHECK_THROWS_AS(check_dp_colorable(cycle_graph(4), 0, 1, {}),
                  std::invalid_argument);
  CHECK_THROWS_AS(check_dp_colorable(cycle_graph(4), 2, 3, {}),
                  std::invalid_argument);
}

TEST_CASE("sampled checking refutes or stays inconclusive") {
  Graph c4 = cycle_graph(4);
  Strategy sam;
  sam.kind = Strategy::Kind::sampled;
  sam.samples = 50;
  sam.seed = 3;
  auto ref = check_dp_colorable(c4, 2, 1, sam);
  CHECK(ref.verdict == DpVerdict::refuted);  // half of all covers refute
  CHECK(ref.witness.has_value());

  auto inc = check_dp_colorable(c4, 3, 1, sam);
  CHECK(inc.verdict == DpVerdict::inconclusive);  // sampling cannot prove
  CHECK(inc.covers_total == -1);
  CHECK(inc.covers_checked == 50);
}

TEST_CASE("degeneracy-to-cover cross-check") {
  // paths are degenerate at (1,1); covers at (2,1) must then all work
  auto p = check_stdp_implication(path_graph(4), 1, 1, {});
  CHECK(p.degeneracy == Answer::yes);
  CHECK(p.dp_checked);
  CHECK(p.dp.verdict == DpVerdict::holds);
  CHECK(!p.counterexample);

  // C_4 is not (1,1)-degenerate, so there is nothing to cross-check
  auto c = check_stdp_implication(cycle_graph(4), 1, 1, {});
  CHECK(c.degeneracy == Answer::no);
  CHECK(!c.dp_checked);
  CHECK(!c.counterexample);

  CHECK_THROWS_AS(check_stdp_implication(path_graph(2), -1, 1, {}),
                  std::invalid_argument);
  CHECK_THROWS_AS(check_stdp_implication(path_graph(2), 0, 0, {}),
                  std::invalid_argument);
}

TEST_CASE("multipartite bound fixed points") {
  auto b22 = multipartite_bound({2, 2});
  CHECK(b22.bound == doctest::Approx(2.6180339887).epsilon(1e-9));
  CHECK(b22.p_star.size() == 2);
  CHECK(b22.p_star[1] == doctest::Approx(1.0));
  for (double r : b22.residuals) CHECK(r <= 1e-10);

  // single part: trivially 1
  auto b5 = multipartite_bound({5});
  CHECK(b5.bound == doctest::Approx(1.0));

  // parts (1,1): K_2, the root of p = 1-p gives the edge bound 2
  auto b11 = multipartite_bound({1, 1});
  CHECK(b11.bound == doctest::Approx(2.0).epsilon(1e-9));

  // order scan reports the spread over orderings
  auto scan = multipartite_bound({2, 3}, true);
  CHECK(scan.order_scan);
  CHECK(scan.order_min <= scan.bound + 1e-12);
  CHECK(scan.bound <= scan.order_max + 1e-12);
  auto rev = multipartite_bound({3, 2});
  bool matches_some_order = std::abs(rev.bound - scan.order_min) < 1e-9 ||
                            std::abs(rev.bound - scan.order_max) < 1e-9;
  CHECK(matches_some_order);

  CHECK_THROWS_AS(multipartite_bound({}), std::invalid_argument);
  CHECK_THROWS_AS(multipartite_bound({2, 0}), std::invalid_argument);
}
