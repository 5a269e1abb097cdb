#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "stdeg/certgen.hpp"
#include "stdeg/search.hpp"

using namespace stdeg;

namespace {

void agree(const Graph& g, int s, int t, Mode mode) {
  SearchConfig cfg;
  cfg.mode = mode;
  auto res = decide_degenerate(g, std::vector<int>(g.vertex_count(), s),
                               std::vector<int>(g.vertex_count(), t), cfg);
  bool expect = ref::decide_uniform(g, s, t, mode);
  CAPTURE(g.vertex_count());
  CAPTURE(s);
  CAPTURE(t);
  CAPTURE(mode == Mode::type3);
  REQUIRE(res.answer != Answer::budget_exhausted);
  CHECK((res.answer == Answer::yes) == expect);
  if (res.answer == Answer::yes) {
    REQUIRE(res.certificate.has_value());
    auto vr = verify_certificate(g, *res.certificate);
    CHECK(vr.verdict == Verdict::complete);
    if (mode == Mode::type4)
      for (const auto& op : res.certificate->ops) CHECK(op.save.size() <= 1);
  }
}

}  // namespace

TEST_CASE("search agrees with brute force on every graph with n <= 4") {
  for (int n = 0; n <= 4; ++n) {
    unsigned pairs = static_cast<unsigned>(n * (n - 1) / 2);
    for (unsigned mask = 0; mask < (1u << pairs); ++mask) {
      Graph g = ref::mask_graph(n, mask);
      for (int t = 1; t <= 2; ++t)
        for (int s = 0; s <= 3; ++s) {
          agree(g, s, t, Mode::type4);
          agree(g, s, t, Mode::type3);
        }
    }
  }
}

TEST_CASE("search agrees with brute force on sampled graphs with n = 5") {
  std::mt19937_64 rng(20260816);
  std::vector<Graph> picks{cycle_graph(5), complete_bipartite_graph(1, 4),
                           complete_bipartite_graph(2, 3)};
  while (picks.size() < 10) {
    Graph g = ref::mask_graph(5, static_cast<unsigned>(rng() % (1u << 10)));
    if (ref::connected(g)) picks.push_back(g);
  }
  for (const auto& g : picks)
    for (int t = 1; t <= 2; ++t)
      for (int s = 0; s <= 3; ++s) {
        agree(g, s, t, Mode::type4);
        agree(g, s, t, Mode::type3);
      }
}

TEST_CASE("non-uniform weights and disconnected graphs") {
  // P_3 plus an isolated vertex, lopsided weights
  Graph g = Graph::from_edges(4, {{0, 1}, {1, 2}});
  SearchConfig cfg;
  for (auto mode : {Mode::type4, Mode::type3}) {
    cfg.mode = mode;
    std::mt19937_64 rng(11);
    for (int it = 0; it < 40; ++it) {
      std::vector<int> shield(4), target(4);
      for (int v = 0; v < 4; ++v) {
        shield[v] = static_cast<int>(rng() % 3);
        target[v] = 1 + static_cast<int>(rng() % 2);
      }
      auto res = decide_degenerate(g, shield, target, cfg);
      REQUIRE(res.answer != Answer::budget_exhausted);
      CHECK((res.answer == Answer::yes) ==
            ref::decide(g, shield, target, mode));
    }
  }
}

TEST_CASE("decide validates input") {
  Graph c4 = cycle_graph(4);
  CHECK_THROWS_AS(decide_degenerate(c4, {1, 1, 1}, {1, 1, 1, 1}),
                  std::invalid_argument);
  CHECK_THROWS_AS(decide_degenerate(c4, {1, 1, 1, 1}, {1, 1, 1, 0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(decide_degenerate(c4, {-1, 1, 1, 1}, {1, 1, 1, 1}),
                  std::invalid_argument);
}

TEST_CASE("budget exhaustion is reported, not guessed") {
  Graph c7 = cycle_graph(7);
  SearchConfig cfg;
  cfg.mode = Mode::type4;
  cfg.max_states = 1;
  auto res = decide_degenerate(c7, std::vector<int>(7, 2),
                               std::vector<int>(7, 2), cfg);
  CHECK(res.answer == Answer::budget_exhausted);
  CHECK(!res.certificate.has_value());
}

TEST_CASE("the greedy ordering shortcut still yields verified certificates") {
  // any path at s = t needs no search at all
  Graph p6 = path_graph(6);
  SearchConfig cfg;
  cfg.max_states = 1;  // the shortcut must not need the budget
  for (int t = 1; t <= 3; ++t) {
    auto res = decide_degenerate(p6, std::vector<int>(6, t),
                                 std::vector<int>(6, t), cfg);
    REQUIRE(res.answer == Answer::yes);
    CHECK(verify_certificate(p6, *res.certificate).verdict ==
          Verdict::complete);
  }
}

TEST_CASE("memo tables survive repeated queries on one search object") {
  Graph c6 = cycle_graph(6);
  SearchConfig cfg;
  cfg.mode = Mode::type4;
  Search search(c6, cfg);
  auto first = search.decide(std::vector<int>(6, 2), std::vector<int>(6, 2));
  CHECK(first.answer == Answer::no);
  auto again = search.decide(std::vector<int>(6, 2), std::vector<int>(6, 2));
  CHECK(again.answer == Answer::no);
  CHECK(again.states_expanded <= first.states_expanded);
  // a dominated instance (higher shields, lower targets refuted already)
  auto harder = search.decide(std::vector<int>(6, 2), std::vector<int>(6, 3));
  CHECK(harder.answer == Answer::no);
}

TEST_CASE("pruning toggles do not change answers") {
  std::mt19937_64 rng(5);
  for (int it = 0; it < 10; ++it) {
    Graph g = ref::mask_graph(4, static_cast<unsigned>(rng() % 64));
    for (int s = 0; s <= 2; ++s)
      for (int t = 1; t <= 2; ++t) {
        SearchConfig plain;
        plain.mode = Mode::type4;
        plain.dominance_pruning = false;
        plain.dead_state_pruning = false;
        plain.branch_order = SearchConfig::BranchOrder::id_order;
        SearchConfig tuned;
        tuned.mode = Mode::type4;
        auto a = decide_degenerate(g, std::vector<int>(4, s),
                                   std::vector<int>(4, t), plain);
        auto b = decide_degenerate(g, std::vector<int>(4, s),
                                   std::vector<int>(4, t), tuned);
        CHECK(a.answer == b.answer);
      }
  }
}

TEST_CASE("minimum uniform shield matches a brute scan") {
  struct Case {
    Graph g;
    int t;
  };
  std::vector<Case> cases{{path_graph(4), 1},  {path_graph(4), 2},
                          {cycle_graph(4), 1}, {cycle_graph(4), 2},
                          {cycle_graph(5), 1}, {cycle_graph(5), 2},
                          {complete_bipartite_graph(1, 3), 2}};
  for (const auto& [g, t] : cases) {
    SearchConfig cfg;
    cfg.mode = Mode::type4;
    auto res = min_uniform_shield(g, t, cfg);
    REQUIRE(!res.exhausted);
    CHECK(res.s_min == ref::min_uniform_shield(g, t, Mode::type4));
  }
}

TEST_CASE("ratio scan collects exact ratios") {
  Graph c5 = cycle_graph(5);
  SearchConfig cfg;
  cfg.mode = Mode::type4;
  auto table = ratio_scan(c5, 3, cfg);
  REQUIRE(table.rows.size() == 3);
  CHECK(table.complete());
  for (int t = 1; t <= 3; ++t) {
    CHECK(table.rows[t - 1].t == t);
    int want = ref::min_uniform_shield(c5, t, Mode::type4);
    CHECK(table.rows[t - 1].s_min == want);
    CHECK(table.rows[t - 1].ratio == Ratio(want + t, t));
  }
  // the t = 2 row realizes the odd-cycle optimum
  CHECK(table.rows[1].ratio == Ratio(5, 2));
  REQUIRE(table.best_ratio.has_value());
  CHECK(*table.best_ratio == Ratio(5, 2));

  // parallel scan returns identical rows
  auto par = ratio_scan(c5, 3, cfg, 3);
  for (int i = 0; i < 3; ++i) {
    CHECK(par.rows[i].s_min == table.rows[i].s_min);
    CHECK(par.rows[i].ratio == table.rows[i].ratio);
  }

  CHECK_THROWS_AS(ratio_scan(c5, 0, cfg), std::invalid_argument);
}

TEST_CASE("type3 search is at least as strong as type4") {
  std::mt19937_64 rng(17);
  for (int it = 0; it < 15; ++it) {
    Graph g = ref::mask_graph(4, static_cast<unsigned>(rng() % 64));
    for (int s = 0; s <= 2; ++s)
      for (int t = 1; t <= 2; ++t) {
        SearchConfig c4cfg, c3cfg;
        c4cfg.mode = Mode::type4;
        c3cfg.mode = Mode::type3;
        auto a4 = decide_degenerate(g, std::vector<int>(4, s),
                                    std::vector<int>(4, t), c4cfg);
        auto a3 = decide_degenerate(g, std::vector<int>(4, s),
                                    std::vector<int>(4, t), c3cfg);
        if (a4.answer == Answer::yes) CHECK(a3.answer == Answer::yes);
      }
  }
}
