#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "stdeg/engine.hpp"
#include "stdeg/graph.hpp"

namespace stdeg {

using Ratio = boost::rational<long long>;

struct SearchConfig {
  Mode mode = Mode::type4;
  // distinct states expanded before the search gives up
  long long max_states = 10'000'000;
  bool dominance_pruning = true;
  bool dead_state_pruning = true;
  enum class BranchOrder { max_budget_first, id_order };
  BranchOrder branch_order = BranchOrder::max_budget_first;
};

enum class Answer { yes, no, budget_exhausted };

struct DecideResult {
  Answer answer = Answer::budget_exhausted;
  std::optional<Certificate> certificate;  // present iff answer == yes
  long long states_expanded = 0;
};

// Exhaustive DFS over the op tree for one graph and one mode. Refuted
// positions are memoized, and by monotonicity a position is also refuted
// when some recorded refuted position on the same alive set has pointwise
// >= shields and <= targets, so the tables stay valid across repeated
// decide() calls (that is what makes the s- and t-scans cheap).
class Search {
 public:
  Search(const Graph& g, const SearchConfig& cfg);
  ~Search();
  Search(const Search&) = delete;
  Search& operator=(const Search&) = delete;

  DecideResult decide(const std::vector<int>& shield,
                      const std::vector<int>& target);

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// Complete decision procedure: validates input, splits into components,
// answers yes immediately when a degeneracy ordering satisfies the
// back-degree bound (shade-only certificate), and otherwise runs the DFS
// per component. Yes answers always carry a certificate that has been
// replayed. Exact search needs n <= 64.
DecideResult decide_degenerate(const Graph& g, const std::vector<int>& shield,
                               const std::vector<int>& target,
                               const SearchConfig& cfg = {});

struct MinShieldResult {
  bool exhausted = false;  // budget ran out at s = s_min before an answer
  int s_min = -1;          // smallest uniform shield when !exhausted
  long long states_expanded = 0;
};

// Smallest s with g degenerate at uniform (s, t): linear scan from 0 up to
// (col - 1) * t, where the back-degree bound guarantees success. Search
// tables are kept across the scan.
MinShieldResult min_uniform_shield(const Graph& g, int t,
                                   const SearchConfig& cfg = {});

struct RatioRow {
  int t = 0;
  bool exhausted = false;
  int s_min = -1;
  Ratio ratio{0, 1};  // (s_min + t) / t when !exhausted
  long long states_expanded = 0;
};

struct RatioTable {
  std::vector<RatioRow> rows;
  std::optional<Ratio> best_ratio;  // min over decided rows
  bool complete() const {
    for (const auto& r : rows)
      if (r.exhausted) return false;
    return true;
  }
};

// One min_uniform_shield row per t in 1..t_max. jobs > 1 distributes rows
// over threads (each with private tables); results are identical either way.
RatioTable ratio_scan(const Graph& g, int t_max, const SearchConfig& cfg = {},
                      int jobs = 1);

}  // namespace stdeg
