#pragma once

#include <string>
#include <vector>

namespace stdeg {

struct AcceptanceConfig {
  long long budget = 10'000'000;  // search budget per decide call
  int jobs = 1;                   // worker threads inside heavy checks
};

struct CheckRow {
  int id = 0;
  std::string label;
  bool pass = false;
  std::string detail;  // first failures, or brief statistics when passing
  double wall_seconds = 0;
};

// Runs the acceptance checks listed in `which` (empty = all), in id order.
// Never throws: an escaped exception becomes a failed row. Every check is
// deterministic (fixed seeds, fixed budgets from cfg).
std::vector<CheckRow> run_acceptance(const AcceptanceConfig& cfg = {},
                                     std::vector<int> which = {});

// One-line rendering: "check  3  odd cycle bounds ... PASS (2.41s)".
std::string format_check_row(const CheckRow& row);

}  // namespace stdeg
