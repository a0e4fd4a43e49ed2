#pragma once

#include <optional>
#include <string>
#include <vector>

#include "olr/core/pattern.hpp"

namespace olr {

// One row per instance of a family indexed by l:
//   p3-path (P3, P_{l+1}), p3-cycle (P3, C_l), c4-path (C4, P_{l+1}),
//   p4-path (P4, P_{l+1}).
struct TableRow {
  std::string instance;
  GameGoal goal{TargetPattern::path(2), TargetPattern::path(2)};
  int ell = 0;
  int known_lower = 0;
  std::optional<int> known_upper;
  std::optional<int> solver_value;
  std::optional<int> strategy_bound;  // the strategy's claimed bound
  std::optional<int> certified;       // worst rounds over all Painter replies
};

struct TableOptions {
  std::string family = "p3-path";
  int from = 2;
  int to = 8;
  bool solve = false;       // run the exact solver where it is cheap
  int solve_round_cap = 9;  // skip rows whose known lower bound exceeds this
  bool certify = false;
};

std::vector<TableRow> value_table(const TableOptions& opt);
std::string format_table(const std::vector<TableRow>& rows);

// Bounds as stated for each family, or the trivial bound where the family
// has no closed form at that size.
int known_lower_bound(const std::string& family, int ell);
std::optional<int> known_upper_bound(const std::string& family, int ell);

}  // namespace olr
