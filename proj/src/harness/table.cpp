#include "olr/harness/table.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "olr/builder/registry.hpp"
#include "olr/core/rational.hpp"
#include "olr/harness/verify.hpp"
#include "olr/solver/solver.hpp"

namespace olr {

namespace {

GameGoal goal_for(const std::string& family, int l) {
  if (family == "p3-path") return {TargetPattern::path(3), TargetPattern::path(l + 1)};
  if (family == "p3-cycle") return {TargetPattern::path(3), TargetPattern::cycle(l)};
  if (family == "c4-path") return {TargetPattern::cycle(4), TargetPattern::path(l + 1)};
  if (family == "p4-path") return {TargetPattern::path(4), TargetPattern::path(l + 1)};
  throw std::invalid_argument("unknown table family '" + family + "'");
}

std::optional<std::string> strategy_for(const std::string& family, int l) {
  const std::string n = std::to_string(l);
  if (family == "p3-path" && l >= 2) return "p3-path:" + n;
  if (family == "p3-cycle" && (l == 3 || l == 4)) return "p3-smallcycle:" + n;
  if (family == "p3-cycle" && l >= 5) return "p3-cycle:" + n;
  if (family == "c4-path" && l >= 3) return "c4-path:" + n;
  if (family == "p4-path" && l >= 1) return "p4-path:" + n;
  return std::nullopt;
}

int trivial(const GameGoal& g) { return g.red.edge_count() + g.blue.edge_count() - 1; }

}  // namespace

int known_lower_bound(const std::string& family, int l) {
  const int t = trivial(goal_for(family, l));
  if (family == "p3-path" && l >= 2) return static_cast<int>(ceil_of(Rational(5 * l, 4)));
  if (family == "p3-cycle" && (l == 3 || l == 4)) return l + 2;
  if (family == "p3-cycle" && l >= 5) return static_cast<int>(ceil_of(Rational(5 * l, 4)));
  if (family == "c4-path" && l >= 3) return 2 * l;
  if (family == "p4-path" && l >= 3)
    return std::max(t, static_cast<int>(ceil_of(Rational(7 * l + 2, 5))));
  return t;
}

std::optional<int> known_upper_bound(const std::string& family, int l) {
  if (family == "p3-path" && l >= 2) return static_cast<int>(ceil_of(Rational(5 * l, 4)));
  if (family == "p3-cycle" && (l == 3 || l == 4)) return l + 2;
  if (family == "p3-cycle" && l >= 5) return static_cast<int>(ceil_of(Rational(5 * l, 4)));
  if (family == "c4-path" && l >= 3) return 4 * l - 4;
  if (family == "p4-path" && l >= 3) return static_cast<int>(floor_of(Rational(7 * l + 52, 5)));
  return std::nullopt;
}

std::vector<TableRow> value_table(const TableOptions& opt) {
  std::vector<TableRow> rows;
  for (int l = opt.from; l <= opt.to; ++l) {
    TableRow r;
    r.goal = goal_for(opt.family, l);
    r.instance = r.goal.to_string();
    r.ell = l;
    r.known_lower = known_lower_bound(opt.family, l);
    r.known_upper = known_upper_bound(opt.family, l);
    if (auto name = strategy_for(opt.family, l)) {
      BuilderStrategy s = parse_builder(*name);
      r.strategy_bound = s.claimed_bound;
      if (opt.certify) {
        auto rep = certify_bound(s, s.claimed_bound);
        if (rep.ok()) r.certified = rep.worst_rounds;
      }
    }
    if (opt.solve && r.known_lower <= opt.solve_round_cap) {
      auto res = solve(SolveConfig(r.goal, opt.solve_round_cap));
      if (res.value) r.solver_value = res.value;
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

std::string format_table(const std::vector<TableRow>& rows) {
  std::ostringstream out;
  auto cell = [](const std::optional<int>& v) { return v ? std::to_string(*v) : std::string("-"); };
  out << "instance     l  lower  upper  solver  strategy  certified\n";
  for (const auto& r : rows) {
    std::string inst = r.instance;
    inst.resize(std::max<std::size_t>(inst.size(), 11), ' ');
    char buf[128];
    std::snprintf(buf, sizeof buf, "%s %2d  %5d  %5s  %6s  %8s  %9s\n", inst.c_str(), r.ell,
                  r.known_lower, cell(r.known_upper).c_str(), cell(r.solver_value).c_str(),
                  cell(r.strategy_bound).c_str(), cell(r.certified).c_str());
    out << buf;
  }
  return out.str();
}

}  // namespace olr
