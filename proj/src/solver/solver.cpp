#include "olr/solver/solver.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "olr/core/canonical.hpp"
#include "olr/core/detect.hpp"

namespace olr {

namespace {

const TargetPattern& target_of(const GameGoal& g, Color c) {
  return c == Color::Red ? g.red : g.blue;
}

// Whether colouring e (already applied as c) completed c's target.
bool completes(const Board& b, Edge e, Color c, const GameGoal& g) {
  return contains_through(b.layer(c), e, target_of(g, c));
}

std::string exact_key(const Board& b) {
  std::string k;
  for (auto& [e, c] : b.edges()) {
    k += std::to_string(e.u()) + ',' + std::to_string(e.v()) + (c == Color::Red ? 'r' : 'b');
  }
  return k;
}

}  // namespace

struct Solver::Impl {
  explicit Impl(SolveConfig c) : cfg(std::move(c)) {}
  SolveConfig cfg;
  // Per position: least depth known winning, greatest depth known losing.
  struct Entry {
    int win = 1 << 20;
    int lose = -1;
  };
  std::unordered_map<std::string, Entry> memo;
  std::size_t memo_bytes = 0;
  bool overflowed = false;
  long nodes = 0;

  std::string key(const Board& b) const {
    return cfg.full_generator ? exact_key(b) : canonical_key(b);
  }

  // Painter can paint the next dR-1 edges red and the rest blue.
  int lower_bound(const Board& b) const {
    auto need = [&](Color c) {
      int e = target_of(cfg.goal, c).edge_count();
      int have = static_cast<int>(b.edge_count(c));
      return e - std::min(e - 1, have);
    };
    return need(Color::Red) + need(Color::Blue) - 1;
  }

  std::vector<Edge> moves(const Board& b) const {
    std::vector<Edge> out;
    int cap = cfg.vertex_cap;
    if (cfg.full_generator) {
      for (int u = 0; u < cap; ++u)
        for (int v = u + 1; v < cap; ++v) {
          Edge e(u, v);
          if (!b.has_edge(e)) out.push_back(e);
        }
      return out;
    }
    auto act = b.active_vertices();
    int n = static_cast<int>(act.size());
    VertexId f1 = b.vertex_bound();
    VertexId f2 = f1 + 1;
    std::unordered_set<std::string> seen;
    auto consider = [&](Edge e) {
      auto k = canonical_form(to_labelled(b, e));
      if (seen.insert(std::move(k)).second) out.push_back(e);
    };
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        Edge e(act[i], act[j]);
        if (!b.has_edge(e)) consider(e);
      }
    if (n + 1 <= cap)
      for (int i = 0; i < n; ++i) consider(Edge(act[i], f1));
    if (n + 2 <= cap) consider(Edge(f1, f2));
    return out;
  }

  // Does Painter lose immediately or eventually after e is coloured c?
  bool branch_wins(Board& b, Edge e, Color c, int depth) {
    b.apply(e, c);
    bool w = completes(b, e, c, cfg.goal) || (depth > 1 && can_win(b, depth - 1));
    b.undo(e);
    return w;
  }

  bool can_win(Board& b, int depth) {
    if (depth <= 0) return false;
    if (lower_bound(b) > depth) return false;
    std::string k = key(b);
    if (auto it = memo.find(k); it != memo.end()) {
      if (depth >= it->second.win) return true;
      if (depth <= it->second.lose) return false;
    }
    ++nodes;
    bool result = false;
    for (Edge e : moves(b)) {
      // Try the colour Painter would rather use first: the one that does
      // not finish a target, Red preferred.
      b.apply(e, Color::Red);
      bool red_loses = completes(b, e, Color::Red, cfg.goal);
      b.undo(e);
      Color first = red_loses ? Color::Blue : Color::Red;
      if (!branch_wins(b, e, first, depth)) continue;
      if (!branch_wins(b, e, opposite(first), depth)) continue;
      result = true;
      break;
    }
    store(k, depth, result);
    return result;
  }

  void store(const std::string& k, int depth, bool win) {
    auto it = memo.find(k);
    if (it == memo.end()) {
      std::size_t cost = k.size() + 64;
      if (cfg.memo_limit && memo_bytes + cost > *cfg.memo_limit) {
        overflowed = true;
        return;
      }
      memo_bytes += cost;
      it = memo.emplace(k, Entry{}).first;
    }
    if (win)
      it->second.win = std::min(it->second.win, depth);
    else
      it->second.lose = std::max(it->second.lose, depth);
  }

  std::optional<int> rounds_needed(Board& b, int max_depth) {
    for (int d = std::max(1, lower_bound(b)); d <= max_depth; ++d)
      if (can_win(b, d)) return d;
    return std::nullopt;
  }

  // Rounds Builder needs after e is coloured c (0 if that ends the game).
  int after(Board& b, Edge e, Color c, int max_depth) {
    b.apply(e, c);
    int r;
    if (completes(b, e, c, cfg.goal))
      r = 0;
    else
      r = rounds_needed(b, max_depth).value_or(max_depth + 1);
    b.undo(e);
    return r;
  }

  Edge best_move(Board& b, int max_depth) {
    auto ms = moves(b);
    if (ms.empty()) throw CapTooSmall("no legal move within the vertex cap");
    auto need = rounds_needed(b, max_depth);
    if (!need) return ms.front();
    for (Edge e : ms) {
      if (branch_wins(b, e, Color::Red, *need) && branch_wins(b, e, Color::Blue, *need)) return e;
    }
    return ms.front();
  }
};

Solver::Solver(SolveConfig cfg) {
  if (cfg.vertex_cap == 0) cfg.vertex_cap = 2 * cfg.round_cap;
  impl_ = std::make_unique<Impl>(std::move(cfg));
}
Solver::~Solver() = default;
Solver::Solver(Solver&&) noexcept = default;

bool Solver::can_win(Board& b, int depth) { return impl_->can_win(b, depth); }
std::optional<int> Solver::rounds_needed(Board& b, int d) { return impl_->rounds_needed(b, d); }
Edge Solver::best_move(Board& b, int d) { return impl_->best_move(b, d); }
int Solver::rounds_after(Board& b, Edge e, Color c, int d) { return impl_->after(b, e, c, d); }
long Solver::nodes() const { return impl_->nodes; }
bool Solver::memo_overflowed() const { return impl_->overflowed; }

SolveResult solve(const SolveConfig& cfg) {
  int trivial = cfg.goal.red.edge_count() + cfg.goal.blue.edge_count() - 1;
  int vcap = cfg.vertex_cap ? cfg.vertex_cap : 2 * cfg.round_cap;
  int max_vertices = std::max(cfg.goal.red.vertex_count(), cfg.goal.blue.vertex_count());
  if (cfg.round_cap < 1 || vcap < max_vertices)
    throw CapTooSmall("caps cannot hold a single copy of the targets");

  Solver s(cfg);
  SolveResult res;
  Board b;
  int start = cfg.start_depth ? cfg.start_depth : trivial;
  std::optional<int> value;
  for (int d = start; d <= cfg.round_cap; ++d) {
    if (s.can_win(b, d)) {
      value = d;
      break;
    }
  }
  res.nodes_expanded = s.nodes();
  res.memo_overflowed = s.memo_overflowed();
  if (!value) {
    res.lower = std::max(start, cfg.round_cap + 1);
    return res;
  }
  // A value found with a capped vertex set is still an upper bound; it is
  // exact when the cap is at least twice the depth (a game of d rounds
  // touches at most 2d vertices).
  res.upper = value;
  res.lower = (vcap >= 2 * *value) ? *value : start;
  if (res.lower == *value) res.value = value;

  // Principal line: Builder's winning move, Painter's most stubborn reply.
  int left = *value;
  while (left > 0) {
    Edge e = s.best_move(b, left);
    int r_red = s.rounds_after(b, e, Color::Red, left - 1);
    int r_blue = s.rounds_after(b, e, Color::Blue, left - 1);
    Color c = r_blue > r_red ? Color::Blue : Color::Red;
    b.apply(e, c);
    res.principal.record(e, c);
    left = std::max(r_red, r_blue);
  }
  res.nodes_expanded = s.nodes();
  return res;
}

Edge best_builder_move(const Board& board, const GameGoal& goal, int budget) {
  SolveConfig cfg(goal, budget, 2 * budget + static_cast<int>(board.active_count()));
  Solver s(cfg);
  Board b = board;
  return s.best_move(b, budget);
}

PainterStrategy optimal_painter(const GameGoal& goal, int budget) {
  auto solver = std::make_shared<Solver>(
      SolveConfig(goal, budget, 4 * budget + 8));
  PainterStrategy p;
  p.name = "optimal:" + goal.to_string();
  p.deterministic = true;
  p.decide = [solver, budget](const Board& board, Edge e) {
    Board b = board;
    int rounds[2];
    for (Color c : {Color::Red, Color::Blue})
      rounds[index_of(c)] = solver->rounds_after(b, e, c, budget);
    return rounds[1] > rounds[0] ? Color::Blue : Color::Red;
  };
  return p;
}

}  // namespace olr
