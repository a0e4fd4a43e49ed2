#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>

#include "olr/core/transcript.hpp"
#include "olr/painter/painter.hpp"

namespace olr {

struct SolveConfig {
  SolveConfig(GameGoal g, int rounds, int vertices = 0)
      : goal(std::move(g)), round_cap(rounds), vertex_cap(vertices) {}

  GameGoal goal;
  int round_cap = 0;
  int vertex_cap = 0;  // 0 means 2 * round_cap
  std::optional<std::size_t> memo_limit;  // bytes
  // Every pair on vertex_cap labelled vertices, no symmetry reduction.
  bool full_generator = false;
  // Lowest depth tried; 0 means e(G) + e(H) - 1.
  int start_depth = 0;
};

struct SolveResult {
  std::optional<int> value;  // exact when set
  int lower = 0;             // certified bounds otherwise
  std::optional<int> upper;
  long nodes_expanded = 0;
  bool memo_overflowed = false;
  Transcript principal;
};

class CapTooSmall : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class Solver {
 public:
  explicit Solver(SolveConfig cfg);
  ~Solver();
  Solver(Solver&&) noexcept;

  // Can Builder force a target within `depth` more rounds from `board`?
  bool can_win(Board& board, int depth);
  // Least such depth up to `max_depth`.
  std::optional<int> rounds_needed(Board& board, int max_depth);
  // A move realising rounds_needed, or any legal move if none within max_depth.
  Edge best_move(Board& board, int max_depth);
  // Rounds still needed once e is coloured c; 0 if that ends the game,
  // max_depth + 1 if out of reach.
  int rounds_after(Board& board, Edge e, Color c, int max_depth);

  long nodes() const;
  bool memo_overflowed() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

SolveResult solve(const SolveConfig& cfg);
Edge best_builder_move(const Board& board, const GameGoal& goal, int budget);
// Colours to maximise the rounds Builder still needs, Red on ties.
PainterStrategy optimal_painter(const GameGoal& goal, int budget);

}  // namespace olr
