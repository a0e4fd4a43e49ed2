#pragma once

#include <climits>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>

#include "olr/core/board.hpp"
#include "olr/core/pattern.hpp"
#include "olr/core/rational.hpp"
#include "olr/core/transcript.hpp"

namespace olr {

using PainterFn = std::function<Color(const Board&, Edge)>;

// Thrown by GameContext::ask once a target appears; unwinds the strategy.
struct GameOver {
  Color winner;
};

class RoundCapHit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A strategy reached a state its proof says cannot happen.
class InvariantViolated : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A gadget's round budget was exceeded.
class BoundExceeded : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct GameStats {
  long type_c_checked = 0;
  long k5_branch = 0;  // the k = 5 branch of the complete, blue-ended case
  long structure_checks = 0;
};

// One game in progress, seen from Builder's side. Gadgets call ask() and
// branch on the reply; the game ends by exception as soon as the board holds
// a red or blue target.
class GameContext {
 public:
  GameContext(std::optional<TargetPattern> red, std::optional<TargetPattern> blue, PainterFn painter,
              int round_cap = INT_MAX);
  explicit GameContext(const GameGoal& goal, PainterFn painter, int round_cap = INT_MAX)
      : GameContext(goal.red, goal.blue, std::move(painter), round_cap) {}

  Color ask(VertexId a, VertexId b);
  // For proposals whose red reply must complete the red target.
  void blue(VertexId a, VertexId b);

  // A vertex untouched by the board and by every earlier fresh() call.
  VertexId fresh();

  const Board& board() const noexcept { return board_; }
  int rounds() const noexcept { return board_.round_count(); }
  const Transcript& transcript() const noexcept { return transcript_; }
  std::optional<Color> winner() const noexcept { return winner_; }
  GameStats& stats() noexcept { return stats_; }
  const GameStats& stats() const noexcept { return stats_; }

  [[noreturn]] void fail(const std::string& what) const;
  // Throws BoundExceeded if more than `bound` rounds were used since `start`.
  void check_bound(int start, const Rational& bound, const char* what) const;

 private:
  std::optional<TargetPattern> red_;
  std::optional<TargetPattern> blue_;
  PainterFn painter_;
  int round_cap_;
  Board board_;
  Transcript transcript_;
  VertexId next_fresh_ = 0;
  std::optional<Color> winner_;
  GameStats stats_;
};

}  // namespace olr
