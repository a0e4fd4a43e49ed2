#include "olr/builder/context.hpp"

#include <algorithm>

#include "olr/core/detect.hpp"

namespace olr {

GameContext::GameContext(std::optional<TargetPattern> red, std::optional<TargetPattern> blue,
                         PainterFn painter, int round_cap)
    : red_(std::move(red)), blue_(std::move(blue)), painter_(std::move(painter)), round_cap_(round_cap) {}

Color GameContext::ask(VertexId a, VertexId b) {
  const Edge e(a, b);
  if (winner_) fail("move proposed after the game ended");
  if (board_.has_edge(e)) fail("strategy proposed uncovered edge " + to_string(e));
  if (rounds() >= round_cap_) throw RoundCapHit("round cap " + std::to_string(round_cap_) + " reached");
  const Color c = painter_(board_, e);
  board_.apply(e, c);
  transcript_.record(e, c);
  next_fresh_ = std::max(next_fresh_, board_.vertex_bound());
  const auto& target = c == Color::Red ? red_ : blue_;
  if (target && contains_through(board_.layer(c), e, *target)) {
    winner_ = c;
    throw GameOver{c};
  }
  return c;
}

void GameContext::blue(VertexId a, VertexId b) {
  if (ask(a, b) == Color::Red) {
    fail("red reply on " + to_string(Edge(a, b)) + " did not complete the red target");
  }
}

VertexId GameContext::fresh() {
  next_fresh_ = std::max(next_fresh_, board_.vertex_bound());
  return next_fresh_++;
}

void GameContext::fail(const std::string& what) const { throw InvariantViolated(what); }

void GameContext::check_bound(int start, const Rational& bound, const char* what) const {
  const int used = rounds() - start;
  if (Rational(used) > bound) {
    throw BoundExceeded(std::string(what) + ": used " + std::to_string(used) + " rounds, bound " +
                        to_string(bound));
  }
}

}  // namespace olr
