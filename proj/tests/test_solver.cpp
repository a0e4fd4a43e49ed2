#include "doctest.h"
#include "olr/builder/registry.hpp"
#include "olr/core/detect.hpp"
#include "olr/harness/verify.hpp"
#include "olr/solver/solver.hpp"

using namespace olr;

namespace {
constexpr Color R = Color::Red;
constexpr Color B = Color::Blue;

GameGoal goal(const char* red, const char* blue) {
  return {TargetPattern::parse(red), TargetPattern::parse(blue)};
}

int value_of(const char* red, const char* blue, int cap = 12) {
  auto res = solve(SolveConfig(goal(red, blue), cap));
  REQUIRE(res.value.has_value());
  return *res.value;
}

bool target_on(const Board& b, const GameGoal& g) {
  return contains_pattern(b, R, g.red) || contains_pattern(b, B, g.blue);
}
}  // namespace

TEST_CASE("exact values") {
  CHECK(value_of("P3", "P3") == 3);
  CHECK(value_of("P3", "P4") == 4);
  CHECK(value_of("P3", "C3") == 5);
  CHECK(value_of("P3", "C4") == 6);
  CHECK(value_of("C4", "P4") == 8);
  CHECK(value_of("P3", "P5") == 5);
  CHECK(value_of("P3", "P6") == 7);
}

TEST_CASE("solver agrees with ceil(5l/4) for P3 against paths") {
  for (int ell = 2; ell <= 6; ++ell) {
    auto blue = "P" + std::to_string(ell + 1);
    auto res = solve(SolveConfig({TargetPattern::path(3), TargetPattern::parse(blue)}, 12));
    REQUIRE(res.value);
    CHECK(*res.value == (5 * ell + 3) / 4);
  }
}

TEST_CASE("trivial lower bound and monotonicity") {
  int previous = 0;
  for (int s = 2; s <= 7; ++s) {
    GameGoal g{TargetPattern::path(3), TargetPattern::path(s)};
    auto res = solve(SolveConfig(g, 12));
    REQUIRE(res.value);
    CHECK(*res.value >= g.red.edge_count() + g.blue.edge_count() - 1);
    CHECK(*res.value >= previous);
    previous = *res.value;
  }
  for (const char* blue : {"C3", "C4", "C5"})
    CHECK(value_of("P3", blue) >= 2 + TargetPattern::parse(blue).edge_count() - 1);
}

TEST_CASE("principal line is a legal game of the right length") {
  auto g = goal("C4", "P4");
  auto res = solve(SolveConfig(g, 12));
  REQUIRE(res.value == 8);
  CHECK(res.principal.size() == 8);
  Board b = res.principal.replay();
  CHECK(target_on(b, g));
  Board partial;
  for (std::size_t i = 0; i + 1 < res.principal.size(); ++i) {
    const auto& m = res.principal.moves()[i];
    partial.apply(m.edge, m.color);
    CHECK_FALSE(target_on(partial, g));
  }
}

TEST_CASE("fresh-vertex reduction matches the full move generator") {
  for (auto [red, blue] : {std::pair{"P3", "P3"}, {"P3", "P4"}, {"P2", "P4"}, {"P3", "C3"},
                           {"P4", "P3"}, {"C3", "P2"}}) {
    CAPTURE(red);
    CAPTURE(blue);
    SolveConfig reduced(goal(red, blue), 4);
    SolveConfig full = reduced;
    full.full_generator = true;
    auto a = solve(reduced), b = solve(full);
    CHECK(a.value == b.value);
    CHECK(a.lower == b.lower);
  }
}

TEST_CASE("caps that bind give certified bounds") {
  auto res = solve(SolveConfig(goal("P3", "C4"), 4));
  CHECK_FALSE(res.value);
  CHECK(res.lower == 5);
  auto exact = solve(SolveConfig(goal("P3", "C4"), 6));
  CHECK(exact.value == 6);
}

TEST_CASE("solves are deterministic") {
  SolveConfig cfg(goal("C4", "P4"), 12);
  auto a = solve(cfg), b = solve(cfg);
  CHECK(a.value == b.value);
  CHECK(a.nodes_expanded == b.nodes_expanded);
  CHECK(a.principal == b.principal);
}

TEST_CASE("memo overflow falls back to uncached search") {
  SolveConfig cfg(goal("P3", "P4"), 6);
  cfg.memo_limit = 0;
  auto res = solve(cfg);
  CHECK(res.memo_overflowed);
  CHECK(res.value == 4);
}

TEST_CASE("caps too small") {
  CHECK_THROWS_AS(solve(SolveConfig(goal("P3", "P3"), 0)), CapTooSmall);
  CHECK_THROWS_AS(solve(SolveConfig(goal("P3", "C4"), 6, 3)), CapTooSmall);
}

TEST_CASE("best builder move") {
  auto g = goal("P3", "P3");
  CHECK(best_builder_move(Board{}, g, 3) == Edge(0, 1));

  Board b;
  b.apply(Edge(0, 1), R);
  Edge e = best_builder_move(b, g, 2);
  CHECK_FALSE(b.has_edge(e));
  // Both answers leave a one-round win.
  Solver s(SolveConfig(g, 3));
  CHECK(s.rounds_after(b, e, R, 2) <= 1);
  CHECK(s.rounds_after(b, e, B, 2) <= 1);

  Board path;
  for (VertexId v = 0; v < 3; ++v) path.apply(Edge(v, v + 1), B);
  path.apply(Edge(3, 9), R);
  auto g5 = goal("P3", "P5");
  Edge finish = best_builder_move(path, g5, 1);
  CHECK(target_on(path.add_edge(finish, B), g5));
  CHECK(target_on(path.add_edge(finish, R), g5));
}

TEST_CASE("optimal painter") {
  auto g = goal("P3", "P3");
  auto p = optimal_painter(g, 3);
  CHECK(p(Board{}, Edge(0, 1)) == R);
  // No Builder wins within two rounds.
  for (VertexId a = 0; a < 4; ++a)
    for (VertexId b = a + 1; b < 4; ++b)
      for (VertexId c = 0; c < 4; ++c)
        for (VertexId d = c + 1; d < 4; ++d) {
          if (Edge(a, b) == Edge(c, d)) continue;
          Board board;
          board.apply(Edge(a, b), p(board, Edge(a, b)));
          CHECK_FALSE(target_on(board, g));
          board.apply(Edge(c, d), p(board, Edge(c, d)));
          CHECK_FALSE(target_on(board, g));
        }

  // (P3, P5) lasts exactly five rounds against best play.
  auto p5 = optimal_painter(goal("P3", "P5"), 5);
  auto rec = run_game(parse_builder("p3-path:4"), p5, 20);
  CHECK(rec.transcript.size() == 5);
  Board board;
  int rounds = 0;
  auto g5 = goal("P3", "P5");
  while (!target_on(board, g5) && rounds < 10) {
    Edge e = best_builder_move(board, g5, 5 - rounds);
    board.apply(e, p5(board, e));
    ++rounds;
  }
  CHECK(rounds == 5);
}
