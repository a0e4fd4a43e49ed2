#include <set>

#include "doctest.h"
#include "olr/builder/gadgets.hpp"
#include "olr/builder/registry.hpp"
#include "olr/core/detect.hpp"
#include "olr/harness/verify.hpp"

using namespace olr;

namespace {

constexpr Color R = Color::Red;
constexpr Color B = Color::Blue;

// Painter answering `setup` first, then `script`, then `tail` forever.
PainterFn scripted(std::vector<Color> setup, std::vector<Color> script, Color tail) {
  return [=](const Board& b, Edge) {
    std::size_t i = b.edge_count();
    if (i < setup.size()) return setup[i];
    i -= setup.size();
    return i < script.size() ? script[i] : tail;
  };
}

bool is_blue_path(const Board& b, const VertexPath& p) {
  if (std::set<VertexId>(p.begin(), p.end()).size() != p.size()) return false;
  for (std::size_t i = 0; i + 1 < p.size(); ++i)
    if (b.color_of(Edge(p[i], p[i + 1])) != B) return false;
  return true;
}

bool is_anchored(const Board& b, const AnchoredPath& q) {
  if (!is_blue_path(b, q.path) || b.color_of(q.anchor_edge()) != R) return false;
  return q.path.size() == 1 || q.anchor != q.path[1];
}

bool red_p4(const Board& b) { return has_path(b.layer(R), 4); }

struct Leaves {
  long count = 0;
  int worst = 0;
};

// Runs `body` against every sequence of Painter replies after the fixed
// `setup` replies; GameOver ends a leaf and is handed to `over`.
template <typename Body, typename Over>
Leaves every_painter(std::optional<TargetPattern> red, std::optional<TargetPattern> blue,
                     const std::vector<Color>& setup, Body body, Over over) {
  Leaves out;
  std::vector<std::vector<Color>> stack{{}};
  while (!stack.empty()) {
    auto prefix = stack.back();
    stack.pop_back();
    std::vector<Color> used;
    GameContext ctx(red, blue, [&](const Board& b, Edge) {
      std::size_t i = b.edge_count();
      if (i < setup.size()) return setup[i];
      i -= setup.size();
      Color c = i < prefix.size() ? prefix[i] : R;
      used.push_back(c);
      return c;
    });
    try {
      body(ctx);
    } catch (const GameOver& g) {
      over(ctx, g.winner);
    }
    ++out.count;
    out.worst = std::max(out.worst, ctx.rounds() - static_cast<int>(setup.size()));
    for (std::size_t j = used.size(); j-- > prefix.size();) {
      std::vector<Color> child(used.begin(), used.begin() + static_cast<long>(j));
      child.push_back(B);
      stack.push_back(child);
    }
  }
  return out;
}

AnchoredPath make_anchored(GameContext& ctx, int len) {
  VertexId c = ctx.fresh(), b = ctx.fresh();
  ctx.ask(b, c);
  VertexPath p{b};
  for (int i = 0; i < len; ++i) {
    VertexId v = ctx.fresh();
    ctx.ask(p.back(), v);
    p.push_back(v);
  }
  return {p, c};
}

VertexPath make_blue(GameContext& ctx, int len) {
  VertexPath p{ctx.fresh()};
  for (int i = 0; i < len; ++i) {
    VertexId v = ctx.fresh();
    ctx.ask(p.back(), v);
    p.push_back(v);
  }
  return p;
}

Edge make_edge(GameContext& ctx) {
  VertexId u = ctx.fresh(), v = ctx.fresh();
  ctx.ask(u, v);
  return Edge(u, v);
}

std::vector<Color> anchored_setup(int len) {
  std::vector<Color> s(static_cast<std::size_t>(len) + 1, B);
  s[0] = R;
  return s;
}

TypeCPath type_c_from(GameContext& ctx) {
  Edge e = make_edge(ctx), f = make_edge(ctx);
  auto found = find_bc(ctx, e, f);
  return std::get<TypeCPath>(found);
}

}  // namespace

TEST_CASE("building block q=5") {
  {
    GameContext ctx(TargetPattern::path(3), std::nullopt, scripted({}, {}, B));
    auto out = building_block(ctx, 5);
    REQUIRE(std::holds_alternative<BluePath>(out));
    CHECK(std::get<BluePath>(out).path.size() == 5);
    CHECK(ctx.rounds() == 4);
  }
  {
    GameContext ctx(TargetPattern::path(3), std::nullopt, scripted({}, {}, R));
    CHECK_THROWS_AS(building_block(ctx, 5), GameOver);
    CHECK(ctx.rounds() == 2);
    CHECK(ctx.winner() == R);
  }
  {
    GameContext ctx(TargetPattern::path(3), std::nullopt,
                    [](const Board& b, Edge e) {
                      Adjacency red = b.layer(R);
                      add_to(red, e);
                      return is_family_free(red, Family::path_forest(2)) ? R : B;
                    });
    auto out = building_block(ctx, 5);
    REQUIRE(std::holds_alternative<AnchoredPath>(out));
    auto q = std::get<AnchoredPath>(out);
    CHECK(is_anchored(ctx.board(), q));
    CHECK(q.path.size() == 4);
    CHECK(ctx.rounds() == 4);
  }
}

TEST_CASE("building block outcomes against every painter") {
  for (int q = 5; q <= 9; ++q) {
    auto leaves = every_painter(
        TargetPattern::path(3), std::nullopt, {},
        [&](GameContext& ctx) {
          auto out = building_block(ctx, q);
          if (auto* p = std::get_if<BluePath>(&out)) {
            CHECK(static_cast<int>(p->path.size()) == q);
            CHECK(ctx.rounds() == q - 1);
          } else {
            auto a = std::get<AnchoredPath>(out);
            const int t = static_cast<int>(a.path.size());
            CHECK(is_anchored(ctx.board(), a));
            CHECK(t >= 4);
            CHECK(t <= q - 1);
            CHECK(ctx.rounds() == t);
          }
        },
        [&](GameContext& ctx, Color w) {
          CHECK(w == R);
          CHECK(ctx.rounds() <= q - 1);
        });
    CHECK(leaves.count > 1);
  }
}

TEST_CASE("main work l=8") {
  {
    GameContext ctx(TargetPattern::path(3), std::nullopt, scripted({}, {}, B));
    auto out = main_work(ctx, 8);
    REQUIRE(std::holds_alternative<BluePath>(out));
    CHECK(std::get<BluePath>(out).path.size() == 9);
    CHECK(ctx.rounds() == 8);
  }
  auto leaves = every_painter(
      TargetPattern::path(3), std::nullopt, {},
      [](GameContext& ctx) {
        auto out = main_work(ctx, 8);
        if (auto* p = std::get_if<BluePath>(&out)) {
          CHECK(p->path.size() == 9);
          CHECK(is_blue_path(ctx.board(), p->path));
        } else {
          auto a = std::get<AnchoredPath>(out);
          const int t = static_cast<int>(a.path.size());
          CHECK(is_anchored(ctx.board(), a));
          CHECK(t >= 5);
          CHECK(t <= 8);
          CHECK(4 * (ctx.rounds() + 1) <= 5 * t);
        }
      },
      [](GameContext&, Color w) { CHECK(w == R); });
  CHECK(leaves.worst <= 9);
}

TEST_CASE("P3 strategies against fixed painters") {
  auto vs = [](const std::string& s, const PainterStrategy& p) {
    return run_game(parse_builder(s), p, 100);
  };
  auto rec = vs("p3-path:5", constant_painter(B));
  CHECK(rec.winner == B);
  CHECK(rec.transcript.size() == 5);

  rec = vs("p3-cycle:6", constant_painter(B));
  CHECK(rec.winner == B);
  CHECK(rec.transcript.size() <= 7);

  rec = vs("p3-smallcycle:3", constant_painter(B));
  CHECK(rec.winner == B);
  CHECK(rec.transcript.size() <= 5);

  rec = vs("p3-path:8", blocking_painter(Family::path_forest(2)));
  CHECK(rec.transcript.size() == 10);
}

TEST_CASE("every 2-colouring of K4 has a red P3 or a blue C4") {
  std::vector<Edge> k4 = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  for (unsigned mask = 0; mask < 64; ++mask) {
    Board b;
    for (int i = 0; i < 6; ++i) b.apply(k4[i], mask >> i & 1u ? R : B);
    CHECK((contains_pattern(b, R, TargetPattern::path(3)) ||
           contains_pattern(b, B, TargetPattern::cycle(4))));
  }
}

TEST_CASE("C4 strategies against fixed painters") {
  auto rec = run_game(parse_builder("c4-p4"), constant_painter(B), 100);
  CHECK(rec.winner == B);
  CHECK(rec.transcript.size() <= 6);
  rec = run_game(parse_builder("c4-p4"), constant_painter(R), 100);
  CHECK(rec.winner == R);
  CHECK(rec.transcript.size() <= 8);
  rec = run_game(parse_builder("c4-p4"), blocking_painter(Family::cycle(4)), 100);
  CHECK(rec.transcript.size() <= 8);
  rec = run_game(parse_builder("c4-path:5"), constant_painter(B), 100);
  CHECK(rec.winner == B);
  CHECK(rec.transcript.size() <= 9);
}

TEST_CASE("join paths") {
  // Trivial Q, blue edge R.
  every_painter(
      TargetPattern::path(4), std::nullopt, {R, B},
      [](GameContext& ctx) {
        auto Q = make_anchored(ctx, 0);
        auto Rp = make_blue(ctx, 1);
        auto out = join_paths(ctx, Q, Rp);
        CHECK(is_anchored(ctx.board(), out));
        CHECK(out.length() == 2);
        CHECK(ctx.rounds() - 2 <= 2);
      },
      [](GameContext& ctx, Color w) {
        CHECK(w == R);
        CHECK(ctx.rounds() - 2 <= 2);
      });
  {
    // Blue P3 anchored at b, trivial R, all-Blue: one round.
    GameContext ctx(TargetPattern::path(4), std::nullopt, scripted(anchored_setup(2), {}, B));
    auto Q = make_anchored(ctx, 2);
    auto out = join_paths(ctx, Q, {});
    CHECK(out.length() == 3);
    CHECK(ctx.rounds() == 4);
  }
  {
    GameContext ctx(TargetPattern::path(4), std::nullopt, scripted(anchored_setup(2), {}, R));
    auto Q = make_anchored(ctx, 2);
    auto Rp = VertexPath{};
    CHECK_THROWS_AS(join_paths(ctx, Q, Rp), GameOver);
    CHECK(ctx.rounds() - 3 == 2);
  }
  // General case against every painter.
  for (int q = 1; q <= 3; ++q)
    for (int r = 0; r <= 2; ++r) {
      auto setup = anchored_setup(q);
      setup.insert(setup.end(), r, B);
      every_painter(
          TargetPattern::path(4), std::nullopt, setup,
          [&](GameContext& ctx) {
            auto Q = make_anchored(ctx, q);
            auto Rp = make_blue(ctx, r);
            const int before = ctx.rounds();
            auto out = join_paths(ctx, Q, r == 0 ? VertexPath{} : Rp);
            CHECK(is_anchored(ctx.board(), out));
            CHECK(out.length() == q + r + 1);
            CHECK(ctx.rounds() - before <= 2);
          },
          [](GameContext& ctx, Color w) {
            CHECK(w == R);
            CHECK(red_p4(ctx.board()));
          });
    }
}

TEST_CASE("find type A") {
  {
    GameContext ctx(TargetPattern::path(4), std::nullopt, scripted({B}, {}, B));
    Edge e = make_edge(ctx);
    auto out = find_type_a(ctx, {e.u(), e.v()}, 5);
    REQUIRE(std::holds_alternative<BluePath>(out));
    CHECK(length(std::get<BluePath>(out).path) == 5);
    CHECK(ctx.rounds() - 1 == 4);
  }
  {
    GameContext ctx(TargetPattern::path(4), std::nullopt, scripted({B}, {B, R}, B));
    Edge e = make_edge(ctx);
    auto out = find_type_a(ctx, {e.u(), e.v()}, 5);
    REQUIRE(std::holds_alternative<TypeAPath>(out));
    CHECK(length(std::get<TypeAPath>(out).S) == 2);
    CHECK(ctx.rounds() - 1 == 2);
  }
  {
    GameContext ctx(TargetPattern::path(4), std::nullopt, scripted({B}, {}, R));
    Edge e = make_edge(ctx);
    auto out = find_type_a(ctx, {e.u(), e.v()}, 1);
    REQUIRE(std::holds_alternative<BluePath>(out));
    CHECK(length(std::get<BluePath>(out).path) == 1);
    CHECK(ctx.rounds() == 1);
  }
}

TEST_CASE("use type A") {
  // Q of length 2, A = x y S with e(S) = 1, spare blue edge f.
  auto setup = anchored_setup(2);
  for (Color c : {B, R, B}) setup.push_back(c);  // S, xy, f
  auto run = [&](std::vector<Color> script, Color tail) {
    GameContext ctx(TargetPattern::path(4), std::nullopt, scripted(setup, script, tail));
    auto Q = make_anchored(ctx, 2);
    auto S = make_blue(ctx, 1);
    VertexId x = ctx.fresh();
    ctx.ask(x, S.front());
    Edge f = make_edge(ctx);
    TypeAPath A{x, S};
    const int before = ctx.rounds();
    std::optional<UseAResult> res;
    std::optional<Color> winner;
    try {
      res = use_type_a(ctx, Q, A, f);
    } catch (const GameOver& g) {
      winner = g.winner;
    }
    return std::tuple(res, winner, ctx.rounds() - before, ctx.board());
  };
  auto [a, wa, ra, ba] = run({}, B);
  REQUIRE(a);
  CHECK(a->f_untouched);
  CHECK(a->Q.length() == 2 + 1 + 2);
  CHECK(ra == 2);
  CHECK(is_anchored(ba, a->Q));

  auto [b, wb, rb, bb] = run({R}, B);
  REQUIRE(b);
  CHECK_FALSE(b->f_untouched);
  CHECK(b->Q.length() == 2 + 1 + 4);
  CHECK(rb == 4);
  CHECK(is_anchored(bb, b->Q));

  auto [c, wc, rc, bc] = run({R, R}, R);
  CHECK_FALSE(c);
  CHECK(wc == R);
  CHECK(rc <= 4);
}

TEST_CASE("extend with a blue pair, m = 9") {
  auto setup = anchored_setup(2);
  setup.push_back(B);
  setup.push_back(B);
  auto play = [&](PainterFn tail_painter) {
    GameContext ctx(TargetPattern::path(4), std::nullopt, [&](const Board& b, Edge e) {
      return b.edge_count() < setup.size() ? setup[b.edge_count()] : tail_painter(b, e);
    });
    auto Q = make_anchored(ctx, 2);
    Edge e = make_edge(ctx), f = make_edge(ctx);
    const int before = ctx.rounds();
    std::optional<BluePairResult> res;
    try {
      res = extend_with_blue_pair(ctx, Q, e, f, 9);
    } catch (const GameOver&) {
    }
    return std::tuple(res, ctx.rounds() - before, ctx.board());
  };
  auto [a, ra, ba] = play([](const Board&, Edge) { return B; });
  REQUIRE(a);
  INFO("ell' = " << a->ell_prime << ", cost = " << ra);
  CHECK(a->ell_prime >= 3);
  CHECK(a->ell_prime <= 12);
  // The long-blue-path case joins in one round when Painter says Blue.
  CHECK(ra <= a->ell_prime);
  CHECK(ra >= a->ell_prime - 1);

  auto block = blocking_painter(Family::path_forest(3));
  auto [b, rb, bb] = play(block.decide);
  REQUIRE(b);
  CHECK(rb <= b->ell_prime);
  CHECK(is_family_free(bb, R, Family::path_forest(3)));

  std::size_t first = setup.size();
  auto [c, rc, bc] = play([first](const Board& b, Edge) { return b.edge_count() == first ? B : R; });
  if (!c) CHECK(red_p4(bc));
  CHECK(rc <= 12);
}

TEST_CASE("find B or C") {
  auto run = [](std::vector<Color> script) {
    GameContext ctx(TargetPattern::path(4), std::nullopt, scripted({R, R}, script, B));
    Edge e = make_edge(ctx), f = make_edge(ctx);
    std::optional<std::variant<TypeBPath, TypeCPath>> out;
    try {
      out = find_bc(ctx, e, f);
    } catch (const GameOver&) {
    }
    return std::tuple(out, ctx.rounds() - 2, ctx.board());
  };
  auto [a, ra, ba] = run({R, R});
  CHECK_FALSE(a);
  CHECK(ra == 2);
  CHECK(red_p4(ba));

  auto [b, rb, bb] = run({B, B});
  REQUIRE(b);
  CHECK(std::holds_alternative<TypeBPath>(*b));
  CHECK(rb == 2);

  for (Color tu : {R, B}) {
    auto [c, rc, bc] = run({B, R, tu});
    REQUIRE(c);
    REQUIRE(std::holds_alternative<TypeCPath>(*c));
    auto T = std::get<TypeCPath>(*c);
    CHECK(T.k() == 3);
    CHECK(T.length() == 5);
    CHECK_FALSE(is_complete(bc, T));
    CHECK(rc == 3);
  }
}

TEST_CASE("use type B") {
  auto setup = anchored_setup(2);
  for (Color c : {R, B, B, R}) setup.push_back(c);  // vw, wx, xy, yz
  auto run = [&](std::vector<Color> script) {
    GameContext ctx(TargetPattern::path(4), std::nullopt, scripted(setup, script, B));
    auto Q = make_anchored(ctx, 2);
    VertexId v = ctx.fresh(), w = ctx.fresh(), x = ctx.fresh(), y = ctx.fresh(), z = ctx.fresh();
    ctx.ask(v, w);
    ctx.ask(w, x);
    ctx.ask(x, y);
    ctx.ask(y, z);
    const int before = ctx.rounds();
    std::optional<AnchoredPath> out;
    try {
      out = use_type_b(ctx, Q, TypeBPath{v, w, x, y, z});
    } catch (const GameOver&) {
    }
    return std::tuple(out, ctx.rounds() - before, ctx.board());
  };
  auto [a, ra, ba] = run({});
  REQUIRE(a);
  CHECK(a->length() == 2 + 5);
  CHECK(ra == 3);
  CHECK(is_anchored(ba, *a));
  auto [b, rb, bb] = run({R});
  CHECK_FALSE(b);
  CHECK(rb == 1);
  CHECK(red_p4(bb));
  auto [c, rc, bc] = run({B, B, R});
  CHECK_FALSE(c);
  CHECK(red_p4(bc));
}

TEST_CASE("extend type C by one step") {
  // An incomplete k = 3 path from find_bc (replies B, R, B).
  const std::vector<Color> setup = {R, R, B, R, B};
  auto run = [&](std::vector<Color> script) {
    GameContext ctx(TargetPattern::path(4), std::nullopt, scripted(setup, script, B));
    TypeCPath T = type_c_from(ctx);
    const int before = ctx.rounds();
    std::optional<TypeCPath> out;
    try {
      out = extend_type_c_step(ctx, T);
    } catch (const GameOver&) {
    }
    return std::tuple(T, out, ctx.rounds() - before, ctx.board());
  };
  auto [t0, a, ra, ba] = run({B, B, B});
  REQUIRE(a);
  CHECK(a->k() == 5);
  CHECK(a->length() == t0.length() + 3);
  CHECK(ra == 3);
  auto [t1, b, rb, bb] = run({R, R, B, B});
  REQUIRE(b);
  CHECK(b->length() == t1.length() + 4);
  CHECK(rb == 4);
  auto [t2, c, rc, bc] = run({B, R, R});
  CHECK_FALSE(c);
  CHECK(red_p4(bc));
  CHECK(rc <= 4);
}

TEST_CASE("extend type C against every painter") {
  const std::vector<Color> setup = {R, R, B, R, B};
  for (int k0 : {5, 7}) {
    every_painter(
        TargetPattern::path(4), std::nullopt, setup,
        [&](GameContext& ctx) {
          TypeCPath T0 = type_c_from(ctx);
          const int before = ctx.rounds();
          TypeCPath T = extend_type_c(ctx, T0, k0);
          const int cost = ctx.rounds() - before;
          CHECK(cost == T.length() - 5);
          CHECK(T.length() == 2 * T.k() - 5 + length(T.segments.front()) +
                                  length(T.segments.back()));
          if (is_complete(ctx.board(), T)) {
            CHECK(T.k() >= 5);
            CHECK(T.k() <= k0);
          } else {
            CHECK(T.k() == k0);
            CHECK(T.length() <= 2 * k0 - 1);
          }
        },
        [&](GameContext& ctx, Color w) {
          CHECK(w == R);
          CHECK(ctx.rounds() - static_cast<int>(setup.size()) <= 2 * k0 - 6);
        });
  }
}

TEST_CASE("use type C against every painter") {
  const std::vector<Color> setup = {R, R, B, R, B};
  for (int r = 0; r <= 2; ++r) {
    std::vector<Color> full(r, B);
    full.insert(full.end(), setup.begin(), setup.end());
    every_painter(
        TargetPattern::path(4), std::nullopt, full,
        [&](GameContext& ctx) {
          VertexPath Rp = r ? make_blue(ctx, r) : VertexPath{};
          TypeCPath T0 = type_c_from(ctx);
          TypeCPath T = extend_type_c(ctx, T0, 5);
          const bool complete = is_complete(ctx.board(), T);
          const int k = T.k();
          const int before = ctx.rounds();
          VertexPath out = use_type_c(ctx, T, Rp);
          const int cost = ctx.rounds() - before;
          const int gained = length(out) - r;
          CHECK(is_blue_path(ctx.board(), out));
          if (!complete) {
            CHECK(gained == (5 * k - 7) / 2);
            CHECK(2 * cost <= 3 * (k - 1));
          } else {
            CHECK(gained >= 1);
            CHECK(2 * gained <= 5 * (k - 1));
            CHECK(5 * cost <= 7 * gained - 5 * T.length());
          }
        },
        [](GameContext& ctx, Color w) {
          CHECK(w == R);
          CHECK(red_p4(ctx.board()));
        });
  }
}

TEST_CASE("use type C, incomplete k = 5 against all-Blue") {
  // find_bc: B, R, B gives an incomplete T; one more step with R, R keeps it
  // incomplete at k = 5.
  GameContext ctx(TargetPattern::path(4), std::nullopt,
                  scripted({R, R, B, R, B}, {R, R, B, B}, B));
  TypeCPath T = extend_type_c(ctx, type_c_from(ctx), 5);
  REQUIRE(T.k() == 5);
  REQUIRE_FALSE(is_complete(ctx.board(), T));
  const int before = ctx.rounds();
  VertexPath out = use_type_c(ctx, T, {});
  CHECK(length(out) == 9);
  CHECK(ctx.rounds() - before == 6);
}

TEST_CASE("extend with a red pair, m = 9") {
  CHECK(least_odd_k0(9) == 5);
  CHECK(least_odd_k0(10) == 7);
  CHECK(least_odd_k0(14) == 7);
  auto setup = anchored_setup(1);
  for (Color c : {B, R, R}) setup.push_back(c);  // R edge, e, f
  auto leaves = every_painter(
      TargetPattern::path(4), std::nullopt, setup,
      [&](GameContext& ctx) {
        auto Q = make_anchored(ctx, 1);
        auto Rp = make_blue(ctx, 1);
        Edge e = make_edge(ctx), f = make_edge(ctx);
        const int before = ctx.rounds();
        auto res = extend_with_red_pair(ctx, Q, Rp, e, f, 9);
        const int cost = ctx.rounds() - before;
        switch (res.kind) {
          case RedPairResult::Kind::QExtended:
            CHECK(res.Q.length() == Q.length() + 5);
            CHECK(cost == 5);
            CHECK(is_anchored(ctx.board(), res.Q));
            break;
          case RedPairResult::Kind::RExtended:
            CHECK(res.ell_prime >= 1);
            CHECK(res.ell_prime <= 14);
            CHECK(5 * cost <= 7 * res.ell_prime - 10);
            break;
          case RedPairResult::Kind::RReachedM:
            CHECK(res.ell_prime >= 9);
            CHECK(5 * cost <= 7 * 9 + 30);
            break;
        }
      },
      [&](GameContext& ctx, Color w) {
        CHECK(w == R);
        CHECK(5 * (ctx.rounds() - static_cast<int>(setup.size())) <= 7 * 9 + 30);
      });
  CHECK(leaves.count > 10);
}

TEST_CASE("validators reject malformed gadgets") {
  Board b;
  b.apply(Edge(0, 1), R);
  b.apply(Edge(1, 2), B);
  b.apply(Edge(2, 3), B);
  CHECK_NOTHROW(validate(b, AnchoredPath{{1, 2, 3}, 0}));
  CHECK_THROWS_AS(validate(b, AnchoredPath{{3, 2, 1}, 0}), InvariantViolated);
  CHECK_THROWS_AS(validate_blue_path(b, {0, 1, 2}), InvariantViolated);
  CHECK_NOTHROW(validate(b, TypeAPath{0, {1, 2, 3}}));
  CHECK_THROWS_AS(validate(b, TypeAPath{0, {1}}), InvariantViolated);
  CHECK_THROWS_AS(validate(b, TypeBPath{0, 1, 2, 3, 4}), InvariantViolated);
  // k must be odd.
  CHECK_THROWS_AS(validate(b, TypeCPath{{{0, 1}, {1, 2}}}), InvariantViolated);
}

TEST_CASE("strategies never propose an uncovered edge") {
  for (auto name : builder_catalogue()) {
    if (auto at = name.find("ELL"); at != std::string::npos) name.replace(at, 3, "7");
    auto s = parse_builder(name);
    for (auto p : {constant_painter(R), constant_painter(B), blocking_painter(Family::path_forest(3))}) {
      GameRecord rec;
      CHECK_NOTHROW(rec = run_game(s, p, s.claimed_bound + 16));
      for (const auto& m : rec.transcript.moves()) CHECK_FALSE(m.wasted);
      CHECK_NOTHROW(static_cast<void>(rec.transcript.replay()));
    }
  }
}

TEST_CASE("p4-path l=6 within 18 rounds against every painter") {
  auto rep = certify_bound(parse_builder("p4-path:6"), 18);
  CHECK(rep.ok());
  CHECK(rep.worst_rounds <= 18);
}

TEST_CASE("parse_builder") {
  CHECK(parse_builder("p3-path:8").claimed_bound == 10);
  CHECK(parse_builder("p3-cycle:6").claimed_bound == 8);
  CHECK(parse_builder("p3-smallcycle:4").claimed_bound == 6);
  CHECK(parse_builder("c4-p4").claimed_bound == 8);
  CHECK(parse_builder("c4-path:5").claimed_bound == 16);
  CHECK(parse_builder("p4-path:10").claimed_bound == 24);
  CHECK_THROWS(parse_builder("p3-cycle:4"));
  CHECK_THROWS(parse_builder("nonsense"));
}

TEST_CASE("extend with a blue pair against every painter") {
  auto setup = anchored_setup(2);
  setup.push_back(B);
  setup.push_back(B);
  for (int m : {1, 5, 9}) {
    every_painter(
        TargetPattern::path(4), std::nullopt, setup,
        [&](GameContext& ctx) {
          auto Q = make_anchored(ctx, 2);
          Edge e = make_edge(ctx), f = make_edge(ctx);
          const int before = ctx.rounds();
          auto res = extend_with_blue_pair(ctx, Q, e, f, m);
          const int cost = ctx.rounds() - before;
          CHECK(is_anchored(ctx.board(), res.Q));
          CHECK(res.Q.length() == Q.length() + res.ell_prime);
          CHECK(res.ell_prime >= std::min(3, m + 1));
          CHECK(res.ell_prime <= m + 3);
          CHECK(cost <= res.ell_prime);
          if (res.ell_prime < 5 && 5 <= m) {
            CHECK(res.f_untouched);
            std::set<VertexId> used(res.Q.path.begin(), res.Q.path.end());
            used.insert(res.Q.anchor);
            CHECK_FALSE(used.count(f.u()));
            CHECK_FALSE(used.count(f.v()));
          }
        },
        [&](GameContext& ctx, Color w) {
          CHECK(w == R);
          CHECK(ctx.rounds() - static_cast<int>(setup.size()) <= m + 3);
        });
  }
}

TEST_CASE("p4-path:10 against the blocking painter") {
  auto rec = run_game(parse_builder("p4-path:10"),
                      blocking_painter(Family::path_forest(3)), 100);
  CHECK(rec.winner == B);
  CHECK(rec.transcript.size() >= 15);
  CHECK(rec.transcript.size() <= 24);
}
