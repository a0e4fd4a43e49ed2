#include <algorithm>

#include "olr/builder/gadgets.hpp"

namespace olr {

std::variant<BluePath, AnchoredPath> building_block(GameContext& ctx, int q) {
  if (q < 5) throw std::invalid_argument("building block needs q >= 5");
  const int start = ctx.rounds();
  VertexPath x{ctx.fresh()};
  while (static_cast<int>(x.size()) < q) {
    const VertexId next = ctx.fresh();
    if (ctx.ask(x.back(), next) == Color::Blue) {
      x.push_back(next);
      continue;
    }
    const int i = static_cast<int>(x.size());
    AnchoredPath out;
    if (i >= 4) {
      out = {VertexPath(x.rbegin(), x.rend()), next};
    } else if (i == 1) {
      const VertexId v = ctx.fresh();
      ctx.blue(x[0], v);
      ctx.blue(v, next);
      const VertexId w = ctx.fresh();
      ctx.blue(next, w);
      out = {{x[0], v, next, w}, next};
    } else if (i == 2) {
      const VertexId v = ctx.fresh();
      ctx.blue(x[1], v);
      ctx.blue(v, next);
      out = {{next, v, x[1], x[0]}, x[1]};
    } else {
      ctx.blue(next, x[0]);
      out = {{x[2], x[1], x[0], next}, next};
    }
    ctx.check_bound(start, Rational(static_cast<int>(out.path.size())), "building block (iii)");
    return out;
  }
  ctx.check_bound(start, Rational(q - 1), "building block (ii)");
  return BluePath{x};
}

std::variant<BluePath, AnchoredPath> main_work(GameContext& ctx, int ell) {
  if (ell < 4) throw std::invalid_argument("main work needs ell >= 4");
  const int start = ctx.rounds();
  auto first = building_block(ctx, ell + 1);
  if (auto* p = std::get_if<BluePath>(&first)) return *p;
  AnchoredPath P = std::get<AnchoredPath>(first);
  auto t = [&] { return static_cast<int>(P.path.size()); };
  while (t() < ell - 3) {
    auto block = building_block(ctx, ell - t() + 1);
    if (auto* w = std::get_if<BluePath>(&block)) {
      ctx.blue(w->path.front(), P.b());
      VertexPath joined(w->path.rbegin(), w->path.rend());
      joined.insert(joined.end(), P.path.begin(), P.path.end());
      ctx.check_bound(start, Rational(5 * ell, 4) - 1, "main work (ii)");
      return BluePath{joined};
    }
    const auto& B = std::get<AnchoredPath>(block);
    ctx.blue(P.a(), B.b());
    P.path.insert(P.path.end(), B.path.begin(), B.path.end());
    ctx.check_bound(start, Rational(5 * t(), 4) - 1, "main work (*)");
  }
  ctx.check_bound(start, Rational(5 * t(), 4) - 1, "main work (iii)");
  return P;
}

void play_p3_path(GameContext& ctx, int ell) {
  if (ell < 2) throw std::invalid_argument("p3-path needs ell >= 2");
  if (ell == 2) {
    const Color a = ctx.ask(0, 1);
    const Color b = ctx.ask(1, 2);
    if (a != b) ctx.ask(0, 2);
    ctx.fail("p3-path:2 tree ended without a target");
  }
  if (ell == 3) {
    const Color a = ctx.ask(0, 1);
    const Color b = ctx.ask(1, 2);
    if (a == Color::Blue && b == Color::Blue) {
      if (ctx.ask(2, 3) == Color::Red) ctx.ask(0, 3);
    } else {
      ctx.blue(1, 3);
      const VertexId r = a == Color::Red ? 0 : 2;
      ctx.ask(r, 3);
    }
    ctx.fail("p3-path:3 tree ended without a target");
  }
  auto mw = main_work(ctx, ell);
  if (std::holds_alternative<BluePath>(mw)) ctx.fail("blue P_{ell+1} did not end the game");
  AnchoredPath P = std::get<AnchoredPath>(mw);
  // Case split on the number of path edges t, from ell-4 up to ell-1.
  for (;;) {
    const int t = P.length();
    if (t == ell - 1) {
      ctx.blue(ctx.fresh(), P.b());
      break;
    }
    const VertexId tip = P.a();
    const VertexId x = ctx.fresh();
    if (ctx.ask(tip, x) == Color::Blue) {
      P.path.push_back(x);
      continue;
    }
    if (t == ell - 4) ctx.blue(ctx.fresh(), P.b());
    const VertexId w = ctx.fresh();
    ctx.blue(tip, w);
    ctx.blue(w, x);
    if (t <= ell - 3) ctx.blue(x, ctx.fresh());
    break;
  }
  ctx.fail("p3-path ended without a target");
}

void play_p3_smallcycle(GameContext& ctx, int ell) {
  if (ell == 4) {
    for (VertexId i = 0; i < 4; ++i) {
      for (VertexId j = i + 1; j < 4; ++j) ctx.ask(i, j);
    }
    ctx.fail("K4 without red P3 or blue C4");
  }
  if (ell != 3) throw std::invalid_argument("p3-smallcycle needs ell in {3,4}");
  const VertexId u = 0;
  VertexId nb[3] = {1, 2, 3};
  Color c[3];
  for (int i = 0; i < 3; ++i) c[i] = ctx.ask(u, nb[i]);
  const auto red = std::find(c, c + 3, Color::Red);
  if (red == c + 3) {
    if (ctx.ask(nb[0], nb[1]) == Color::Red) ctx.ask(nb[1], nb[2]);
    ctx.fail("p3-smallcycle all-blue branch ended without a target");
  }
  // Exactly one red: call it uv, the blue ones uw and ux.
  const VertexId v = nb[red - c];
  VertexId rest[2];
  int n = 0;
  for (int i = 0; i < 3; ++i) {
    if (nb[i] != v) rest[n++] = nb[i];
  }
  const VertexId w = rest[0], x = rest[1], y = ctx.fresh();
  if (ctx.ask(x, y) == Color::Red) {
    ctx.ask(w, x);
  } else {
    ctx.ask(y, u);
  }
  ctx.fail("p3-smallcycle ended without a target");
}

void play_p3_cycle(GameContext& ctx, int ell) {
  if (ell < 5) throw std::invalid_argument("p3-cycle needs ell >= 5");
  auto mw = main_work(ctx, ell - 1);
  if (auto* bp = std::get_if<BluePath>(&mw)) {
    const auto& v = bp->path;  // v_1 ... v_ell
    if (ctx.ask(v.back(), v.front()) == Color::Red) {
      ctx.blue(v[0], v[2]);
      ctx.blue(v.back(), v[1]);
    }
    ctx.fail("p3-cycle (ii) ended without a target");
  }
  AnchoredPath P = std::get<AnchoredPath>(mw);
  const VertexId v1 = P.b();
  for (;;) {
    const int t = static_cast<int>(P.path.size());
    const VertexId tip = P.a();
    if (t == ell - 4) {
      VertexId w = ctx.fresh(), x = ctx.fresh(), y = ctx.fresh();
      const Color wx = ctx.ask(w, x);
      const Color xy = ctx.ask(x, y);
      if (wx != xy) {
        if (wx == Color::Blue) std::swap(w, y);
        const VertexId z = ctx.fresh();
        ctx.blue(tip, w);
        ctx.blue(w, z);
        ctx.blue(z, x);
        ctx.blue(y, v1);
        break;
      }
      if (ctx.ask(tip, w) == Color::Blue) {
        P.path.insert(P.path.end(), {w, x, y});
        continue;
      }
      const VertexId z = ctx.fresh();
      ctx.blue(tip, z);
      ctx.blue(z, w);
      ctx.blue(y, v1);
      break;
    }
    const VertexId w = ctx.fresh();
    if (t == ell - 1) {
      if (ctx.ask(tip, w) == Color::Blue) {
        ctx.blue(w, v1);
      } else {
        const VertexId x = ctx.fresh();
        ctx.blue(tip, x);
        ctx.blue(x, v1);
      }
      break;
    }
    if (ctx.ask(tip, w) == Color::Blue) {
      P.path.push_back(w);
      continue;
    }
    const VertexId x = ctx.fresh();
    ctx.blue(tip, x);
    ctx.blue(x, w);
    if (t == ell - 2) {
      ctx.blue(w, v1);
    } else {
      const VertexId y = ctx.fresh();
      ctx.blue(w, y);
      ctx.blue(y, v1);
    }
    break;
  }
  ctx.fail("p3-cycle ended without a target");
}

}  // namespace olr
