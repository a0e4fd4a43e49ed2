#include <algorithm>

#include "olr/builder/gadgets.hpp"

namespace olr {

VertexPath c4_p4(GameContext& ctx) {
  const int start = ctx.rounds();
  const VertexId u = ctx.fresh();
  VertexId v[4];
  Color c[4];
  for (int i = 0; i < 4; ++i) {
    v[i] = ctx.fresh();
    c[i] = ctx.ask(u, v[i]);
  }
  // Blue spokes first.
  VertexId sorted[4];
  int j = 0;
  for (int i = 0; i < 4; ++i) {
    if (c[i] == Color::Blue) sorted[j++] = v[i];
  }
  for (int i = 0, n = j; i < 4; ++i) {
    if (c[i] == Color::Red) sorted[n++] = v[i];
  }
  std::copy(sorted, sorted + 4, v);
  VertexPath out;
  if (j >= 2) {
    const VertexId w[2] = {ctx.fresh(), ctx.fresh()};
    for (int i = 0; i < 2 && out.empty(); ++i) {
      for (int s = 0; s < 2 && out.empty(); ++s) {
        if (ctx.ask(v[s], w[i]) == Color::Blue) out = {v[1 - s], u, v[s], w[i]};
      }
    }
  } else {
    const Color a = ctx.ask(v[0], v[1]);
    const Color b = ctx.ask(v[0], v[2]);
    if (a == Color::Blue && b == Color::Blue) {
      if (ctx.ask(v[1], v[3]) == Color::Blue) {
        out = {v[2], v[0], v[1], v[3]};
      } else if (ctx.ask(v[2], v[3]) == Color::Blue) {
        out = {v[1], v[0], v[2], v[3]};
      }
    } else if (a != b) {
      if (a == Color::Red) std::swap(v[1], v[2]);
      if (j == 1) {
        if (ctx.ask(v[1], v[2]) == Color::Blue) {
          out = {u, v[0], v[1], v[2]};
        } else if (ctx.ask(v[1], v[3]) == Color::Blue) {
          out = {u, v[0], v[1], v[3]};
        }
      } else {
        ctx.blue(v[1], v[2]);
        ctx.blue(v[2], v[3]);
        out = {v[0], v[1], v[2], v[3]};
      }
    }
  }
  if (out.empty()) ctx.fail("c4-p4 ended without red C4 or blue P4");
  validate_blue_path(ctx.board(), out);
  ctx.check_bound(start, Rational(8), "c4-p4");
  return out;
}

VertexPath c4_blue_path(GameContext& ctx, int vertices) {
  if (vertices < 4) throw std::invalid_argument("c4 path needs at least 4 vertices");
  if (vertices == 4) return c4_p4(ctx);
  VertexPath p = c4_blue_path(ctx, vertices - 1);
  const VertexId ends[2] = {p.front(), p.back()};
  const VertexId fresh[2] = {ctx.fresh(), ctx.fresh()};
  for (VertexId x : fresh) {
    for (int s = 0; s < 2; ++s) {
      if (ctx.ask(ends[s], x) == Color::Blue) {
        if (s == 0) {
          p.insert(p.begin(), x);
        } else {
          p.push_back(x);
        }
        return p;
      }
    }
  }
  ctx.fail("c4 gadget ended without red C4 or a longer blue path");
}

void play_c4_path(GameContext& ctx, int ell) {
  if (ell < 3) throw std::invalid_argument("c4-path needs ell >= 3");
  c4_blue_path(ctx, ell + 1);
  ctx.fail("c4-path ended without a target");
}

}  // namespace olr
