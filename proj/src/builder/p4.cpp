#include <algorithm>

#include "olr/builder/gadgets.hpp"

namespace olr {
namespace {

VertexPath concat(std::initializer_list<VertexPath> parts) {
  VertexPath out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

VertexPath rev(const VertexPath& p) { return VertexPath(p.rbegin(), p.rend()); }

}  // namespace

AnchoredPath join_paths(GameContext& ctx, const AnchoredPath& Q, const VertexPath& R) {
  const int start = ctx.rounds();
  const VertexPath Rp = R.empty() ? VertexPath{ctx.fresh()} : R;
  const VertexId a = Q.a(), b = Q.b(), c = Q.anchor;
  const VertexId x = Rp.front(), y = Rp.size() > 1 ? Rp.back() : ctx.fresh();
  AnchoredPath out;
  if (a == c || Q.path.size() == 1) {
    if (ctx.ask(b, x) == Color::Blue) {
      out = {concat({rev(Q.path), Rp}), a == c ? b : c};
    } else {
      ctx.blue(c, y);
      // Through y back along R to x; for trivial R only y is added.
      const VertexPath tail = Rp.size() > 1 ? rev(Rp) : VertexPath{y};
      if (a == c) {
        out = {concat({Q.path, tail}), c};
      } else {
        out = {concat({{c}, tail}), b};
      }
    }
  } else if (ctx.ask(a, x) == Color::Blue) {
    out = {concat({Q.path, Rp}), c};
  } else {
    ctx.blue(b, x);
    out = {concat({rev(Q.path), Rp}), x};
  }
  validate(ctx.board(), out);
  if (out.length() != Q.length() + length(R) + 1) ctx.fail("join: wrong length");
  ctx.check_bound(start, Rational(2), "join paths");
  return out;
}

std::variant<TypeAPath, BluePath> find_type_a(GameContext& ctx, const VertexPath& e, int m) {
  const int start = ctx.rounds();
  VertexPath S = e;
  while (length(S) < m) {
    const VertexId x = ctx.fresh();
    if (ctx.ask(x, S.front()) == Color::Red) {
      TypeAPath A{x, S};
      validate(ctx.board(), A);
      ctx.check_bound(start, Rational(length(S) - length(e) + 1), "find type A (i)");
      return A;
    }
    S.insert(S.begin(), x);
  }
  ctx.check_bound(start, Rational(std::max(0, m - length(e))), "find type A (ii)");
  return BluePath{S};
}

UseAResult use_type_a(GameContext& ctx, const AnchoredPath& Q, const TypeAPath& A, Edge f) {
  if (Q.path.size() < 2) ctx.fail("use type A needs a non-trivial Q");
  const int start = ctx.rounds();
  const VertexId a = Q.a(), b = Q.b(), x = A.x, y = A.y();
  UseAResult out;
  if (ctx.ask(a, x) == Color::Blue) {
    ctx.blue(b, y);
    out = {{concat({{x}, rev(Q.path), A.S}), y}, true};
  } else {
    const VertexId v = f.u(), w = f.v();
    ctx.blue(a, v);
    ctx.blue(w, y);
    ctx.blue(x, b);
    out = {{concat({{x}, Q.path, {v, w}, A.S}), y}, false};
  }
  validate(ctx.board(), out.Q);
  const int gain = out.f_untouched ? 2 : 4;
  if (out.Q.length() != Q.length() + length(A.S) + gain) ctx.fail("use type A: wrong length");
  ctx.check_bound(start, Rational(gain), "use type A");
  return out;
}

BluePairResult extend_with_blue_pair(GameContext& ctx, const AnchoredPath& Q, Edge e, Edge f, int m) {
  const int start = ctx.rounds();
  BluePairResult out;
  auto found = find_type_a(ctx, {e.u(), e.v()}, m);
  if (auto* A = std::get_if<TypeAPath>(&found)) {
    auto used = use_type_a(ctx, Q, *A, f);
    out = {used.Q, used.Q.length() - Q.length(), used.f_untouched};
  } else {
    AnchoredPath joined = join_paths(ctx, Q, std::get<BluePath>(found).path);
    out = {joined, joined.length() - Q.length(), true};
  }
  // m = 1 joins e straight onto Q, so l' = 2 there.
  if (out.ell_prime < std::min(3, m + 1) || out.ell_prime > m + 3) ctx.fail("blue pair: l' out of range");
  if (out.ell_prime < 5 && 5 <= m && !out.f_untouched) ctx.fail("blue pair: f consumed with l' < 5");
  ctx.check_bound(start, Rational(out.ell_prime), "extend with blue pair");
  return out;
}

std::variant<TypeBPath, TypeCPath> find_bc(GameContext& ctx, Edge e, Edge f) {
  const int start = ctx.rounds();
  VertexId u = e.u(), v = e.v(), x = f.u(), y = f.v();
  const VertexId w = ctx.fresh();
  const Color vw = ctx.ask(v, w);
  const Color wx = ctx.ask(w, x);
  if (vw == Color::Red && wx == Color::Red) ctx.fail("find B/C: red P4 did not end the game");
  if (vw == Color::Red) {
    std::swap(u, y);
    std::swap(v, x);
  }
  if (vw == wx) {
    TypeBPath B{u, v, w, x, y};
    validate(ctx.board(), B);
    ctx.check_bound(start, Rational(2), "find B/C (i)");
    return B;
  }
  const VertexId t = ctx.fresh();
  ctx.ask(t, u);
  TypeCPath T{{{t, u, v}, {v, w}, {w, x, y}}};
  validate(ctx.board(), T);
  ++ctx.stats().type_c_checked;
  ctx.check_bound(start, Rational(3), "find B/C (ii)");
  return T;
}

AnchoredPath use_type_b(GameContext& ctx, const AnchoredPath& Q, const TypeBPath& B) {
  if (Q.path.size() < 2) ctx.fail("use type B needs a non-trivial Q");
  const int start = ctx.rounds();
  ctx.blue(Q.b(), B.v);
  ctx.blue(B.v, B.y);
  ctx.blue(B.w, B.z);
  AnchoredPath out{concat({{B.z, B.w, B.x, B.y, B.v}, Q.path}), B.y};
  validate(ctx.board(), out);
  if (out.length() != Q.length() + 5) ctx.fail("use type B: wrong length");
  ctx.check_bound(start, Rational(3), "use type B");
  return out;
}

TypeCPath extend_type_c_step(GameContext& ctx, const TypeCPath& T0) {
  const Board& board = ctx.board();
  if (is_complete(board, T0)) ctx.fail("extend type C: path already complete");
  const int start = ctx.rounds();
  TypeCPath T = is_red_p3(board, T0.segments.back()) ? T0 : T0.reversed();
  const VertexId zk = T.segments.back()[2];
  VertexId u = ctx.fresh(), v = ctx.fresh(), w = ctx.fresh();
  const Color uv = ctx.ask(u, v);
  const Color vw = ctx.ask(v, w);
  int gain;
  if (uv == Color::Blue && vw == Color::Blue) {
    ctx.blue(zk, u);
    T.segments.push_back({zk, u, v});
    T.segments.push_back({v, w});
    gain = 3;
  } else if (uv == Color::Red && vw == Color::Red) {
    const VertexId t = ctx.fresh();
    ctx.blue(zk, t);
    ctx.blue(t, u);
    T.segments.push_back({zk, t, u});
    T.segments.push_back({u, v, w});
    gain = 4;
  } else {
    if (uv == Color::Red) std::swap(u, w);
    ctx.blue(zk, u);
    const VertexId x = ctx.fresh();
    ctx.ask(w, x);
    T.segments.push_back({zk, u, v});
    T.segments.push_back({v, w, x});
    gain = 4;
  }
  validate(ctx.board(), T);
  ++ctx.stats().type_c_checked;
  if (T.length() != T0.length() + gain) ctx.fail("extend type C: wrong length");
  ctx.check_bound(start, Rational(gain), "extend type C step");
  return T;
}

TypeCPath extend_type_c(GameContext& ctx, const TypeCPath& T0, int k0) {
  if (k0 < 5 || k0 % 2 == 0) throw std::invalid_argument("k0 must be odd and at least 5");
  const int start = ctx.rounds();
  TypeCPath T = T0;
  while (!is_complete(ctx.board(), T) && T.k() < k0) T = extend_type_c_step(ctx, T);
  if (T.k() > k0) ctx.fail("extend type C overshot k0");
  ctx.check_bound(start, Rational(T.length() - T0.length()), "extend type C");
  return T;
}

VertexPath use_type_c(GameContext& ctx, const TypeCPath& T_in, const VertexPath& R) {
  const int k = T_in.k();
  if (k < 5) ctx.fail("use type C needs k >= 5");
  const int start = ctx.rounds();
  const Board& board = ctx.board();
  const bool complete = is_complete(board, T_in);
  const auto& s1 = T_in.segments.front();
  const auto& sk = T_in.segments.back();
  TypeCPath T = T_in;
  if (!complete) {
    if (!is_red_p3(board, s1)) T = T_in.reversed();
  } else if (s1.size() != 2 && sk.size() == 2) {
    T = T_in.reversed();
  }
  const auto& seg = T.segments;  // seg[i-1] is T_i
  auto X = [&](int i) { return seg[i - 1].front(); };
  auto Y = [&](int i) { return seg[i - 1][1]; };
  auto Z = [&](int i) { return seg[i - 1].back(); };

  const VertexPath Rp = R.empty() ? VertexPath{ctx.fresh()} : R;
  // F_1 and the path S_1 from z_1 to x_k.
  ctx.blue(X(3), Rp.front());
  ctx.blue(Rp.back(), Z(3));
  VertexPath S1 = concat({seg[1], Rp});
  S1.insert(S1.end(), seg[3].begin(), seg[3].end());
  for (int i = 5; i <= k - 2; i += 2) {
    const VertexId c = ctx.fresh();
    ctx.blue(X(i), c);
    ctx.blue(c, Z(i));
    S1.push_back(c);
    S1.insert(S1.end(), seg[i].begin(), seg[i].end());
  }
  // F_2 and S_2 from y_{k-2} down to y_3.
  for (int i = 3; i <= k - 4; i += 2) ctx.blue(Y(i), Y(i + 2));
  VertexPath S2;
  for (int i = k - 2; i >= 3; i -= 2) S2.push_back(Y(i));

  VertexPath out;
  if (!complete) {
    const VertexId u = ctx.fresh();
    ctx.blue(Y(1), Y(k - 2));
    ctx.blue(Y(3), X(1));
    ctx.blue(X(1), u);
    ctx.blue(u, Z(1));
    out = concat({{Y(1)}, S2, {X(1), u}, S1});
  } else if (seg.front().size() == 2 && seg.back().size() == 2) {
    if (k >= 7) {
      if (ctx.ask(Y(3), X(1)) == Color::Blue) {
        out = concat({S2, {X(1)}, S1, {Z(k)}});
      } else {
        ctx.blue(Y(k - 2), X(1));
        out = concat({rev(S2), {X(1)}, S1, {Z(k)}});
      }
    } else {
      ++ctx.stats().k5_branch;
      VertexId w = Y(3);
      if (ctx.ask(Y(3), X(1)) == Color::Red) {
        w = ctx.fresh();
        ctx.blue(w, X(1));
      }
      out = concat({{w, X(1)}, S1, {Z(k)}});
    }
  } else if (seg.front().size() == 2) {
    ctx.blue(X(k), Y(k - 2));
    ctx.blue(Y(3), Y(k));
    out = concat({{X(1)}, S1, S2, {Y(k), Z(k)}});
  } else {
    ctx.blue(Y(k), Z(1));
    ctx.blue(X(k), Y(k - 2));
    ctx.blue(Y(3), Y(1));
    out = concat({{Z(k), Y(k)}, S1, S2, {Y(1), X(1)}});
  }
  validate_blue_path(ctx.board(), out);
  const int gained = length(out) - length(R);
  if (!complete) {
    if (gained != (5 * k - 7) / 2) ctx.fail("use type C (i): wrong length");
    ctx.check_bound(start, Rational(3 * (k - 1), 2), "use type C (i)");
  } else {
    if (gained < 1 || gained > 5 * (k - 1) / 2) ctx.fail("use type C (ii): length out of range");
    ctx.check_bound(start, Rational(7 * gained, 5) - T_in.length(), "use type C (ii)");
  }
  return out;
}

int least_odd_k0(int m) {
  int k0 = (2 * m + 7 + 4) / 5;  // ceiling of (2m+7)/5
  if (k0 % 2 == 0) ++k0;
  return k0;
}

RedPairResult extend_with_red_pair(GameContext& ctx, const AnchoredPath& Q, const VertexPath& R, Edge e,
                                   Edge f, int m) {
  if (m < 9) throw std::invalid_argument("red pair extension needs m >= 9");
  const int start = ctx.rounds();
  auto found = find_bc(ctx, e, f);
  if (auto* B = std::get_if<TypeBPath>(&found)) {
    RedPairResult out{RedPairResult::Kind::QExtended, use_type_b(ctx, Q, *B), R, 5};
    ctx.check_bound(start, Rational(5), "red pair (i)");
    return out;
  }
  const int k0 = least_odd_k0(m);
  const TypeCPath T = extend_type_c(ctx, std::get<TypeCPath>(found), k0);
  const bool complete = is_complete(ctx.board(), T);
  VertexPath R2 = use_type_c(ctx, T, R);
  const int gained = length(R2) - length(R);
  if (complete) {
    if (gained < 1 || gained > m + 5) ctx.fail("red pair (ii): l' out of range");
    ctx.check_bound(start, Rational(7 * gained, 5) - 2, "red pair (ii)");
    return {RedPairResult::Kind::RExtended, Q, R2, gained};
  }
  if (gained < m) ctx.fail("red pair (iii): R grew by less than m");
  ctx.check_bound(start, Rational(7 * m, 5) + 6, "red pair (iii)");
  return {RedPairResult::Kind::RReachedM, Q, R2, gained};
}

void play_p4_path(GameContext& ctx, int ell) {
  if (ell < 1) throw std::invalid_argument("p4-path needs ell >= 1");
  TrackedStructure s;
  {
    const VertexId u = ctx.fresh(), v = ctx.fresh();
    TypeAPath A;
    if (ctx.ask(u, v) == Color::Blue) {
      auto found = find_type_a(ctx, {u, v}, ell);
      if (!std::holds_alternative<TypeAPath>(found)) ctx.fail("blue P_{ell+1} did not end the game");
      A = std::get<TypeAPath>(found);
    } else {
      const VertexId x = ctx.fresh();
      if (ctx.ask(v, x) == Color::Blue) {
        A = {u, {v, x}};
      } else {
        const VertexId t = ctx.fresh(), w = ctx.fresh();
        ctx.blue(t, u);
        ctx.blue(u, w);
        ctx.blue(w, x);
        A = {v, {x, w, u, t}};
      }
    }
    validate(ctx.board(), A);
    s.Q = {A.S, A.x};
    ctx.check_bound(0, Rational(7 * s.q() + 4, 5), "p4-path startup");
  }

  for (;;) {
    // (G1)-(G5)
    ++ctx.stats().structure_checks;
    validate(ctx.board(), s);
    const int nb = static_cast<int>(s.spare_blue.size());
    const int nr = static_cast<int>(s.spare_red.size());
    if (s.q() <= 0) ctx.fail("(G2): q = 0");
    if (s.q() + s.r() > ell + 4) ctx.fail("(G3): q + r > ell + 4");
    if (nb > 1 || nr > 1) ctx.fail("(G4): too many spare edges");
    if (Rational(static_cast<std::int64_t>(ctx.board().edge_count())) >
        Rational(7 * (s.q() + s.r()) + 4, 5) + nb + nr) {
      ctx.fail("(G5): e(G) = " + std::to_string(ctx.board().edge_count()) + " with q = " +
               std::to_string(s.q()) + ", r = " + std::to_string(s.r()));
    }

    const int sum = s.q() + s.r();
    const int m = ell - sum - 1;
    if (sum >= ell - 1) {
      join_paths(ctx, s.Q, s.R);
      ctx.fail("joining Q and R did not end the game");
    }
    if (sum >= ell - 9) {
      AnchoredPath Q = join_paths(ctx, s.Q, s.R);
      for (int i = 0; i < m; ++i) Q = join_paths(ctx, Q, {});
      ctx.fail("repeated joins did not end the game");
    }
    while (s.spare_blue.size() < 2 && s.spare_red.size() < 2) {
      const VertexId a = ctx.fresh(), b = ctx.fresh();
      (ctx.ask(a, b) == Color::Blue ? s.spare_blue : s.spare_red).push_back(Edge(a, b));
    }
    if (s.spare_blue.size() == 2) {
      const Edge e = s.spare_blue[0], f = s.spare_blue[1];
      auto res = extend_with_blue_pair(ctx, s.Q, e, f, m);
      s.Q = res.Q;
      s.spare_blue.clear();
      if (res.ell_prime < 5) {
        if (!res.f_untouched) ctx.fail("blue pair consumed f with l' < 5");
        s.spare_blue.push_back(f);
      }
    } else {
      const Edge e = s.spare_red[0], f = s.spare_red[1];
      auto res = extend_with_red_pair(ctx, s.Q, s.R, e, f, m);
      s.spare_red.clear();
      s.Q = res.Q;
      s.R = res.R;
      if (res.kind == RedPairResult::Kind::RReachedM) {
        join_paths(ctx, s.Q, s.R);
        ctx.fail("join after red pair (iii) did not end the game");
      }
    }
  }
}

}  // namespace olr
