#pragma once

#include <variant>
#include <vector>

#include "olr/builder/context.hpp"

namespace olr {

using VertexPath = std::vector<VertexId>;

int length(const VertexPath& p);  // edge count; 0 for a single vertex or empty path

// Blue path whose front endpoint b has a red edge to `anchor` (the vertex c).
struct AnchoredPath {
  VertexPath path;
  VertexId anchor = 0;

  VertexId b() const { return path.front(); }
  VertexId a() const { return path.back(); }
  Edge anchor_edge() const { return Edge(path.front(), anchor); }
  int length() const { return olr::length(path); }
};

struct BluePath {
  VertexPath path;
};

// x y S z: xy red, S a non-trivial blue path from y to z.
struct TypeAPath {
  VertexId x = 0;
  VertexPath S;

  VertexId y() const { return S.front(); }
  VertexId z() const { return S.back(); }
};

// v w x y z: vw, yz red; wx, xy blue.
struct TypeBPath {
  VertexId v, w, x, y, z;
};

// T_1 ... T_k. Consecutive segments share an endpoint: T_i.back() == T_{i+1}.front().
struct TypeCPath {
  std::vector<VertexPath> segments;

  int k() const { return static_cast<int>(segments.size()); }
  int length() const;
  TypeCPath reversed() const;
};

// Q with its anchor, a second blue path R (empty when trivial and not yet
// placed), and spare independent edges.
struct TrackedStructure {
  AnchoredPath Q;
  VertexPath R;
  std::vector<Edge> spare_blue;
  std::vector<Edge> spare_red;

  int q() const { return Q.length(); }
  int r() const { return length(R); }
};

// Checks against the board; throw InvariantViolated on failure.
void validate(const Board& b, const AnchoredPath& p);
void validate(const Board& b, const TypeAPath& p);
void validate(const Board& b, const TypeBPath& p);
void validate_blue_path(const Board& b, const VertexPath& p);
// (C1)-(C5) and e = 2k - 5 + e(T_1) + e(T_k).
void validate(const Board& b, const TypeCPath& t);
// (P1)-(P4).
void validate(const Board& b, const TrackedStructure& s);

bool is_red_p3(const Board& b, const VertexPath& seg);
bool is_complete(const Board& b, const TypeCPath& t);

// ---- P3 games --------------------------------------------------------------

std::variant<BluePath, AnchoredPath> building_block(GameContext& ctx, int q);
std::variant<BluePath, AnchoredPath> main_work(GameContext& ctx, int ell);
void play_p3_path(GameContext& ctx, int ell);
void play_p3_cycle(GameContext& ctx, int ell);
void play_p3_smallcycle(GameContext& ctx, int ell);

// ---- C4 games --------------------------------------------------------------

// Red C4 (game over) or a blue P4, returned as its vertex sequence.
VertexPath c4_p4(GameContext& ctx);
// Red C4 or a blue path on `vertices` vertices.
VertexPath c4_blue_path(GameContext& ctx, int vertices);
void play_c4_path(GameContext& ctx, int ell);

// ---- P4 games --------------------------------------------------------------

// R empty means a trivial path on a new vertex.
AnchoredPath join_paths(GameContext& ctx, const AnchoredPath& Q, const VertexPath& R);
// Grows the blue path `e` at its front.
std::variant<TypeAPath, BluePath> find_type_a(GameContext& ctx, const VertexPath& e, int m);

struct UseAResult {
  AnchoredPath Q;
  bool f_untouched;
};
UseAResult use_type_a(GameContext& ctx, const AnchoredPath& Q, const TypeAPath& A, Edge f);

struct BluePairResult {
  AnchoredPath Q;
  int ell_prime;
  bool f_untouched;
};
BluePairResult extend_with_blue_pair(GameContext& ctx, const AnchoredPath& Q, Edge e, Edge f, int m);

std::variant<TypeBPath, TypeCPath> find_bc(GameContext& ctx, Edge e, Edge f);
AnchoredPath use_type_b(GameContext& ctx, const AnchoredPath& Q, const TypeBPath& B);
TypeCPath extend_type_c_step(GameContext& ctx, const TypeCPath& T);
TypeCPath extend_type_c(GameContext& ctx, const TypeCPath& T0, int k0);
VertexPath use_type_c(GameContext& ctx, const TypeCPath& T, const VertexPath& R);

struct RedPairResult {
  enum class Kind { QExtended, RExtended, RReachedM } kind;
  AnchoredPath Q;
  VertexPath R;
  int ell_prime = 0;
};
RedPairResult extend_with_red_pair(GameContext& ctx, const AnchoredPath& Q, const VertexPath& R, Edge e,
                                   Edge f, int m);

int least_odd_k0(int m);
void play_p4_path(GameContext& ctx, int ell);

}  // namespace olr
