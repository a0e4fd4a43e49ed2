#include "olr/builder/registry.hpp"

#include "olr/builder/gadgets.hpp"
#include "olr/core/rational.hpp"

namespace olr {
namespace {

int parse_int(std::string_view text, std::string_view spec) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(std::string(text), &used);
    if (used == text.size()) return v;
  } catch (const std::exception&) {
  }
  throw std::invalid_argument("bad parameter in builder spec '" + std::string(spec) + "'");
}

}  // namespace

BuilderStrategy parse_builder(std::string_view spec) {
  const auto colon = spec.find(':');
  const std::string head(spec.substr(0, colon));
  const bool has_arg = colon != std::string_view::npos;
  const int ell = has_arg ? parse_int(spec.substr(colon + 1), spec) : 0;
  const auto P = TargetPattern::path;
  const auto C = TargetPattern::cycle;
  auto need = [&](bool ok) {
    if (!ok) throw std::invalid_argument("invalid builder spec '" + std::string(spec) + "'");
  };
  const std::string name(spec);
  if (head == "p3-path") {
    need(has_arg && ell >= 2);
    return {name, {P(3), P(ell + 1)}, static_cast<int>(ceil_of(Rational(5 * ell, 4))),
            [ell](GameContext& c) { play_p3_path(c, ell); }};
  }
  if (head == "p3-cycle") {
    need(has_arg && ell >= 5);
    return {name, {P(3), C(ell)}, static_cast<int>(ceil_of(Rational(5 * ell, 4))),
            [ell](GameContext& c) { play_p3_cycle(c, ell); }};
  }
  if (head == "p3-smallcycle") {
    need(has_arg && (ell == 3 || ell == 4));
    return {name, {P(3), C(ell)}, ell == 3 ? 5 : 6, [ell](GameContext& c) { play_p3_smallcycle(c, ell); }};
  }
  if (head == "c4-p4") {
    need(!has_arg);
    return {name, {C(4), P(4)}, 8, [](GameContext& c) { play_c4_path(c, 3); }};
  }
  if (head == "c4-path") {
    need(has_arg && ell >= 3);
    return {name, {C(4), P(ell + 1)}, 4 * ell - 4, [ell](GameContext& c) { play_c4_path(c, ell); }};
  }
  if (head == "p4-path") {
    need(has_arg && ell >= 1);
    return {name, {P(4), P(ell + 1)}, static_cast<int>(floor_of(Rational(7 * ell + 52, 5))),
            [ell](GameContext& c) { play_p4_path(c, ell); }};
  }
  throw std::invalid_argument("unknown builder '" + std::string(spec) + "'");
}

std::vector<std::string> builder_catalogue() {
  return {"p3-path:ELL", "p3-cycle:ELL", "p3-smallcycle:3", "p3-smallcycle:4",
          "c4-p4",       "c4-path:ELL",  "p4-path:ELL"};
}

ReplayState next_move(const BuilderStrategy& s, const std::vector<Color>& replies) {
  GameContext ctx(s.goal, [&replies](const Board& b, Edge e) {
    const std::size_t i = b.edge_count();
    if (i >= replies.size()) throw NeedReply{e};
    return replies[i];
  });
  ReplayState out;
  try {
    s.play(ctx);
    ctx.fail("strategy returned without a target");
  } catch (const NeedReply& need) {
    out.pending = need.edge;
  } catch (const GameOver& over) {
    out.winner = over.winner;
  }
  out.transcript = ctx.transcript();
  return out;
}

}  // namespace olr
