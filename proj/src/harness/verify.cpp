#include "olr/harness/verify.hpp"

#include <algorithm>

namespace olr {

GameRecord run_game(const BuilderStrategy& builder, const PainterStrategy& painter, int round_cap) {
  GameContext ctx(builder.goal, painter.decide, round_cap);
  GameRecord rec;
  try {
    builder.play(ctx);
    ctx.fail("strategy returned without a target");
  } catch (const GameOver& over) {
    rec.winner = over.winner;
  }
  rec.transcript = ctx.transcript();
  rec.stats = ctx.stats();
  return rec;
}

VerificationReport certify_bound(const BuilderStrategy& builder, int claimed_bound) {
  VerificationReport rep;
  rep.strategy = builder.name;
  rep.goal = builder.goal;
  rep.claimed_bound = claimed_bound;
  // Slack above the claim so that an over-long line is reported with its
  // real length; the cap only guards against runaway strategies.
  const int cap = claimed_bound + 16;

  std::vector<std::vector<Color>> stack{{}};
  std::vector<Color> replies;
  while (!stack.empty()) {
    const std::vector<Color> prefix = std::move(stack.back());
    stack.pop_back();
    replies.clear();
    GameContext ctx(builder.goal,
                    [&](const Board& b, Edge) {
                      const std::size_t i = b.edge_count();
                      const Color c = i < prefix.size() ? prefix[i] : Color::Red;
                      replies.push_back(c);
                      return c;
                    },
                    cap);
    std::string failure;
    try {
      builder.play(ctx);
      failure = "strategy returned without a target";
    } catch (const GameOver&) {
    } catch (const RoundCapHit& e) {
      failure = e.what();
    } catch (const InvariantViolated& e) {
      failure = std::string("invariant violated: ") + e.what();
    } catch (const BoundExceeded& e) {
      failure = std::string("bound exceeded: ") + e.what();
    }
    ++rep.leaves;
    rep.stats.type_c_checked += ctx.stats().type_c_checked;
    rep.stats.k5_branch += ctx.stats().k5_branch;
    rep.stats.structure_checks += ctx.stats().structure_checks;
    rep.worst_rounds = std::max(rep.worst_rounds, ctx.rounds());
    if (failure.empty() && ctx.rounds() > claimed_bound) {
      failure = "used " + std::to_string(ctx.rounds()) + " rounds";
    }
    if (!failure.empty()) {
      rep.counterexample = ctx.transcript();
      rep.failure = failure;
      return rep;
    }
    for (std::size_t j = replies.size(); j-- > prefix.size();) {
      std::vector<Color> child(replies.begin(), replies.begin() + static_cast<long>(j));
      child.push_back(Color::Blue);
      stack.push_back(std::move(child));
    }
  }
  return rep;
}

}  // namespace olr
