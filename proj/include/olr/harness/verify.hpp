#pragma once

#include <optional>
#include <string>

#include "olr/builder/registry.hpp"
#include "olr/painter/painter.hpp"

namespace olr {

struct GameRecord {
  Transcript transcript;
  std::optional<Color> winner;
  GameStats stats;
};

// Plays `builder` against `painter`. Throws RoundCapHit past `round_cap`, and
// lets InvariantViolated / BoundExceeded escape.
GameRecord run_game(const BuilderStrategy& builder, const PainterStrategy& painter, int round_cap);

struct VerificationReport {
  std::string strategy;
  GameGoal goal{TargetPattern::path(2), TargetPattern::path(2)};
  int claimed_bound = 0;
  int worst_rounds = 0;
  long leaves = 0;
  std::optional<Transcript> counterexample;
  std::string failure;  // why the counterexample failed
  GameStats stats;      // summed over all leaves

  bool ok() const { return !counterexample; }
};

// Plays the strategy against every sequence of Painter replies. Each run
// follows a prefix of replies and answers Red past its end, so every run is
// one leaf of the reply tree. Stops at the first failing leaf.
VerificationReport certify_bound(const BuilderStrategy& builder, int claimed_bound);

}  // namespace olr
