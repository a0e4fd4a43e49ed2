#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "olr/builder/context.hpp"

namespace olr {

struct BuilderStrategy {
  std::string name;
  GameGoal goal;
  int claimed_bound = 0;
  std::function<void(GameContext&)> play;
};

// "p3-path:8", "p3-cycle:6", "p3-smallcycle:3", "c4-p4", "c4-path:5", "p4-path:10".
BuilderStrategy parse_builder(std::string_view spec);

// Examples of every family, for listings.
std::vector<std::string> builder_catalogue();

// Thrown by the scripted painter used for replay once Painter's recorded
// replies run out; carries the edge Builder proposes next.
struct NeedReply {
  Edge edge;
};

struct ReplayState {
  std::optional<Edge> pending;   // Builder's next proposal, if the game is live
  std::optional<Color> winner;
  Transcript transcript;
};

// Builder's move after Painter answered `replies`: strategies are replayed
// from the start against the recorded answers.
ReplayState next_move(const BuilderStrategy& s, const std::vector<Color>& replies);

}  // namespace olr
