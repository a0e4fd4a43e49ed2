#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "olr/core/board.hpp"
#include "olr/core/pattern.hpp"

namespace olr {

// Painter sees the board and the proposed (not yet uncovered) edge.
struct PainterStrategy {
  std::string name;
  bool deterministic = true;
  std::function<Color(const Board&, Edge)> decide;

  Color operator()(const Board& b, Edge e) const { return decide(b, e); }
};

class ExhaustedScript : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Red iff the red graph plus e stays fam-free.
PainterStrategy blocking_painter(const Family& fam);
// Red for the first n (non-wasted) proposals, then Blue.
PainterStrategy count_red_painter(int n);
// The i-th proposal gets bits[i].
PainterStrategy replay_painter(std::vector<Color> bits);
PainterStrategy constant_painter(Color c);

// "blocking:P4+acyclic", "count-red:2", "replay:RBBRB", "all-red", "all-blue".
PainterStrategy parse_painter(std::string_view spec);

}  // namespace olr
