#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "olr/core/board.hpp"

namespace olr {

struct Move {
  int round = 0;
  Edge edge{0, 1};
  Color color = Color::Red;
  bool wasted = false;

  bool operator==(const Move&) const = default;
};

// Ordered record of one game. Rounds are numbered from 1.
class Transcript {
 public:
  void record(Edge e, Color c, bool wasted = false);

  const std::vector<Move>& moves() const noexcept { return moves_; }
  std::size_t size() const noexcept { return moves_.size(); }
  bool empty() const noexcept { return moves_.empty(); }

  // Rebuilds the board; throws std::invalid_argument if the record is
  // inconsistent (non-consecutive rounds, a repeated non-wasted edge).
  Board replay() const;

  // JSONL, one move per line:
  // {"round":1,"edge":[0,1],"color":"red","wasted":false}
  std::string to_jsonl() const;
  static Transcript from_jsonl(std::istream& in);
  static Transcript from_jsonl_string(const std::string& text);

  bool operator==(const Transcript&) const = default;

 private:
  std::vector<Move> moves_;
};

}  // namespace olr
