#include "olr/core/transcript.hpp"

#include <istream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace olr {

using ojson = nlohmann::ordered_json;

void Transcript::record(Edge e, Color c, bool wasted) {
  moves_.push_back(Move{static_cast<int>(moves_.size()) + 1, e, c, wasted});
}

Board Transcript::replay() const {
  Board board;
  int expected = 1;
  for (const auto& m : moves_) {
    if (m.round != expected++) {
      throw std::invalid_argument("transcript round " + std::to_string(m.round) + " out of order");
    }
    if (m.wasted) {
      if (!board.has_edge(m.edge)) throw std::invalid_argument("wasted round on a new edge");
      board.record_wasted_round();
      continue;
    }
    if (board.has_edge(m.edge)) {
      throw std::invalid_argument("edge " + to_string(m.edge) + " uncovered twice");
    }
    board.apply(m.edge, m.color);
  }
  return board;
}

std::string Transcript::to_jsonl() const {
  std::string out;
  for (const auto& m : moves_) {
    ojson line;
    line["round"] = m.round;
    line["edge"] = {m.edge.u(), m.edge.v()};
    line["color"] = to_string(m.color);
    line["wasted"] = m.wasted;
    out += line.dump();
    out += '\n';
  }
  return out;
}

Transcript Transcript::from_jsonl(std::istream& in) {
  Transcript t;
  std::string text;
  while (std::getline(in, text)) {
    if (text.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto line = ojson::parse(text);
    Move m;
    m.round = line.at("round").get<int>();
    const auto& e = line.at("edge");
    m.edge = Edge(e.at(0).get<VertexId>(), e.at(1).get<VertexId>());
    m.color = parse_color(line.at("color").get<std::string>());
    m.wasted = line.value("wasted", false);
    t.moves_.push_back(m);
  }
  return t;
}

Transcript Transcript::from_jsonl_string(const std::string& text) {
  std::istringstream in(text);
  return from_jsonl(in);
}

}  // namespace olr
