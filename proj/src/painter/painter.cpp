#include "olr/painter/painter.hpp"

#include "olr/core/detect.hpp"

namespace olr {

PainterStrategy blocking_painter(const Family& fam) {
  return {"blocking:" + fam.to_string(), true, [fam](const Board& b, Edge e) {
            Adjacency red = b.layer(Color::Red);
            add_to(red, e);
            return is_family_free(red, fam) ? Color::Red : Color::Blue;
          }};
}

PainterStrategy count_red_painter(int n) {
  return {"count-red:" + std::to_string(n), true, [n](const Board& b, Edge) {
            return static_cast<int>(b.edge_count()) < n ? Color::Red : Color::Blue;
          }};
}

PainterStrategy replay_painter(std::vector<Color> bits) {
  std::string name = "replay:";
  for (Color c : bits) name += c == Color::Red ? 'R' : 'B';
  return {name, true, [bits = std::move(bits)](const Board& b, Edge) {
            const std::size_t i = b.edge_count();
            if (i >= bits.size()) {
              throw ExhaustedScript("replay script has only " + std::to_string(bits.size()) +
                                    " replies");
            }
            return bits[i];
          }};
}

PainterStrategy constant_painter(Color c) {
  return {c == Color::Red ? "all-red" : "all-blue", true, [c](const Board&, Edge) { return c; }};
}

PainterStrategy parse_painter(std::string_view spec) {
  const auto colon = spec.find(':');
  const auto head = spec.substr(0, colon);
  const auto arg = colon == std::string_view::npos ? std::string_view{} : spec.substr(colon + 1);
  if (head == "all-red") return constant_painter(Color::Red);
  if (head == "all-blue") return constant_painter(Color::Blue);
  if (head == "blocking") return blocking_painter(Family::parse(arg));
  if (head == "count-red") return count_red_painter(std::stoi(std::string(arg)));
  if (head == "replay") {
    std::vector<Color> bits;
    for (char ch : arg) bits.push_back(parse_color(std::string_view(&ch, 1)));
    return replay_painter(std::move(bits));
  }
  throw std::invalid_argument("unknown painter '" + std::string(spec) + "'");
}

}  // namespace olr
