#include "olr/core/types.hpp"

#include <cctype>

namespace olr {

std::string_view to_string(Color c) noexcept { return c == Color::Red ? "red" : "blue"; }

Color parse_color(std::string_view text) {
  std::string lower;
  for (char ch : text) lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
  if (lower == "red" || lower == "r") return Color::Red;
  if (lower == "blue" || lower == "b") return Color::Blue;
  throw std::invalid_argument("unknown colour: " + std::string(text));
}

SelfLoop::SelfLoop(VertexId v)
    : std::invalid_argument("self-loop at vertex " + std::to_string(v)) {}

std::string to_string(const Edge& e) {
  return "(" + std::to_string(e.u()) + "," + std::to_string(e.v()) + ")";
}

}  // namespace olr
