#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace olr {

enum class Color : std::uint8_t { Red = 0, Blue = 1 };

constexpr Color opposite(Color c) noexcept {
  return c == Color::Red ? Color::Blue : Color::Red;
}

constexpr int index_of(Color c) noexcept { return static_cast<int>(c); }

std::string_view to_string(Color c) noexcept;

// Accepts "red"/"blue" (any case) and the single letters R/B.
Color parse_color(std::string_view text);

using VertexId = std::uint32_t;

class SelfLoop : public std::invalid_argument {
 public:
  explicit SelfLoop(VertexId v);
};

class DuplicateEdge : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Unordered pair of distinct vertices, stored as (min, max).
class Edge {
 public:
  Edge(VertexId a, VertexId b) : u_(a < b ? a : b), v_(a < b ? b : a) {
    if (a == b) throw SelfLoop(a);
  }

  VertexId u() const noexcept { return u_; }
  VertexId v() const noexcept { return v_; }

  bool touches(VertexId x) const noexcept { return x == u_ || x == v_; }
  bool shares_vertex(const Edge& o) const noexcept {
    return touches(o.u_) || touches(o.v_);
  }
  VertexId other(VertexId x) const {
    if (x == u_) return v_;
    if (x == v_) return u_;
    throw std::invalid_argument("vertex is not an endpoint of the edge");
  }

  auto operator<=>(const Edge&) const = default;

 private:
  VertexId u_;
  VertexId v_;
};

std::string to_string(const Edge& e);

}  // namespace olr

template <>
struct std::hash<olr::Edge> {
  std::size_t operator()(const olr::Edge& e) const noexcept {
    return (static_cast<std::size_t>(e.u()) << 32) ^ e.v();
  }
};
