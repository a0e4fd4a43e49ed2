#include "olr/core/board.hpp"

#include <algorithm>

namespace olr {

Board Board::add_edge(Edge e, Color c) const {
  Board next = *this;
  next.apply(e, c);
  return next;
}

void Board::ensure(VertexId v) {
  if (v >= layers_[0].size()) {
    layers_[0].resize(v + 1);
    layers_[1].resize(v + 1);
  }
}

void Board::apply(Edge e, Color c) {
  if (has_edge(e)) throw DuplicateEdge("edge " + to_string(e) + " is already uncovered");
  ensure(e.v());
  for (VertexId x : {e.u(), e.v()}) {
    if (degree(x) == 0) ++active_;
  }
  auto& layer = layers_[index_of(c)];
  layer[e.u()].push_back(e.v());
  layer[e.v()].push_back(e.u());
  ++edges_;
  ++per_color_[index_of(c)];
  ++rounds_;
}

void Board::undo(Edge e) {
  const auto c = color_of(e);
  if (!c) throw std::invalid_argument("edge " + to_string(e) + " is not uncovered");
  auto& layer = layers_[index_of(*c)];
  auto drop = [](std::vector<VertexId>& list, VertexId x) {
    list.erase(std::find(list.begin(), list.end(), x));
  };
  drop(layer[e.u()], e.v());
  drop(layer[e.v()], e.u());
  --edges_;
  --per_color_[index_of(*c)];
  --rounds_;
  for (VertexId x : {e.u(), e.v()}) {
    if (degree(x) == 0) --active_;
  }
  while (!layers_[0].empty() && layers_[0].back().empty() && layers_[1].back().empty()) {
    layers_[0].pop_back();
    layers_[1].pop_back();
  }
}

std::optional<Color> Board::color_of(Edge e) const noexcept {
  if (e.v() >= layers_[0].size()) return std::nullopt;
  for (Color c : {Color::Red, Color::Blue}) {
    const auto& a = layers_[index_of(c)][e.u()];
    const auto& b = layers_[index_of(c)][e.v()];
    const auto& shorter = a.size() <= b.size() ? a : b;
    const VertexId target = a.size() <= b.size() ? e.v() : e.u();
    if (std::find(shorter.begin(), shorter.end(), target) != shorter.end()) return c;
  }
  return std::nullopt;
}

bool Board::is_active(VertexId v) const noexcept {
  return v < layers_[0].size() && degree(v) > 0;
}

std::vector<VertexId> Board::active_vertices() const {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < vertex_bound(); ++v) {
    if (degree(v) > 0) out.push_back(v);
  }
  return out;
}

VertexId Board::fresh_vertex() const noexcept {
  for (VertexId v = 0; v < vertex_bound(); ++v) {
    if (degree(v) == 0) return v;
  }
  return vertex_bound();
}

std::span<const VertexId> Board::neighbours(VertexId v, Color c) const noexcept {
  if (v >= layers_[0].size()) return {};
  return layers_[index_of(c)][v];
}

std::size_t Board::degree(VertexId v) const noexcept {
  if (v >= layers_[0].size()) return 0;
  return layers_[0][v].size() + layers_[1][v].size();
}

std::vector<std::pair<Edge, Color>> Board::edges() const {
  std::vector<std::pair<Edge, Color>> out;
  out.reserve(edges_);
  for (Color c : {Color::Red, Color::Blue}) {
    const auto& layer = layers_[index_of(c)];
    for (VertexId u = 0; u < layer.size(); ++u) {
      for (VertexId w : layer[u]) {
        if (u < w) out.emplace_back(Edge(u, w), c);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace olr
