#pragma once

#include <array>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "olr/core/types.hpp"

namespace olr {

// Adjacency lists of one colour class, indexed by vertex.
using Adjacency = std::vector<std::vector<VertexId>>;

// The uncovered coloured graph. Vertices that touch no edge are fresh and
// interchangeable; the board never stores them.
class Board {
 public:
  Board() = default;

  // Value-semantics insertion: returns the board with `e` coloured `c`.
  [[nodiscard]] Board add_edge(Edge e, Color c) const;

  // In-place variants used by search engines that roll back.
  void apply(Edge e, Color c);
  void undo(Edge e);
  // A wasted round: counts towards the round total, changes no edge.
  void record_wasted_round() noexcept { ++rounds_; }

  bool has_edge(Edge e) const noexcept { return color_of(e).has_value(); }
  std::optional<Color> color_of(Edge e) const noexcept;

  std::size_t edge_count() const noexcept { return edges_; }
  std::size_t edge_count(Color c) const noexcept { return per_color_[index_of(c)]; }
  int round_count() const noexcept { return rounds_; }

  bool is_active(VertexId v) const noexcept;
  std::vector<VertexId> active_vertices() const;
  std::size_t active_count() const noexcept { return active_; }
  // One past the largest vertex index that has ever been active.
  VertexId vertex_bound() const noexcept {
    return static_cast<VertexId>(layers_[0].size());
  }

  // Smallest index not incident to any uncovered edge.
  VertexId fresh_vertex() const noexcept;

  std::span<const VertexId> neighbours(VertexId v, Color c) const noexcept;
  std::size_t degree(VertexId v) const noexcept;
  const Adjacency& layer(Color c) const noexcept { return layers_[index_of(c)]; }

  // Sorted by edge.
  std::vector<std::pair<Edge, Color>> edges() const;

  friend bool operator==(const Board& a, const Board& b) { return a.edges() == b.edges(); }

 private:
  void ensure(VertexId v);

  std::array<Adjacency, 2> layers_;
  std::size_t edges_ = 0;
  std::array<std::size_t, 2> per_color_{0, 0};
  std::size_t active_ = 0;
  int rounds_ = 0;
};

}  // namespace olr
