#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "olr/core/board.hpp"

namespace olr {

// Dense edge-labelled graph used as canonicalisation input. Labels are small
// integers; 0 means "no edge". Boards map Red -> 1 and Blue -> 2; the solver
// uses 3 to mark a proposed, not yet coloured edge.
class LabelledGraph {
 public:
  explicit LabelledGraph(std::size_t n) : n_(n), labels_(n * n, 0) {}

  std::size_t size() const noexcept { return n_; }
  std::uint8_t label(std::size_t i, std::size_t j) const noexcept { return labels_[i * n_ + j]; }
  void set(std::size_t i, std::size_t j, std::uint8_t l) noexcept {
    labels_[i * n_ + j] = l;
    labels_[j * n_ + i] = l;
  }

 private:
  std::size_t n_;
  std::vector<std::uint8_t> labels_;
};

// Canonical byte string: equal for two graphs iff a label-preserving
// isomorphism exists between their non-isolated parts. Components are
// canonicalised independently (colour refinement plus individualisation with
// twin pruning) and concatenated in sorted order.
std::string canonical_form(const LabelledGraph& g);

// The board's uncovered graph as a LabelledGraph over its active vertices,
// optionally with one extra labelled (pending) edge.
LabelledGraph to_labelled(const Board& board, std::optional<Edge> pending = std::nullopt,
                          std::uint8_t pending_label = 3);

std::string canonical_key(const Board& board);

}  // namespace olr
