#pragma once

#include <vector>

#include "olr/core/board.hpp"
#include "olr/core/pattern.hpp"

namespace olr {

// Exact subgraph tests for paths and cycles on small graphs. All searches are
// exhaustive depth-first enumerations of simple paths.

// Vertex count of the longest simple path in `adj` (1 for an edgeless graph).
int longest_path(const Adjacency& adj);
bool has_path(const Adjacency& adj, int vertices);
bool has_cycle(const Adjacency& adj, int length);
bool is_forest(const Adjacency& adj);
bool contains(const Adjacency& adj, const TargetPattern& p);
bool is_family_free(const Adjacency& adj, const Family& fam);

// Pattern occurrences that use the (present) edge uv. Used for incremental
// win detection: if the graph was pattern-free before uv was added, the
// pattern is present now iff it passes through uv.
bool has_path_through(const Adjacency& adj, Edge uv, int vertices);
bool has_cycle_through(const Adjacency& adj, Edge uv, int length);
bool contains_through(const Adjacency& adj, Edge uv, const TargetPattern& p);

// Board-level operations.
bool contains_pattern(const Board& board, Color c, const TargetPattern& p);
int longest_monochromatic_path(const Board& board, Color c);
bool is_family_free(const Board& board, Color c, const Family& fam);

// Adjacency helpers.
Adjacency adjacency_from_edges(const std::vector<Edge>& edges);
void add_to(Adjacency& adj, Edge e);
void remove_from(Adjacency& adj, Edge e);

}  // namespace olr
