#include "olr/core/detect.hpp"

#include <algorithm>
#include <numeric>

namespace olr {
namespace {

bool adjacent(const Adjacency& adj, VertexId a, VertexId b) {
  if (a >= adj.size()) return false;
  return std::find(adj[a].begin(), adj[a].end(), b) != adj[a].end();
}

// Longest simple path (in vertices) starting at `x`, given `length` vertices
// already on the path ending at x. Stops early once `goal` is reached.
int extend(const Adjacency& adj, VertexId x, int length, std::vector<char>& visited, int goal) {
  int best = length;
  for (VertexId y : adj[x]) {
    if (visited[y]) continue;
    visited[y] = 1;
    best = std::max(best, extend(adj, y, length + 1, visited, goal));
    visited[y] = 0;
    if (best >= goal) break;
  }
  return best;
}

int longest_from_all(const Adjacency& adj, int goal) {
  int best = 1;
  std::vector<char> visited(adj.size(), 0);
  for (VertexId s = 0; s < adj.size(); ++s) {
    if (adj[s].empty()) continue;
    visited[s] = 1;
    best = std::max(best, extend(adj, s, 1, visited, goal));
    visited[s] = 0;
    if (best >= goal) break;
  }
  return best;
}

bool cycle_from(const Adjacency& adj, VertexId start, VertexId x, int length, int goal,
                std::vector<char>& visited) {
  if (length == goal) return adjacent(adj, x, start);
  for (VertexId y : adj[x]) {
    if (y <= start || visited[y]) continue;
    visited[y] = 1;
    const bool found = cycle_from(adj, start, y, length + 1, goal, visited);
    visited[y] = 0;
    if (found) return true;
  }
  return false;
}

// Enumerates simple paths from `x` (u side) and, for each, tries to reach
// `goal` vertices in total by extending from v on the other side.
bool through_search(const Adjacency& adj, VertexId x, int left_len, VertexId v, int goal,
                    std::vector<char>& visited) {
  if (extend(adj, v, left_len + 1, visited, goal) >= goal) return true;
  for (VertexId y : adj[x]) {
    if (visited[y]) continue;
    visited[y] = 1;
    const bool found = through_search(adj, y, left_len + 1, v, goal, visited);
    visited[y] = 0;
    if (found) return true;
  }
  return false;
}

bool closing_path(const Adjacency& adj, VertexId x, VertexId target, int length, int goal,
                  std::vector<char>& visited) {
  if (length == goal) return adjacent(adj, x, target);
  for (VertexId y : adj[x]) {
    if (visited[y] || y == target) continue;
    visited[y] = 1;
    const bool found = closing_path(adj, y, target, length + 1, goal, visited);
    visited[y] = 0;
    if (found) return true;
  }
  return false;
}

}  // namespace

int longest_path(const Adjacency& adj) {
  return longest_from_all(adj, static_cast<int>(adj.size()) + 1);
}

bool has_path(const Adjacency& adj, int vertices) {
  if (vertices <= 1) return true;
  return longest_from_all(adj, vertices) >= vertices;
}

bool has_cycle(const Adjacency& adj, int length) {
  if (length < 3) return false;
  std::vector<char> visited(adj.size(), 0);
  for (VertexId s = 0; s < adj.size(); ++s) {
    if (adj[s].size() < 2) continue;
    visited[s] = 1;
    const bool found = cycle_from(adj, s, s, 1, length, visited);
    visited[s] = 0;
    if (found) return true;
  }
  return false;
}

bool is_forest(const Adjacency& adj) {
  std::vector<VertexId> parent(adj.size());
  std::iota(parent.begin(), parent.end(), VertexId{0});
  auto find = [&](VertexId x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (VertexId u = 0; u < adj.size(); ++u) {
    for (VertexId w : adj[u]) {
      if (w <= u) continue;
      const auto a = find(u);
      const auto b = find(w);
      if (a == b) return false;
      parent[a] = b;
    }
  }
  return true;
}

bool contains(const Adjacency& adj, const TargetPattern& p) {
  return p.is_path() ? has_path(adj, p.size()) : has_cycle(adj, p.size());
}

bool is_family_free(const Adjacency& adj, const Family& fam) {
  if (fam.path_bound && has_path(adj, *fam.path_bound + 1)) return false;
  if (fam.acyclic && !is_forest(adj)) return false;
  for (int len : fam.explicit_cycles) {
    if (has_cycle(adj, len)) return false;
  }
  return true;
}

bool has_path_through(const Adjacency& adj, Edge uv, int vertices) {
  if (vertices <= 2) return true;
  std::vector<char> visited(adj.size(), 0);
  visited[uv.u()] = 1;
  visited[uv.v()] = 1;
  return through_search(adj, uv.u(), 1, uv.v(), vertices, visited);
}

bool has_cycle_through(const Adjacency& adj, Edge uv, int length) {
  if (length < 3) return false;
  std::vector<char> visited(adj.size(), 0);
  visited[uv.v()] = 1;
  // Path v = p_1, ..., p_{length-1}, then back to u, then the edge uv.
  for (VertexId y : adj[uv.v()]) {
    if (y == uv.u()) continue;
    visited[y] = 1;
    const bool found = closing_path(adj, y, uv.u(), 2, length - 1, visited);
    visited[y] = 0;
    if (found) return true;
  }
  return false;
}

bool contains_through(const Adjacency& adj, Edge uv, const TargetPattern& p) {
  return p.is_path() ? has_path_through(adj, uv, p.size()) : has_cycle_through(adj, uv, p.size());
}

bool contains_pattern(const Board& board, Color c, const TargetPattern& p) {
  return contains(board.layer(c), p);
}

int longest_monochromatic_path(const Board& board, Color c) { return longest_path(board.layer(c)); }

bool is_family_free(const Board& board, Color c, const Family& fam) {
  return is_family_free(board.layer(c), fam);
}

Adjacency adjacency_from_edges(const std::vector<Edge>& edges) {
  Adjacency adj;
  for (const auto& e : edges) add_to(adj, e);
  return adj;
}

void add_to(Adjacency& adj, Edge e) {
  if (adj.size() <= e.v()) adj.resize(e.v() + 1);
  adj[e.u()].push_back(e.v());
  adj[e.v()].push_back(e.u());
}

void remove_from(Adjacency& adj, Edge e) {
  auto drop = [](std::vector<VertexId>& list, VertexId x) {
    auto it = std::find(list.begin(), list.end(), x);
    if (it != list.end()) list.erase(it);
  };
  drop(adj[e.u()], e.v());
  drop(adj[e.v()], e.u());
}

}  // namespace olr
