#include "olr/bounds/bounds.hpp"

#include <algorithm>
#include <functional>
#include <unordered_set>

#include "olr/core/canonical.hpp"
#include "olr/core/detect.hpp"

namespace olr {

namespace {

std::vector<VertexId> vertices_of(const Adjacency& adj) {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < adj.size(); ++v)
    if (!adj[v].empty()) out.push_back(v);
  return out;
}

// Simple path with `want` vertices (closing into a cycle if `cycle`) in a
// dense 0/1 matrix; fills `path`.
bool find_copy(const std::vector<std::vector<char>>& ok, int want, bool cycle,
               std::vector<int>& path, std::vector<char>& used) {
  const int n = static_cast<int>(ok.size());
  if (static_cast<int>(path.size()) == want) return !cycle || ok[path.back()][path.front()];
  const int last = path.back();
  for (int w = 0; w < n; ++w) {
    if (used[w] || !ok[last][w]) continue;
    // A cycle is found from its least vertex.
    if (cycle && w < path.front()) continue;
    used[w] = 1;
    path.push_back(w);
    if (find_copy(ok, want, cycle, path, used)) return true;
    path.pop_back();
    used[w] = 0;
  }
  return false;
}

bool path_from(const Adjacency& adj, VertexId v, int want, std::vector<char>& used, int have) {
  if (have == want) return true;
  for (VertexId w : adj[v]) {
    if (used[w]) continue;
    used[w] = 1;
    bool found = path_from(adj, w, want, used, have + 1);
    used[w] = 0;
    if (found) return true;
  }
  return false;
}

Board red_board(const std::vector<Edge>& edges) {
  Board b;
  for (const Edge& e : edges) b.apply(e, Color::Red);
  return b;
}

}  // namespace

bool is_forceable_edge(const Adjacency& red, const Family& fam, Edge e) {
  Adjacency g = red;
  add_to(g, e);
  return !is_family_free(g, fam);
}

bool is_forceable_edge(const Board& red, const Family& fam, Edge e) {
  return is_forceable_edge(red.layer(Color::Red), fam, e);
}

std::optional<std::vector<Edge>> is_target_forceable(const Adjacency& red, const Family& fam,
                                                     const TargetPattern& h) {
  std::vector<VertexId> pool = vertices_of(red);
  VertexId next = static_cast<VertexId>(red.size());
  for (int i = 0; i < h.vertex_count(); ++i) pool.push_back(next++);
  const int n = static_cast<int>(pool.size());

  std::vector<std::vector<char>> ok(n, std::vector<char>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Edge e(pool[i], pool[j]);
      bool present = e.v() < red.size() &&
                     std::find(red[e.u()].begin(), red[e.u()].end(), e.v()) != red[e.u()].end();
      ok[i][j] = ok[j][i] = !present && is_forceable_edge(red, fam, e);
    }

  std::vector<int> path;
  std::vector<char> used(n, 0);
  for (int s = 0; s < n; ++s) {
    path = {s};
    used.assign(n, 0);
    used[s] = 1;
    if (find_copy(ok, h.vertex_count(), h.is_cycle(), path, used)) {
      std::vector<Edge> copy;
      for (std::size_t i = 0; i + 1 < path.size(); ++i)
        copy.emplace_back(pool[path[i]], pool[path[i + 1]]);
      if (h.is_cycle()) copy.emplace_back(pool[path.back()], pool[path.front()]);
      return copy;
    }
  }
  return std::nullopt;
}

std::set<VertexId> pk_endpoints(const Adjacency& red, int k) {
  std::set<VertexId> out;
  for (VertexId v : vertices_of(red)) {
    std::vector<char> used(red.size(), 0);
    used[v] = 1;
    if (path_from(red, v, k, used, 1)) out.insert(v);
  }
  return out;
}

std::vector<std::vector<std::vector<Edge>>> enumerate_family_free(const Family& fam,
                                                                  int max_edges) {
  std::vector<std::vector<std::vector<Edge>>> levels(1, {{}});
  for (int m = 1; m <= max_edges; ++m) {
    std::unordered_set<std::string> seen;
    std::vector<std::vector<Edge>> next;
    for (const auto& g : levels.back()) {
      Board b = red_board(g);
      const VertexId n = b.vertex_bound();
      std::vector<Edge> cands;
      for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v)
          if (!b.has_edge(Edge(u, v))) cands.emplace_back(u, v);
      for (VertexId u = 0; u < n; ++u) cands.emplace_back(u, n);
      cands.emplace_back(n, n + 1);
      for (const Edge& e : cands) {
        b.apply(e, Color::Red);
        if (is_family_free(b.layer(Color::Red), fam) && seen.insert(canonical_key(b)).second) {
          auto h = g;
          h.push_back(e);
          next.push_back(std::move(h));
        }
        b.undo(e);
      }
    }
    levels.push_back(std::move(next));
  }
  return levels;
}

std::optional<ScaffoldingResult> min_scaffolding_size(const Family& fam, const TargetPattern& h,
                                                      int max_edges) {
  auto levels = enumerate_family_free(fam, max_edges);
  for (int m = 0; m <= max_edges; ++m) {
    for (const auto& g : levels[m]) {
      Adjacency adj = adjacency_from_edges(g);
      auto copy = is_target_forceable(adj, fam, h);
      if (!copy) continue;
      ScaffoldingResult r;
      r.edges = m;
      r.certificate.red = g;
      r.certificate.family = fam;
      r.certificate.target = h;
      r.certificate.forced_copy = *copy;
      if (fam.path_bound) r.certificate.endpoints = pk_endpoints(adj, *fam.path_bound);
      return r;
    }
  }
  return std::nullopt;
}

Rational ForestBoundReport::slack() const {
  Rational cap = general_bound;
  if (strong_bound) cap = std::min(cap, Rational(*strong_bound));
  return cap - (order + endpoint_count);
}

ForestBoundReport check_forest_bounds(const std::vector<Edge>& red, int k) {
  if (k < 2) throw NotApplicable("k must be at least 2");
  Adjacency adj = adjacency_from_edges(red);
  if (!is_forest(adj)) throw NotApplicable("R is not a forest");
  if (has_path(adj, k + 1)) throw NotApplicable("R contains P" + std::to_string(k + 1));

  ForestBoundReport r;
  r.m = static_cast<int>(red.size());
  auto verts = vertices_of(adj);
  r.order = static_cast<int>(verts.size());
  r.endpoint_count = static_cast<int>(pk_endpoints(adj, k).size());
  if (k == 2)
    r.general_bound = 4 * r.m;
  else if (k == 3)
    r.general_bound = Rational(5 * r.m, 2);
  else
    r.general_bound = 2 * r.m;

  const bool tree = r.order == r.m + 1;
  bool extendable = false;
  if (k >= 4) {
    const VertexId fresh = static_cast<VertexId>(adj.size());
    for (std::size_t i = 0; i < verts.size() && !extendable; ++i) {
      for (std::size_t j = i + 1; j < verts.size() && !extendable; ++j) {
        Edge e(verts[i], verts[j]);
        auto& nb = adj[e.u()];
        if (std::find(nb.begin(), nb.end(), e.v()) != nb.end()) continue;
        Adjacency g = adj;
        add_to(g, e);
        extendable = has_path(g, k + 1);
      }
      Adjacency g = adj;
      add_to(g, Edge(verts[i], fresh));
      extendable = extendable || has_path(g, k + 1);
    }
  }
  if ((tree && r.endpoint_count > 0) || extendable) r.strong_bound = 2 * r.m - k + 4;

  const int total = r.order + r.endpoint_count;
  r.ok = Rational(total) <= r.general_bound && (!r.strong_bound || total <= *r.strong_bound);
  return r;
}

int vertex_cover_number(const std::vector<Edge>& g) {
  Adjacency adj = adjacency_from_edges(g);
  auto verts = vertices_of(adj);
  const int n = static_cast<int>(verts.size());
  if (n > 12) throw std::invalid_argument("vertex_cover_number: more than 12 vertices");
  int best = n;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    int size = __builtin_popcount(mask);
    if (size >= best) continue;
    auto in = [&](VertexId v) {
      auto it = std::lower_bound(verts.begin(), verts.end(), v);
      return (mask >> (it - verts.begin())) & 1u;
    };
    bool covers = std::all_of(g.begin(), g.end(),
                              [&](const Edge& e) { return in(e.u()) || in(e.v()); });
    if (covers) best = size;
  }
  return best;
}

TargetShape TargetShape::of(const TargetPattern& p) {
  TargetShape s;
  s.edges = p.edge_count();
  s.order = p.vertex_count();
  s.connected = true;
  s.is_path = p.is_path();
  s.max_degree = p.is_path() ? std::min(2, p.vertex_count() - 1) : 2;
  return s;
}

BoundSummary lower_bound_formulas(int k, const TargetShape& h) {
  if (k < 2 || h.max_degree < 1) throw std::invalid_argument("need k >= 2 and a nonempty H");
  BoundSummary out;
  const int l = h.edges;
  const int d = h.max_degree;
  out.reports.push_back({Rational(k + l - 1), "trivial e(G)+e(H)-1", std::nullopt});

  Rational forest;
  if (k == 2)
    forest = Rational((2 * d + 1) * l, 2 * d);
  else if (k == 3)
    forest = Rational((5 * d + 4) * l, 5 * d);
  else
    forest = Rational((d + 1) * l, d);
  out.reports.push_back({forest, "forest scaffolding", std::nullopt});

  if (k >= 4 && h.connected) {
    Rational extra = std::min(Rational(k, 2) - 2, Rational(h.order - 1));
    out.reports.push_back({Rational((d + 1) * l, d) + extra, "connected forest scaffolding",
                           std::nullopt});
  }
  if (k == 3 && h.is_path && l >= 3)
    out.reports.push_back({Rational(7 * l + 2, 5), "P4 path scaffolding (7l+2)/5", std::nullopt});
  if (h.is_path && l == k) {
    // Diagonal game on P_{k+1}: beta (Delta - 1) / 2 + e.
    std::vector<Edge> g;
    for (int i = 0; i < k; ++i) g.emplace_back(i, i + 1);
    int beta = vertex_cover_number(g);
    int delta = k >= 2 ? 2 : 1;
    out.reports.push_back({Rational(beta * (delta - 1), 2) + k, "vertex cover (diagonal)",
                           std::nullopt});
  }
  for (std::size_t i = 1; i < out.reports.size(); ++i)
    if (out.reports[i].value > out.reports[out.best].value) out.best = i;
  return out;
}

}  // namespace olr
