#pragma once

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "olr/core/board.hpp"
#include "olr/core/pattern.hpp"
#include "olr/core/rational.hpp"

namespace olr {

// Red graphs here are plain edge sets; their vertex set is the set of
// endpoints, so nothing is ever isolated.

// R + e is not fam-free. Endpoints of e may lie outside R.
bool is_forceable_edge(const Adjacency& red, const Family& fam, Edge e);
bool is_forceable_edge(const Board& red, const Family& fam, Edge e);

// A copy of H avoiding R all of whose edges are forceable, searched over
// V(R) plus |H| fresh vertices.
std::optional<std::vector<Edge>> is_target_forceable(const Adjacency& red, const Family& fam,
                                                     const TargetPattern& h);

// Endpoints of paths on k vertices.
std::set<VertexId> pk_endpoints(const Adjacency& red, int k);

struct ScaffoldingCertificate {
  std::vector<Edge> red;
  Family family;
  TargetPattern target = TargetPattern::path(2);
  std::vector<Edge> forced_copy;
  std::set<VertexId> endpoints;  // X, when the family bounds path length
};

// Every fam-free graph without isolated vertices and with at most
// max_edges edges, one per isomorphism class, grouped by edge count.
std::vector<std::vector<std::vector<Edge>>> enumerate_family_free(const Family& fam,
                                                                  int max_edges);

struct ScaffoldingResult {
  int edges = 0;
  ScaffoldingCertificate certificate;
};
std::optional<ScaffoldingResult> min_scaffolding_size(const Family& fam, const TargetPattern& h,
                                                      int max_edges);

class NotApplicable : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct ForestBoundReport {
  int m = 0;
  int order = 0;          // |R|
  int endpoint_count = 0;  // |X|
  Rational general_bound;  // 4m, 5m/2 or 2m
  // 2m - k + 4: for trees with X nonempty, and for k >= 4 when some edge
  // (possibly to a new vertex) completes a P_{k+1}.
  std::optional<int> strong_bound;
  bool ok = true;
  Rational slack() const;
};

// Throws NotApplicable unless R is a P_{k+1}-free forest.
ForestBoundReport check_forest_bounds(const std::vector<Edge>& red, int k);

// Exhaustive over subsets; at most 12 non-isolated vertices.
int vertex_cover_number(const std::vector<Edge>& g);

struct TargetShape {
  int max_degree = 2;
  int edges = 0;
  int order = 0;
  bool connected = true;
  bool is_path = false;

  static TargetShape of(const TargetPattern& p);
};

struct BoundReport {
  Rational value;
  std::string name;
  std::optional<ScaffoldingCertificate> witness;
};

struct BoundSummary {
  std::vector<BoundReport> reports;
  std::size_t best = 0;
  const BoundReport& strongest() const { return reports.at(best); }
};

// Closed-form lower bounds on the game value for (P_{k+1}, H).
BoundSummary lower_bound_formulas(int k, const TargetShape& h);

}  // namespace olr
