#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>

namespace olr {

// P_s (path on s vertices) or C_s (cycle of length s).
class TargetPattern {
 public:
  enum class Kind { Path, Cycle };

  static TargetPattern path(int vertices);
  static TargetPattern cycle(int length);
  // "P4", "C5", ...
  static TargetPattern parse(std::string_view text);

  Kind kind() const noexcept { return kind_; }
  int size() const noexcept { return size_; }
  bool is_path() const noexcept { return kind_ == Kind::Path; }
  bool is_cycle() const noexcept { return kind_ == Kind::Cycle; }

  int edge_count() const noexcept { return is_path() ? size_ - 1 : size_; }
  int vertex_count() const noexcept { return size_; }
  int max_degree() const noexcept { return (is_path() && size_ == 2) ? 1 : 2; }

  std::string to_string() const;

  bool operator==(const TargetPattern&) const = default;

 private:
  TargetPattern(Kind k, int s) : kind_(k), size_(s) {}
  Kind kind_;
  int size_;
};

// The pair (red G, blue H) Builder is trying to force.
struct GameGoal {
  TargetPattern red;
  TargetPattern blue;

  std::string to_string() const;
  bool operator==(const GameGoal&) const = default;
};

// Finite description of a (possibly infinite) family of forbidden graphs:
// P_{k+1} when path_bound = k, every cycle when acyclic, plus explicit C_s.
struct Family {
  std::optional<int> path_bound;
  bool acyclic = false;
  std::set<int> explicit_cycles;

  // {P_{k+1}} together with all cycles.
  static Family path_forest(int k);
  static Family all_cycles();
  static Family cycle(int length);

  // "P4+acyclic", "C4", "acyclic", "P3+C5".
  static Family parse(std::string_view text);
  std::string to_string() const;

  bool contains(const TargetPattern& p) const;

  bool operator==(const Family&) const = default;
};

}  // namespace olr
