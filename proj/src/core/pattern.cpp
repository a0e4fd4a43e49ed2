#include "olr/core/pattern.hpp"

#include <charconv>
#include <stdexcept>
#include <string>
#include <vector>

namespace olr {
namespace {

int parse_positive(std::string_view digits, std::string_view whole) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc{} || ptr != digits.data() + digits.size() || digits.empty()) {
    throw std::invalid_argument("malformed pattern: " + std::string(whole));
  }
  return value;
}

}  // namespace

TargetPattern TargetPattern::path(int vertices) {
  if (vertices < 2) throw std::invalid_argument("a path target needs at least 2 vertices");
  return {Kind::Path, vertices};
}

TargetPattern TargetPattern::cycle(int length) {
  if (length < 3) throw std::invalid_argument("a cycle target needs length at least 3");
  return {Kind::Cycle, length};
}

TargetPattern TargetPattern::parse(std::string_view text) {
  if (text.size() < 2) throw std::invalid_argument("malformed pattern: " + std::string(text));
  const int n = parse_positive(text.substr(1), text);
  switch (text.front()) {
    case 'P':
    case 'p':
      return path(n);
    case 'C':
    case 'c':
      return cycle(n);
    default:
      throw std::invalid_argument("malformed pattern: " + std::string(text));
  }
}

std::string TargetPattern::to_string() const {
  return (is_path() ? "P" : "C") + std::to_string(size_);
}

std::string GameGoal::to_string() const { return "(" + red.to_string() + "," + blue.to_string() + ")"; }

Family Family::path_forest(int k) {
  if (k < 1) throw std::invalid_argument("path bound must be positive");
  Family f;
  f.path_bound = k;
  f.acyclic = true;
  return f;
}

Family Family::all_cycles() {
  Family f;
  f.acyclic = true;
  return f;
}

Family Family::cycle(int length) {
  if (length < 3) throw std::invalid_argument("cycle length must be at least 3");
  Family f;
  f.explicit_cycles.insert(length);
  return f;
}

Family Family::parse(std::string_view text) {
  Family f;
  if (text.empty()) throw std::invalid_argument("empty family");
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto plus = text.find('+', start);
    const auto item = text.substr(start, plus == std::string_view::npos ? std::string_view::npos : plus - start);
    if (item == "acyclic" || item == "cycles") {
      f.acyclic = true;
    } else {
      const auto p = TargetPattern::parse(item);
      if (p.is_path()) {
        const int k = p.size() - 1;
        f.path_bound = f.path_bound ? std::min(*f.path_bound, k) : k;
      } else {
        f.explicit_cycles.insert(p.size());
      }
    }
    if (plus == std::string_view::npos) break;
    start = plus + 1;
  }
  return f;
}

std::string Family::to_string() const {
  std::vector<std::string> parts;
  if (path_bound) parts.push_back("P" + std::to_string(*path_bound + 1));
  if (acyclic) parts.emplace_back("acyclic");
  for (int c : explicit_cycles) parts.push_back("C" + std::to_string(c));
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += '+';
    out += parts[i];
  }
  return out;
}

bool Family::contains(const TargetPattern& p) const {
  if (p.is_path()) return path_bound && p.size() == *path_bound + 1;
  return acyclic || explicit_cycles.count(p.size()) > 0;
}

}  // namespace olr
