#include <algorithm>
#include <set>

#include "olr/builder/gadgets.hpp"

namespace olr {
namespace {

[[noreturn]] void bad(const std::string& what) { throw InvariantViolated(what); }

bool coloured(const Board& b, VertexId u, VertexId v, Color c) {
  if (u == v) return false;
  const auto got = b.color_of(Edge(u, v));
  return got && *got == c;
}

std::string describe(const VertexPath& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s + "]";
}

void require_distinct(const VertexPath& p, const char* what) {
  std::set<VertexId> seen(p.begin(), p.end());
  if (seen.size() != p.size()) bad(std::string(what) + " repeats a vertex: " + describe(p));
}

}  // namespace

int length(const VertexPath& p) { return p.empty() ? 0 : static_cast<int>(p.size()) - 1; }

int TypeCPath::length() const {
  int total = 0;
  for (const auto& s : segments) total += olr::length(s);
  return total;
}

TypeCPath TypeCPath::reversed() const {
  TypeCPath out;
  for (auto it = segments.rbegin(); it != segments.rend(); ++it) {
    out.segments.emplace_back(it->rbegin(), it->rend());
  }
  return out;
}

void validate_blue_path(const Board& b, const VertexPath& p) {
  require_distinct(p, "blue path");
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    if (!coloured(b, p[i], p[i + 1], Color::Blue)) bad("path edge not blue in " + describe(p));
  }
}

void validate(const Board& b, const AnchoredPath& p) {
  if (p.path.empty()) bad("anchored path is empty");
  validate_blue_path(b, p.path);
  if (!coloured(b, p.b(), p.anchor, Color::Red)) bad("anchor edge of " + describe(p.path) + " not red");
}

void validate(const Board& b, const TypeAPath& p) {
  if (p.S.size() < 2) bad("type A path with trivial S");
  validate_blue_path(b, p.S);
  if (std::find(p.S.begin(), p.S.end(), p.x) != p.S.end()) bad("type A: x lies on S");
  if (!coloured(b, p.x, p.y(), Color::Red)) bad("type A: xy not red");
}

void validate(const Board& b, const TypeBPath& p) {
  require_distinct({p.v, p.w, p.x, p.y, p.z}, "type B path");
  if (!coloured(b, p.v, p.w, Color::Red) || !coloured(b, p.y, p.z, Color::Red) ||
      !coloured(b, p.w, p.x, Color::Blue) || !coloured(b, p.x, p.y, Color::Blue)) {
    bad("type B path miscoloured");
  }
}

bool is_red_p3(const Board& b, const VertexPath& seg) {
  return seg.size() == 3 && coloured(b, seg[0], seg[1], Color::Red) &&
         coloured(b, seg[1], seg[2], Color::Red);
}

bool is_complete(const Board& b, const TypeCPath& t) {
  return !is_red_p3(b, t.segments.front()) && !is_red_p3(b, t.segments.back());
}

void validate(const Board& b, const TypeCPath& t) {
  const int k = t.k();
  if (k < 3 || k % 2 == 0) bad("type C: k = " + std::to_string(k));  // (C1)
  VertexPath whole;
  for (int i = 0; i < k; ++i) {
    const auto& seg = t.segments[i];
    if (seg.size() < 2) bad("type C: trivial segment");
    if (i > 0 && t.segments[i - 1].back() != seg.front()) bad("type C: segments do not meet");
    whole.insert(whole.end(), seg.begin() + (i > 0 ? 1 : 0), seg.end());
  }
  require_distinct(whole, "type C path");
  auto end_ok = [&](const VertexPath& s, bool first) {
    if (s.size() == 2) return coloured(b, s[0], s[1], Color::Blue);
    if (s.size() != 3) return false;
    return first ? coloured(b, s[1], s[2], Color::Red) : coloured(b, s[0], s[1], Color::Red);
  };
  if (!end_ok(t.segments.front(), true)) bad("type C: (C2) fails");
  if (!end_ok(t.segments.back(), false)) bad("type C: (C3) fails");
  int short_ones = 0;
  for (int i = 1; i < k - 1; i += 2) {  // T_2, T_4, ...
    const auto& seg = t.segments[i];
    validate_blue_path(b, seg);
    if (seg.size() == 2) {
      ++short_ones;
    } else if (seg.size() != 3) {
      bad("type C: (C4) segment length");
    }
  }
  if (short_ones != 1) bad("type C: (C4) needs exactly one blue segment of length 1");
  for (int i = 2; i < k - 2; i += 2) {  // T_3, T_5, ..., T_{k-2}
    if (!is_red_p3(b, t.segments[i])) bad("type C: (C5) fails");
  }
  const int expected = 2 * k - 5 + length(t.segments.front()) + length(t.segments.back());
  if (t.length() != expected) bad("type C: length identity fails");
}

void validate(const Board& b, const TrackedStructure& s) {
  validate(b, s.Q);  // (P1)
  if (!s.R.empty()) validate_blue_path(b, s.R);  // (P2)
  std::set<VertexId> used(s.Q.path.begin(), s.Q.path.end());
  used.insert(s.Q.anchor);
  auto claim = [&](VertexId v) {
    if (!used.insert(v).second) bad("structure parts share vertex " + std::to_string(v));  // (P4)
  };
  for (VertexId v : s.R) claim(v);
  for (const auto& [edges, colour] : {std::pair{&s.spare_blue, Color::Blue}, std::pair{&s.spare_red, Color::Red}}) {
    for (const Edge& e : *edges) {  // (P3)
      if (!coloured(b, e.u(), e.v(), colour)) bad("spare edge has the wrong colour");
      claim(e.u());
      claim(e.v());
    }
  }
}

}  // namespace olr
