#include "olr/core/canonical.hpp"

#include <algorithm>
#include <numeric>

namespace olr {
namespace {

// Works on one connected component, given as a list of vertices of `g`.
class ComponentCanon {
 public:
  ComponentCanon(const LabelledGraph& g, std::vector<std::size_t> verts)
      : g_(g), verts_(std::move(verts)), n_(verts_.size()) {}

  std::string run() {
    std::vector<int> cells(n_, 0);
    refine(cells);
    search(cells);
    return best_;
  }

 private:
  std::uint8_t lab(std::size_t a, std::size_t b) const { return g_.label(verts_[a], verts_[b]); }

  // Colour refinement to the coarsest equitable partition finer than `cells`.
  // Cell numbers stay dense and ordered by invariant signatures.
  void refine(std::vector<int>& cells) const {
    int count = -1;
    std::vector<std::vector<int>> sig(n_);
    std::vector<std::size_t> order(n_);
    for (;;) {
      for (std::size_t a = 0; a < n_; ++a) {
        auto& s = sig[a];
        s.clear();
        for (std::size_t b = 0; b < n_; ++b) {
          if (b != a && lab(a, b) != 0) s.push_back(lab(a, b) * 1024 + cells[b]);
        }
        std::sort(s.begin(), s.end());
        s.insert(s.begin(), cells[a]);
      }
      std::iota(order.begin(), order.end(), std::size_t{0});
      std::sort(order.begin(), order.end(), [&](auto x, auto y) { return sig[x] < sig[y]; });
      int next = 0;
      for (std::size_t i = 0; i < n_; ++i) {
        if (i > 0 && sig[order[i]] != sig[order[i - 1]]) ++next;
        cells[order[i]] = next;
      }
      if (next == count) return;
      count = next;
    }
  }

  bool twins(std::size_t a, std::size_t b) const {
    for (std::size_t x = 0; x < n_; ++x) {
      if (x != a && x != b && lab(a, x) != lab(b, x)) return false;
    }
    return true;
  }

  void search(const std::vector<int>& cells) {
    // Smallest non-singleton cell, first by cell index.
    std::vector<int> sizes(n_, 0);
    for (int c : cells) ++sizes[c];
    int target = -1;
    for (std::size_t c = 0; c < n_; ++c) {
      if (sizes[c] > 1) {
        target = static_cast<int>(c);
        break;
      }
    }
    if (target < 0) {
      leaf(cells);
      return;
    }
    std::vector<std::size_t> members;
    for (std::size_t a = 0; a < n_; ++a) {
      if (cells[a] == target) members.push_back(a);
    }
    std::vector<std::size_t> tried;
    for (std::size_t a : members) {
      bool redundant = false;
      for (std::size_t b : tried) {
        if (twins(a, b)) {
          redundant = true;
          break;
        }
      }
      if (redundant) continue;
      tried.push_back(a);
      std::vector<int> next(n_);
      for (std::size_t x = 0; x < n_; ++x) next[x] = 2 * cells[x] + (x == a ? 0 : 1);
      refine(next);
      search(next);
    }
  }

  void leaf(const std::vector<int>& cells) {
    std::vector<std::size_t> at(n_);
    for (std::size_t a = 0; a < n_; ++a) at[cells[a]] = a;
    std::string code;
    code.reserve(n_ * (n_ - 1) / 2);
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = i + 1; j < n_; ++j) code.push_back(static_cast<char>(lab(at[i], at[j])));
    }
    if (!have_ || code < best_) {
      best_ = std::move(code);
      have_ = true;
    }
  }

  const LabelledGraph& g_;
  std::vector<std::size_t> verts_;
  std::size_t n_;
  std::string best_;
  bool have_ = false;
};

}  // namespace

std::string canonical_form(const LabelledGraph& g) {
  const std::size_t n = g.size();
  std::vector<int> comp(n, -1);
  std::vector<std::string> codes;
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    bool isolated = true;
    for (std::size_t x = 0; x < n && isolated; ++x) isolated = (x == s || g.label(s, x) == 0);
    if (isolated) continue;
    std::vector<std::size_t> verts{s};
    comp[s] = static_cast<int>(codes.size());
    for (std::size_t i = 0; i < verts.size(); ++i) {
      for (std::size_t x = 0; x < n; ++x) {
        if (comp[x] < 0 && g.label(verts[i], x) != 0) {
          comp[x] = comp[s];
          verts.push_back(x);
        }
      }
    }
    const std::size_t size = verts.size();
    std::string code = ComponentCanon(g, std::move(verts)).run();
    code.insert(code.begin(), static_cast<char>(size));
    codes.push_back(std::move(code));
  }
  std::sort(codes.begin(), codes.end());
  std::string out;
  for (const auto& c : codes) out += c;
  return out;
}

LabelledGraph to_labelled(const Board& board, std::optional<Edge> pending,
                          std::uint8_t pending_label) {
  std::vector<VertexId> verts = board.active_vertices();
  if (pending) {
    for (VertexId x : {pending->u(), pending->v()}) {
      if (!board.is_active(x)) verts.push_back(x);
    }
  }
  std::sort(verts.begin(), verts.end());
  auto index = [&](VertexId x) {
    return static_cast<std::size_t>(std::lower_bound(verts.begin(), verts.end(), x) - verts.begin());
  };
  LabelledGraph g(verts.size());
  for (const auto& [e, c] : board.edges()) {
    g.set(index(e.u()), index(e.v()), c == Color::Red ? 1 : 2);
  }
  if (pending) g.set(index(pending->u()), index(pending->v()), pending_label);
  return g;
}

std::string canonical_key(const Board& board) { return canonical_form(to_labelled(board)); }

}  // namespace olr
