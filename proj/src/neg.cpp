#include "plrc/neg.hpp"

#include <algorithm>

namespace plrc {

NegGraph build_neg(const Word& w, const PredecessorTable& pred) {
  if (pred.size() != w.size())
    throw error(errc::table_mismatch, "predecessor table does not match the word");
  NegGraph g;
  g.n_ = w.size();
  g.up_.assign(static_cast<size_t>(g.n_) + 1, {});
  g.down_.assign(static_cast<size_t>(g.n_) + 1, {});
  g.eq_.assign(static_cast<size_t>(g.n_) + 1, PredecessorTable::npos);

  const int sigma = pred.sigma();
  for (Pos j = 2; j <= g.n_; ++j) {
    const Letter cur = w.at(j);
    // an occurrence of any letter in (x, cur] between a candidate source and
    // j blocks the Up edge; the running maximum per scan keeps that test O(1)
    Pos blocker = pred.last(j - 1, cur);
    for (Letter x = cur - 1; x >= 1; --x) {
      const Pos q = pred.last(j - 1, x);
      if (q > blocker) {
        g.up_[static_cast<size_t>(j)].push_back(q);
        blocker = q;
      }
    }
    blocker = pred.last(j - 1, cur);
    for (Letter x = cur + 1; x <= sigma; ++x) {
      const Pos q = pred.last(j - 1, x);
      if (q > blocker) {
        g.down_[static_cast<size_t>(j)].push_back(q);
        blocker = q;
      }
    }
    g.eq_[static_cast<size_t>(j)] = pred.last(j - 1, cur);
    // the scans emit sources in ascending position; the enumeration wants
    // largest-first
    std::reverse(g.up_[static_cast<size_t>(j)].begin(), g.up_[static_cast<size_t>(j)].end());
    std::reverse(g.down_[static_cast<size_t>(j)].begin(), g.down_[static_cast<size_t>(j)].end());
  }
  return g;
}

NegGraph build_neg(const Word& w) { return build_neg(w, PredecessorTable::build(w)); }

bool NegGraph::has_edge(Pos i, Pos j, EdgeLabel label) const {
  if (j < 1 || j > n_) return false;
  switch (label) {
    case EdgeLabel::Eq:
      return eq_[static_cast<size_t>(j)] == i && i != PredecessorTable::npos;
    case EdgeLabel::Up: {
      const auto& v = up_[static_cast<size_t>(j)];
      return std::find(v.begin(), v.end(), i) != v.end();
    }
    case EdgeLabel::Down: {
      const auto& v = down_[static_cast<size_t>(j)];
      return std::find(v.begin(), v.end(), i) != v.end();
    }
  }
  return false;
}

std::vector<NegEdge> NegGraph::edges() const {
  std::vector<NegEdge> out;
  for (Pos j = 1; j <= n_; ++j) {
    for (Pos i : up_[static_cast<size_t>(j)]) out.push_back({i, j, EdgeLabel::Up});
    for (Pos i : down_[static_cast<size_t>(j)]) out.push_back({i, j, EdgeLabel::Down});
    if (eq_[static_cast<size_t>(j)] != PredecessorTable::npos)
      out.push_back({eq_[static_cast<size_t>(j)], j, EdgeLabel::Eq});
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace plrc
