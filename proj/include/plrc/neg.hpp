#pragma once

#include <vector>

#include "plrc/predecessor.hpp"
#include "plrc/word.hpp"

namespace plrc {

enum class EdgeLabel : unsigned char { Up, Eq, Down };

struct NegEdge {
  Pos from = 0;
  Pos to = 0;
  EdgeLabel label = EdgeLabel::Up;

  friend bool operator==(const NegEdge& a, const NegEdge& b) {
    return a.from == b.from && a.to == b.to && a.label == b.label;
  }
  friend bool operator<(const NegEdge& a, const NegEdge& b) {
    if (a.from != b.from) return a.from < b.from;
    if (a.to != b.to) return a.to < b.to;
    return a.label < b.label;
  }
};

// Edge-labeled DAG on the positions of w. An Up edge (i, j) requires
// w[i] < w[j] with no intermediate letter inside [w[i], w[j]]; a Down edge is
// the mirror image; the single Eq edge into j comes from the previous
// occurrence of w[j]. Stored by in-edges with sources sorted descending,
// which is the order the enumeration scans candidates in.
class NegGraph {
 public:
  int size() const noexcept { return n_; }

  const std::vector<Pos>& in_up(Pos j) const { return up_[static_cast<size_t>(j)]; }
  const std::vector<Pos>& in_down(Pos j) const { return down_[static_cast<size_t>(j)]; }
  Pos in_eq(Pos j) const { return eq_[static_cast<size_t>(j)]; }  // npos when absent

  bool has_edge(Pos i, Pos j, EdgeLabel label) const;
  std::vector<NegEdge> edges() const;  // sorted by (from, to, label)

  friend NegGraph build_neg(const Word& w, const PredecessorTable& pred);

 private:
  int n_ = 0;
  std::vector<std::vector<Pos>> up_;
  std::vector<std::vector<Pos>> down_;
  std::vector<Pos> eq_;
};

// O(n * sigma) construction; pred must have been built for w.
NegGraph build_neg(const Word& w, const PredecessorTable& pred);
NegGraph build_neg(const Word& w);

}  // namespace plrc
