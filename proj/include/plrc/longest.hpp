#pragma once

#include <optional>

#include "plrc/predecessor.hpp"
#include "plrc/word.hpp"

namespace plrc {

// ============================================================================
// Longest partial-rollercoaster tables.
//
// value(xi, h, i) is the length of the longest subsequence of w[1, i] that
// ends at position i and is a partial plateau-k-rollercoaster whose current
// run has orientation xi and
//
//   h in [2, k-1] : exactly h distinct letters in the current run,
//   h == k        : at least k distinct letters (the run is complete),
//   h == 1        : a single distinct letter; such a word is either unary or
//                   a complete rollercoaster of the opposite orientation whose
//                   trailing plateau doubles as the fresh run.
//
// 0 encodes "no such subsequence". The h == 1 row is the pointwise maximum of
// the longest unary subsequence ending at i and value(opposite(xi), k, i);
// carrying the full unary length (not just 1) is what lets a leading plateau
// such as 11 in 1123 be absorbed into the first run of a longer rollercoaster.
//
// Cells for h >= 2 are filled by scanning the candidate predecessors
// { last(i-1, x) | x in [1, sigma] } in ascending x, ties broken toward the
// larger predecessor position, which makes the choice grid and every witness
// deterministic. Total work is O(n * sigma * k).
// ============================================================================

class LongestTables {
 public:
  // Backtracking record for one cell. pos == 0 means the cell starts a word.
  // pos == i (the cell's own position) re-reads the same position under the
  // opposite-orientation complete cell: the trailing plateau is being viewed
  // as the fresh run, no element is consumed.
  struct Choice {
    Pos pos = 0;
    Orientation xi = Orientation::Up;
    int h = 0;
  };

  int size() const noexcept { return n_; }
  int k() const noexcept { return k_; }
  const Word& word() const noexcept { return word_; }
  const PredecessorTable& predecessors() const noexcept { return pred_; }

  int value(Orientation xi, int h, Pos i) const { return values_[cell(xi, h, i)]; }
  Choice choice(Orientation xi, int h, Pos i) const { return choices_[cell(xi, h, i)]; }

  // occurrences of w[i] within w[1, i]
  int unary_len(Pos i) const { return unary_[static_cast<size_t>(i)]; }

  friend LongestTables compute_longest_tables(const Word& w, int k);

 private:
  size_t cell(Orientation xi, int h, Pos i) const {
    return (static_cast<size_t>(xi == Orientation::Down) * (k_ + 1) + h) * (n_ + 1) + i;
  }

  Word word_;
  PredecessorTable pred_;
  int n_ = 0;
  int k_ = 0;
  std::vector<int> values_;
  std::vector<Choice> choices_;
  std::vector<int> unary_;
};

// throws errc::empty_word / errc::invalid_argument (k < 1)
LongestTables compute_longest_tables(const Word& w, int k);

int longest_length(const LongestTables& tables);
int longest_length(const Word& w, int k);  // 0 for the empty word

// One maximum-length witness, deterministic; nullopt when none exists.
std::optional<Word> longest_witness(const Word& w, int k);
std::optional<Word> longest_witness(const LongestTables& tables);

// Witness for an arbitrary cell (used by tests for the worked mid-table
// values); nullopt when the cell is 0.
std::optional<Word> cell_witness(const LongestTables& tables, Orientation xi, int h, Pos i);

}  // namespace plrc
