#pragma once

#include <optional>
#include <vector>

#include "plrc/word.hpp"

namespace plrc {

// Last-occurrence table: last(i, x) is the largest position i' <= i with
// w[i'] = x, or npos when x does not occur in w[1, i]. Row 0 is all-absent.
// Built in O(n * sigma), O(1) random access.
class PredecessorTable {
 public:
  static constexpr Pos npos = 0;

  static PredecessorTable build(const Word& w);

  int size() const noexcept { return n_; }
  int sigma() const noexcept { return sigma_; }

  Pos last(Pos i, Letter x) const { return cells_[static_cast<size_t>(i) * sigma_ + x - 1]; }
  bool has(Pos i, Letter x) const { return last(i, x) != npos; }
  std::optional<Pos> get(Pos i, Letter x) const {
    Pos p = last(i, x);
    return p == npos ? std::nullopt : std::optional<Pos>(p);
  }

 private:
  int n_ = 0;
  int sigma_ = 0;
  std::vector<Pos> cells_;  // (n + 1) rows of sigma entries
};

// Access contract for the tuple-of-words table: coordinates are read off the
// per-word tables on the fly rather than materialised, since the tuple grid
// costs the product of the lengths.
class MultiPredecessorTable {
 public:
  // throws errc::too_few_words when fewer than two words are given
  explicit MultiPredecessorTable(const std::vector<Word>& words);

  int word_count() const noexcept { return static_cast<int>(tables_.size()); }
  int sigma() const noexcept { return sigma_; }
  const PredecessorTable& table(int j) const { return tables_[static_cast<size_t>(j)]; }
  std::vector<int> dims() const;

  // entry for (indices, x); absent as soon as one coordinate is absent
  std::optional<std::vector<Pos>> get(const std::vector<Pos>& indices, Letter x) const;

 private:
  std::vector<PredecessorTable> tables_;
  int sigma_ = 0;
};

}  // namespace plrc
