#include "plrc/predecessor.hpp"

#include <algorithm>

namespace plrc {

PredecessorTable PredecessorTable::build(const Word& w) {
  PredecessorTable t;
  t.n_ = w.size();
  t.sigma_ = std::max(1, w.sigma());
  t.cells_.assign(static_cast<size_t>(t.n_ + 1) * t.sigma_, npos);
  for (Pos i = 1; i <= t.n_; ++i) {
    // row i is row i-1 with the single cell for w[i] updated
    const size_t row = static_cast<size_t>(i) * t.sigma_;
    const size_t prev = row - t.sigma_;
    std::copy(t.cells_.begin() + prev, t.cells_.begin() + row, t.cells_.begin() + row);
    t.cells_[row + w.at(i) - 1] = i;
  }
  return t;
}

MultiPredecessorTable::MultiPredecessorTable(const std::vector<Word>& words) {
  if (words.size() < 2)
    throw error(errc::too_few_words, "need at least two words, got " + std::to_string(words.size()));
  for (const Word& w : words) sigma_ = std::max(sigma_, w.sigma());
  tables_.reserve(words.size());
  for (const Word& w : words) tables_.push_back(PredecessorTable::build(Word(w.letters(), sigma_)));
}

std::vector<int> MultiPredecessorTable::dims() const {
  std::vector<int> d;
  d.reserve(tables_.size());
  for (const PredecessorTable& t : tables_) d.push_back(t.size());
  return d;
}

std::optional<std::vector<Pos>> MultiPredecessorTable::get(const std::vector<Pos>& indices,
                                                           Letter x) const {
  std::vector<Pos> out(indices.size());
  for (size_t j = 0; j < indices.size(); ++j) {
    Pos p = tables_[j].last(indices[j], x);
    if (p == PredecessorTable::npos) return std::nullopt;
    out[j] = p;
  }
  return out;
}

}  // namespace plrc
