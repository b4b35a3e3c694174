#pragma once

#include <cstdint>
#include <optional>

#include "plrc/predecessor.hpp"
#include "plrc/word.hpp"

namespace plrc {

struct LcrOptions {
  // the 2k value grids cost 8k bytes per index tuple; the build refuses to
  // start beyond this budget
  std::uint64_t memory_budget_bytes = std::uint64_t(1) << 30;
};

// Longest-common partial-rollercoaster grids over index tuples of the input
// words, one m-dimensional grid per (h, orientation). A cell is nonzero only
// when the letters at its tuple all agree; the classes mirror LongestTables
// (exact distinct count below k, complete at k, unary-or-opposite-complete at
// h == 1). Tuples are visited in lexicographic order, which dominates every
// predecessor tuple. O(N * k * sigma) work for N the product of the lengths.
class LcrTables {
 public:
  int k() const noexcept { return k_; }
  const std::vector<int>& dims() const noexcept { return dims_; }
  std::uint64_t tuple_count() const noexcept { return total_; }

  int value(int h, Orientation xi, std::uint64_t flat) const {
    return data_[flat * (2 * k_) + slot(h, xi)];
  }
  // flat index of a 1-based index tuple
  std::uint64_t flatten(const std::vector<Pos>& tuple) const;

  friend LcrTables compute_lcr_tables(const std::vector<Word>& words, int k,
                                      const LcrOptions& options);
  friend std::optional<Word> lcr_witness(const LcrTables& tables);
  friend int lcr_length(const LcrTables& tables);

 private:
  // all 2k cells of one tuple sit together, which is what the predecessor
  // lookups of neighbouring tuples hit
  size_t slot(int h, Orientation xi) const {
    return static_cast<size_t>(xi == Orientation::Down) * k_ + h - 1;
  }

  int k_ = 0;
  int sigma_ = 0;
  std::vector<Word> words_;
  std::vector<PredecessorTable> preds_;
  std::vector<int> dims_;
  std::vector<std::uint64_t> strides_;
  std::uint64_t total_ = 0;
  std::vector<int> data_;                      // total_ tuples times 2k cells
  std::vector<std::vector<int>> unary_count_;  // per word, occurrences of w[i] in w[1, i]
};

// throws errc::too_few_words, errc::invalid_argument, errc::memory_budget
// (message reports required vs configured bytes)
LcrTables compute_lcr_tables(const std::vector<Word>& words, int k, const LcrOptions& options = {});

int lcr_length(const LcrTables& tables);
int lcr_length(const std::vector<Word>& words, int k, const LcrOptions& options = {});

// one longest common rollercoaster, deterministic; nullopt when none exists
std::optional<Word> lcr_witness(const LcrTables& tables);
std::optional<Word> lcr_witness(const std::vector<Word>& words, int k,
                                const LcrOptions& options = {});

}  // namespace plrc
