#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>

#include "plrc/longest.hpp"

namespace plrc {

using BigInt = boost::multiprecision::cpp_int;

// counts(i, xi, h) is the number of distinct subsequences of w that are
// partial rollercoasters of the cell's class (same classes as LongestTables)
// ending at position i with the cell-maximal length value(xi, h, i). Within a
// cell, words and embeddings are in bijection, so the counts are exact.
//
// Counts can grow exponentially in |w|, so cells are exact unbounded
// integers; values below 2^63 live inline in the cell, larger ones spill into
// a side arena. Almost every cell is small, which keeps the table one machine
// word per cell and an addition O(1).
class RollercoasterTable {
 public:
  int size() const noexcept { return n_; }
  int k() const noexcept { return k_; }

  BigInt count(Pos i, Orientation xi, int h) const { return get(cell(xi, h, i)); }

  friend RollercoasterTable compute_rollercoaster_table(const Word& w, int k,
                                                        const LongestTables& tables);

 private:
  static constexpr std::uint64_t kBigTag = std::uint64_t(1) << 63;

  size_t cell(Orientation xi, int h, Pos i) const {
    return (static_cast<size_t>(xi == Orientation::Down) * k_ + h - 1) * (n_ + 1) + i;
  }
  BigInt get(size_t idx) const {
    const std::uint64_t raw = cells_[idx];
    return raw & kBigTag ? big_[raw & ~kBigTag] : BigInt(raw);
  }

  // exact accumulator that stays in one word until it cannot
  struct Acc {
    std::uint64_t small = 0;
    bool spilled = false;
    BigInt big;
  };
  void accumulate(Acc& acc, size_t idx) const;
  static void accumulate_one(Acc& acc);
  void store(size_t idx, Acc&& acc);

  int n_ = 0;
  int k_ = 0;
  std::vector<std::uint64_t> cells_;
  std::vector<BigInt> big_;
};

// throws errc::table_mismatch when tables were built for a different (w, k)
RollercoasterTable compute_rollercoaster_table(const Word& w, int k, const LongestTables& tables);

// Number of maximum-length plateau-k-rollercoasters in w: the h == k cells
// summed over the positions achieving the maximum length. 0 when none exist.
BigInt count_maximum_rollercoasters(const Word& w, int k);
BigInt count_maximum_rollercoasters(const LongestTables& tables, const RollercoasterTable& counts);

}  // namespace plrc
