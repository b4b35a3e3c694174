#include "plrc/counting.hpp"

namespace plrc {

namespace {

bool strict_side(Orientation xi, Letter x, Letter cur) {
  return xi == Orientation::Up ? x < cur : x > cur;
}

}  // namespace

void RollercoasterTable::accumulate(Acc& acc, size_t idx) const {
  const std::uint64_t raw = cells_[idx];
  if (!(raw & kBigTag)) {
    if (!acc.spilled) {
      const std::uint64_t sum = acc.small + raw;  // both below 2^63, no wrap
      if (!(sum & kBigTag)) {
        acc.small = sum;
        return;
      }
      acc.spilled = true;
      acc.big = BigInt(acc.small);
    }
    acc.big += raw;
    return;
  }
  const BigInt& value = big_[raw & ~kBigTag];
  if (!acc.spilled) {
    acc.spilled = true;
    acc.big = BigInt(acc.small);
  }
  acc.big += value;
}

void RollercoasterTable::accumulate_one(Acc& acc) {
  if (acc.spilled) {
    acc.big += 1;
    return;
  }
  const std::uint64_t sum = acc.small + 1;
  if (sum & kBigTag) {
    acc.spilled = true;
    acc.big = BigInt(acc.small) + 1;
  } else {
    acc.small = sum;
  }
}

void RollercoasterTable::store(size_t idx, Acc&& acc) {
  if (!acc.spilled) {
    cells_[idx] = acc.small;
    return;
  }
  big_.push_back(std::move(acc.big));
  cells_[idx] = kBigTag | static_cast<std::uint64_t>(big_.size() - 1);
}

RollercoasterTable compute_rollercoaster_table(const Word& w, int k, const LongestTables& t) {
  if (t.word() != w || t.k() != k)
    throw error(errc::table_mismatch, "longest tables were built for a different word or k");

  RollercoasterTable r;
  r.n_ = w.size();
  r.k_ = k;
  r.cells_.assign(static_cast<size_t>(2) * k * (r.n_ + 1), 0);
  const int n = r.n_;
  const int sigma = t.predecessors().sigma();

  if (k == 1) {
    // the only word of the cell-maximal length i ending at i is w[1, i] itself
    for (Pos i = 1; i <= n; ++i)
      for (Orientation xi : {Orientation::Up, Orientation::Down}) r.cells_[r.cell(xi, 1, i)] = 1;
    return r;
  }

  for (Pos i = 1; i <= n; ++i) {
    const Letter cur = w.at(i);
    for (Orientation xi : {Orientation::Up, Orientation::Down}) {
      for (int h = 2; h <= k; ++h) {
        const int len = t.value(xi, h, i);
        if (len == 0) continue;
        RollercoasterTable::Acc total;
        for (Letter x = 1; x <= sigma; ++x) {
          const Pos j = t.predecessors().last(i - 1, x);
          if (j == PredecessorTable::npos) continue;
          if (strict_side(xi, x, cur)) {
            if (h < k) {
              if (t.value(xi, h - 1, j) == len - 1) r.accumulate(total, r.cell(xi, h - 1, j));
            } else {
              if (t.value(xi, k - 1, j) == len - 1) r.accumulate(total, r.cell(xi, k - 1, j));
              if (t.value(xi, k, j) == len - 1) r.accumulate(total, r.cell(xi, k, j));
            }
          } else if (x == cur) {
            if (t.value(xi, h, j) == len - 1) r.accumulate(total, r.cell(xi, h, j));
          }
        }
        r.store(r.cell(xi, h, i), std::move(total));
      }
    }
    // h == 1 after both complete cells of position i: the opposite-complete
    // words when the lengths agree, plus the single unary word when it is the
    // one achieving the cell length.
    for (Orientation xi : {Orientation::Up, Orientation::Down}) {
      const int len = t.value(xi, 1, i);
      RollercoasterTable::Acc total;
      if (t.value(opposite(xi), k, i) == len) r.accumulate(total, r.cell(opposite(xi), k, i));
      if (t.unary_len(i) == len) RollercoasterTable::accumulate_one(total);
      r.store(r.cell(xi, 1, i), std::move(total));
    }
  }
  return r;
}

BigInt count_maximum_rollercoasters(const LongestTables& t, const RollercoasterTable& r) {
  const int m = longest_length(t);
  if (m == 0) return 0;
  // k == 1: the unique maximum is the word itself, which both orientation
  // cells describe; summing would count it twice.
  if (t.k() == 1) return 1;
  BigInt total = 0;
  for (Pos i = 1; i <= t.size(); ++i)
    for (Orientation xi : {Orientation::Up, Orientation::Down})
      if (t.value(xi, t.k(), i) == m) total += r.count(i, xi, t.k());
  return total;
}

BigInt count_maximum_rollercoasters(const Word& w, int k) {
  if (w.empty()) return 0;
  LongestTables t = compute_longest_tables(w, k);
  RollercoasterTable r = compute_rollercoaster_table(w, k, t);
  return count_maximum_rollercoasters(t, r);
}

}  // namespace plrc
