#include "plrc/lcr.hpp"

#include <algorithm>
#include <limits>

namespace plrc {

namespace {

bool strict_side(Orientation xi, Letter x, Letter cur) {
  return xi == Orientation::Up ? x < cur : x > cur;
}

}  // namespace

std::uint64_t LcrTables::flatten(const std::vector<Pos>& tuple) const {
  std::uint64_t flat = 0;
  for (size_t j = 0; j < tuple.size(); ++j)
    flat += static_cast<std::uint64_t>(tuple[j] - 1) * strides_[j];
  return flat;
}

LcrTables compute_lcr_tables(const std::vector<Word>& words, int k, const LcrOptions& options) {
  if (words.size() < 2)
    throw error(errc::too_few_words, "need at least two words, got " + std::to_string(words.size()));
  if (k < 1) throw error(errc::invalid_argument, "k must be at least 1");
  for (const Word& w : words)
    if (w.empty()) throw error(errc::empty_word, "all words must be nonempty");

  LcrTables t;
  t.k_ = k;
  t.words_ = words;
  for (const Word& w : words) t.sigma_ = std::max(t.sigma_, w.sigma());

  const int m = static_cast<int>(words.size());
  t.dims_.resize(static_cast<size_t>(m));
  t.total_ = 1;
  for (int j = 0; j < m; ++j) {
    t.dims_[static_cast<size_t>(j)] = words[static_cast<size_t>(j)].size();
    const std::uint64_t d = static_cast<std::uint64_t>(t.dims_[static_cast<size_t>(j)]);
    if (t.total_ > std::numeric_limits<std::uint64_t>::max() / d)
      throw error(errc::memory_budget, "index-tuple grid size overflows");
    t.total_ *= d;
  }
  t.strides_.assign(static_cast<size_t>(m), 1);
  for (int j = m - 2; j >= 0; --j)
    t.strides_[static_cast<size_t>(j)] =
        t.strides_[static_cast<size_t>(j + 1)] * static_cast<std::uint64_t>(t.dims_[static_cast<size_t>(j + 1)]);

  const std::uint64_t required = 2ull * k * t.total_ * sizeof(int);
  if (required > options.memory_budget_bytes)
    throw error(errc::memory_budget, "grids require " + std::to_string(required) +
                                         " bytes, budget is " +
                                         std::to_string(options.memory_budget_bytes));

  t.preds_.reserve(static_cast<size_t>(m));
  t.unary_count_.resize(static_cast<size_t>(m));
  for (int j = 0; j < m; ++j) {
    const Word w(words[static_cast<size_t>(j)].letters(), t.sigma_);
    t.preds_.push_back(PredecessorTable::build(w));
    std::vector<int>& uc = t.unary_count_[static_cast<size_t>(j)];
    uc.assign(static_cast<size_t>(w.size()) + 1, 0);
    for (Pos i = 1; i <= w.size(); ++i) {
      const Pos p = t.preds_.back().last(i - 1, w.at(i));
      uc[static_cast<size_t>(i)] = 1 + (p ? uc[static_cast<size_t>(p)] : 0);
    }
  }

  const size_t lanes = 2 * static_cast<size_t>(k);
  t.data_.assign(t.total_ * lanes, 0);

  std::vector<Pos> tuple(static_cast<size_t>(m), 1);

  // predecessor-tuple offsets for every letter, refreshed once per tuple
  std::vector<std::uint64_t> pf(static_cast<size_t>(t.sigma_) + 1, 0);
  std::vector<char> pf_ok(static_cast<size_t>(t.sigma_) + 1, 0);

  for (std::uint64_t flat = 0; flat < t.total_; ++flat) {
    const Letter cur = words[0].at(tuple[0]);
    bool equal = true;
    for (int j = 1; j < m && equal; ++j)
      equal = words[static_cast<size_t>(j)].at(tuple[static_cast<size_t>(j)]) == cur;

    if (equal) {
      for (Letter x = 1; x <= t.sigma_; ++x) {
        std::uint64_t off = 0;
        bool ok = true;
        for (int j = 0; j < m && ok; ++j) {
          const Pos p =
              t.preds_[static_cast<size_t>(j)].last(tuple[static_cast<size_t>(j)] - 1, x);
          if (p == PredecessorTable::npos)
            ok = false;
          else
            off += static_cast<std::uint64_t>(p - 1) * t.strides_[static_cast<size_t>(j)];
        }
        pf[static_cast<size_t>(x)] = off * lanes;
        pf_ok[static_cast<size_t>(x)] = ok ? 1 : 0;
      }
      int* cell = &t.data_[flat * lanes];

      if (k == 1) {
        int best = 0;
        for (Letter x = 1; x <= t.sigma_; ++x)
          if (pf_ok[static_cast<size_t>(x)])
            best = std::max(best, t.data_[pf[static_cast<size_t>(x)]]);
        cell[t.slot(1, Orientation::Up)] = best + 1;
        cell[t.slot(1, Orientation::Down)] = best + 1;
      } else {
        for (Orientation xi : {Orientation::Up, Orientation::Down}) {
          for (int h = 2; h <= k; ++h) {
            int best = 0;
            for (Letter x = 1; x <= t.sigma_; ++x) {
              if (!pf_ok[static_cast<size_t>(x)]) continue;
              const int* pred = &t.data_[pf[static_cast<size_t>(x)]];
              int v = 0;
              if (strict_side(xi, x, cur))
                v = h < k ? pred[t.slot(h - 1, xi)]
                          : std::max(pred[t.slot(k - 1, xi)], pred[t.slot(k, xi)]);
              else if (x == cur)
                v = pred[t.slot(h, xi)];
              else
                continue;
              best = std::max(best, v);
            }
            if (best > 0) cell[t.slot(h, xi)] = best + 1;
          }
        }
        int common_unary = std::numeric_limits<int>::max();
        for (int j = 0; j < m; ++j)
          common_unary = std::min(
              common_unary, t.unary_count_[static_cast<size_t>(j)][static_cast<size_t>(
                                tuple[static_cast<size_t>(j)])]);
        for (Orientation xi : {Orientation::Up, Orientation::Down}) {
          const int via_complete = cell[t.slot(k, opposite(xi))];
          cell[t.slot(1, xi)] = std::max(common_unary, via_complete);
        }
      }
    }

    // advance the odometer, last coordinate fastest
    for (int j = m - 1; j >= 0; --j) {
      if (tuple[static_cast<size_t>(j)] < t.dims_[static_cast<size_t>(j)]) {
        ++tuple[static_cast<size_t>(j)];
        std::fill(tuple.begin() + j + 1, tuple.end(), 1);
        break;
      }
    }
  }
  return t;
}

int lcr_length(const LcrTables& t) {
  int best = 0;
  for (std::uint64_t f = 0; f < t.total_; ++f)
    for (Orientation xi : {Orientation::Up, Orientation::Down})
      best = std::max(best, t.value(t.k_, xi, f));
  return best;
}

int lcr_length(const std::vector<Word>& words, int k, const LcrOptions& options) {
  return lcr_length(compute_lcr_tables(words, k, options));
}

std::optional<Word> lcr_witness(const LcrTables& t) {
  const int m = static_cast<int>(t.words_.size());
  const int best = lcr_length(t);
  if (best == 0) return std::nullopt;

  // locate the first cell achieving the maximum
  Orientation xi = Orientation::Up;
  std::uint64_t flat = 0;
  bool found = false;
  for (std::uint64_t f = 0; f < t.total_ && !found; ++f)
    for (Orientation o : {Orientation::Up, Orientation::Down})
      if (t.value(t.k_, o, f) == best) {
        xi = o;
        flat = f;
        found = true;
        break;
      }

  auto unflatten = [&](std::uint64_t f) {
    std::vector<Pos> tuple(static_cast<size_t>(m));
    for (int j = 0; j < m; ++j) {
      tuple[static_cast<size_t>(j)] = static_cast<Pos>(f / t.strides_[static_cast<size_t>(j)]) + 1;
      f %= t.strides_[static_cast<size_t>(j)];
    }
    return tuple;
  };
  auto pred_flat = [&](const std::vector<Pos>& tuple, Letter x) -> std::optional<std::uint64_t> {
    std::uint64_t f = 0;
    for (int j = 0; j < m; ++j) {
      const Pos p = t.preds_[static_cast<size_t>(j)].last(tuple[static_cast<size_t>(j)] - 1, x);
      if (p == PredecessorTable::npos) return std::nullopt;
      f += static_cast<std::uint64_t>(p - 1) * t.strides_[static_cast<size_t>(j)];
    }
    return f;
  };
  auto common_unary = [&](const std::vector<Pos>& tuple) {
    int u = std::numeric_limits<int>::max();
    for (int j = 0; j < m; ++j)
      u = std::min(u, t.unary_count_[static_cast<size_t>(j)][static_cast<size_t>(
                          tuple[static_cast<size_t>(j)])]);
    return u;
  };

  std::vector<Letter> out;
  std::vector<Pos> tuple = unflatten(flat);
  int h = t.k_;
  int val = best;
  out.push_back(t.words_[0].at(tuple[0]));

  if (t.k_ == 1) {
    while (val > 1) {
      bool stepped = false;
      for (Letter x = 1; x <= t.sigma_ && !stepped; ++x) {
        const auto pf = pred_flat(tuple, x);
        if (pf && t.value(1, Orientation::Up, *pf) == val - 1) {
          tuple = unflatten(*pf);
          --val;
          out.push_back(t.words_[0].at(tuple[0]));
          stepped = true;
        }
      }
      if (!stepped) throw error(errc::internal, "lcr backtrack lost the trail");
    }
    std::reverse(out.begin(), out.end());
    return Word(std::move(out), t.sigma_);
  }

  for (;;) {
    const Letter cur = t.words_[0].at(tuple[0]);
    if (h == 1) {
      const int via_complete = t.value(t.k_, opposite(xi), t.flatten(tuple));
      if (via_complete > 0 && via_complete >= common_unary(tuple) && via_complete == val) {
        xi = opposite(xi);
        h = t.k_;
        continue;
      }
      if (val == 1) break;
      const auto pf = pred_flat(tuple, cur);
      if (!pf) throw error(errc::internal, "lcr backtrack lost the unary trail");
      tuple = unflatten(*pf);
      --val;
      out.push_back(cur);
      continue;
    }
    bool stepped = false;
    for (Letter x = 1; x <= t.sigma_ && !stepped; ++x) {
      int next_h = 0;
      if (strict_side(xi, x, cur)) {
        const auto pf = pred_flat(tuple, x);
        if (!pf) continue;
        if (h == t.k_) {
          if (t.value(t.k_, xi, *pf) == val - 1)
            next_h = t.k_;
          else if (t.value(t.k_ - 1, xi, *pf) == val - 1)
            next_h = t.k_ - 1;
        } else if (t.value(h - 1, xi, *pf) == val - 1) {
          next_h = h - 1;
        }
        if (next_h) {
          tuple = unflatten(*pf);
          h = next_h;
          --val;
          out.push_back(t.words_[0].at(tuple[0]));
          stepped = true;
        }
      } else if (x == cur) {
        const auto pf = pred_flat(tuple, x);
        if (pf && t.value(h, xi, *pf) == val - 1) {
          tuple = unflatten(*pf);
          --val;
          out.push_back(cur);
          stepped = true;
        }
      }
    }
    if (!stepped) throw error(errc::internal, "lcr backtrack lost the trail");
  }

  std::reverse(out.begin(), out.end());
  return Word(std::move(out), t.sigma_);
}

std::optional<Word> lcr_witness(const std::vector<Word>& words, int k, const LcrOptions& options) {
  return lcr_witness(compute_lcr_tables(words, k, options));
}

}  // namespace plrc
