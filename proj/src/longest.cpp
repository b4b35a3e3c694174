#include "plrc/longest.hpp"

#include <algorithm>

namespace plrc {

namespace {

bool strict_side(Orientation xi, Letter x, Letter cur) {
  return xi == Orientation::Up ? x < cur : x > cur;
}

}  // namespace

LongestTables compute_longest_tables(const Word& w, int k) {
  if (w.empty()) throw error(errc::empty_word, "longest tables need a nonempty word");
  if (k < 1) throw error(errc::invalid_argument, "k must be at least 1");

  LongestTables t;
  t.word_ = w;
  t.pred_ = PredecessorTable::build(w);
  t.n_ = w.size();
  t.k_ = k;
  const int n = t.n_;
  const int sigma = t.pred_.sigma();
  t.values_.assign(2 * static_cast<size_t>(k + 1) * (n + 1), 0);
  t.choices_.assign(t.values_.size(), {});
  t.unary_.assign(static_cast<size_t>(n) + 1, 0);

  for (Pos i = 1; i <= n; ++i) {
    Pos prev_same = t.pred_.last(i - 1, w.at(i));
    t.unary_[static_cast<size_t>(i)] = 1 + (prev_same ? t.unary_[static_cast<size_t>(prev_same)] : 0);
  }

  if (k == 1) {
    // Every maximal run trivially has one distinct letter, so any word
    // qualifies and the longest one ending at i is the whole prefix.
    for (Pos i = 1; i <= n; ++i) {
      for (Orientation xi : {Orientation::Up, Orientation::Down}) {
        t.values_[t.cell(xi, 1, i)] = i;
        if (i > 1) t.choices_[t.cell(xi, 1, i)] = {static_cast<Pos>(i - 1), xi, 1};
      }
    }
    return t;
  }

  for (Pos i = 1; i <= n; ++i) {
    const Letter cur = w.at(i);
    for (Orientation xi : {Orientation::Up, Orientation::Down}) {
      for (int h = 2; h <= k; ++h) {
        int best = 0;
        LongestTables::Choice best_choice;
        for (Letter x = 1; x <= sigma; ++x) {
          const Pos j = t.pred_.last(i - 1, x);
          if (j == PredecessorTable::npos) continue;
          int v = 0;
          LongestTables::Choice c{j, xi, 0};
          if (strict_side(xi, x, cur)) {
            if (h < k) {
              v = t.value(xi, h - 1, j);
              c.h = h - 1;
            } else {
              // the k-th distinct letter of the run, or a further extension
              const int vk = t.value(xi, k, j);
              const int vk1 = t.value(xi, k - 1, j);
              v = std::max(vk, vk1);
              c.h = vk >= vk1 ? k : k - 1;
            }
          } else if (x == cur) {
            v = t.value(xi, h, j);  // plateau continuation, distinct count unchanged
            c.h = h;
          } else {
            continue;
          }
          if (v == 0) continue;
          if (v + 1 > best || (v + 1 == best && j > best_choice.pos)) {
            best = v + 1;
            best_choice = c;
          }
        }
        t.values_[t.cell(xi, h, i)] = best;
        t.choices_[t.cell(xi, h, i)] = best_choice;
      }
    }
    // h == 1 cells read the opposite complete cell of the same position,
    // which is final by now.
    for (Orientation xi : {Orientation::Up, Orientation::Down}) {
      const int via_complete = t.value(opposite(xi), k, i);
      const int via_unary = t.unary_[static_cast<size_t>(i)];
      size_t cell = t.cell(xi, 1, i);
      if (via_complete > 0 && via_complete >= via_unary) {
        t.values_[cell] = via_complete;
        t.choices_[cell] = {i, opposite(xi), k};
      } else {
        t.values_[cell] = via_unary;
        if (via_unary > 1) t.choices_[cell] = {t.pred_.last(i - 1, cur), xi, 1};
      }
    }
  }
  return t;
}

int longest_length(const LongestTables& t) {
  int best = 0;
  for (Pos i = 1; i <= t.size(); ++i)
    for (Orientation xi : {Orientation::Up, Orientation::Down})
      best = std::max(best, t.value(xi, t.k(), i));
  return best;
}

int longest_length(const Word& w, int k) {
  if (w.empty()) return 0;
  return longest_length(compute_longest_tables(w, k));
}

std::optional<Word> cell_witness(const LongestTables& t, Orientation xi, int h, Pos i) {
  if (t.value(xi, h, i) == 0) return std::nullopt;
  std::vector<Letter> out;
  Orientation cxi = xi;
  int ch = h;
  Pos ci = i;
  out.push_back(t.word().at(ci));
  for (;;) {
    LongestTables::Choice c = t.choice(cxi, ch, ci);
    if (c.pos == 0) break;
    if (c.pos != ci) out.push_back(t.word().at(c.pos));  // same position = view switch
    cxi = c.xi;
    ch = c.h;
    ci = c.pos;
  }
  std::reverse(out.begin(), out.end());
  return Word(std::move(out), t.word().sigma());
}

std::optional<Word> longest_witness(const LongestTables& t) {
  const int m = longest_length(t);
  if (m == 0) return std::nullopt;
  for (Pos i = 1; i <= t.size(); ++i)
    for (Orientation xi : {Orientation::Up, Orientation::Down})
      if (t.value(xi, t.k(), i) == m) return cell_witness(t, xi, t.k(), i);
  return std::nullopt;
}

std::optional<Word> longest_witness(const Word& w, int k) {
  if (w.empty()) return std::nullopt;
  return longest_witness(compute_longest_tables(w, k));
}

}  // namespace plrc
