#include "plrc/word.hpp"

#include <algorithm>

namespace plrc {

namespace {

int max_letter(const std::vector<Letter>& letters) {
  int m = 0;
  for (Letter l : letters) m = std::max(m, l);
  return m;
}

void check_letters(const std::vector<Letter>& letters, int sigma) {
  if (sigma < 0) throw error(errc::invalid_argument, "sigma must be non-negative");
  for (Letter l : letters) {
    if (l < 1 || l > sigma)
      throw error(errc::invalid_argument,
                  "letter " + std::to_string(l) + " outside [1, " + std::to_string(sigma) + "]");
  }
}

}  // namespace

Word::Word(std::vector<Letter> letters) : letters_(std::move(letters)), sigma_(max_letter(letters_)) {
  check_letters(letters_, sigma_);
}

Word::Word(std::vector<Letter> letters, int sigma) : letters_(std::move(letters)), sigma_(sigma) {
  check_letters(letters_, sigma_);
}

Word Word::reversed() const {
  std::vector<Letter> r(letters_.rbegin(), letters_.rend());
  return Word(std::move(r), sigma_);
}

std::string Word::str() const {
  std::string out;
  if (sigma_ <= 9) {
    for (Letter l : letters_) out += static_cast<char>('0' + l);
  } else {
    for (size_t i = 0; i < letters_.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(letters_[i]);
    }
  }
  return out;
}

std::set<Letter> letter_set(const Word& w) {
  return std::set<Letter>(w.letters().begin(), w.letters().end());
}

RunDecomposition decompose_runs(const Word& w) {
  if (w.empty()) throw error(errc::empty_word, "cannot decompose the empty word");
  const int n = w.size();
  RunDecomposition dec;

  Pos start = 1;
  bool dir_known = false;
  bool dir_up = false;
  for (Pos i = 1; i < n; ++i) {
    const Letter a = w.at(i), b = w.at(i + 1);
    if (a == b) continue;
    const bool up = a < b;
    if (!dir_known) {
      dir_known = true;
      dir_up = up;
      continue;
    }
    if (up == dir_up) continue;
    // direction flips between i and i+1; the run ends at i and the next run
    // starts at the head of the unary plateau ending at i
    dec.runs.push_back({start, i, dir_up ? RunShape::Up : RunShape::Down, 0});
    Pos p = i;
    while (p > start && w.at(p - 1) == w.at(i)) --p;
    start = p;
    dir_up = up;
  }
  dec.runs.push_back({start, static_cast<Pos>(n),
                      dir_known ? (dir_up ? RunShape::Up : RunShape::Down) : RunShape::Ambiguous, 0});

  for (Run& r : dec.runs) {
    int distinct = 1;
    for (Pos i = r.start; i < r.end; ++i)
      if (w.at(i) != w.at(i + 1)) ++distinct;
    r.distinct = distinct;
  }
  return dec;
}

bool is_plateau_k_run(const Word& u, int k) {
  if (u.empty()) return false;
  RunDecomposition dec = decompose_runs(u);
  return dec.runs.size() == 1 && dec.runs[0].distinct >= k;
}

bool is_plateau_k_rollercoaster(const Word& w, int k) {
  if (w.empty()) return false;
  for (const Run& r : decompose_runs(w).runs)
    if (r.distinct < k) return false;
  return true;
}

bool is_plateau_k_h_rollercoaster(const Word& w, int k, int h, Orientation xi) {
  if (h < 1 || h > k) throw error(errc::invalid_h, "h must lie in [1, k]");
  if (w.empty()) return false;
  const std::vector<Run> runs = decompose_runs(w).runs;
  const Run& last = runs.back();

  const RunShape want = xi == Orientation::Up ? RunShape::Up : RunShape::Down;

  // Full view: the final maximal run is the partial run.
  bool full = last.shape == want || last.shape == RunShape::Ambiguous;
  if (full) {
    for (size_t i = 0; i + 1 < runs.size(); ++i)
      if (runs[i].distinct < k) full = false;
    const int need = h == k ? k : h;
    if (last.distinct < need) full = false;
  }
  if (full) return true;

  // Turn view: the trailing unary plateau starts a fresh run of the opposite
  // orientation, all maximal runs (including the last) must be complete.
  if (h != 1 || last.shape == RunShape::Ambiguous) return false;
  if (last.shape == want) return false;
  for (const Run& r : runs)
    if (r.distinct < k) return false;
  return true;
}

bool is_subsequence(const Word& u, const Word& w) {
  int i = 0;
  const int m = u.size(), n = w.size();
  for (int j = 0; j < n && i < m; ++j)
    if (w.letters()[j] == u.letters()[i]) ++i;
  return i == m;
}

}  // namespace plrc
