#pragma once

#include <set>
#include <string>
#include <vector>

#include "plrc/errors.hpp"

namespace plrc {

using Letter = int;  // letters range over [1, sigma]
using Pos = int;     // 1-based positions; 0 is "no position"

enum class Orientation : unsigned char { Up, Down };

constexpr Orientation opposite(Orientation xi) noexcept {
  return xi == Orientation::Up ? Orientation::Down : Orientation::Up;
}

// Immutable word over an integer alphabet [1, sigma].
class Word {
 public:
  Word() = default;
  // sigma defaults to the maximum letter; pass sigma explicitly to embed the
  // word in a larger alphabet.
  explicit Word(std::vector<Letter> letters);
  Word(std::vector<Letter> letters, int sigma);

  int size() const noexcept { return static_cast<int>(letters_.size()); }
  bool empty() const noexcept { return letters_.empty(); }
  int sigma() const noexcept { return sigma_; }
  Letter at(Pos i) const { return letters_[static_cast<size_t>(i) - 1]; }
  const std::vector<Letter>& letters() const noexcept { return letters_; }

  Word reversed() const;
  std::string str() const;  // compact digits when sigma <= 9, else space separated

  friend bool operator==(const Word& a, const Word& b) { return a.letters_ == b.letters_; }
  friend bool operator!=(const Word& a, const Word& b) { return !(a == b); }
  friend bool operator<(const Word& a, const Word& b) { return a.letters_ < b.letters_; }

 private:
  std::vector<Letter> letters_;
  int sigma_ = 0;
};

// Direction of a weakly monotone run; unary runs are Ambiguous.
enum class RunShape : unsigned char { Up, Down, Ambiguous };

struct Run {
  Pos start = 0;
  Pos end = 0;
  RunShape shape = RunShape::Ambiguous;
  int distinct = 0;  // unique letters in w[start, end]
};

// Maximal-run decomposition. Consecutive runs overlap exactly on the maximal
// unary factor at the turning point, and non-ambiguous shapes alternate.
struct RunDecomposition {
  std::vector<Run> runs;
};

std::set<Letter> letter_set(const Word& w);

RunDecomposition decompose_runs(const Word& w);  // throws errc::empty_word on empty input

// Weakly monotone in one direction with at least k distinct letters.
bool is_plateau_k_run(const Word& u, int k);

// Every maximal run of w has at least k distinct letters. The empty word is
// not a rollercoaster.
bool is_plateau_k_rollercoaster(const Word& w, int k);

// Partial-rollercoaster test: the run decomposition ends with a xi-oriented
// run carrying at least h distinct letters (at least k when h == k), all
// earlier runs complete. A trailing unary plateau may count as a fresh run of
// the opposite orientation, which is what makes h == 1 special. Unary words
// satisfy h == 1 for both orientations. Throws errc::invalid_h unless
// 1 <= h <= k.
bool is_plateau_k_h_rollercoaster(const Word& w, int k, int h, Orientation xi);

bool is_subsequence(const Word& u, const Word& w);

}  // namespace plrc
