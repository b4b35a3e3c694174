#pragma once

#include <optional>

#include "plrc/counting.hpp"
#include "plrc/neg.hpp"

namespace plrc {

// ============================================================================
// Enumeration of every maximum-length plateau-k-rollercoaster, exactly once,
// as a pull-based stream. After O(n * sigma * k) preprocessing each item
// costs O(n) candidate checks.
//
// How a word is produced: a final position is seeded among the last
// occurrences { last(n, x) } whose complete cell equals the maximum length m
// (maximum-length words can only end there). From the seed the embedding is
// walked backwards; at each position the in-edges of the graph are scanned
// largest-source-first, and the first candidate whose table cell matches the
// remaining prefix length is taken:
//
//   current h == k        : a strict edge from a cell with h in {k-1, k}, or
//                           the Eq edge from the complete cell (plateau),
//   current h in [2, k-1] : a strict edge from the h-1 cell, or the Eq edge
//                           from the same-h cell,
//   current h == 1        : the position ends a complete run of the opposite
//                           orientation, so the scan re-runs under that
//                           complete cell at the same position; additionally,
//                           when the whole prefix is unary, the forced chain
//                           of Eq edges is a candidate of its own. The two
//                           never produce the same word: a plateau on top of
//                           a complete run is found through the complete
//                           cell, the unary branch is taken only for pure
//                           unary prefixes.
//
// How the next word is found: per position j a counter c_j tracks how many
// emitted words share the suffix embedding from j. Position j is exhausted
// once c_j reaches the count-table cell for its state (1 for unary-branch
// positions, whose prefix is forced). The shallowest unexhausted position is
// the pivot: its predecessor scan resumes strictly below the previous choice
// and the prefix is rebuilt greedily. Each emitted word is a labeled path of
// the graph, and paths from first-occurrence vertices spell pairwise
// distinct words, so nothing is emitted twice.
//
// The delay is O(n) because a backward walk rejects a candidate source only
// if it lies strictly between the chosen predecessor and the current
// position, so the scanned ranges of consecutive steps are disjoint.
// check_count() instruments exactly these candidate checks (plus the seed
// and pivot scans, also O(n)).
//
// Streams are single-consumer; independent streams over the same word may
// run concurrently.
// ============================================================================

class MaxEnumerator {
 public:
  MaxEnumerator(const Word& w, int k);

  // next maximum-length word, or nullopt when the stream is exhausted
  std::optional<Word> next();

  int max_length() const noexcept { return m_; }
  const BigInt& total_count() const noexcept { return total_; }

  // candidate checks spent on the most recent emission / the worst one so far
  long long last_delay_checks() const noexcept { return last_delay_; }
  long long max_delay_checks() const noexcept { return max_delay_; }

 private:
  struct State {
    Orientation xi = Orientation::Up;
    int h = 0;
    bool unary = false;  // pure-unary interpretation of an h == 1 position
  };

  struct Candidate {
    Pos src = 0;
    State state;
  };

  // Scans the admissible predecessors of one position, largest source first,
  // resumable from where it stopped.
  struct Cursor {
    Pos at = 0;
    int ell = 0;  // prefix length at `at`
    State entered;
    Orientation scan_xi = Orientation::Up;  // orientation of the scanned edges
    bool a_active = false;                  // edge scan enabled
    bool b_active = false;                  // pure-unary slot enabled (h == 1 only)
    size_t strict_idx = 0;
    int substep = 0;  // second state option at the same strict source (h == k)
    bool eq_done = false;
    bool b_done = false;
  };

  Cursor make_cursor(Pos at, const State& st, int ell) const;
  std::optional<Candidate> cursor_next(Cursor& cur);
  bool candidate_valid(const Candidate& c, int ell_pred);
  bool fill_down(int from);
  bool seed_walk();      // install the first word of the current seed
  bool advance_seed();   // move seed_letter_/seed_xi_ to the next valid seed
  void note_emission(int pivot);

  Word word_;
  int k_ = 0;
  LongestTables tables_;
  RollercoasterTable counts_;
  NegGraph graph_;
  int n_ = 0;
  int m_ = 0;
  BigInt total_;

  bool started_ = false;
  bool done_ = false;
  bool k1_emitted_ = false;
  int seed_letter_ = 0;
  int seed_xi_ = 0;  // 0 = Up, 1 = Down

  std::vector<Pos> idx_;        // 1-based, [1..m]
  std::vector<State> states_;   // entered state per position
  std::vector<Cursor> cursors_; // cursors_[j] chooses idx_[j-1]
  std::vector<BigInt> c_;       // emitted words sharing the suffix from j

  long long checks_ = 0;
  long long last_delay_ = 0;
  long long max_delay_ = 0;
};

// Convenience: collect the stream (up to limit items when given).
std::vector<Word> enumerate_maximum(const Word& w, int k,
                                    std::optional<size_t> limit = std::nullopt);

}  // namespace plrc
