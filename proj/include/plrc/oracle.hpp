#pragma once

#include <map>
#include <string>
#include <vector>

#include "plrc/neg.hpp"
#include "plrc/word.hpp"

namespace plrc {

// Exhaustive ground truth over all 2^n subsequences of small words. Shares
// only the word-core validators with the rest of the library; never consults
// a DP table. Size caps are hard errors.
namespace oracle {

struct MaxWordInfo {
  long long embedding_count = 0;
  std::vector<Pos> embedding;  // one (the last found) embedding
};

struct OracleResult {
  int max_length = 0;
  std::map<std::vector<Letter>, MaxWordInfo> max_words;  // empty iff max_length == 0
};

inline constexpr int kMaxEnumerateLength = 16;
inline constexpr int kMaxLcrLength = 10;
inline constexpr int kMaxLcrWords = 3;
inline constexpr int kMaxNegLength = 12;

// throws errc::too_large beyond the length cap
int brute_force_longest(const Word& w, int k);
OracleResult brute_force_enumerate_max(const Word& w, int k);

// longest word that is a plateau-k-rollercoaster and a subsequence of every
// input; caps: each |w_i| <= 10, at most 3 words
int brute_force_lcr(const std::vector<Word>& words, int k);

// all ordered pairs tested against the three labeled edge predicates
std::vector<NegEdge> brute_force_neg_edges(const Word& w);

// Cross-check of longest/count/enumerate against the brute force; detail is
// empty when everything agrees.
struct CheckReport {
  bool agree = true;
  std::string detail;
};
CheckReport check_against_library(const Word& w, int k);

}  // namespace oracle
}  // namespace plrc
