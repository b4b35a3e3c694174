#include "plrc/oracle.hpp"

#include <algorithm>

#include "plrc/counting.hpp"
#include "plrc/enumerate.hpp"

namespace plrc {
namespace oracle {

namespace {

void check_cap(const Word& w, int cap, const char* what) {
  if (w.size() > cap)
    throw error(errc::too_large, std::string(what) + ": word length " + std::to_string(w.size()) +
                                     " exceeds the cap " + std::to_string(cap));
}

}  // namespace

int brute_force_longest(const Word& w, int k) {
  check_cap(w, kMaxEnumerateLength, "brute_force_longest");
  const int n = w.size();
  int best = 0;
  std::vector<Letter> sub;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    sub.clear();
    for (int b = 0; b < n; ++b)
      if (mask & (1u << b)) sub.push_back(w.letters()[static_cast<size_t>(b)]);
    if (static_cast<int>(sub.size()) <= best) continue;
    if (is_plateau_k_rollercoaster(Word(sub, w.sigma()), k)) best = static_cast<int>(sub.size());
  }
  return best;
}

OracleResult brute_force_enumerate_max(const Word& w, int k) {
  check_cap(w, kMaxEnumerateLength, "brute_force_enumerate_max");
  const int n = w.size();
  OracleResult res;
  std::vector<Letter> sub;
  std::vector<Pos> emb;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    sub.clear();
    emb.clear();
    for (int b = 0; b < n; ++b)
      if (mask & (1u << b)) {
        sub.push_back(w.letters()[static_cast<size_t>(b)]);
        emb.push_back(b + 1);
      }
    const int len = static_cast<int>(sub.size());
    if (len < res.max_length) continue;
    if (!is_plateau_k_rollercoaster(Word(sub, w.sigma()), k)) continue;
    if (len > res.max_length) {
      res.max_length = len;
      res.max_words.clear();
    }
    MaxWordInfo& info = res.max_words[sub];
    info.embedding_count += 1;
    info.embedding = emb;
  }
  return res;
}

int brute_force_lcr(const std::vector<Word>& words, int k) {
  if (words.size() < 2)
    throw error(errc::too_few_words, "brute_force_lcr needs at least two words");
  if (static_cast<int>(words.size()) > kMaxLcrWords)
    throw error(errc::too_large, "brute_force_lcr: at most " + std::to_string(kMaxLcrWords) +
                                     " words");
  for (const Word& w : words) check_cap(w, kMaxLcrLength, "brute_force_lcr");

  const Word& w0 = words[0];
  const int n = w0.size();
  int best = 0;
  std::vector<Letter> sub;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    sub.clear();
    for (int b = 0; b < n; ++b)
      if (mask & (1u << b)) sub.push_back(w0.letters()[static_cast<size_t>(b)]);
    if (static_cast<int>(sub.size()) <= best) continue;
    Word cand(sub, w0.sigma());
    if (!is_plateau_k_rollercoaster(cand, k)) continue;
    bool common = true;
    for (size_t j = 1; j < words.size() && common; ++j) common = is_subsequence(cand, words[j]);
    if (common) best = static_cast<int>(sub.size());
  }
  return best;
}

std::vector<NegEdge> brute_force_neg_edges(const Word& w) {
  check_cap(w, kMaxNegLength, "brute_force_neg_edges");
  const int n = w.size();
  PredecessorTable pred = PredecessorTable::build(w);
  std::vector<NegEdge> out;
  for (Pos i = 1; i <= n; ++i) {
    for (Pos j = i + 1; j <= n; ++j) {
      const Letter a = w.at(i), b = w.at(j);
      if (a < b) {
        bool ok = true;
        for (Pos p = i + 1; p < j && ok; ++p) ok = w.at(p) < a || w.at(p) > b;
        if (ok) out.push_back({i, j, EdgeLabel::Up});
      } else if (a == b) {
        if (pred.last(j - 1, b) == i) out.push_back({i, j, EdgeLabel::Eq});
      } else {
        bool ok = true;
        for (Pos p = i + 1; p < j && ok; ++p) ok = w.at(p) > a || w.at(p) < b;
        if (ok) out.push_back({i, j, EdgeLabel::Down});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

CheckReport check_against_library(const Word& w, int k) {
  CheckReport rep;
  if (w.empty()) return rep;
  OracleResult truth = brute_force_enumerate_max(w, k);

  const int lib_len = longest_length(w, k);
  if (lib_len != truth.max_length) {
    rep.agree = false;
    rep.detail = "longest: library " + std::to_string(lib_len) + ", brute force " +
                 std::to_string(truth.max_length);
    return rep;
  }

  const BigInt lib_count = count_maximum_rollercoasters(w, k);
  if (lib_count != BigInt(truth.max_words.size())) {
    rep.agree = false;
    rep.detail = "count: library " + lib_count.str() + ", brute force " +
                 std::to_string(truth.max_words.size());
    return rep;
  }

  std::vector<Word> emitted = enumerate_maximum(w, k);
  std::set<std::vector<Letter>> lib_set;
  for (const Word& u : emitted) lib_set.insert(u.letters());
  if (lib_set.size() != emitted.size()) {
    rep.agree = false;
    rep.detail = "enumerate: duplicate emissions";
    return rep;
  }
  std::set<std::vector<Letter>> truth_set;
  for (const auto& [word, info] : truth.max_words) truth_set.insert(word);
  if (lib_set != truth_set) {
    rep.agree = false;
    rep.detail = "enumerate: emitted set differs from brute force (" +
                 std::to_string(lib_set.size()) + " vs " + std::to_string(truth_set.size()) + ")";
    return rep;
  }
  return rep;
}

}  // namespace oracle
}  // namespace plrc
