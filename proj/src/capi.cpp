#include "plrc.h"

#include <cstring>
#include <string>

#include "plrc/enumerate.hpp"
#include "plrc/lcr.hpp"
#include "plrc/oracle.hpp"

namespace {

thread_local std::string g_last_error;

int to_status(plrc::errc code) {
  switch (code) {
    case plrc::errc::ok: return PLRC_OK;
    case plrc::errc::invalid_argument: return PLRC_ERR_INVALID_ARGUMENT;
    case plrc::errc::empty_word: return PLRC_ERR_EMPTY_WORD;
    case plrc::errc::invalid_h: return PLRC_ERR_INVALID_H;
    case plrc::errc::too_few_words: return PLRC_ERR_TOO_FEW_WORDS;
    case plrc::errc::too_large: return PLRC_ERR_TOO_LARGE;
    case plrc::errc::memory_budget: return PLRC_ERR_MEMORY_BUDGET;
    case plrc::errc::table_mismatch: return PLRC_ERR_TABLE_MISMATCH;
    case plrc::errc::parse: return PLRC_ERR_PARSE;
    case plrc::errc::buffer_too_small: return PLRC_ERR_BUFFER_TOO_SMALL;
    case plrc::errc::internal: return PLRC_ERR_INTERNAL;
  }
  return PLRC_ERR_INTERNAL;
}

template <typename Fn>
int guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const plrc::error& e) {
    g_last_error = e.what();
    return to_status(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return PLRC_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown failure";
    return PLRC_ERR_INTERNAL;
  }
}

int write_letters(const plrc::Word& word, int* out, int capacity, int* out_length) {
  const int n = word.size();
  if (out_length) *out_length = n;
  if (n > capacity) {
    g_last_error = "buffer holds " + std::to_string(capacity) + ", need " + std::to_string(n);
    return PLRC_ERR_BUFFER_TOO_SMALL;
  }
  for (int i = 0; i < n; ++i) out[i] = word.letters()[static_cast<size_t>(i)];
  return PLRC_OK;
}

std::vector<plrc::Word> collect_words(const plrc_word* const* words, int num_words);

plrc::LcrOptions lcr_options(unsigned long long budget) {
  plrc::LcrOptions opt;
  if (budget) opt.memory_budget_bytes = budget;
  return opt;
}

}  // namespace

struct plrc_word {
  plrc::Word word;
};

struct plrc_enum {
  explicit plrc_enum(plrc::MaxEnumerator e) : impl(std::move(e)) {}
  plrc::MaxEnumerator impl;
};

extern "C" {

const char* plrc_status_name(int status) {
  switch (status) {
    case PLRC_OK: return "ok";
    case PLRC_ERR_INVALID_ARGUMENT: return "invalid argument";
    case PLRC_ERR_EMPTY_WORD: return "empty word";
    case PLRC_ERR_INVALID_H: return "h outside [1, k]";
    case PLRC_ERR_TOO_FEW_WORDS: return "too few words";
    case PLRC_ERR_TOO_LARGE: return "instance exceeds a size cap";
    case PLRC_ERR_MEMORY_BUDGET: return "memory budget exceeded";
    case PLRC_ERR_TABLE_MISMATCH: return "table built for different input";
    case PLRC_ERR_PARSE: return "parse error";
    case PLRC_ERR_BUFFER_TOO_SMALL: return "buffer too small";
    case PLRC_ERR_INTERNAL: return "internal invariant violation";
    case PLRC_END: return "end of stream";
  }
  return "unknown status";
}

const char* plrc_last_error(void) { return g_last_error.c_str(); }

plrc_word* plrc_word_create(const int* letters, int length, int sigma, int* status) {
  plrc_word* handle = nullptr;
  int rc = guarded([&]() {
    if (length < 0 || (length > 0 && letters == nullptr))
      throw plrc::error(plrc::errc::invalid_argument, "bad letter buffer");
    std::vector<plrc::Letter> v(letters, letters + length);
    handle = new plrc_word{sigma == 0 ? plrc::Word(std::move(v)) : plrc::Word(std::move(v), sigma)};
    return PLRC_OK;
  });
  if (status) *status = rc;
  return handle;
}

void plrc_word_free(plrc_word* w) { delete w; }

int plrc_word_length(const plrc_word* w) { return w ? w->word.size() : 0; }

int plrc_word_sigma(const plrc_word* w) { return w ? w->word.sigma() : 0; }

int plrc_is_rollercoaster(const plrc_word* w, int k, int* out_is) {
  return guarded([&]() {
    if (!w || !out_is) throw plrc::error(plrc::errc::invalid_argument, "null argument");
    *out_is = plrc::is_plateau_k_rollercoaster(w->word, k) ? 1 : 0;
    return PLRC_OK;
  });
}

int plrc_run_count(const plrc_word* w, int* out_count) {
  return guarded([&]() {
    if (!w || !out_count) throw plrc::error(plrc::errc::invalid_argument, "null argument");
    *out_count = static_cast<int>(plrc::decompose_runs(w->word).runs.size());
    return PLRC_OK;
  });
}

int plrc_run_get(const plrc_word* w, int index, int* out_start, int* out_end,
                 int* out_orientation, int* out_distinct) {
  return guarded([&]() {
    if (!w) throw plrc::error(plrc::errc::invalid_argument, "null word");
    const auto runs = plrc::decompose_runs(w->word).runs;
    if (index < 0 || index >= static_cast<int>(runs.size()))
      throw plrc::error(plrc::errc::invalid_argument, "run index out of range");
    const plrc::Run& r = runs[static_cast<size_t>(index)];
    if (out_start) *out_start = r.start;
    if (out_end) *out_end = r.end;
    if (out_orientation)
      *out_orientation = r.shape == plrc::RunShape::Up ? 1 : (r.shape == plrc::RunShape::Down ? -1 : 0);
    if (out_distinct) *out_distinct = r.distinct;
    return PLRC_OK;
  });
}

int plrc_longest(const plrc_word* w, int k, int* out_length) {
  return guarded([&]() {
    if (!w || !out_length) throw plrc::error(plrc::errc::invalid_argument, "null argument");
    *out_length = plrc::longest_length(w->word, k);
    return PLRC_OK;
  });
}

int plrc_longest_witness(const plrc_word* w, int k, int* out_letters, int capacity,
                         int* out_length) {
  return guarded([&]() {
    if (!w || !out_length) throw plrc::error(plrc::errc::invalid_argument, "null argument");
    auto witness = plrc::longest_witness(w->word, k);
    if (!witness) {
      *out_length = 0;
      return static_cast<int>(PLRC_OK);
    }
    return write_letters(*witness, out_letters, capacity, out_length);
  });
}

int plrc_count_maximum(const plrc_word* w, int k, char* out_decimal, int capacity,
                       int* out_length) {
  return guarded([&]() {
    if (!w || !out_length) throw plrc::error(plrc::errc::invalid_argument, "null argument");
    const std::string s = plrc::count_maximum_rollercoasters(w->word, k).str();
    const int need = static_cast<int>(s.size());
    if (need + 1 > capacity) {
      *out_length = need + 1;
      g_last_error = "buffer holds " + std::to_string(capacity) + ", need " + std::to_string(need + 1);
      return static_cast<int>(PLRC_ERR_BUFFER_TOO_SMALL);
    }
    std::memcpy(out_decimal, s.c_str(), s.size() + 1);
    *out_length = need;
    return static_cast<int>(PLRC_OK);
  });
}

plrc_enum* plrc_enum_open(const plrc_word* w, int k, int* status) {
  plrc_enum* handle = nullptr;
  int rc = guarded([&]() {
    if (!w) throw plrc::error(plrc::errc::invalid_argument, "null word");
    if (w->word.empty()) throw plrc::error(plrc::errc::empty_word, "cannot enumerate the empty word");
    handle = new plrc_enum{plrc::MaxEnumerator(w->word, k)};
    return PLRC_OK;
  });
  if (status) *status = rc;
  return handle;
}

int plrc_enum_next(plrc_enum* e, int* out_letters, int capacity, int* out_length) {
  return guarded([&]() {
    if (!e || !out_length) throw plrc::error(plrc::errc::invalid_argument, "null argument");
    std::optional<plrc::Word> item = e->impl.next();
    if (!item) {
      *out_length = 0;
      return static_cast<int>(PLRC_END);
    }
    return write_letters(*item, out_letters, capacity, out_length);
  });
}

void plrc_enum_free(plrc_enum* e) { delete e; }

int plrc_lcr(const plrc_word* const* words, int num_words, int k,
             unsigned long long memory_budget_bytes, int* out_length) {
  return guarded([&]() {
    if (!out_length) throw plrc::error(plrc::errc::invalid_argument, "null out_length");
    *out_length = plrc::lcr_length(collect_words(words, num_words), k,
                                   lcr_options(memory_budget_bytes));
    return PLRC_OK;
  });
}

int plrc_lcr_witness(const plrc_word* const* words, int num_words, int k,
                     unsigned long long memory_budget_bytes, int* out_letters, int capacity,
                     int* out_length) {
  return guarded([&]() {
    if (!out_length) throw plrc::error(plrc::errc::invalid_argument, "null out_length");
    auto witness = plrc::lcr_witness(collect_words(words, num_words), k,
                                     lcr_options(memory_budget_bytes));
    if (!witness) {
      *out_length = 0;
      return static_cast<int>(PLRC_OK);
    }
    return write_letters(*witness, out_letters, capacity, out_length);
  });
}

int plrc_neg_edges(const plrc_word* w, int* out_from, int* out_to, int* out_label, int capacity,
                   int* out_count) {
  return guarded([&]() {
    if (!w || !out_count) throw plrc::error(plrc::errc::invalid_argument, "null argument");
    const auto edges = plrc::build_neg(w->word).edges();
    *out_count = static_cast<int>(edges.size());
    if (static_cast<int>(edges.size()) > capacity) {
      g_last_error = "buffer holds " + std::to_string(capacity) + ", need " +
                     std::to_string(edges.size());
      return static_cast<int>(PLRC_ERR_BUFFER_TOO_SMALL);
    }
    for (size_t i = 0; i < edges.size(); ++i) {
      out_from[i] = edges[i].from;
      out_to[i] = edges[i].to;
      out_label[i] = edges[i].label == plrc::EdgeLabel::Up
                         ? 0
                         : (edges[i].label == plrc::EdgeLabel::Eq ? 1 : 2);
    }
    return static_cast<int>(PLRC_OK);
  });
}

int plrc_oracle_check(const plrc_word* w, int k, int* out_agree, char* detail,
                      int detail_capacity) {
  return guarded([&]() {
    if (!w || !out_agree) throw plrc::error(plrc::errc::invalid_argument, "null argument");
    const auto report = plrc::oracle::check_against_library(w->word, k);
    *out_agree = report.agree ? 1 : 0;
    if (detail && detail_capacity > 0) {
      const int n = std::min<int>(detail_capacity - 1, static_cast<int>(report.detail.size()));
      std::memcpy(detail, report.detail.data(), static_cast<size_t>(n));
      detail[n] = '\0';
    }
    return PLRC_OK;
  });
}

}  // extern "C"

namespace {

std::vector<plrc::Word> collect_words(const plrc_word* const* words, int num_words) {
  if (!words || num_words < 0)
    throw plrc::error(plrc::errc::invalid_argument, "bad word array");
  std::vector<plrc::Word> out;
  out.reserve(static_cast<size_t>(num_words));
  for (int i = 0; i < num_words; ++i) {
    if (!words[i]) throw plrc::error(plrc::errc::invalid_argument, "null word in array");
    out.push_back(words[i]->word);
  }
  return out;
}

}  // namespace
