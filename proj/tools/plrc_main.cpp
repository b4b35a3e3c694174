// plrc: plateau-rollercoaster analysis of words.
//
// Subcommands: longest, count, enumerate, lcr, validate, neg, oracle-check.
// Input is a word file (see word_file.hpp); output is JSON (default) or
// plain text on stdout. Exit codes: 0 success, 1 usage or parse error,
// 2 resource limit (oracle size cap, lcr memory budget or word count),
// 3 internal invariant violation.

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <future>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "plrc.h"
#include "word_file.hpp"

using nlohmann::json;

namespace {

struct cli_error {
  int exit_code;
  std::string message;
};

int status_exit_code(int status) {
  switch (status) {
    case PLRC_OK:
    case PLRC_END:
      return 0;
    case PLRC_ERR_TOO_LARGE:
    case PLRC_ERR_MEMORY_BUDGET:
      return 2;
    case PLRC_ERR_INTERNAL:
      return 3;
    default:
      return 1;
  }
}

void check(int status) {
  if (status == PLRC_OK || status == PLRC_END) return;
  throw cli_error{status_exit_code(status),
                  std::string(plrc_status_name(status)) + ": " + plrc_last_error()};
}

using word_handle = std::unique_ptr<plrc_word, decltype(&plrc_word_free)>;

word_handle make_word(const std::vector<int>& letters) {
  int status = PLRC_OK;
  plrc_word* w = plrc_word_create(letters.data(), static_cast<int>(letters.size()), 0, &status);
  check(status);
  return word_handle(w, &plrc_word_free);
}

struct Options {
  std::string path;
  int k = 3;
  std::string format = "json";
  bool allow_small_k = false;
  bool no_witness = false;
  std::optional<long long> limit;
  bool dot = false;
  unsigned long long memory_budget = 0;
  int jobs = 1;
};

std::vector<std::vector<int>> load_words(const Options& opt) {
  try {
    return plrc_cli::parse_word_file(opt.path);
  } catch (const plrc_cli::word_file_error& e) {
    throw cli_error{1, e.what()};
  }
}

void gate_k(const Options& opt) {
  if (opt.k < 1) throw cli_error{1, "k must be at least 1"};
  if (opt.k < 3 && !opt.allow_small_k)
    throw cli_error{1, "k < 3 leaves the usual setting; pass --allow-small-k to proceed"};
  if (opt.k < 3 && opt.allow_small_k)
    std::cerr << "warning: running with k = " << opt.k << " (below the usual k >= 3)\n";
}

std::string letters_text(const std::vector<int>& letters) {
  std::string out;
  for (size_t i = 0; i < letters.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(letters[i]);
  }
  return out;
}

std::vector<int> witness_of(const plrc_word* w, int k) {
  std::vector<int> buf(static_cast<size_t>(plrc_word_length(w)));
  int len = 0;
  check(plrc_longest_witness(w, k, buf.data(), static_cast<int>(buf.size()), &len));
  buf.resize(static_cast<size_t>(len));
  return buf;
}

struct LongestResult {
  int length = 0;
  std::vector<int> witness;
  std::string count;  // filled by `count`
};

// longest/count over a batch of words, optionally in parallel, output order
// fixed to input order
std::vector<LongestResult> run_batch(const Options& opt,
                                     const std::vector<std::vector<int>>& words, bool with_count) {
  std::vector<LongestResult> results(words.size());
  auto work = [&](size_t i) {
    word_handle w = make_word(words[i]);
    LongestResult r;
    check(plrc_longest(w.get(), opt.k, &r.length));
    if (!opt.no_witness && !with_count) r.witness = witness_of(w.get(), opt.k);
    if (with_count) {
      int need = 0;
      std::vector<char> buf(64);
      int rc = plrc_count_maximum(w.get(), opt.k, buf.data(), static_cast<int>(buf.size()), &need);
      if (rc == PLRC_ERR_BUFFER_TOO_SMALL) {
        buf.resize(static_cast<size_t>(need));
        rc = plrc_count_maximum(w.get(), opt.k, buf.data(), static_cast<int>(buf.size()), &need);
      }
      check(rc);
      r.count.assign(buf.data());
    }
    results[i] = std::move(r);
  };
  if (opt.jobs <= 1 || words.size() <= 1) {
    for (size_t i = 0; i < words.size(); ++i) work(i);
  } else {
    std::vector<std::future<void>> futures;
    const size_t lanes = std::min<size_t>(static_cast<size_t>(opt.jobs), words.size());
    std::atomic<size_t> cursor{0};
    for (size_t l = 0; l < lanes; ++l)
      futures.push_back(std::async(std::launch::async, [&]() {
        for (size_t i = cursor.fetch_add(1); i < words.size(); i = cursor.fetch_add(1)) work(i);
      }));
    for (auto& f : futures) f.get();
  }
  return results;
}

int cmd_longest(const Options& opt) {
  gate_k(opt);
  const auto words = load_words(opt);
  const auto results = run_batch(opt, words, false);
  for (const auto& r : results) {
    if (opt.format == "json") {
      json out{{"length", r.length}};
      if (!opt.no_witness) out["witness"] = r.witness;
      std::cout << out.dump() << "\n";
    } else {
      std::cout << r.length;
      if (!opt.no_witness && !r.witness.empty()) std::cout << " " << letters_text(r.witness);
      std::cout << "\n";
    }
  }
  return 0;
}

int cmd_count(const Options& opt) {
  gate_k(opt);
  const auto words = load_words(opt);
  const auto results = run_batch(opt, words, true);
  for (const auto& r : results) {
    if (opt.format == "json")
      std::cout << json{{"length", r.length}, {"count", r.count}}.dump() << "\n";
    else
      std::cout << r.length << " " << r.count << "\n";
  }
  return 0;
}

int cmd_enumerate(const Options& opt) {
  gate_k(opt);
  const auto words = load_words(opt);
  if (words.size() != 1)
    throw cli_error{1, "enumerate expects exactly one word, got " + std::to_string(words.size())};
  word_handle w = make_word(words[0]);
  int status = PLRC_OK;
  plrc_enum* e = plrc_enum_open(w.get(), opt.k, &status);
  check(status);
  std::unique_ptr<plrc_enum, decltype(&plrc_enum_free)> guard(e, &plrc_enum_free);

  std::vector<int> buf(static_cast<size_t>(plrc_word_length(w.get())));
  long long emitted = 0;
  while (!opt.limit || emitted < *opt.limit) {
    int len = 0;
    int rc = plrc_enum_next(e, buf.data(), static_cast<int>(buf.size()), &len);
    if (rc == PLRC_END) break;
    check(rc);
    std::vector<int> item(buf.begin(), buf.begin() + len);
    if (opt.format == "json")
      std::cout << json(item).dump() << "\n";
    else
      std::cout << letters_text(item) << "\n";
    ++emitted;
  }
  return 0;
}

int cmd_lcr(const Options& opt) {
  gate_k(opt);
  const auto words = load_words(opt);
  if (words.size() < 2)
    throw cli_error{1, "lcr expects 2 to 4 words, got " + std::to_string(words.size())};
  if (words.size() > 4)
    throw cli_error{2, "lcr accepts at most 4 words (the table grows with the product of lengths), got " +
                           std::to_string(words.size())};
  std::vector<word_handle> handles;
  std::vector<const plrc_word*> raw;
  for (const auto& letters : words) {
    handles.push_back(make_word(letters));
    raw.push_back(handles.back().get());
  }
  int length = 0;
  check(plrc_lcr(raw.data(), static_cast<int>(raw.size()), opt.k, opt.memory_budget, &length));
  std::vector<int> witness;
  if (!opt.no_witness) {
    int cap = 0;
    for (const auto& word : words) cap = std::max(cap, static_cast<int>(word.size()));
    witness.resize(static_cast<size_t>(cap));
    int len = 0;
    check(plrc_lcr_witness(raw.data(), static_cast<int>(raw.size()), opt.k, opt.memory_budget,
                           witness.data(), cap, &len));
    witness.resize(static_cast<size_t>(len));
  }
  if (opt.format == "json") {
    json out{{"length", length}};
    if (!opt.no_witness) out["witness"] = witness;
    std::cout << out.dump() << "\n";
  } else {
    std::cout << length;
    if (!opt.no_witness && !witness.empty()) std::cout << " " << letters_text(witness);
    std::cout << "\n";
  }
  return 0;
}

int cmd_validate(const Options& opt) {
  gate_k(opt);
  const auto words = load_words(opt);
  for (const auto& letters : words) {
    word_handle w = make_word(letters);
    int is = 0;
    check(plrc_is_rollercoaster(w.get(), opt.k, &is));
    int run_count = 0;
    check(plrc_run_count(w.get(), &run_count));
    json runs = json::array();
    std::string runs_text;
    for (int i = 0; i < run_count; ++i) {
      int start = 0, end = 0, orientation = 0, distinct = 0;
      check(plrc_run_get(w.get(), i, &start, &end, &orientation, &distinct));
      const char* dir = orientation > 0 ? "up" : (orientation < 0 ? "down" : "unary");
      runs.push_back({{"start", start}, {"end", end}, {"orientation", dir}, {"distinct", distinct}});
      if (i) runs_text += ' ';
      runs_text += std::to_string(start) + "-" + std::to_string(end) + ":" + dir + ":" +
                   std::to_string(distinct);
    }
    if (opt.format == "json")
      std::cout << json{{"is_rollercoaster", is == 1}, {"runs", runs}}.dump() << "\n";
    else
      std::cout << (is ? "true" : "false") << " " << runs_text << "\n";
  }
  return 0;
}

int cmd_neg(const Options& opt) {
  const auto words = load_words(opt);
  if (words.size() != 1)
    throw cli_error{1, "neg expects exactly one word, got " + std::to_string(words.size())};
  word_handle w = make_word(words[0]);
  int count = 0;
  int rc = plrc_neg_edges(w.get(), nullptr, nullptr, nullptr, 0, &count);
  if (rc != PLRC_ERR_BUFFER_TOO_SMALL) check(rc);
  std::vector<int> from(static_cast<size_t>(count)), to(static_cast<size_t>(count)),
      label(static_cast<size_t>(count));
  if (count > 0)
    check(plrc_neg_edges(w.get(), from.data(), to.data(), label.data(), count, &count));
  static const char* names[] = {"UP", "EQ", "DOWN"};
  if (opt.dot) {
    std::cout << "digraph neg {\n  rankdir=LR;\n";
    for (size_t i = 0; i < words[0].size(); ++i)
      std::cout << "  v" << (i + 1) << " [label=\"" << (i + 1) << ":" << words[0][i] << "\"];\n";
    for (int i = 0; i < count; ++i)
      std::cout << "  v" << from[static_cast<size_t>(i)] << " -> v" << to[static_cast<size_t>(i)]
                << " [label=\"" << names[label[static_cast<size_t>(i)]] << "\"];\n";
    std::cout << "}\n";
  } else {
    for (int i = 0; i < count; ++i)
      std::cout << from[static_cast<size_t>(i)] << " " << to[static_cast<size_t>(i)] << " "
                << names[label[static_cast<size_t>(i)]] << "\n";
  }
  return 0;
}

int cmd_oracle_check(const Options& opt) {
  gate_k(opt);
  const auto words = load_words(opt);
  bool all_agree = true;
  for (const auto& letters : words) {
    word_handle w = make_word(letters);
    int agree = 0;
    char detail[256] = {0};
    check(plrc_oracle_check(w.get(), opt.k, &agree, detail, sizeof(detail)));
    all_agree = all_agree && agree == 1;
    if (opt.format == "json") {
      json out{{"agree", agree == 1}};
      if (agree != 1) out["detail"] = detail;
      std::cout << out.dump() << "\n";
    } else {
      std::cout << (agree ? "agree" : std::string("disagree ") + detail) << "\n";
    }
  }
  // a disagreement means the library broke its own contract
  return all_agree ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"plateau-rollercoaster analysis of words"};
  app.require_subcommand(1);

  Options opt;
  auto add_common = [&](CLI::App* sub, bool needs_k = true) {
    sub->add_option("input", opt.path, "word file (one word per line)")->required();
    if (needs_k) sub->add_option("-k,--k", opt.k, "minimum distinct letters per run")->required();
    sub->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
    sub->add_flag("--allow-small-k", opt.allow_small_k, "permit k < 3");
  };

  CLI::App* longest = app.add_subcommand("longest", "length of the longest rollercoaster");
  add_common(longest);
  longest->add_flag("--no-witness", opt.no_witness, "omit the witness");
  longest->add_option("--jobs", opt.jobs, "parallel lanes over input words");

  CLI::App* count = app.add_subcommand("count", "number of maximum-length rollercoasters");
  add_common(count);
  count->add_option("--jobs", opt.jobs, "parallel lanes over input words");

  CLI::App* enumerate = app.add_subcommand("enumerate", "stream all maximum-length rollercoasters");
  add_common(enumerate);
  long long limit_value = 0;
  CLI::Option* limit_opt =
      enumerate->add_option("--limit", limit_value, "stop after this many items")->check(CLI::PositiveNumber);

  CLI::App* lcr = app.add_subcommand("lcr", "longest common rollercoaster of 2-4 words");
  add_common(lcr);
  lcr->add_flag("--no-witness", opt.no_witness, "omit the witness");
  lcr->add_option("--memory-budget", opt.memory_budget, "grid budget in bytes (default 1 GiB)");

  CLI::App* validate = app.add_subcommand("validate", "run decomposition and rollercoaster check");
  add_common(validate);

  CLI::App* neg = app.add_subcommand("neg", "dump the next-element graph");
  add_common(neg, false);
  neg->add_flag("--dot", opt.dot, "emit DOT instead of edge lines");

  CLI::App* oracle = app.add_subcommand("oracle-check", "cross-check against the exhaustive reference");
  add_common(oracle);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  if (limit_opt->count() > 0) opt.limit = limit_value;

  try {
    if (longest->parsed()) return cmd_longest(opt);
    if (count->parsed()) return cmd_count(opt);
    if (enumerate->parsed()) return cmd_enumerate(opt);
    if (lcr->parsed()) return cmd_lcr(opt);
    if (validate->parsed()) return cmd_validate(opt);
    if (neg->parsed()) return cmd_neg(opt);
    if (oracle->parsed()) return cmd_oracle_check(opt);
  } catch (const cli_error& e) {
    std::cerr << "error: " << e.message << "\n";
    return e.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 1;
}
