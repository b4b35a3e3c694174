#include "doctest.h"

#include <cstring>
#include <set>
#include <string>
#include <vector>

#include "plrc.h"

namespace {

struct WordHandle {
  explicit WordHandle(const std::vector<int>& letters, int sigma = 0) {
    int status = PLRC_OK;
    ptr = plrc_word_create(letters.data(), static_cast<int>(letters.size()), sigma, &status);
    REQUIRE(status == PLRC_OK);
    REQUIRE(ptr != nullptr);
  }
  ~WordHandle() { plrc_word_free(ptr); }
  plrc_word* ptr = nullptr;
};

const std::vector<int> kGolden{8, 7, 1, 2, 6, 4, 4, 3, 5, 1, 6, 1};

}  // namespace

TEST_CASE("c api: word lifecycle and validation") {
  WordHandle w(kGolden);
  CHECK(plrc_word_length(w.ptr) == 12);
  CHECK(plrc_word_sigma(w.ptr) == 8);

  int bad_status = PLRC_OK;
  const int bad[] = {1, 0, 2};
  plrc_word* invalid = plrc_word_create(bad, 3, 0, &bad_status);
  CHECK(invalid == nullptr);
  CHECK(bad_status == PLRC_ERR_INVALID_ARGUMENT);
  CHECK(std::string(plrc_last_error()).find("0") != std::string::npos);

  int is = -1;
  CHECK(plrc_is_rollercoaster(w.ptr, 3, &is) == PLRC_OK);
  CHECK(is == 0);
  WordHandle rc({1, 2, 3, 4, 5, 4, 3, 5, 6, 6, 7});
  CHECK(plrc_is_rollercoaster(rc.ptr, 3, &is) == PLRC_OK);
  CHECK(is == 1);
}

TEST_CASE("c api: runs") {
  WordHandle w({5, 4, 4, 1, 3, 3, 4, 6, 5});  // 544133465
  int count = 0;
  REQUIRE(plrc_run_count(w.ptr, &count) == PLRC_OK);
  REQUIRE(count == 3);
  int start = 0, end = 0, orientation = 0, distinct = 0;
  REQUIRE(plrc_run_get(w.ptr, 0, &start, &end, &orientation, &distinct) == PLRC_OK);
  CHECK(start == 1);
  CHECK(end == 4);
  CHECK(orientation == -1);
  CHECK(distinct == 3);
  CHECK(plrc_run_get(w.ptr, 3, &start, &end, &orientation, &distinct) ==
        PLRC_ERR_INVALID_ARGUMENT);
}

TEST_CASE("c api: longest, witness, count") {
  WordHandle w(kGolden);
  int length = 0;
  REQUIRE(plrc_longest(w.ptr, 3, &length) == PLRC_OK);
  CHECK(length == 10);

  int witness[12];
  int wlen = 0;
  REQUIRE(plrc_longest_witness(w.ptr, 3, witness, 12, &wlen) == PLRC_OK);
  CHECK(wlen == 10);

  int tiny[2];
  CHECK(plrc_longest_witness(w.ptr, 3, tiny, 2, &wlen) == PLRC_ERR_BUFFER_TOO_SMALL);
  CHECK(wlen == 10);

  char decimal[32];
  int dlen = 0;
  REQUIRE(plrc_count_maximum(w.ptr, 3, decimal, sizeof(decimal), &dlen) == PLRC_OK);
  CHECK(std::string(decimal) == "2");
  CHECK(dlen == 1);

  char one_byte[1];
  CHECK(plrc_count_maximum(w.ptr, 3, one_byte, 1, &dlen) == PLRC_ERR_BUFFER_TOO_SMALL);
  CHECK(dlen == 2);  // required capacity including the terminator
}

TEST_CASE("c api: enumeration stream") {
  WordHandle w(kGolden);
  int status = PLRC_OK;
  plrc_enum* e = plrc_enum_open(w.ptr, 3, &status);
  REQUIRE(status == PLRC_OK);
  REQUIRE(e != nullptr);

  std::set<std::vector<int>> got;
  int buf[12];
  int len = 0;
  while (plrc_enum_next(e, buf, 12, &len) == PLRC_OK) got.insert({buf, buf + len});
  plrc_enum_free(e);

  CHECK(got == std::set<std::vector<int>>{{8, 7, 1, 2, 6, 4, 4, 3, 1, 1},
                                          {8, 7, 1, 2, 6, 4, 4, 3, 5, 6}});
}

TEST_CASE("c api: lcr") {
  WordHandle a({1, 2, 3}), b({1, 2, 3});
  const plrc_word* words[] = {a.ptr, b.ptr};
  int length = 0;
  REQUIRE(plrc_lcr(words, 2, 3, 0, &length) == PLRC_OK);
  CHECK(length == 3);

  int witness[3];
  int wlen = 0;
  REQUIRE(plrc_lcr_witness(words, 2, 3, 0, witness, 3, &wlen) == PLRC_OK);
  CHECK(wlen == 3);
  CHECK(witness[0] == 1);

  CHECK(plrc_lcr(words, 1, 3, 0, &length) == PLRC_ERR_TOO_FEW_WORDS);
  WordHandle long_a(std::vector<int>(64, 1)), long_b(std::vector<int>(64, 1));
  const plrc_word* big[] = {long_a.ptr, long_b.ptr};
  CHECK(plrc_lcr(big, 2, 3, 1024, &length) == PLRC_ERR_MEMORY_BUDGET);
}

TEST_CASE("c api: neg edges") {
  WordHandle w({1, 2, 1});
  int count = 0;
  CHECK(plrc_neg_edges(w.ptr, nullptr, nullptr, nullptr, 0, &count) == PLRC_ERR_BUFFER_TOO_SMALL);
  REQUIRE(count == 3);
  int from[3], to[3], label[3];
  REQUIRE(plrc_neg_edges(w.ptr, from, to, label, 3, &count) == PLRC_OK);
  REQUIRE(count == 3);
  // sorted by (from, to): (1,2,UP), (1,3,EQ), (2,3,DOWN)
  CHECK(label[0] == 0);
  CHECK(label[1] == 1);
  CHECK(label[2] == 2);
}

TEST_CASE("c api: oracle check") {
  WordHandle w(kGolden);
  int agree = 0;
  char detail[128];
  REQUIRE(plrc_oracle_check(w.ptr, 3, &agree, detail, sizeof(detail)) == PLRC_OK);
  CHECK(agree == 1);
  CHECK(detail[0] == '\0');

  WordHandle big(std::vector<int>(20, 1));
  CHECK(plrc_oracle_check(big.ptr, 3, &agree, nullptr, 0) == PLRC_ERR_TOO_LARGE);
}

TEST_CASE("c api: status names") {
  CHECK(std::string(plrc_status_name(PLRC_OK)) == "ok");
  CHECK(std::strlen(plrc_status_name(PLRC_ERR_MEMORY_BUDGET)) > 0);
  CHECK(std::strlen(plrc_status_name(PLRC_END)) > 0);
}
