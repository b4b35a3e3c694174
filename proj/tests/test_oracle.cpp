#include "doctest.h"

#include "plrc/oracle.hpp"
#include "test_support.hpp"

using namespace plrc;
using plrc_test::w;

TEST_CASE("golden word") {
  CHECK(oracle::brute_force_longest(plrc_test::golden(), 3) == 10);
  const auto res = oracle::brute_force_enumerate_max(plrc_test::golden(), 3);
  CHECK(res.max_length == 10);
  REQUIRE(res.max_words.size() == 2);
  CHECK(res.max_words.count(w("8712644311").letters()) == 1);
  CHECK(res.max_words.count(w("8712644356").letters()) == 1);
  for (const auto& [letters, info] : res.max_words) CHECK(info.embedding_count == 1);
}

TEST_CASE("simple cases") {
  CHECK(oracle::brute_force_longest(w("12"), 3) == 0);
  CHECK(oracle::brute_force_longest(w("123"), 3) == 3);
  CHECK(oracle::brute_force_enumerate_max(w("111"), 3).max_words.empty());

  const auto res = oracle::brute_force_enumerate_max(w("123321"), 3);
  CHECK(res.max_length == 6);
  REQUIRE(res.max_words.size() == 1);
  CHECK(res.max_words.begin()->first == w("123321").letters());
}

TEST_CASE("lcr brute force") {
  CHECK(oracle::brute_force_lcr({w("123"), w("123")}, 3) == 3);
  CHECK(oracle::brute_force_lcr({w("12"), w("21")}, 3) == 0);
}

TEST_CASE("size caps are hard errors") {
  std::vector<Letter> big(17, 1);
  CHECK_THROWS_AS(oracle::brute_force_longest(Word(big), 3), error);
  CHECK_THROWS_AS(oracle::brute_force_enumerate_max(Word(big), 3), error);
  std::vector<Letter> eleven(11, 1);
  CHECK_THROWS_AS(oracle::brute_force_lcr({Word(eleven), Word(eleven)}, 3), error);
  std::vector<Letter> thirteen(13, 1);
  CHECK_THROWS_AS(oracle::brute_force_neg_edges(Word(thirteen)), error);
}

TEST_CASE("library cross-check helper") {
  const auto rep = oracle::check_against_library(plrc_test::golden(), 3);
  CHECK(rep.agree);
  CHECK(rep.detail.empty());
}
