#include "doctest.h"

#include "word_file.hpp"

using plrc_cli::parse_word_lines;
using plrc_cli::word_file_error;

TEST_CASE("integer lines") {
  const auto words = parse_word_lines("8 7 1 2 6 4 4 3 5 1 6 1\n");
  REQUIRE(words.size() == 1);
  CHECK(words[0] == std::vector<int>{8, 7, 1, 2, 6, 4, 4, 3, 5, 1, 6, 1});
}

TEST_CASE("character lines are rank mapped") {
  const auto words = parse_word_lines("acb\n");
  REQUIRE(words.size() == 1);
  CHECK(words[0] == std::vector<int>{1, 3, 2});

  const auto zoo = parse_word_lines("zoza\n");
  CHECK(zoo[0] == std::vector<int>{3, 2, 3, 1});
}

TEST_CASE("empty input and blank lines") {
  CHECK(parse_word_lines("").empty());
  const auto words = parse_word_lines("\n  \n1 2\n\n3\n");
  REQUIRE(words.size() == 2);
  CHECK(words[0] == std::vector<int>{1, 2});
  CHECK(words[1] == std::vector<int>{3});
}

TEST_CASE("mode mixing is rejected with positions") {
  try {
    parse_word_lines("1 2\n12 ab\n");
    FAIL("expected a parse failure");
  } catch (const word_file_error& e) {
    CHECK(e.mixed);
    CHECK(e.line == 2);
    CHECK(e.column == 4);
  }

  try {
    parse_word_lines("a1b\n");
    FAIL("expected a parse failure");
  } catch (const word_file_error& e) {
    CHECK(e.mixed);
  }
}

TEST_CASE("bad integers are rejected") {
  CHECK_THROWS_AS(parse_word_lines("1 0 2\n"), word_file_error);
  CHECK_THROWS_AS(parse_word_lines("1 2.5\n"), word_file_error);
  try {
    parse_word_lines("3 2\n1 99999999999\n");
    FAIL("expected a parse failure");
  } catch (const word_file_error& e) {
    CHECK_FALSE(e.mixed);
    CHECK(e.line == 2);
    CHECK(e.column == 3);
  }
}
