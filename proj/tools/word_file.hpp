#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace plrc_cli {

// Word-file format: one word per nonempty line. A line is either
// whitespace-separated positive integers, or, when it contains no whitespace
// and no digits, a string of characters that are rank-mapped by their sorted
// distinct order ("acb" -> 1 3 2). Lines mixing the two modes are rejected.
struct word_file_error : std::runtime_error {
  word_file_error(std::string message, int line, int column, bool mixed_format)
      : std::runtime_error(std::move(message)), line(line), column(column), mixed(mixed_format) {}
  int line;
  int column;
  bool mixed;
};

std::vector<std::vector<int>> parse_word_lines(const std::string& text);
std::vector<std::vector<int>> parse_word_file(const std::string& path);

}  // namespace plrc_cli
