#include "word_file.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace plrc_cli {

namespace {

bool all_digits(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

bool any_digit(const std::string& s) {
  return std::any_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

std::vector<int> parse_line(const std::string& line, int line_no) {
  struct Token {
    std::string text;
    int column;
  };
  std::vector<Token> tokens;
  for (size_t i = 0; i < line.size();) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    tokens.push_back({line.substr(i, j - i), static_cast<int>(i) + 1});
    i = j;
  }

  std::vector<int> letters;
  if (tokens.size() == 1 && !any_digit(tokens[0].text)) {
    // character mode: rank-map by sorted distinct order
    const std::string& s = tokens[0].text;
    std::string distinct = s;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (char c : s)
      letters.push_back(static_cast<int>(distinct.find(c)) + 1);
    return letters;
  }

  for (const Token& tok : tokens) {
    if (!all_digits(tok.text)) {
      const bool has_alpha = std::any_of(tok.text.begin(), tok.text.end(), [](unsigned char c) {
        return std::isalpha(c) != 0;
      });
      if (has_alpha)
        throw word_file_error("line " + std::to_string(line_no) + ", column " +
                                  std::to_string(tok.column) + ": token '" + tok.text +
                                  "' mixes character and integer modes",
                              line_no, tok.column, true);
      throw word_file_error("line " + std::to_string(line_no) + ", column " +
                                std::to_string(tok.column) + ": expected a positive integer, got '" +
                                tok.text + "'",
                            line_no, tok.column, false);
    }
    long v = 0;
    try {
      v = std::stol(tok.text);
    } catch (const std::exception&) {
      v = 0;
    }
    if (v < 1 || v > 1'000'000'000)
      throw word_file_error("line " + std::to_string(line_no) + ", column " +
                                std::to_string(tok.column) + ": letter '" + tok.text +
                                "' outside [1, 10^9]",
                            line_no, tok.column, false);
    letters.push_back(static_cast<int>(v));
  }
  return letters;
}

}  // namespace

std::vector<std::vector<int>> parse_word_lines(const std::string& text) {
  std::vector<std::vector<int>> words;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const bool blank =
        std::all_of(line.begin(), line.end(), [](unsigned char c) { return std::isspace(c); });
    if (blank) continue;
    words.push_back(parse_line(line, line_no));
  }
  return words;
}

std::vector<std::vector<int>> parse_word_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw word_file_error("cannot open '" + path + "'", 0, 0, false);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_word_lines(buf.str());
}

}  // namespace plrc_cli
