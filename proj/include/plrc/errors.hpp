#pragma once

#include <stdexcept>
#include <string>

namespace plrc {

// Error categories shared between the C++ core and the C ABI status codes.
enum class errc {
  ok = 0,
  invalid_argument,
  empty_word,
  invalid_h,
  too_few_words,
  too_large,
  memory_budget,
  table_mismatch,
  parse,
  buffer_too_small,
  internal,
};

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

}  // namespace plrc
