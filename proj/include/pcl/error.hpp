// error.hpp -- error codes shared by the whole library
#pragma once

#include <stdexcept>
#include <string>

namespace pcl {

enum class errc {
  universe_mismatch,
  resource_limit,
  parse_error,
  duplicate_name,
  zero_count,
  unknown_port,
  unknown_symbol,
  empty_configuration,
  empty_loop,
  invalid_interaction,
  not_partially_trustworthy,
  insufficient_pipes,
  insufficient_nodes,
};

const char* errc_name(errc code);

class Error : public std::runtime_error {
public:
  Error(errc code, std::string message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

  // line/col are 1-based; 0 means "no location".
  Error(errc code, std::string message, int line, int col)
      : std::runtime_error(std::string(errc_name(code)) + " at " + std::to_string(line) + ":" +
                           std::to_string(col) + ": " + message),
        code_(code), line_(line), col_(col) {}

  errc code() const { return code_; }
  int line() const { return line_; }
  int col() const { return col_; }

private:
  errc code_;
  int line_ = 0;
  int col_ = 0;
};

[[noreturn]] inline void fail(errc code, std::string message) { throw Error(code, std::move(message)); }

}  // namespace pcl
