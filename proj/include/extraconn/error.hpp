#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace extraconn {

// Malformed input: bad edge lists, bad graph6, bad family specs, violated
// preconditions of a public operation.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// graph6 decoding failure. `line` is 0 when decoding a single string.
class Graph6Error : public InputError {
 public:
  Graph6Error(std::size_t line, std::size_t position, const std::string& what)
      : InputError(format(line, position, what)), line_(line), position_(position) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t position() const noexcept { return position_; }

 private:
  static std::string format(std::size_t line, std::size_t position, const std::string& what) {
    std::string out = "graph6: ";
    if (line != 0) out += "line " + std::to_string(line) + ", ";
    out += "byte " + std::to_string(position) + ": " + what;
    return out;
  }

  std::size_t line_;
  std::size_t position_;
};

// An exact solver refused an instance larger than its configured budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace extraconn
