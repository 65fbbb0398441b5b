#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cdv {

/// An operation was called with arguments outside its contract.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A size limit (vertex capacity, pattern size, enumeration order) was exceeded.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Malformed textual input. `line` is 1-based and 0 when the input is a
/// single string; `offset` is the 0-based byte offset within that line.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset, std::size_t line = 0)
      : std::runtime_error(format(what, offset, line)), reason_(what), offset_(offset), line_(line) {}

  const std::string& reason() const noexcept { return reason_; }

  std::size_t offset() const noexcept { return offset_; }
  std::size_t line() const noexcept { return line_; }

 private:
  static std::string format(const std::string& what, std::size_t offset, std::size_t line) {
    std::string out = what + " (";
    if (line != 0) out += "line " + std::to_string(line) + ", ";
    out += "byte " + std::to_string(offset) + ")";
    return out;
  }

  std::string reason_;
  std::size_t offset_;
  std::size_t line_;
};

}  // namespace cdv
