#ifndef GROUPCODE_ERROR_HPP
#define GROUPCODE_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace groupcode {

//! Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

//! Malformed text input (words, automaton files, map files).
class ParseError : public Error {
 public:
  ParseError(std::string const& msg, std::size_t line = 0)
      : Error(line == 0 ? msg : "line " + std::to_string(line) + ": " + msg),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

//! An enumeration (monoid closure, product search) hit its element limit.
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

}  // namespace groupcode

#endif  // GROUPCODE_ERROR_HPP
