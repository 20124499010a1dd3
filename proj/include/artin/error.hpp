#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace artin {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input text. `position` is a byte offset into the input when
// known, otherwise npos.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position = npos)
      : Error(what), position_(position) {}

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// Well-formed input that violates an operation's precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A certificate document that does not match the published schema.
class SchemaError : public Error {
 public:
  using Error::Error;
};

}  // namespace artin
