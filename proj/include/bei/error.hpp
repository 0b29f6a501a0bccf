#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bei {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Violated precondition on an otherwise well-formed value.
class InputError : public Error {
 public:
  using Error::Error;
};

// Malformed serialized input. `offset` is the byte position of the first bad character.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}
  explicit ParseError(const std::string& what) : Error(what), offset_(0) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

// A size limit of one of the exhaustive algorithms was exceeded.
class CapError : public Error {
 public:
  using Error::Error;
};

// Two computations that must agree did not.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace bei
