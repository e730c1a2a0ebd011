#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bei {

// Raised when an input text (graph6 line, edge list) cannot be decoded.
// `offset` is a byte offset for graph6 and a 1-based line number for
// edge-list input.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (at " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

// A configurable size cap (vertex count, variable count, degree) was exceeded.
class CapExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

// An operation was called outside its documented domain.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace bei
