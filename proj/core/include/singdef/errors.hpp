#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace singdef {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operands live in different polynomial rings.
class RingMismatchError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// A configured bound (pair count, matrix size, ...) was exceeded.
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

// Neither --sigma nor a computable cA form is available, or the branch
// count exceeded its tower/depth bounds.
class SigmaUnavailableError : public Error {
 public:
  using Error::Error;
};

// Slices disagreed in a way that retries could not resolve.
class InconsistentSliceError : public Error {
 public:
  using Error::Error;
};

}  // namespace singdef
