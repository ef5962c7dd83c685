#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace ordwalk {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed ordinal literal.
class SyntaxError : public Error {
public:
  SyntaxError(const std::string& what, std::size_t position)
      : Error("syntax error at " + std::to_string(position) + ": " + what),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

/// A natural-number quantity left the 64-bit range.
class OverflowError : public Error {
public:
  using Error::Error;
};

/// An operation was called outside its precondition.
class DomainError : public Error {
public:
  using Error::Error;
};

/// A configured guard (step count, member count, stage count) was exceeded.
class ResourceError : public Error {
public:
  using Error::Error;
};

/// A coloring fiber exceeded its recorded bound. Indicates a bug.
class CertificateViolation : public Error {
public:
  using Error::Error;
};

using Natural = std::uint64_t;

inline Natural checked_add(Natural a, Natural b) {
  Natural r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw OverflowError("natural addition overflow");
  }
  return r;
}

inline Natural checked_mul(Natural a, Natural b) {
  Natural r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw OverflowError("natural multiplication overflow");
  }
  return r;
}

}  // namespace ordwalk
