#pragma once

#include <stdexcept>
#include <string>

namespace grouplab {

// Root of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A configured size limit (element count, lattice order, ...) was exceeded.
// Never a silent truncation.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

class BadPermutation : public Error {
 public:
  using Error::Error;
};

class NotNormal : public Error {
 public:
  using Error::Error;
};

class NotPGroup : public Error {
 public:
  using Error::Error;
};

// Two different subgroups claim to be the unique maximum of a radical.
// Only an implementation bug can cause this.
class RadicalNotUnique : public Error {
 public:
  using Error::Error;
};

class ParentMismatch : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class OrderMismatch : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace grouplab
