#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace permlab {

// Base class of every exception thrown by this library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Raised when permutations over different point sets are combined.
class DegreeMismatchError : public Error {
public:
  using Error::Error;
};

// Raised when a closure grows past the configured element cap.  Carries the
// partial element count reached before giving up.
class CapExceededError : public Error {
public:
  CapExceededError(std::size_t partial_count, std::size_t cap)
      : Error("element closure exceeded cap " + std::to_string(cap) +
              " (partial count " + std::to_string(partial_count) + ")"),
        partial_count_(partial_count),
        cap_(cap) {}

  std::size_t partial_count() const noexcept { return partial_count_; }
  std::size_t cap() const noexcept { return cap_; }

private:
  std::size_t partial_count_;
  std::size_t cap_;
};

// Raised when an element is required to lie in a group but does not.
class NotInGroupError : public Error {
public:
  using Error::Error;
};

// Raised when a subgroup argument fails its normality precondition.
class NotNormalError : public Error {
public:
  using Error::Error;
};

// Raised by the catalog for names outside the shipped list.
class UnknownGroupError : public Error {
public:
  using Error::Error;
};

// Raised for malformed arguments: composite where a prime is required,
// singular matrices, bad cycle lists, unsupported field sizes.
class ArgumentError : public Error {
public:
  using Error::Error;
};

// Raised by the character-table machinery when an exactness postcondition
// fails: eigenspace splitting stalls, a division that must be exact is not,
// or a value that must be a rational integer is not.
class TableError : public Error {
public:
  using Error::Error;
};

} // namespace permlab
