#ifndef JACSPEC_ERRORS_HPP
#define JACSPEC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace jacspec {

/// Base class for all library errors.
class Error : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Bad argument or violated precondition (caller bug).
class InvalidArgument : public Error {
  using Error::Error;
};

/// Query past the end of a finite (table-backed) coefficient sequence.
class IndexRangeError : public Error {
 public:
  IndexRangeError(const std::string& what, std::size_t index)
      : Error(what), index_(index) {}
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

/// Malformed input stream (coefficient tables, curves).
class ParseError : public Error {
  using Error::Error;
};

/// A computation produced a non-finite or theory-violating value.
/// Never silently clamped; the offending index travels with the error.
class NumericalBreakdown : public Error {
 public:
  explicit NumericalBreakdown(const std::string& what, std::size_t index = 0)
      : Error(what), index_(index) {}
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

/// Evaluation exactly at a pole of an approximant.
class PoleError : public Error {
  using Error::Error;
};

}  // namespace jacspec

#endif
