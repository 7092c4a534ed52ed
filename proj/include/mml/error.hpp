#ifndef MML_ERROR_HPP
#define MML_ERROR_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace mml {

/// Root of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A datum violates its own invariants (non-finite value, non-positive AoM).
class InvalidDatum : public Error {
 public:
  using Error::Error;
};

/// A value lies outside the domain of a function or the data space of a
/// model. Element-wise operations over data sets record the offending index.
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what,
                       std::optional<std::size_t> index = std::nullopt)
      : Error(index ? "element " + std::to_string(*index) + ": " + what : what),
        index_(index) {}

  std::optional<std::size_t> index() const { return index_; }

 private:
  std::optional<std::size_t> index_;
};

/// A transform would collapse an accuracy of measurement to zero
/// (zero derivative, singular Jacobian).
class DegenerateTransform : public Error {
 public:
  explicit DegenerateTransform(const std::string& what,
                               std::optional<std::size_t> index = std::nullopt)
      : Error(index ? "element " + std::to_string(*index) + ": " + what : what),
        index_(index) {}

  std::optional<std::size_t> index() const { return index_; }

 private:
  std::optional<std::size_t> index_;
};

class NotInvertible : public Error {
 public:
  using Error::Error;
};

/// Function kind does not match a model's data space, or the function is
/// not one-to-one.
class TransformError : public Error {
 public:
  using Error::Error;
};

/// Statistical parameters of the wrong shape or outside their valid range.
class ParameterError : public Error {
 public:
  using Error::Error;
};

class BoundsError : public Error {
 public:
  using Error::Error;
};

class EstimationError : public Error {
 public:
  using Error::Error;
};

class SchemaError : public Error {
 public:
  using Error::Error;
};

/// A malformed CSV cell. `row` is the 1-based data row (the header is row 0).
class CsvError : public Error {
 public:
  CsvError(std::size_t row, const std::string& what)
      : Error("row " + std::to_string(row) + ": " + what), row_(row) {}

  std::size_t row() const { return row_; }

 private:
  std::size_t row_;
};

/// A malformed textual model spec; `position` is a 0-based character offset.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& what)
      : Error("at position " + std::to_string(position) + ": " + what),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace mml

#endif  // MML_ERROR_HPP
