#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fqt {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed input. `row` is 1-based over data rows (0 means the header).
class ParseError : public Error {
 public:
  ParseError(std::size_t row, std::string column, const std::string& what)
      : Error("row " + std::to_string(row) + ", column '" + column + "': " + what),
        row_(row),
        column_(std::move(column)) {}

  std::size_t row() const noexcept { return row_; }
  const std::string& column() const noexcept { return column_; }

 private:
  std::size_t row_;
  std::string column_;
};

/// An estimator cannot produce a result for the given data.
class FitError : public Error {
 public:
  using Error::Error;
};

/// The normal-equation matrix is (numerically) singular at `category`.
class SingularityError : public FitError {
 public:
  SingularityError(std::size_t category, std::string category_name, const std::string& what)
      : FitError(what), category_(category), category_name_(std::move(category_name)) {}

  std::size_t category() const noexcept { return category_; }
  const std::string& category_name() const noexcept { return category_name_; }

 private:
  std::size_t category_;
  std::string category_name_;
};

/// Two regression lines are parallel and never cross.
class NoCrossingError : public FitError {
 public:
  using FitError::FitError;
};

}  // namespace fqt
