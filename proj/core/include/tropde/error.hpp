#pragma once

#include <stdexcept>
#include <string>

namespace tropde {

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Syntax error in the expression language; `position` is a byte offset
/// into the source text.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class EvalError : public Error {
 public:
  using Error::Error;
};

/// Raised when an expression cannot be rewritten as a ratio of
/// positive-coefficient monomial sums.
class ConvertError : public Error {
 public:
  using Error::Error;
};

class DeriveError : public Error {
 public:
  using Error::Error;
};

class EvolveError : public Error {
 public:
  EvolveError(const std::string& what, long column, long row)
      : Error(what + " at cell (" + std::to_string(column) + "," +
              std::to_string(row) + ")"),
        column_(column),
        row_(row) {}
  long column() const { return column_; }
  long row() const { return row_; }

 private:
  long column_;
  long row_;
};

class CertifyError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace tropde
