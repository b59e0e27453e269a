#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace tcert {

/// Malformed polynomial text; `column` is 1-based within the parsed string.
class ExprSyntaxError : public std::runtime_error {
 public:
  ExprSyntaxError(const std::string& message, std::size_t column)
      : std::runtime_error(message + " at column " + std::to_string(column)), column_(column), detail_(message) {}
  std::size_t column() const { return column_; }
  const std::string& detail() const { return detail_; }

 private:
  std::size_t column_;
  std::string detail_;
};

/// Invalid user input (problem files, polynomial files, flags).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A certification stage could not establish its hypotheses.
class CertificationError : public std::runtime_error {
 public:
  CertificationError(std::string stage, const std::string& message)
      : std::runtime_error(stage + ": " + message), stage_(std::move(stage)) {}
  const std::string& stage() const { return stage_; }

 private:
  std::string stage_;
};

}  // namespace tcert
