#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace h2cost {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A computation was asked to leave its mathematical domain
/// (negative rate, cumulative production going backwards, extrapolation).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed or invalid input data. Carries enough context to point at the
/// offending file, row or field.
class InputError : public Error {
 public:
  using Error::Error;
};

/// Structural problem: unreadable file, missing column, unknown key.
class SchemaError : public InputError {
 public:
  SchemaError(std::string where, const std::string& what)
      : InputError(where.empty() ? what : where + ": " + what), where_(std::move(where)) {}

  const std::string& where() const noexcept { return where_; }

 private:
  std::string where_;
};

/// A well-formed value violates a domain invariant.
class ValidationError : public InputError {
 public:
  ValidationError(std::string subject, std::string field, const std::string& what)
      : InputError(format(subject, field, what)),
        subject_(std::move(subject)),
        field_(std::move(field)) {}

  /// Same error, message prefixed with an input location such as "file.csv:7".
  ValidationError(const std::string& location, const ValidationError& inner)
      : InputError(location + ": " + inner.what()), subject_(inner.subject_), field_(inner.field_) {}

  /// State code, technology name or config section the error is about.
  const std::string& subject() const noexcept { return subject_; }
  const std::string& field() const noexcept { return field_; }

 private:
  static std::string format(const std::string& subject, const std::string& field,
                            const std::string& what) {
    std::string out = subject;
    if (!field.empty()) out += (out.empty() ? "" : ".") + field;
    return out.empty() ? what : out + ": " + what;
  }

  std::string subject_;
  std::string field_;
};

}  // namespace h2cost
