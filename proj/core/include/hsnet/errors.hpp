#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hsnet {

/// Broad failure classes; the CLI maps each to a distinct exit code.
enum class ErrorCategory {
  Shape,
  Range,
  Config,
  Data,
  Parse,
  Numeric,
  Io,
};

std::string_view to_string(ErrorCategory category) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCategory category, const std::string& what)
      : std::runtime_error(what), category_(category) {}

  [[nodiscard]] ErrorCategory category() const noexcept { return category_; }

 private:
  ErrorCategory category_;
};

class ShapeError : public Error {
 public:
  explicit ShapeError(const std::string& what) : Error(ErrorCategory::Shape, what) {}
};

class RangeError : public Error {
 public:
  explicit RangeError(const std::string& what) : Error(ErrorCategory::Range, what) {}
};

class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& what) : Error(ErrorCategory::Config, what) {}
};

class DataError : public Error {
 public:
  explicit DataError(const std::string& what) : Error(ErrorCategory::Data, what) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error(ErrorCategory::Io, what) {}
};

/// A non-finite value appeared in a forward pass or the loss.
class NumericDivergence : public Error {
 public:
  NumericDivergence(const std::string& what, double offending_value)
      : Error(ErrorCategory::Numeric, what), offending_value_(offending_value) {}

  /// The pre-activation (or loss) value that produced the non-finite result.
  [[nodiscard]] double offending_value() const noexcept { return offending_value_; }

 private:
  double offending_value_;
};

enum class ParseErrorKind {
  BadMagic,
  Truncated,
  CountMismatch,
  BadFileSize,
  BadLabel,
  Malformed,
};

std::string_view to_string(ParseErrorKind kind) noexcept;

class ParseError : public Error {
 public:
  /// `line` is 1-based for line-oriented formats, 0 when not applicable.
  ParseError(ParseErrorKind kind, const std::string& what, std::size_t line = 0)
      : Error(ErrorCategory::Parse, what), kind_(kind), line_(line) {}

  [[nodiscard]] ParseErrorKind kind() const noexcept { return kind_; }
  [[nodiscard]] std::size_t line() const noexcept { return line_; }

 private:
  ParseErrorKind kind_;
  std::size_t line_;
};

}  // namespace hsnet
