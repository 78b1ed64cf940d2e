#include "hsnet/errors.hpp"

namespace hsnet {

std::string_view to_string(ErrorCategory category) noexcept {
  switch (category) {
    case ErrorCategory::Shape: return "shape";
    case ErrorCategory::Range: return "range";
    case ErrorCategory::Config: return "config";
    case ErrorCategory::Data: return "data";
    case ErrorCategory::Parse: return "parse";
    case ErrorCategory::Numeric: return "numeric";
    case ErrorCategory::Io: return "io";
  }
  return "unknown";
}

std::string_view to_string(ParseErrorKind kind) noexcept {
  switch (kind) {
    case ParseErrorKind::BadMagic: return "bad-magic";
    case ParseErrorKind::Truncated: return "truncated";
    case ParseErrorKind::CountMismatch: return "count-mismatch";
    case ParseErrorKind::BadFileSize: return "bad-file-size";
    case ParseErrorKind::BadLabel: return "bad-label";
    case ParseErrorKind::Malformed: return "malformed";
  }
  return "unknown";
}

}  // namespace hsnet
