#pragma once

#include <filesystem>
#include <span>
#include <string>

#include "hsnet/experiment.hpp"

namespace hsnet {

inline constexpr const char* kReportColumns =
    "classifier,activation,epochs,accuracy,weighted_precision,weighted_recall,weighted_f1";

/// Two decimals, halves rounded away from zero (0.785 -> "0.79").
/// Values are first snapped to 6 decimals so binary noise such as
/// 0.78499999999 does not flip the result.
std::string format_fixed2(double value);

/// Table text; diverged rows show "diverged" in every metric column.
std::string render_report(std::span<const ReportRow> rows, ReportFormat format);

/// Full-precision JSON: per-row metrics, per-class metrics and per-epoch
/// history. Timings are left out so reruns are byte-identical.
std::string render_sidecar(std::span<const ReportRow> rows);

/// `path` with ".json" appended.
std::filesystem::path sidecar_path(const std::filesystem::path& path);

/// Writes the table to `path` and the JSON to sidecar_path(path).
/// Throws ConfigError for no rows, IoError if a file cannot be written.
void emit_report(std::span<const ReportRow> rows, ReportFormat format,
                 const std::filesystem::path& path);

}  // namespace hsnet
