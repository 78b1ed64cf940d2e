#include "hsnet/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "hsnet/errors.hpp"

namespace hsnet {
namespace {

std::vector<std::string> cells(const ReportRow& r) {
  std::vector<std::string> c{r.classifier, r.activation, std::to_string(r.epochs)};
  if (!r.eval) {
    c.insert(c.end(), 4, "diverged");
    return c;
  }
  for (double v : {r.eval->accuracy, r.eval->weighted_precision, r.eval->weighted_recall,
                   r.eval->weighted_f1}) {
    c.push_back(format_fixed2(v));
  }
  return c;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << text;
  out.close();
  if (!out) throw IoError("failed writing " + path.string());
}

}  // namespace

std::string format_fixed2(double value) {
  if (!std::isfinite(value)) return std::isnan(value) ? "nan" : (value > 0 ? "inf" : "-inf");
  const double micro = std::nearbyint(value * 1e6);
  const long long hundredths = std::llround(micro / 1e4);
  const long long mag = hundredths < 0 ? -hundredths : hundredths;
  char buf[48];
  std::snprintf(buf, sizeof buf, "%s%lld.%02lld", hundredths < 0 ? "-" : "", mag / 100, mag % 100);
  return buf;
}

std::string render_report(std::span<const ReportRow> rows, ReportFormat format) {
  std::ostringstream os;
  if (format == ReportFormat::Csv) {
    os << kReportColumns << "\n";
    for (const ReportRow& r : rows) {
      const auto c = cells(r);
      for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
      os << "\n";
    }
    return os.str();
  }
  const std::string header(kReportColumns);
  std::size_t columns = 1;
  os << "| ";
  for (char ch : header) {
    if (ch == ',') {
      os << " | ";
      ++columns;
    } else {
      os << ch;
    }
  }
  os << " |\n|";
  for (std::size_t i = 0; i < columns; ++i) os << (i < 3 ? "---|" : "---:|");
  os << "\n";
  for (const ReportRow& r : rows) {
    os << "|";
    for (const std::string& c : cells(r)) os << " " << c << " |";
    os << "\n";
  }
  return os.str();
}

std::string render_sidecar(std::span<const ReportRow> rows) {
  nlohmann::ordered_json doc = nlohmann::ordered_json::array();
  for (const ReportRow& r : rows) {
    nlohmann::ordered_json j;
    j["benchmark"] = r.benchmark;
    j["classifier"] = r.classifier;
    j["activation"] = r.activation;
    j["epochs"] = r.epochs;
    j["train_samples"] = r.train_samples;
    j["test_samples"] = r.test_samples;
    if (r.eval) {
      j["status"] = "ok";
      j["accuracy"] = r.eval->accuracy;
      j["weighted_precision"] = r.eval->weighted_precision;
      j["weighted_recall"] = r.eval->weighted_recall;
      j["weighted_f1"] = r.eval->weighted_f1;
      auto& pc = j["per_class"] = nlohmann::ordered_json::array();
      for (const ClassMetrics& m : r.eval->per_class) {
        pc.push_back({{"precision", m.precision},
                      {"recall", m.recall},
                      {"f1", m.f1},
                      {"support", m.support}});
      }
    } else {
      j["status"] = "diverged";
      j["failure"] = r.failure;
    }
    j["train_loss"] = r.history.loss;
    j["train_accuracy"] = r.history.accuracy;
    j["max_abs_preactivation"] = r.history.max_abs_preactivation;
    doc.push_back(std::move(j));
  }
  return doc.dump(2) + "\n";
}

std::filesystem::path sidecar_path(const std::filesystem::path& path) {
  std::filesystem::path p = path;
  p += ".json";
  return p;
}

void emit_report(std::span<const ReportRow> rows, ReportFormat format,
                 const std::filesystem::path& path) {
  if (rows.empty()) throw ConfigError("no report rows to write");
  write_file(path, render_report(rows, format));
  write_file(sidecar_path(path), render_sidecar(rows));
}

}  // namespace hsnet
