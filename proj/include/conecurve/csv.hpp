#pragma once

/**
 * @file csv.hpp
 * @brief Sampled-curve ingestion and the fixed-schema CSV writers.
 */

#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "conecurve/curve.hpp"

namespace conecurve {

/// Malformed sampled-curve CSV. `row` is 1-based and counts the header.
class CsvError : public std::runtime_error {
 public:
  CsvError(std::size_t row, const std::string& what)
      : std::runtime_error("row " + std::to_string(row) + ": " + what), row(row) {}
  std::size_t row;
};

inline constexpr double kUniformStepTol = 1e-9;

namespace detail {

inline std::string trim(std::string_view v) {
  const auto b = v.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = v.find_last_not_of(" \t\r");
  return std::string(v.substr(b, e - b + 1));
}

inline std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) out.push_back(trim(cell));
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

inline double parse_number(const std::string& cell, std::size_t row) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(cell, &used);
  } catch (const std::exception&) {
    throw CsvError(row, "not a number: '" + cell + "'");
  }
  if (used != cell.size()) throw CsvError(row, "trailing characters in '" + cell + "'");
  if (!std::isfinite(v)) throw CsvError(row, "non-finite value '" + cell + "'");
  return v;
}

}  // namespace detail

/// Reads `s,x1,x2,x3` rows. s must be strictly increasing with a uniform
/// step (relative tolerance 1e-9).
inline SampledCurve read_sampled_curve(std::istream& in) {
  std::string line;
  std::size_t row = 0;
  if (!std::getline(in, line)) throw CsvError(1, "empty file, expected header s,x1,x2,x3");
  ++row;
  const auto header = detail::split_fields(line);
  if (header != std::vector<std::string>{"s", "x1", "x2", "x3"}) {
    throw CsvError(row, "header must be exactly s,x1,x2,x3");
  }
  std::vector<double> s;
  SampledCurve curve;
  while (std::getline(in, line)) {
    ++row;
    if (detail::trim(line).empty()) continue;
    const auto f = detail::split_fields(line);
    if (f.size() != 4) throw CsvError(row, "expected 4 fields, got " + std::to_string(f.size()));
    const double si = detail::parse_number(f[0], row);
    if (!s.empty()) {
      if (!(si > s.back())) throw CsvError(row, "s is not strictly increasing");
      if (s.size() >= 2) {
        const double step = s[1] - s[0];
        const double here = si - s.back();
        if (std::abs(here - step) > kUniformStepTol * std::abs(step)) {
          throw CsvError(row, "non-uniform step " + std::to_string(here) + " (expected " + std::to_string(step) + ")");
        }
      }
    }
    s.push_back(si);
    curve.positions.push_back({detail::parse_number(f[1], row), detail::parse_number(f[2], row),
                               detail::parse_number(f[3], row)});
  }
  if (s.size() < kStencilWidth) {
    throw CsvError(row, "need at least 7 samples, got " + std::to_string(s.size()));
  }
  curve.s0 = s.front();
  curve.step = (s.back() - s.front()) / static_cast<double>(s.size() - 1);
  return curve;
}

inline SampledCurve read_sampled_curve_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_sampled_curve(in);
}

/// Round-trip formatting used by every CSV writer.
inline std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

/// Minimal CSV row builder.
class CsvWriter {
 public:
  explicit CsvWriter(std::ostream& out) : out_(out) {}

  void header(std::initializer_list<std::string_view> cols) {
    bool first = true;
    for (auto c : cols) {
      if (!first) out_ << ',';
      out_ << c;
      first = false;
    }
    out_ << '\n';
  }

  CsvWriter& cell(double v) {
    sep();
    out_ << format_number(v);
    return *this;
  }
  CsvWriter& cell(const LorentzVector& v) { return cell(v.x1).cell(v.x2).cell(v.x3); }
  void end_row() {
    out_ << '\n';
    first_ = true;
  }

 private:
  void sep() {
    if (!first_) out_ << ',';
    first_ = false;
  }
  std::ostream& out_;
  bool first_ = true;
};

inline void write_curve_csv(std::ostream& out, const std::vector<CurveJet>& jets) {
  CsvWriter w(out);
  w.header({"s", "x1", "x2", "x3"});
  for (const auto& j : jets) {
    w.cell(j.s).cell(j.p);
    w.end_row();
  }
}

}  // namespace conecurve
