#pragma once

#include <span>
#include <string>
#include <vector>

#include "tcirc/approximation.hpp"
#include "tcirc/circulant_eigen.hpp"

namespace tcirc::io {

/// %.17g: every double round-trips through its printed form.
std::string format_double(double x);

/// Comma-separated values on one line, no trailing newline.
std::string row_csv(std::span<const double> values);

/// JSON array of numbers, same 17-significant-digit formatting as CSV.
std::string row_json(std::span<const double> values);

/// Parses a row given as a CSV line or as a JSON array of numbers.
std::vector<double> parse_row_text(const std::string& text);

/// Reads a row file (first nonempty CSV line, or a JSON array).
std::vector<double> read_row_file(const std::string& path);

/// One matrix row per line, row-major.
std::string dense_csv(const DenseMatrix& a);

/// One "re,im" line per eigenvalue.
std::string complex_values_csv(std::span<const Complex> values);

/// JSON array of {"re": x, "im": y} objects.
std::string complex_values_json(std::span<const Complex> values);

std::string report_csv_header();
std::string report_csv(const ResidualReport& report);
std::string report_json(const ResidualReport& report);

/// Parses one data row in report_csv format (empty fields become absent).
ResidualReport parse_report_csv(const std::string& line);

}  // namespace tcirc::io
