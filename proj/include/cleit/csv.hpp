#pragma once

#include <string>
#include <vector>

#include "cleit/experiment.hpp"

namespace cleit {

// Numeric table: one named column per header entry, equal-length columns.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> columns;

  std::size_t rows() const { return columns.empty() ? 0 : columns[0].size(); }
};

// `,`-separated, header line first, full-precision round-trip-safe
// decimal values. Byte output is deterministic for identical inputs.
std::string render_csv(const CsvTable& table);

CsvTable parse_csv(std::string_view text);

CsvTable spectrum_table(const Spectrum& spectrum);  // delta,transmission

// z0,peak_right and/or z0,peak_left depending on which scans are given.
CsvTable phase_scan_table(const PhaseScan* right, const PhaseScan* left);

// Writes atomically enough for tests: throws IoError (message contains
// the path) when the file cannot be written.
void write_file(const std::string& path, const std::string& contents);

std::string read_file(const std::string& path);

}  // namespace cleit
