#include "cleit/csv.hpp"

#include <fstream>
#include <sstream>

#include "cleit/config.hpp"

namespace cleit {

std::string render_csv(const CsvTable& table) {
  std::ostringstream out;
  for (std::size_t c = 0; c < table.header.size(); ++c) {
    if (c) out << ',';
    out << table.header[c];
  }
  out << '\n';
  for (std::size_t r = 0; r < table.rows(); ++r) {
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
      if (c) out << ',';
      out << format_double(table.columns[c][r]);
    }
    out << '\n';
  }
  return out.str();
}

CsvTable parse_csv(std::string_view text) {
  CsvTable table;
  std::size_t pos = 0;
  bool saw_header = false;
  int line_no = 0;
  while (pos < text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    pos = (eol == std::string_view::npos) ? text.size() : eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;

    std::vector<std::string_view> cells;
    std::size_t cell_start = 0;
    for (std::size_t i = 0; i <= line.size(); ++i) {
      if (i == line.size() || line[i] == ',') {
        cells.push_back(line.substr(cell_start, i - cell_start));
        cell_start = i + 1;
      }
    }
    if (!saw_header) {
      for (const auto c : cells) table.header.emplace_back(c);
      table.columns.resize(cells.size());
      saw_header = true;
      continue;
    }
    if (cells.size() != table.header.size())
      throw ConfigError("csv line " + std::to_string(line_no) + ": expected " +
                        std::to_string(table.header.size()) + " cells, got " +
                        std::to_string(cells.size()));
    for (std::size_t c = 0; c < cells.size(); ++c) {
      try {
        table.columns[c].push_back(parse_double(cells[c]));
      } catch (const ConfigError&) {
        throw ConfigError("csv line " + std::to_string(line_no) +
                          ": bad number '" + std::string(cells[c]) + "'");
      }
    }
  }
  if (!saw_header) throw ConfigError("csv: empty input");
  return table;
}

CsvTable spectrum_table(const Spectrum& spectrum) {
  CsvTable t;
  t.header = {"delta", "transmission"};
  t.columns = {spectrum.detunings, spectrum.transmissions};
  return t;
}

CsvTable phase_scan_table(const PhaseScan* right, const PhaseScan* left) {
  CsvTable t;
  const PhaseScan* base = right ? right : left;
  if (!base) throw Error("phase_scan_table needs at least one scan");
  t.header = {"z0"};
  t.columns = {base->positions};
  if (right) {
    t.header.emplace_back("peak_right");
    t.columns.push_back(right->peak_amplitudes);
  }
  if (left) {
    t.header.emplace_back("peak_left");
    t.columns.push_back(left->peak_amplitudes);
  }
  return t;
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << contents;
  out.flush();
  if (!out) throw IoError("write failed for '" + path + "'");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace cleit
