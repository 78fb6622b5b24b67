#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "cleit/experiment.hpp"
#include "cleit/types.hpp"

namespace cleit {

// Parse or validation failure; the message carries the line number for
// parse errors and the field name for validation errors.
class ConfigError : public Error {
 public:
  using Error::Error;
};

enum class PolarizationMode { kRight, kLeft, kBoth };

// Full run description parsed from the flat key = value config format.
struct RunConfig {
  AtomParams atom;
  FieldParams fields;
  CellGeometry cell;
  std::optional<ScanGrid> detuning_grid;  // delta_min/max/count
  std::optional<ScanGrid> position_grid;  // z0_min/max/count
  PolarizationMode polarization = PolarizationMode::kRight;
  int steps = 512;  // RK4 step count for ODE-based checks
  std::optional<std::string> out_path;
  std::optional<std::uint64_t> seed;
  bool expect_weak_probe_fail = false;

  bool operator==(const RunConfig& other) const;
};

// Flat `key = value` document, `#` comments, complex values as `re+imj`.
// Unknown and duplicate keys are errors; an empty document reports every
// missing required key.
RunConfig parse_config(std::string_view text);

// Inverse of parse_config: parse_config(render_config(c)) == c.
std::string render_config(const RunConfig& config);

// Round-trip-safe shortest decimal rendering (std::to_chars).
std::string format_double(double value);
std::string format_complex(Complex value);  // re+imj

// Strict whole-token parsers; throw ConfigError on trailing garbage.
double parse_double(std::string_view token);
Complex parse_complex(std::string_view token);

std::string to_string(PolarizationMode mode);

}  // namespace cleit
