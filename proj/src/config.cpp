#include "cleit/config.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <map>
#include <sstream>
#include <vector>

namespace cleit {

namespace {

constexpr std::array<std::string_view, 22> kKnownKeys = {
    "gamma_ab",   "gamma_ac",   "gamma_cb",    "eta",
    "omega1_in",  "omega2",     "omega_mu",    "delta",
    "delta_k",    "z0",         "length",      "delta_min",
    "delta_max",  "delta_count", "z0_min",     "z0_max",
    "z0_count",   "polarization", "steps",     "out",
    "seed",       "expect_weak_probe_fail"};

constexpr std::array<std::string_view, 9> kRequiredKeys = {
    "gamma_ab", "gamma_cb", "eta", "omega1_in", "omega2",
    "omega_mu", "delta_k",  "z0",  "length"};

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

[[noreturn]] void fail(int line, const std::string& what) {
  std::ostringstream msg;
  msg << "line " << line << ": " << what;
  throw ConfigError(msg.str());
}

}  // namespace

double parse_double(std::string_view token) {
  token = trim(token);
  double value = 0.0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  if (!token.empty() && token.front() == '+') ++first;  // from_chars rejects '+'
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last)
    throw ConfigError("not a number: '" + std::string(token) + "'");
  return value;
}

Complex parse_complex(std::string_view token) {
  token = trim(token);
  if (token.empty()) throw ConfigError("empty complex value");
  if (token.back() != 'j' && token.back() != 'J')
    return Complex(parse_double(token), 0.0);

  std::string_view body = token.substr(0, token.size() - 1);
  // split at the last +/- that is not an exponent sign and not leading
  std::size_t split = std::string_view::npos;
  for (std::size_t i = body.size(); i-- > 1;) {
    const char c = body[i];
    if ((c == '+' || c == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  if (split == std::string_view::npos) {
    // pure imaginary: "1.5j", "-2e-3j", "j", "-j"
    std::string_view imag = body;
    if (imag.empty() || imag == "+") return Complex(0.0, 1.0);
    if (imag == "-") return Complex(0.0, -1.0);
    return Complex(0.0, parse_double(imag));
  }
  const double re = parse_double(body.substr(0, split));
  std::string_view imag = body.substr(split);
  if (imag == "+") return Complex(re, 1.0);
  if (imag == "-") return Complex(re, -1.0);
  return Complex(re, parse_double(imag));
}

std::string format_double(double value) {
  std::array<char, 64> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return std::string(buf.data(), ptr);
}

std::string format_complex(Complex value) {
  std::string s = format_double(value.real());
  const double im = value.imag();
  if (im >= 0.0 || std::isnan(im))
    s += "+" + format_double(im);
  else
    s += "-" + format_double(-im);
  return s + "j";
}

std::string to_string(PolarizationMode mode) {
  switch (mode) {
    case PolarizationMode::kRight:
      return "right";
    case PolarizationMode::kLeft:
      return "left";
    case PolarizationMode::kBoth:
      return "both";
  }
  return "right";
}

bool RunConfig::operator==(const RunConfig& other) const {
  auto grid_eq = [](const std::optional<ScanGrid>& a,
                    const std::optional<ScanGrid>& b) {
    if (a.has_value() != b.has_value()) return false;
    if (!a) return true;
    return a->min == b->min && a->max == b->max && a->count == b->count;
  };
  return atom.gamma_ab == other.atom.gamma_ab &&
         atom.gamma_ac == other.atom.gamma_ac &&
         atom.gamma_cb == other.atom.gamma_cb && atom.eta == other.atom.eta &&
         fields.omega1_in == other.fields.omega1_in &&
         fields.omega2 == other.fields.omega2 &&
         fields.omega_mu == other.fields.omega_mu &&
         fields.delta == other.fields.delta &&
         fields.delta_k == other.fields.delta_k && cell.z0 == other.cell.z0 &&
         cell.length == other.cell.length &&
         grid_eq(detuning_grid, other.detuning_grid) &&
         grid_eq(position_grid, other.position_grid) &&
         polarization == other.polarization && steps == other.steps &&
         out_path == other.out_path && seed == other.seed &&
         expect_weak_probe_fail == other.expect_weak_probe_fail;
}

RunConfig parse_config(std::string_view text) {
  std::map<std::string, std::pair<std::string, int>> values;  // key -> (value, line)

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    pos = (eol == std::string_view::npos) ? text.size() + 1 : eol + 1;
    ++line_no;

    const std::size_t hash = line.find('#');
    if (hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos)
      fail(line_no, "expected 'key = value', got '" + std::string(line) + "'");
    const std::string key(trim(line.substr(0, eq)));
    const std::string value(trim(line.substr(eq + 1)));
    if (key.empty()) fail(line_no, "missing key before '='");

    bool known = false;
    for (const auto k : kKnownKeys) known = known || (k == key);
    if (!known) fail(line_no, "unknown key '" + key + "'");
    if (values.count(key))
      fail(line_no, "duplicate key '" + key + "' (first set on line " +
                        std::to_string(values[key].second) + ")");
    if (value.empty()) fail(line_no, "empty value for key '" + key + "'");
    values[key] = {value, line_no};
  }

  auto has = [&](const std::string& k) { return values.count(k) != 0; };
  // an empty or grid-less document reports the full missing list at once
  std::vector<std::string> missing;
  for (const auto req : kRequiredKeys)
    if (!has(std::string(req))) missing.emplace_back(req);
  if (!has("delta_min") && !has("z0_min"))
    missing.emplace_back("delta_min|z0_min (at least one scan grid)");
  if (!missing.empty()) {
    std::string msg = "missing required keys:";
    for (const auto& m : missing) msg += " " + m;
    throw ConfigError(msg);
  }

  auto field_error = [&](const std::string& key, const std::string& what) {
    throw ConfigError("field '" + key + "': " + what);
  };
  auto get_double = [&](const std::string& key) {
    try {
      return parse_double(values.at(key).first);
    } catch (const ConfigError& e) {
      field_error(key, e.what());
      return 0.0;  // unreachable
    }
  };
  auto get_complex = [&](const std::string& key) {
    try {
      return parse_complex(values.at(key).first);
    } catch (const ConfigError& e) {
      field_error(key, e.what());
      return Complex{};  // unreachable
    }
  };

  RunConfig cfg;
  cfg.atom.gamma_ab = get_double("gamma_ab");
  cfg.atom.gamma_ac = has("gamma_ac") ? get_double("gamma_ac") : cfg.atom.gamma_ab;
  cfg.atom.gamma_cb = get_double("gamma_cb");
  cfg.atom.eta = get_double("eta");
  cfg.fields.omega1_in = get_complex("omega1_in");
  cfg.fields.omega2 = get_complex("omega2");
  cfg.fields.omega_mu = get_complex("omega_mu");
  cfg.fields.delta = has("delta") ? get_double("delta") : 0.0;
  cfg.fields.delta_k = get_double("delta_k");
  cfg.cell.z0 = get_double("z0");
  cfg.cell.length = get_double("length");

  auto get_grid = [&](const char* mn, const char* mx, const char* ct,
                      const char* label) -> std::optional<ScanGrid> {
    const bool any = has(mn) || has(mx) || has(ct);
    if (!any) return std::nullopt;
    if (!has(mn) || !has(mx) || !has(ct))
      throw ConfigError(std::string("field '") + label +
                        "': grid needs all of min/max/count");
    ScanGrid g;
    g.min = get_double(mn);
    g.max = get_double(mx);
    const double raw = get_double(ct);
    g.count = static_cast<int>(raw);
    if (g.count != raw || g.count < 2)
      field_error(ct, "count must be an integer >= 2");
    if (!(g.min < g.max)) field_error(mn, "grid needs min < max");
    return g;
  };
  cfg.detuning_grid = get_grid("delta_min", "delta_max", "delta_count", "delta");
  cfg.position_grid = get_grid("z0_min", "z0_max", "z0_count", "z0");

  if (has("polarization")) {
    const std::string& v = values.at("polarization").first;
    if (v == "right")
      cfg.polarization = PolarizationMode::kRight;
    else if (v == "left")
      cfg.polarization = PolarizationMode::kLeft;
    else if (v == "both")
      cfg.polarization = PolarizationMode::kBoth;
    else
      field_error("polarization", "expected right|left|both, got '" + v + "'");
  }
  if (has("steps")) {
    const double raw = get_double("steps");
    cfg.steps = static_cast<int>(raw);
    if (cfg.steps != raw || cfg.steps < 16)
      field_error("steps", "must be an integer >= 16");
  }
  if (has("out")) cfg.out_path = values.at("out").first;
  if (has("seed")) {
    const std::string& v = values.at("seed").first;
    std::uint64_t s = 0;
    const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), s);
    if (ec != std::errc{} || ptr != v.data() + v.size())
      field_error("seed", "expected an unsigned integer");
    cfg.seed = s;
  }
  if (has("expect_weak_probe_fail")) {
    const std::string& v = values.at("expect_weak_probe_fail").first;
    if (v == "true")
      cfg.expect_weak_probe_fail = true;
    else if (v == "false")
      cfg.expect_weak_probe_fail = false;
    else
      field_error("expect_weak_probe_fail", "expected true|false");
  }

  // type invariants
  try {
    cfg.atom.validate();
    cfg.cell.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("field validation: ") + e.what());
  }
  if (cfg.out_path && cfg.out_path->empty())
    field_error("out", "path must be nonempty");
  return cfg;
}

std::string render_config(const RunConfig& cfg) {
  std::ostringstream out;
  out << "# medium\n";
  out << "gamma_ab = " << format_double(cfg.atom.gamma_ab) << "\n";
  out << "gamma_ac = " << format_double(cfg.atom.gamma_ac) << "\n";
  out << "gamma_cb = " << format_double(cfg.atom.gamma_cb) << "\n";
  out << "eta = " << format_double(cfg.atom.eta) << "\n";
  out << "# fields\n";
  out << "omega1_in = " << format_complex(cfg.fields.omega1_in) << "\n";
  out << "omega2 = " << format_complex(cfg.fields.omega2) << "\n";
  out << "omega_mu = " << format_complex(cfg.fields.omega_mu) << "\n";
  out << "delta = " << format_double(cfg.fields.delta) << "\n";
  out << "delta_k = " << format_double(cfg.fields.delta_k) << "\n";
  out << "# cell\n";
  out << "z0 = " << format_double(cfg.cell.z0) << "\n";
  out << "length = " << format_double(cfg.cell.length) << "\n";
  if (cfg.detuning_grid) {
    out << "delta_min = " << format_double(cfg.detuning_grid->min) << "\n";
    out << "delta_max = " << format_double(cfg.detuning_grid->max) << "\n";
    out << "delta_count = " << cfg.detuning_grid->count << "\n";
  }
  if (cfg.position_grid) {
    out << "z0_min = " << format_double(cfg.position_grid->min) << "\n";
    out << "z0_max = " << format_double(cfg.position_grid->max) << "\n";
    out << "z0_count = " << cfg.position_grid->count << "\n";
  }
  out << "polarization = " << to_string(cfg.polarization) << "\n";
  out << "steps = " << cfg.steps << "\n";
  if (cfg.out_path) out << "out = " << *cfg.out_path << "\n";
  if (cfg.seed) out << "seed = " << *cfg.seed << "\n";
  if (cfg.expect_weak_probe_fail) out << "expect_weak_probe_fail = true\n";
  return out.str();
}

}  // namespace cleit
