#include <cmath>
#include <complex>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "cleit/config.hpp"
#include "cleit/core_model.hpp"
#include "cleit/csv.hpp"
#include "cleit/experiment.hpp"
#include "cleit/plot.hpp"
#include "cleit/propagation.hpp"

namespace {

using namespace cleit;

// weak-probe deviation is dominated by microwave-driven population
// leakage; 0.15 passes the shipped reference config (measured ~7e-2)
// and cleanly rejects probe amplitudes comparable to the drive.
constexpr double kWeakProbeTol = 0.15;
constexpr double kOdeClosedFormTol = 1e-8;

struct CommonFlags {
  std::string config_path;
  std::optional<std::string> out;
  std::optional<int> steps;
  std::optional<std::string> polarization;
  std::optional<std::uint64_t> seed;
};

RunConfig load_config(const CommonFlags& flags) {
  RunConfig cfg = parse_config(read_file(flags.config_path));
  if (flags.out) cfg.out_path = *flags.out;
  if (flags.steps) {
    if (*flags.steps < 16) throw ConfigError("--steps must be >= 16");
    cfg.steps = *flags.steps;
  }
  if (flags.polarization) {
    if (*flags.polarization == "right")
      cfg.polarization = PolarizationMode::kRight;
    else if (*flags.polarization == "left")
      cfg.polarization = PolarizationMode::kLeft;
    else if (*flags.polarization == "both")
      cfg.polarization = PolarizationMode::kBoth;
    else
      throw ConfigError("--polarization must be right|left|both");
  }
  if (flags.seed) cfg.seed = *flags.seed;
  return cfg;
}

std::string require_out(const RunConfig& cfg) {
  if (!cfg.out_path)
    throw ConfigError("no output path: set `out` in the config or pass --out");
  return *cfg.out_path;
}

int run_spectrum(const CommonFlags& flags) {
  const RunConfig cfg = load_config(flags);
  if (!cfg.detuning_grid)
    throw ConfigError("spectrum needs a detuning grid (delta_min/max/count)");
  if (cfg.polarization == PolarizationMode::kBoth)
    throw ConfigError("spectrum supports a single polarization; use right or left");
  const Polarization pol = cfg.polarization == PolarizationMode::kLeft
                               ? Polarization::kLeft
                               : Polarization::kRight;
  const FieldParams fields = apply_polarization(cfg.fields, pol);
  const Spectrum s = scan_detuning(cfg.atom, fields, cfg.cell, *cfg.detuning_grid);
  write_file(require_out(cfg), render_csv(spectrum_table(s)));
  return 0;
}

void print_fit_line(const char* label, const SinusoidFit& fit) {
  std::string line = std::string("fit ") + label + ": A0=" +
                     format_double(fit.offset) + " A1=" +
                     format_double(fit.amplitude) + " Lambda=" +
                     format_double(fit.period) + " phi0=" +
                     format_double(fit.phase) + " residual_rms=" +
                     format_double(fit.residual_rms);
  if (fit.amplitude < 1e-12 * std::abs(fit.offset)) line += " degenerate";
  if (!fit.converged) line += " not-converged";
  std::cout << line << "\n";
}

int run_phase_scan(const CommonFlags& flags) {
  const RunConfig cfg = load_config(flags);
  if (!cfg.position_grid)
    throw ConfigError("phase-scan needs a position grid (z0_min/max/count)");

  const bool want_right = cfg.polarization != PolarizationMode::kLeft;
  const bool want_left = cfg.polarization != PolarizationMode::kRight;

  std::optional<PhaseScan> right, left;
  if (want_right)
    right = scan_position(cfg.atom, cfg.fields, cfg.cell, *cfg.position_grid,
                          Polarization::kRight);
  if (want_left)
    left = scan_position(cfg.atom, cfg.fields, cfg.cell, *cfg.position_grid,
                         Polarization::kLeft);

  const PhaseScan& probe = right ? *right : *left;
  if (!probe.covers_full_period)
    std::cerr << "warning: z0 grid spans less than one 2*pi/delta_k period; "
                 "the sinusoid fit may be unreliable\n";

  write_file(require_out(cfg),
             render_csv(phase_scan_table(right ? &*right : nullptr,
                                         left ? &*left : nullptr)));
  if (right) print_fit_line("right", fit_sinusoid(*right));
  if (left) print_fit_line("left", fit_sinusoid(*left));
  return 0;
}

int run_oracle_check(const CommonFlags& flags) {
  const RunConfig cfg = load_config(flags);
  bool all_ok = true;

  // weak-probe formula vs full Liouvillian steady state
  {
    const auto decay = DecayModel::pure_dephasing(cfg.atom);
    const Complex full =
        full_steady_state(cfg.atom, cfg.fields, decay).ab();
    const Complex approx = weak_probe_coherence(cfg.atom, cfg.fields);
    const double measured = std::abs(full - approx) / std::abs(approx);
    const bool pass = measured < kWeakProbeTol;
    std::string verdict = pass ? "PASS" : "FAIL";
    if (!pass && cfg.expect_weak_probe_fail)
      verdict = "EXPECTED-FAIL";
    else if (!pass)
      all_ok = false;
    std::cout << "check weak-probe: measured=" << format_double(measured)
              << " tolerance=" << format_double(kWeakProbeTol) << " "
              << verdict << "\n";
  }

  // closed-form transmitted field vs RK4 integration of the envelope ODE
  {
    std::vector<double> deltas;
    if (cfg.detuning_grid)
      deltas = cfg.detuning_grid->points();
    else
      deltas = {cfg.fields.delta};
    const double step = cfg.cell.length / cfg.steps;
    double worst = 0.0;
    for (const double d : deltas) {
      FieldParams f = cfg.fields;
      f.delta = d;
      const Complex closed =
          propagate_closed_form(cfg.atom, f, cfg.cell).omega1_out;
      const Complex ode = propagate_ode(cfg.atom, f, cfg.cell, step).omega1_out;
      const double denom = std::max(std::abs(closed), 1e-300);
      worst = std::max(worst, std::abs(closed - ode) / denom);
    }
    const bool pass = worst < kOdeClosedFormTol;
    if (!pass) all_ok = false;
    std::cout << "check ode-vs-closed-form: measured=" << format_double(worst)
              << " tolerance=" << format_double(kOdeClosedFormTol) << " "
              << (pass ? "PASS" : "FAIL") << "\n";
  }

  std::cout << "oracle-check: " << (all_ok ? "PASS" : "FAIL") << "\n";
  return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"closed-loop three-level EIT simulator"};
  app.require_subcommand(1);

  CommonFlags flags;
  std::string plot_csv, plot_out;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--config", flags.config_path,
                    "flat key = value parameter file")
        ->required();
    cmd->add_option("--out", flags.out, "output path");
    cmd->add_option("--steps", flags.steps,
                    "RK4 step count for ODE-based checks");
    cmd->add_option("--polarization", flags.polarization, "right|left|both");
    cmd->add_option("--seed", flags.seed,
                    "noise seed recorded in the run configuration");
  };

  auto* spectrum_cmd =
      app.add_subcommand("spectrum", "transmission vs detuning CSV");
  add_common(spectrum_cmd);

  auto* phase_cmd = app.add_subcommand(
      "phase-scan", "EIT peak amplitude vs cell position CSV + sinusoid fit");
  add_common(phase_cmd);

  auto* oracle_cmd = app.add_subcommand(
      "oracle-check",
      "compare the analytic steady state and closed-form propagation "
      "against their numerical oracles");
  add_common(oracle_cmd);

  auto* plot_cmd = app.add_subcommand("plot", "render a CSV as an SVG plot");
  plot_cmd->add_option("csv", plot_csv, "input CSV path")->required();
  plot_cmd->add_option("--out", plot_out, "output SVG path")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (spectrum_cmd->parsed()) return run_spectrum(flags);
    if (phase_cmd->parsed()) return run_phase_scan(flags);
    if (oracle_cmd->parsed()) return run_oracle_check(flags);
    if (plot_cmd->parsed()) {
      cleit::emit_plot(plot_csv, plot_out);
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
