#pragma once

#include <optional>
#include <span>
#include <vector>

#include "cleit/propagation.hpp"
#include "cleit/types.hpp"

namespace cleit {

// Uniform closed grid [min, max] with `count` points, count >= 2.
struct ScanGrid {
  double min = 0.0;
  double max = 0.0;
  int count = 0;

  std::vector<double> points() const;
  void validate() const;  // min < max, count >= 2
};

enum class Polarization { kRight, kLeft };

// Transmission versus detuning at fixed cell position.
struct Spectrum {
  std::vector<double> detunings;      // strictly increasing
  std::vector<double> transmissions;  // same length
  AtomParams atom;                    // input snapshot
  FieldParams fields;
  CellGeometry cell;
};

// EIT peak amplitude (transmission at delta = 0) versus cell position.
struct PhaseScan {
  std::vector<double> positions;        // z0 grid, cm
  std::vector<double> peak_amplitudes;  // same length
  Polarization polarization = Polarization::kRight;
  bool covers_full_period = true;  // grid spans >= one 2*pi/dk period
  AtomParams atom;
  FieldParams fields;
  CellGeometry cell;
};

// y(x) = offset + amplitude * sin(2*pi*x/period + phase)
struct SinusoidFit {
  double offset = 0.0;     // A0
  double amplitude = 0.0;  // A1 >= 0
  double period = 0.0;     // > 0, cm
  double phase = 0.0;      // in [-pi, pi)
  double residual_rms = 0.0;
  bool converged = false;
  int iterations = 0;
};

// Transmission via the closed form at each grid detuning. Grid points are
// evaluated in parallel with deterministic ordered assembly. Module
// errors are rethrown as ScanError annotated with the offending delta.
Spectrum scan_detuning(const AtomParams& atom, const FieldParams& fields,
                       const CellGeometry& cell, const ScanGrid& grid);

// Peak amplitude (transmission at delta = 0) for each z0 on the grid.
// cell_template supplies the length; its z0 is replaced per grid point.
// Left polarization applies the pi phase flip to the microwave amplitude.
PhaseScan scan_position(const AtomParams& atom, const FieldParams& fields,
                        const CellGeometry& cell_template,
                        const ScanGrid& z0_grid, Polarization polarization);

// Right: identity. Left: microwave amplitude multiplied by e^{i pi}
// (a sign flip, modeling the opposite-sign magnetic moments).
FieldParams apply_polarization(const FieldParams& fields, Polarization pol);

// Levenberg-Marquardt least squares of the sinusoid model with
// deterministic initialization: A0 = mean, A1 = (max-min)/2, period from
// the dominant discrete-Fourier component (or fix_period, which then
// stays fixed during the iteration), phase from the quadrature projection
// at that frequency. converged is false if the relative parameter change
// still exceeds 1e-10 after 200 iterations. Throws FitDataError for
// fewer than 4 points.
SinusoidFit fit_sinusoid(std::span<const double> x, std::span<const double> y,
                         std::optional<double> fix_period = std::nullopt);

SinusoidFit fit_sinusoid(const PhaseScan& scan,
                         std::optional<double> fix_period = std::nullopt);

// Transmission at the grid point closest to delta = 0.
double peak_amplitude(const Spectrum& spectrum);

}  // namespace cleit
