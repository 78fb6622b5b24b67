#include "cleit/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

#include <Eigen/Dense>

#include "cleit/parallel.hpp"

namespace cleit {

namespace {
constexpr double kPi = std::numbers::pi;
}

std::vector<double> ScanGrid::points() const {
  std::vector<double> p(static_cast<std::size_t>(count));
  const double span = max - min;
  for (int i = 0; i < count; ++i)
    p[static_cast<std::size_t>(i)] = min + span * i / (count - 1);
  return p;
}

void ScanGrid::validate() const {
  if (count < 2) throw std::invalid_argument("grid count must be >= 2");
  if (!(min < max)) throw std::invalid_argument("grid needs min < max");
}

Spectrum scan_detuning(const AtomParams& atom, const FieldParams& fields,
                       const CellGeometry& cell, const ScanGrid& grid) {
  grid.validate();
  Spectrum s;
  s.detunings = grid.points();
  s.atom = atom;
  s.fields = fields;
  s.cell = cell;
  s.transmissions = parallel_map(s.detunings.size(), [&](std::size_t i) {
    FieldParams f = fields;
    f.delta = s.detunings[i];
    try {
      return propagate_closed_form(atom, f, cell).transmission;
    } catch (const Error& e) {
      std::ostringstream msg;
      msg << "at delta=" << f.delta << ": " << e.what();
      throw ScanError(msg.str());
    }
  });
  return s;
}

FieldParams apply_polarization(const FieldParams& fields, Polarization pol) {
  FieldParams out = fields;
  if (pol == Polarization::kLeft) out.omega_mu = -out.omega_mu;
  return out;
}

PhaseScan scan_position(const AtomParams& atom, const FieldParams& fields,
                        const CellGeometry& cell_template,
                        const ScanGrid& z0_grid, Polarization polarization) {
  z0_grid.validate();
  const FieldParams flipped = apply_polarization(fields, polarization);

  PhaseScan scan;
  scan.positions = z0_grid.points();
  scan.polarization = polarization;
  scan.atom = atom;
  scan.fields = flipped;
  scan.cell = cell_template;
  if (fields.delta_k != 0.0) {
    const double period = 2.0 * kPi / std::abs(fields.delta_k);
    scan.covers_full_period = (z0_grid.max - z0_grid.min) >= period;
  }
  scan.peak_amplitudes = parallel_map(scan.positions.size(), [&](std::size_t i) {
    FieldParams f = flipped;
    f.delta = 0.0;  // peak amplitude is defined as transmission on resonance
    CellGeometry cell = cell_template;
    cell.z0 = scan.positions[i];
    try {
      return propagate_closed_form(atom, f, cell).transmission;
    } catch (const Error& e) {
      std::ostringstream msg;
      msg << "at z0=" << cell.z0 << ": " << e.what();
      throw ScanError(msg.str());
    }
  });
  return scan;
}

double peak_amplitude(const Spectrum& spectrum) {
  if (spectrum.detunings.empty())
    throw FitDataError("peak_amplitude needs a nonempty spectrum");
  std::size_t best = 0;
  for (std::size_t i = 1; i < spectrum.detunings.size(); ++i)
    if (std::abs(spectrum.detunings[i]) < std::abs(spectrum.detunings[best]))
      best = i;
  return spectrum.transmissions[best];
}

namespace {

double wrap_phase(double phi) {
  phi = std::fmod(phi + kPi, 2.0 * kPi);
  if (phi < 0.0) phi += 2.0 * kPi;
  return phi - kPi;
}

// Period of the dominant discrete-Fourier component of y (DC excluded),
// assuming uniform spacing.
double dominant_period(std::span<const double> x, std::span<const double> y,
                       double mean) {
  const std::size_t n = y.size();
  const double spacing = (x.back() - x.front()) / static_cast<double>(n - 1);
  std::size_t best_k = 1;
  double best_power = -1.0;
  for (std::size_t k = 1; k <= n / 2; ++k) {
    Complex acc = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      const double arg = -2.0 * kPi * static_cast<double>(k * j) / n;
      acc += (y[j] - mean) * Complex(std::cos(arg), std::sin(arg));
    }
    const double power = std::norm(acc);
    if (power > best_power) {
      best_power = power;
      best_k = k;
    }
  }
  return static_cast<double>(n) * spacing / static_cast<double>(best_k);
}

struct Model {
  // p = (A0, A1, Lambda, phi); Lambda fixed when fit_period is false
  bool fit_period;
  std::span<const double> x;
  std::span<const double> y;

  double residual_ssr(const Eigen::Vector4d& p) const {
    double ssr = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      const double u = 2.0 * kPi * x[i] / p(2) + p(3);
      const double r = y[i] - (p(0) + p(1) * std::sin(u));
      ssr += r * r;
    }
    return ssr;
  }

  void jacobian(const Eigen::Vector4d& p, Eigen::MatrixXd& jac,
                Eigen::VectorXd& res) const {
    for (std::size_t i = 0; i < x.size(); ++i) {
      const double u = 2.0 * kPi * x[i] / p(2) + p(3);
      const double s = std::sin(u);
      const double c = std::cos(u);
      res(static_cast<Eigen::Index>(i)) = y[i] - (p(0) + p(1) * s);
      jac(static_cast<Eigen::Index>(i), 0) = 1.0;
      jac(static_cast<Eigen::Index>(i), 1) = s;
      jac(static_cast<Eigen::Index>(i), 2) =
          fit_period ? p(1) * c * (-2.0 * kPi * x[i] / (p(2) * p(2))) : 0.0;
      jac(static_cast<Eigen::Index>(i), 3) = p(1) * c;
    }
  }
};

}  // namespace

SinusoidFit fit_sinusoid(std::span<const double> x, std::span<const double> y,
                         std::optional<double> fix_period) {
  if (x.size() != y.size())
    throw FitDataError("x and y must have equal length");
  if (x.size() < 4) throw FitDataError("sinusoid fit needs >= 4 points");
  const std::size_t n = x.size();

  const double mean = std::accumulate(y.begin(), y.end(), 0.0) / n;
  const auto [lo, hi] = std::minmax_element(y.begin(), y.end());
  const double amp0 = 0.5 * (*hi - *lo);
  const double span = x.back() - x.front();

  SinusoidFit fit;
  if (amp0 == 0.0) {
    // flat data: nothing to iterate on
    fit.offset = mean;
    fit.amplitude = 0.0;
    fit.period = fix_period.value_or(span);
    fit.phase = 0.0;
    fit.residual_rms = 0.0;
    fit.converged = true;
    return fit;
  }

  const double period0 = fix_period ? *fix_period : dominant_period(x, y, mean);
  double qs = 0.0, qc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double u = 2.0 * kPi * x[i] / period0;
    qs += (y[i] - mean) * std::sin(u);
    qc += (y[i] - mean) * std::cos(u);
  }
  Eigen::Vector4d p(mean, amp0, period0, std::atan2(qc, qs));

  Model model{!fix_period.has_value(), x, y};
  Eigen::MatrixXd jac(static_cast<Eigen::Index>(n), 4);
  Eigen::VectorXd res(static_cast<Eigen::Index>(n));

  double lambda = 1e-3;
  double ssr = model.residual_ssr(p);
  int iter = 0;
  bool converged = false;
  constexpr int kMaxIterations = 200;
  constexpr double kRelTol = 1e-10;

  while (iter < kMaxIterations && !converged) {
    ++iter;
    model.jacobian(p, jac, res);
    const Eigen::Matrix4d jtj = jac.transpose() * jac;
    const Eigen::Vector4d g = jac.transpose() * res;
    const double floor = 1e-12 * (jtj.trace() + 1.0);

    bool stepped = false;
    for (int attempt = 0; attempt < 32; ++attempt) {
      Eigen::Matrix4d damped = jtj;
      damped.diagonal() += lambda * jtj.diagonal();
      damped.diagonal().array() += lambda * floor + floor;
      const Eigen::Vector4d delta = damped.ldlt().solve(g);
      Eigen::Vector4d candidate = p + delta;
      if (!model.fit_period) candidate(2) = p(2);
      const double candidate_ssr = model.residual_ssr(candidate);
      if (candidate_ssr <= ssr) {
        double rel_change = 0.0;
        for (int k = 0; k < 4; ++k)
          rel_change = std::max(
              rel_change, std::abs(delta(k)) / (std::abs(p(k)) + 1e-30));
        p = candidate;
        ssr = candidate_ssr;
        lambda = std::max(lambda / 3.0, 1e-14);
        stepped = true;
        if (rel_change <= kRelTol) converged = true;
        break;
      }
      lambda *= 4.0;
    }
    if (!stepped) {
      // damping saturated: no downhill step exists at this precision
      converged = true;
    }
  }

  fit.offset = p(0);
  fit.amplitude = p(1);
  fit.period = p(2);
  fit.phase = p(3);
  if (fit.period < 0.0) {
    // sin(2 pi x/L + phi) with L < 0 equals -sin(2 pi x/|L| - phi)
    fit.period = -fit.period;
    fit.amplitude = -fit.amplitude;
    fit.phase = -fit.phase;
  }
  if (fit.amplitude < 0.0) {
    fit.amplitude = -fit.amplitude;
    fit.phase += kPi;
  }
  fit.phase = wrap_phase(fit.phase);
  fit.residual_rms = std::sqrt(ssr / static_cast<double>(n));
  fit.converged = converged;
  fit.iterations = iter;
  return fit;
}

SinusoidFit fit_sinusoid(const PhaseScan& scan,
                         std::optional<double> fix_period) {
  return fit_sinusoid(scan.positions, scan.peak_amplitudes, fix_period);
}

}  // namespace cleit
