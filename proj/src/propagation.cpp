#include "cleit/propagation.hpp"

#include <cmath>
#include <stdexcept>

namespace cleit {

namespace {

constexpr Complex kI{0.0, 1.0};

PropagationResult finish(const FieldParams& fields, Complex omega1_out,
                         Complex alpha, PropagationMethod method) {
  PropagationResult r;
  r.omega1_out = omega1_out;
  r.alpha = alpha;
  r.method = method;
  const double in_power = std::norm(fields.omega1_in);
  r.absolute_power = (in_power == 0.0);
  r.transmission =
      r.absolute_power ? std::norm(omega1_out) : std::norm(omega1_out) / in_power;
  return r;
}

int step_count(double length, double step) {
  if (!(step > 0.0)) throw std::invalid_argument("step must be > 0");
  if (step > length / 16.0)
    throw std::invalid_argument("step must be <= length/16");
  const double q = length / step;
  return static_cast<int>(std::ceil(q * (1.0 - 1e-12)));
}

template <typename Rhs>
Complex rk4_integrate(Complex y0, double z0, double length, int n,
                      const Rhs& rhs) {
  const double h = length / n;
  Complex y = y0;
  double z = z0;
  for (int i = 0; i < n; ++i) {
    const Complex k1 = rhs(z, y);
    const Complex k2 = rhs(z + h / 2.0, y + (h / 2.0) * k1);
    const Complex k3 = rhs(z + h / 2.0, y + (h / 2.0) * k2);
    const Complex k4 = rhs(z + h, y + h * k3);
    y += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    z = z0 + (i + 1) * h;
  }
  return y;
}

}  // namespace

Complex absorption_coefficient(const AtomParams& atom,
                               const FieldParams& fields) {
  const auto relax = gamma_complex(atom, fields);
  const Complex denom =
      relax.gamma_cb * relax.gamma_ab + std::norm(fields.omega2);
  if (std::abs(denom) < kDegenerateDenominatorTol)
    throw DegenerateDenominatorError(
        "degenerate denominator Gamma_cb*Gamma_ab + |Omega_2|^2 ~ 0");
  return atom.eta * relax.gamma_cb / denom;
}

PropagationResult propagate_closed_form(const AtomParams& atom,
                                        const FieldParams& fields,
                                        const CellGeometry& cell) {
  const auto relax = gamma_complex(atom, fields);
  const Complex denom =
      relax.gamma_cb * relax.gamma_ab + std::norm(fields.omega2);
  if (std::abs(denom) < kDegenerateDenominatorTol)
    throw DegenerateDenominatorError(
        "degenerate denominator Gamma_cb*Gamma_ab + |Omega_2|^2 ~ 0");
  const Complex alpha = atom.eta * relax.gamma_cb / denom;

  const Complex resonant = kI * fields.delta_k + alpha;
  if (std::abs(resonant) < kResonantDenominatorTol)
    throw ResonantDenominatorError(
        "i*delta_k + alpha ~ 0: closed form indeterminate, use the ODE path");

  const double length = cell.length;
  const Complex decay_factor = std::exp(-alpha * length);
  const Complex prefactor =
      -kI * atom.eta * fields.omega_mu * fields.omega2 / denom / resonant;
  const Complex source_term =
      prefactor * (std::exp(kI * fields.delta_k * (cell.z0 + length)) -
                   std::exp(kI * fields.delta_k * cell.z0 - alpha * length));
  return finish(fields, fields.omega1_in * decay_factor + source_term, alpha,
                PropagationMethod::kClosedForm);
}

PropagationResult propagate_ode(const AtomParams& atom,
                                const FieldParams& fields,
                                const CellGeometry& cell, double step) {
  const auto relax = gamma_complex(atom, fields);
  const Complex denom =
      relax.gamma_cb * relax.gamma_ab + std::norm(fields.omega2);
  if (std::abs(denom) < kDegenerateDenominatorTol)
    throw DegenerateDenominatorError(
        "degenerate denominator Gamma_cb*Gamma_ab + |Omega_2|^2 ~ 0");
  const Complex alpha = atom.eta * relax.gamma_cb / denom;
  const Complex source = -kI * atom.eta * fields.omega_mu * fields.omega2 / denom;

  const int n = step_count(cell.length, step);
  const Complex out = rk4_integrate(
      fields.omega1_in, cell.z0, cell.length, n,
      [&](double z, Complex y) {
        return -alpha * y + source * std::exp(kI * fields.delta_k * z);
      });
  return finish(fields, out, alpha, PropagationMethod::kOde);
}

PropagationResult propagate_general(const AtomParams& atom,
                                    const FieldParams& fields,
                                    const CellGeometry& cell,
                                    const CoherenceProvider& coherence_source,
                                    double step) {
  const Complex alpha = absorption_coefficient(atom, fields);
  const int n = step_count(cell.length, step);
  const Complex out = rk4_integrate(
      fields.omega1_in, cell.z0, cell.length, n,
      [&](double z, Complex y) {
        FieldParams local = fields;
        local.omega1_in = y;
        local.omega_mu =
            fields.omega_mu * std::exp(kI * fields.delta_k * z);
        return kI * atom.eta * coherence_source(atom, local);
      });
  return finish(fields, out, alpha, PropagationMethod::kOde);
}

}  // namespace cleit
