#pragma once

#include <functional>

#include "cleit/core_model.hpp"
#include "cleit/types.hpp"

namespace cleit {

enum class PropagationMethod { kClosedForm, kOde };

struct PropagationResult {
  Complex omega1_out;      // probe amplitude at z0 + L
  double transmission;     // |out|^2/|in|^2, or |out|^2 when absolute_power
  bool absolute_power;     // true when the input amplitude was zero
  Complex alpha;           // absorption coefficient, cm^-1
  PropagationMethod method;
};

// Complex absorption coefficient
//   alpha = eta * Gamma_cb / (Gamma_cb*Gamma_ab + |Omega_2|^2)   [cm^-1]
// Real part governs attenuation, imaginary part phase accumulation.
Complex absorption_coefficient(const AtomParams& atom,
                               const FieldParams& fields);

// Exact solution of the envelope equation with constant drive and
// microwave through the cell:
//   Omega_1(z0+L) = Omega_10 e^{-alpha L}
//     - i eta Omega_mu Omega_2 / (Gamma_cb Gamma_ab + |Omega_2|^2)
//       * [e^{i dk (z0+L)} - e^{i dk z0 - alpha L}] / (i dk + alpha)
// Throws ResonantDenominatorError when |i dk + alpha| falls below
// kResonantDenominatorTol; use propagate_ode there.
PropagationResult propagate_closed_form(const AtomParams& atom,
                                        const FieldParams& fields,
                                        const CellGeometry& cell);

// Fixed-step classical RK4 integration of
//   d(Omega_1)/dz = -alpha Omega_1
//     - i eta Omega_mu Omega_2 e^{i dk z} / (Gamma_cb Gamma_ab + |Omega_2|^2)
// from z0 to z0+L. `step` is an upper bound on the actual step size: the
// cell is divided into ceil(L/step) equal steps. Requires
// 0 < step <= L/16. Converges to the closed form at O(step^4).
PropagationResult propagate_ode(const AtomParams& atom,
                                const FieldParams& fields,
                                const CellGeometry& cell, double step);

// Pure function giving the local steady-state coherence rho_ab for the
// fields at one z position. The probe slot of the FieldParams carries
// the local envelope amplitude and the microwave slot carries
// omega_mu * e^{i dk z} (the loop phase at z folded in).
using CoherenceProvider =
    std::function<Complex(const AtomParams&, const FieldParams&)>;

// RK4 integration of d(Omega_1)/dz = i eta rho_ab with rho_ab supplied by
// an arbitrary provider; with `weak_probe_coherence` as the provider this
// is arithmetically the envelope equation of propagate_ode.
PropagationResult propagate_general(const AtomParams& atom,
                                    const FieldParams& fields,
                                    const CellGeometry& cell,
                                    const CoherenceProvider& coherence_source,
                                    double step);

}  // namespace cleit
