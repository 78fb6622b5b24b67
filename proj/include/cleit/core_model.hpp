#pragma once

#include <Eigen/Dense>

#include "cleit/types.hpp"

namespace cleit {

// The three complex relaxation denominators entering the steady-state
// coherence formulas: Gamma_ab = gamma_ab + i*delta,
// Gamma_cb = gamma_cb + i*delta, Gamma_ac = gamma_ac.
struct ComplexRelaxation {
  Complex gamma_ab;
  Complex gamma_cb;
  Complex gamma_ac;
};

ComplexRelaxation gamma_complex(const AtomParams& atom,
                                const FieldParams& fields);

// Weak-probe analytic steady-state coherence rho_ab:
//   rho_ab = (i*Gamma_cb*Omega_1 - Omega_2*Omega_mu) / (Gamma_ab*Gamma_cb + |Omega_2|^2)
// valid when nearly all population sits in |b>.
// Throws DegenerateDenominatorError when the denominator magnitude is
// below kDegenerateDenominatorTol.
Complex weak_probe_coherence(const AtomParams& atom, const FieldParams& fields);

// Population relaxation structure backing the full Liouvillian. The
// coherence decay rate of pair (i,j) is (out_i + out_j)/2 + deph_ij,
// where out_* are the total population departure rates. Two presets
// reproduce a given AtomParams exactly:
//
//  - ground_exchange: spontaneous decay a->b, a->c with equal branching,
//    b<->c population exchange at gamma_cb/2 each way, dephasing top-ups.
//    Equilibrates the ground states (zero-field steady state is
//    rho_bb = rho_cc = 1/2) and keeps the steady state positive over wide
//    parameter ranges.
//
//  - pure_dephasing: same spontaneous decay backbone but gamma_cb made
//    entirely of dephasing, with no ground-state population transfer.
//    This is the realization consistent with the premises of the
//    weak-probe formula (population pinned in |b> at zeroth order), and
//    the one against which weak_probe_coherence converges quadratically.
//    With all fields off its steady state is degenerate (any b/c
//    population split), so full_steady_state raises
//    SingularLiouvillianError there.
struct DecayModel {
  double pop_a_to_b = 0.0;
  double pop_a_to_c = 0.0;
  double pop_b_to_c = 0.0;
  double pop_c_to_b = 0.0;
  double deph_ab = 0.0;
  double deph_ac = 0.0;
  double deph_cb = 0.0;

  static DecayModel ground_exchange(const AtomParams& atom);
  static DecayModel pure_dephasing(const AtomParams& atom);

  double out_rate(int level) const;
  // Total coherence decay rate implied for each off-diagonal pair.
  double coherence_rate_ab() const;
  double coherence_rate_ac() const;
  double coherence_rate_cb() const;
};

// Rotating-frame Hamiltonian (units of hbar) over {|a>,|b>,|c>}:
//   diag(delta, 0, delta) - [Omega_1 |a><b| + Omega_2 |a><c| + Omega_mu |c><b| + h.c.]
Eigen::Matrix3cd rotating_frame_hamiltonian(const FieldParams& fields);

// Generator action dr/dt = -i[H, r] + D(r) for one Hermitian r.
Eigen::Matrix3cd apply_generator(const Eigen::Matrix3cd& hamiltonian,
                                 const DecayModel& decay,
                                 const Eigen::Matrix3cd& rho);

// Real 9x9 matrix of the generator on the Hermitian parametrization
//   v = (rho_aa, rho_bb, rho_cc,
//        Re rho_ab, Im rho_ab, Re rho_ac, Im rho_ac, Re rho_cb, Im rho_cb).
// Tests inspect its diagonal action on the coherence components.
Eigen::Matrix<double, 9, 9> liouvillian_matrix(const FieldParams& fields,
                                               const DecayModel& decay);

Eigen::Matrix3cd unpack_hermitian(const Eigen::Matrix<double, 9, 1>& v);
Eigen::Matrix<double, 9, 1> pack_hermitian(const Eigen::Matrix3cd& rho);

// Steady state of the full 9-dimensional Liouvillian (no weak-probe
// approximation): solves L v = 0 with tr(rho) = 1. Hermiticity is exact
// by construction of the parametrization. Throws
// SingularLiouvillianError when the null space is not one-dimensional.
DensityMatrix full_steady_state(const AtomParams& atom,
                                const FieldParams& fields,
                                const DecayModel& decay);

// Propagation coupling constant eta = nu1 * N * dipole^2 / (2 eps0 c hbar)
// in SI units: atomic_density in m^-3, dipole_moment in C*m,
// probe_frequency in rad/s; result in m^-1 * rad/s.
double compute_coupling_constant(double atomic_density, double dipole_moment,
                                 double probe_frequency);

}  // namespace cleit
