#include "cleit/core_model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cleit {

namespace {
constexpr Complex kI{0.0, 1.0};
}

void AtomParams::validate() const {
  if (!(gamma_ab > 0.0))
    throw std::invalid_argument("gamma_ab must be strictly positive");
  if (!(gamma_ac > 0.0))
    throw std::invalid_argument("gamma_ac must be strictly positive");
  if (!(gamma_cb > 0.0))
    throw std::invalid_argument("gamma_cb must be strictly positive");
  if (!(eta >= 0.0)) throw std::invalid_argument("eta must be >= 0");
}

void CellGeometry::validate() const {
  if (!(length > 0.0)) throw std::invalid_argument("cell length must be > 0");
}

ComplexRelaxation gamma_complex(const AtomParams& atom,
                                const FieldParams& fields) {
  return {Complex(atom.gamma_ab, fields.delta),
          Complex(atom.gamma_cb, fields.delta), Complex(atom.gamma_ac, 0.0)};
}

Complex weak_probe_coherence(const AtomParams& atom,
                             const FieldParams& fields) {
  const auto relax = gamma_complex(atom, fields);
  const Complex denom =
      relax.gamma_ab * relax.gamma_cb + std::norm(fields.omega2);
  if (std::abs(denom) < kDegenerateDenominatorTol)
    throw DegenerateDenominatorError(
        "degenerate denominator Gamma_ab*Gamma_cb + |Omega_2|^2 ~ 0");
  return (kI * relax.gamma_cb * fields.omega1_in -
          fields.omega2 * fields.omega_mu) /
         denom;
}

DecayModel DecayModel::ground_exchange(const AtomParams& atom) {
  DecayModel m;
  const double exchange = atom.gamma_cb / 2.0;
  const double gamma_a =
      std::max(0.0, 2.0 * std::min(atom.gamma_ab, atom.gamma_ac) - exchange);
  m.pop_a_to_b = gamma_a / 2.0;
  m.pop_a_to_c = gamma_a / 2.0;
  m.pop_b_to_c = exchange;
  m.pop_c_to_b = exchange;
  m.deph_ab = atom.gamma_ab - 0.5 * (gamma_a + exchange);
  m.deph_ac = atom.gamma_ac - 0.5 * (gamma_a + exchange);
  m.deph_cb = atom.gamma_cb - exchange;
  return m;
}

DecayModel DecayModel::pure_dephasing(const AtomParams& atom) {
  DecayModel m;
  const double gamma_a = 2.0 * std::min(atom.gamma_ab, atom.gamma_ac);
  m.pop_a_to_b = gamma_a / 2.0;
  m.pop_a_to_c = gamma_a / 2.0;
  m.deph_ab = atom.gamma_ab - 0.5 * gamma_a;
  m.deph_ac = atom.gamma_ac - 0.5 * gamma_a;
  m.deph_cb = atom.gamma_cb;
  return m;
}

double DecayModel::out_rate(int level) const {
  switch (level) {
    case kLevelA:
      return pop_a_to_b + pop_a_to_c;
    case kLevelB:
      return pop_b_to_c;
    case kLevelC:
      return pop_c_to_b;
    default:
      return 0.0;
  }
}

double DecayModel::coherence_rate_ab() const {
  return 0.5 * (out_rate(kLevelA) + out_rate(kLevelB)) + deph_ab;
}
double DecayModel::coherence_rate_ac() const {
  return 0.5 * (out_rate(kLevelA) + out_rate(kLevelC)) + deph_ac;
}
double DecayModel::coherence_rate_cb() const {
  return 0.5 * (out_rate(kLevelC) + out_rate(kLevelB)) + deph_cb;
}

Eigen::Matrix3cd rotating_frame_hamiltonian(const FieldParams& fields) {
  Eigen::Matrix3cd h = Eigen::Matrix3cd::Zero();
  h(kLevelA, kLevelA) = fields.delta;
  h(kLevelC, kLevelC) = fields.delta;
  h(kLevelA, kLevelB) = -fields.omega1_in;
  h(kLevelA, kLevelC) = -fields.omega2;
  h(kLevelC, kLevelB) = -fields.omega_mu;
  h(kLevelB, kLevelA) = std::conj(h(kLevelA, kLevelB));
  h(kLevelC, kLevelA) = std::conj(h(kLevelA, kLevelC));
  h(kLevelB, kLevelC) = std::conj(h(kLevelC, kLevelB));
  return h;
}

Eigen::Matrix3cd apply_generator(const Eigen::Matrix3cd& hamiltonian,
                                 const DecayModel& decay,
                                 const Eigen::Matrix3cd& rho) {
  Eigen::Matrix3cd dr = -kI * (hamiltonian * rho - rho * hamiltonian);

  // population transfer
  const Complex paa = rho(kLevelA, kLevelA);
  const Complex pbb = rho(kLevelB, kLevelB);
  const Complex pcc = rho(kLevelC, kLevelC);
  dr(kLevelA, kLevelA) += -(decay.pop_a_to_b + decay.pop_a_to_c) * paa;
  dr(kLevelB, kLevelB) +=
      decay.pop_a_to_b * paa + decay.pop_c_to_b * pcc - decay.pop_b_to_c * pbb;
  dr(kLevelC, kLevelC) +=
      decay.pop_a_to_c * paa + decay.pop_b_to_c * pbb - decay.pop_c_to_b * pcc;

  // coherence decay: half-sum of departure rates plus pure dephasing
  const double gab = decay.coherence_rate_ab();
  const double gac = decay.coherence_rate_ac();
  const double gcb = decay.coherence_rate_cb();
  dr(kLevelA, kLevelB) += -gab * rho(kLevelA, kLevelB);
  dr(kLevelB, kLevelA) += -gab * rho(kLevelB, kLevelA);
  dr(kLevelA, kLevelC) += -gac * rho(kLevelA, kLevelC);
  dr(kLevelC, kLevelA) += -gac * rho(kLevelC, kLevelA);
  dr(kLevelC, kLevelB) += -gcb * rho(kLevelC, kLevelB);
  dr(kLevelB, kLevelC) += -gcb * rho(kLevelB, kLevelC);
  return dr;
}

Eigen::Matrix3cd unpack_hermitian(const Eigen::Matrix<double, 9, 1>& v) {
  Eigen::Matrix3cd rho;
  rho(kLevelA, kLevelA) = v(0);
  rho(kLevelB, kLevelB) = v(1);
  rho(kLevelC, kLevelC) = v(2);
  rho(kLevelA, kLevelB) = Complex(v(3), v(4));
  rho(kLevelB, kLevelA) = Complex(v(3), -v(4));
  rho(kLevelA, kLevelC) = Complex(v(5), v(6));
  rho(kLevelC, kLevelA) = Complex(v(5), -v(6));
  rho(kLevelC, kLevelB) = Complex(v(7), v(8));
  rho(kLevelB, kLevelC) = Complex(v(7), -v(8));
  return rho;
}

Eigen::Matrix<double, 9, 1> pack_hermitian(const Eigen::Matrix3cd& rho) {
  Eigen::Matrix<double, 9, 1> v;
  v(0) = rho(kLevelA, kLevelA).real();
  v(1) = rho(kLevelB, kLevelB).real();
  v(2) = rho(kLevelC, kLevelC).real();
  v(3) = rho(kLevelA, kLevelB).real();
  v(4) = rho(kLevelA, kLevelB).imag();
  v(5) = rho(kLevelA, kLevelC).real();
  v(6) = rho(kLevelA, kLevelC).imag();
  v(7) = rho(kLevelC, kLevelB).real();
  v(8) = rho(kLevelC, kLevelB).imag();
  return v;
}

Eigen::Matrix<double, 9, 9> liouvillian_matrix(const FieldParams& fields,
                                               const DecayModel& decay) {
  const Eigen::Matrix3cd h = rotating_frame_hamiltonian(fields);
  Eigen::Matrix<double, 9, 9> lmat;
  for (int col = 0; col < 9; ++col) {
    Eigen::Matrix<double, 9, 1> basis = Eigen::Matrix<double, 9, 1>::Zero();
    basis(col) = 1.0;
    lmat.col(col) = pack_hermitian(
        apply_generator(h, decay, unpack_hermitian(basis)));
  }
  return lmat;
}

DensityMatrix full_steady_state(const AtomParams& atom,
                                const FieldParams& fields,
                                const DecayModel& decay) {
  (void)atom;  // rates enter through the decay model
  const Eigen::Matrix<double, 9, 9> lmat = liouvillian_matrix(fields, decay);

  const double scale = lmat.cwiseAbs().maxCoeff();
  if (scale == 0.0)
    throw SingularLiouvillianError("zero generator: no fields and no decay");

  // stack the generator with the trace constraint, scaled to its rows
  Eigen::Matrix<double, 10, 9> system = Eigen::Matrix<double, 10, 9>::Zero();
  system.topRows<9>() = lmat;
  system(9, 0) = scale;
  system(9, 1) = scale;
  system(9, 2) = scale;
  Eigen::Matrix<double, 10, 1> rhs = Eigen::Matrix<double, 10, 1>::Zero();
  rhs(9) = scale;

  Eigen::ColPivHouseholderQR<Eigen::Matrix<double, 10, 9>> qr(system);
  if (qr.rank() < 9)
    throw SingularLiouvillianError(
        "Liouvillian null space is not one-dimensional (degenerate "
        "parameters)");
  const Eigen::Matrix<double, 9, 1> v = qr.solve(rhs);

  DensityMatrix out;
  out.rho = unpack_hermitian(v);
  return out;
}

double compute_coupling_constant(double atomic_density, double dipole_moment,
                                 double probe_frequency) {
  constexpr double kEpsilon0 = 8.8541878128e-12;   // F / m
  constexpr double kSpeedOfLight = 2.99792458e8;   // m / s
  constexpr double kHbar = 1.054571817e-34;        // J s
  return probe_frequency * atomic_density * dipole_moment * dipole_moment /
         (2.0 * kEpsilon0 * kSpeedOfLight * kHbar);
}

}  // namespace cleit
