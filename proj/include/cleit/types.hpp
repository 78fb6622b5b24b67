#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace cleit {

using Complex = std::complex<double>;

// Basis ordering used everywhere: {|a>, |b>, |c>} with |a> the excited
// state, |b> the populated ground state (probe couples a<->b), |c> the
// second ground state (drive couples a<->c, microwave couples c<->b).
inline constexpr int kLevelA = 0;
inline constexpr int kLevelB = 1;
inline constexpr int kLevelC = 2;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// |Gamma_ab*Gamma_cb + |Omega_2|^2| collapsed below tolerance; the
// steady-state formulas are indeterminate for such parameters.
class DegenerateDenominatorError : public Error {
 public:
  using Error::Error;
};

// |i*dk + alpha| below tolerance: the closed-form propagation formula is
// 0/0 there. The ODE path is the documented fallback.
class ResonantDenominatorError : public Error {
 public:
  using Error::Error;
};

// The Liouvillian null space is not one-dimensional (degenerate
// parameters, e.g. zero fields with no ground-state relaxation channel).
class SingularLiouvillianError : public Error {
 public:
  using Error::Error;
};

// Too few samples for a fit.
class FitDataError : public Error {
 public:
  using Error::Error;
};

// Raised by scans, wrapping a module error annotated with the offending
// grid point.
class ScanError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

inline constexpr double kDegenerateDenominatorTol = 1e-15;
inline constexpr double kResonantDenominatorTol = 1e-12;

// Decoherence rates and the propagation coupling constant of the medium.
// Rates are dimensionless multiples of |Omega_2|; eta is in cm^-1 and
// carries the frequency normalization.
struct AtomParams {
  double gamma_ab = 0.0;  // optical coherence decay, a<->b
  double gamma_ac = 0.0;  // optical coherence decay, a<->c
  double gamma_cb = 0.0;  // ground-state coherence decay
  double eta = 0.0;       // coupling constant, cm^-1

  // Throws std::invalid_argument unless all rates > 0 and eta >= 0.
  void validate() const;
};

// Complex Rabi amplitudes and detunings of the three fields. The probe
// and the microwave share the single detuning `delta` (three-photon
// resonance is structural), and the drive is on resonance by
// construction, so no drive detuning exists.
struct FieldParams {
  Complex omega1_in;       // probe Rabi amplitude at cell entry
  Complex omega2;          // drive Rabi amplitude, constant through the cell
  Complex omega_mu;        // microwave Rabi amplitude
  double delta = 0.0;      // common probe/microwave detuning
  double delta_k = 0.0;    // optical wave-number mismatch k1 - k2, cm^-1
};

struct CellGeometry {
  double z0 = 0.0;      // cell entry coordinate, cm
  double length = 0.0;  // cell length, cm

  void validate() const;  // length > 0
};

// Off-diagonal density-matrix elements.
struct CoherenceSet {
  Complex rho_ab;
  Complex rho_ac;
  Complex rho_cb;
};

// Full 3x3 steady state over {|a>,|b>,|c>}.
struct DensityMatrix {
  Eigen::Matrix3cd rho = Eigen::Matrix3cd::Zero();

  Complex ab() const { return rho(kLevelA, kLevelB); }
  Complex ac() const { return rho(kLevelA, kLevelC); }
  Complex cb() const { return rho(kLevelC, kLevelB); }
  double population(int level) const { return rho(level, level).real(); }

  CoherenceSet coherences() const { return {ab(), ac(), cb()}; }

  double hermiticity_defect() const {
    return (rho - rho.adjoint()).cwiseAbs().maxCoeff();
  }
  double trace_defect() const { return std::abs(rho.trace() - Complex(1.0)); }
};

}  // namespace cleit
