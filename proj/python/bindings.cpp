#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cleit/config.hpp"
#include "cleit/core_model.hpp"
#include "cleit/experiment.hpp"
#include "cleit/propagation.hpp"

namespace py = pybind11;
using namespace cleit;

PYBIND11_MODULE(_cleit, m) {
  m.doc() = "closed-loop three-level EIT simulator core";

  py::register_exception<DegenerateDenominatorError>(m, "DegenerateDenominatorError");
  py::register_exception<ResonantDenominatorError>(m, "ResonantDenominatorError");
  py::register_exception<SingularLiouvillianError>(m, "SingularLiouvillianError");
  py::register_exception<FitDataError>(m, "FitDataError");
  py::register_exception<ScanError>(m, "ScanError");

  py::class_<AtomParams>(m, "AtomParams")
      .def(py::init([](double gamma_ab, double gamma_ac, double gamma_cb,
                       double eta) {
             AtomParams a{gamma_ab, gamma_ac, gamma_cb, eta};
             a.validate();
             return a;
           }),
           py::arg("gamma_ab"), py::arg("gamma_ac"), py::arg("gamma_cb"),
           py::arg("eta"))
      .def_readwrite("gamma_ab", &AtomParams::gamma_ab)
      .def_readwrite("gamma_ac", &AtomParams::gamma_ac)
      .def_readwrite("gamma_cb", &AtomParams::gamma_cb)
      .def_readwrite("eta", &AtomParams::eta);

  py::class_<FieldParams>(m, "FieldParams")
      .def(py::init([](Complex omega1_in, Complex omega2, Complex omega_mu,
                       double delta, double delta_k) {
             return FieldParams{omega1_in, omega2, omega_mu, delta, delta_k};
           }),
           py::arg("omega1_in"), py::arg("omega2"), py::arg("omega_mu"),
           py::arg("delta") = 0.0, py::arg("delta_k") = 0.0)
      .def_readwrite("omega1_in", &FieldParams::omega1_in)
      .def_readwrite("omega2", &FieldParams::omega2)
      .def_readwrite("omega_mu", &FieldParams::omega_mu)
      .def_readwrite("delta", &FieldParams::delta)
      .def_readwrite("delta_k", &FieldParams::delta_k);

  py::class_<CellGeometry>(m, "CellGeometry")
      .def(py::init([](double z0, double length) {
             CellGeometry c{z0, length};
             c.validate();
             return c;
           }),
           py::arg("z0"), py::arg("length"))
      .def_readwrite("z0", &CellGeometry::z0)
      .def_readwrite("length", &CellGeometry::length);

  py::class_<DecayModel>(m, "DecayModel")
      .def_static("ground_exchange", &DecayModel::ground_exchange)
      .def_static("pure_dephasing", &DecayModel::pure_dephasing)
      .def_readwrite("pop_a_to_b", &DecayModel::pop_a_to_b)
      .def_readwrite("pop_a_to_c", &DecayModel::pop_a_to_c)
      .def_readwrite("pop_b_to_c", &DecayModel::pop_b_to_c)
      .def_readwrite("pop_c_to_b", &DecayModel::pop_c_to_b)
      .def_readwrite("deph_ab", &DecayModel::deph_ab)
      .def_readwrite("deph_ac", &DecayModel::deph_ac)
      .def_readwrite("deph_cb", &DecayModel::deph_cb)
      .def("coherence_rate_ab", &DecayModel::coherence_rate_ab)
      .def("coherence_rate_ac", &DecayModel::coherence_rate_ac)
      .def("coherence_rate_cb", &DecayModel::coherence_rate_cb);

  py::class_<DensityMatrix>(m, "DensityMatrix")
      .def_readonly("rho", &DensityMatrix::rho)
      .def("ab", &DensityMatrix::ab)
      .def("ac", &DensityMatrix::ac)
      .def("cb", &DensityMatrix::cb)
      .def("population", &DensityMatrix::population)
      .def("hermiticity_defect", &DensityMatrix::hermiticity_defect)
      .def("trace_defect", &DensityMatrix::trace_defect);

  m.def("gamma_complex",
        [](const AtomParams& a, const FieldParams& f) {
          const auto g = gamma_complex(a, f);
          return py::make_tuple(g.gamma_ab, g.gamma_cb, g.gamma_ac);
        },
        py::arg("atom"), py::arg("fields"),
        "complex relaxation denominators (Gamma_ab, Gamma_cb, Gamma_ac)");
  m.def("weak_probe_coherence", &weak_probe_coherence, py::arg("atom"),
        py::arg("fields"));
  m.def("full_steady_state", &full_steady_state, py::arg("atom"),
        py::arg("fields"), py::arg("decay"));
  m.def("liouvillian_matrix", &liouvillian_matrix, py::arg("fields"),
        py::arg("decay"));
  m.def("compute_coupling_constant", &compute_coupling_constant,
        py::arg("atomic_density"), py::arg("dipole_moment"),
        py::arg("probe_frequency"));

  py::enum_<PropagationMethod>(m, "PropagationMethod")
      .value("CLOSED_FORM", PropagationMethod::kClosedForm)
      .value("ODE", PropagationMethod::kOde);

  py::class_<PropagationResult>(m, "PropagationResult")
      .def_readonly("omega1_out", &PropagationResult::omega1_out)
      .def_readonly("transmission", &PropagationResult::transmission)
      .def_readonly("absolute_power", &PropagationResult::absolute_power)
      .def_readonly("alpha", &PropagationResult::alpha)
      .def_readonly("method", &PropagationResult::method);

  m.def("absorption_coefficient", &absorption_coefficient, py::arg("atom"),
        py::arg("fields"));
  m.def("propagate_closed_form", &propagate_closed_form, py::arg("atom"),
        py::arg("fields"), py::arg("cell"));
  m.def("propagate_ode", &propagate_ode, py::arg("atom"), py::arg("fields"),
        py::arg("cell"), py::arg("step"));
  m.def("propagate_general", &propagate_general, py::arg("atom"),
        py::arg("fields"), py::arg("cell"), py::arg("coherence_source"),
        py::arg("step"));

  py::enum_<Polarization>(m, "Polarization")
      .value("RIGHT", Polarization::kRight)
      .value("LEFT", Polarization::kLeft);

  py::class_<ScanGrid>(m, "ScanGrid")
      .def(py::init([](double min, double max, int count) {
             ScanGrid g{min, max, count};
             g.validate();
             return g;
           }),
           py::arg("min"), py::arg("max"), py::arg("count"))
      .def_readwrite("min", &ScanGrid::min)
      .def_readwrite("max", &ScanGrid::max)
      .def_readwrite("count", &ScanGrid::count)
      .def("points", &ScanGrid::points);

  py::class_<Spectrum>(m, "Spectrum")
      .def_readonly("detunings", &Spectrum::detunings)
      .def_readonly("transmissions", &Spectrum::transmissions);

  py::class_<PhaseScan>(m, "PhaseScan")
      .def_readonly("positions", &PhaseScan::positions)
      .def_readonly("peak_amplitudes", &PhaseScan::peak_amplitudes)
      .def_readonly("polarization", &PhaseScan::polarization)
      .def_readonly("covers_full_period", &PhaseScan::covers_full_period);

  py::class_<SinusoidFit>(m, "SinusoidFit")
      .def_readonly("offset", &SinusoidFit::offset)
      .def_readonly("amplitude", &SinusoidFit::amplitude)
      .def_readonly("period", &SinusoidFit::period)
      .def_readonly("phase", &SinusoidFit::phase)
      .def_readonly("residual_rms", &SinusoidFit::residual_rms)
      .def_readonly("converged", &SinusoidFit::converged)
      .def_readonly("iterations", &SinusoidFit::iterations);

  m.def("scan_detuning", &scan_detuning, py::arg("atom"), py::arg("fields"),
        py::arg("cell"), py::arg("grid"));
  m.def("scan_position", &scan_position, py::arg("atom"), py::arg("fields"),
        py::arg("cell_template"), py::arg("z0_grid"), py::arg("polarization"));
  m.def("apply_polarization", &apply_polarization, py::arg("fields"),
        py::arg("polarization"));
  m.def("fit_sinusoid",
        [](const std::vector<double>& x, const std::vector<double>& y,
           std::optional<double> fix_period) {
          return fit_sinusoid(std::span<const double>(x),
                              std::span<const double>(y), fix_period);
        },
        py::arg("x"), py::arg("y"), py::arg("fix_period") = std::nullopt);
  m.def("fit_sinusoid",
        [](const PhaseScan& scan, std::optional<double> fix_period) {
          return fit_sinusoid(scan, fix_period);
        },
        py::arg("scan"), py::arg("fix_period") = std::nullopt);
  m.def("peak_amplitude", &peak_amplitude, py::arg("spectrum"));
}
