"""Smoke tests for the python bindings."""

import math

import numpy as np
import pytest

import cleit


ATOM = dict(gamma_ab=5.0, gamma_ac=5.0, gamma_cb=1e-3, eta=0.9)


def ref_atom():
    return cleit.AtomParams(**ATOM)


def ref_fields(**overrides):
    kwargs = dict(omega1_in=0.1, omega2=1.0, omega_mu=0.02, delta=0.0, delta_k=1.5)
    kwargs.update(overrides)
    return cleit.FieldParams(**kwargs)


def test_weak_probe_coherence_golden():
    rho = cleit.weak_probe_coherence(ref_atom(), ref_fields())
    assert rho.real == pytest.approx(-0.019900497512437814, rel=1e-12)
    assert rho.imag == pytest.approx(9.950248756218906e-5, rel=1e-12)


def test_gamma_complex_tuple():
    g_ab, g_cb, g_ac = cleit.gamma_complex(ref_atom(), ref_fields(delta=2.0))
    assert g_ab == 5.0 + 2.0j
    assert g_cb == 1e-3 + 2.0j
    assert g_ac == 5.0 + 0.0j


def test_full_steady_state_is_a_density_matrix():
    rho = cleit.full_steady_state(
        ref_atom(), ref_fields(), cleit.DecayModel.ground_exchange(ref_atom())
    )
    mat = np.asarray(rho.rho)
    assert mat.shape == (3, 3)
    assert rho.hermiticity_defect() == 0.0
    assert rho.trace_defect() < 1e-12
    assert abs(np.trace(mat) - 1.0) < 1e-12


def test_zero_field_pure_dephasing_is_singular():
    fields = cleit.FieldParams(omega1_in=0.0, omega2=0.0, omega_mu=0.0)
    with pytest.raises(cleit.SingularLiouvillianError):
        cleit.full_steady_state(
            ref_atom(), fields, cleit.DecayModel.pure_dephasing(ref_atom())
        )


def test_propagation_routes_agree():
    atom, fields = ref_atom(), ref_fields()
    cell = cleit.CellGeometry(z0=0.0, length=2.5)
    closed = cleit.propagate_closed_form(atom, fields, cell)
    ode = cleit.propagate_ode(atom, fields, cell, 2.5 / 512)
    assert closed.transmission == pytest.approx(1.4805019350188562, rel=1e-12)
    assert abs(closed.omega1_out - ode.omega1_out) < 1e-8 * abs(closed.omega1_out)


def test_propagate_general_with_python_callback():
    atom, fields = ref_atom(), ref_fields()
    cell = cleit.CellGeometry(z0=0.0, length=2.5)
    general = cleit.propagate_general(
        atom, fields, cell, cleit.weak_probe_coherence, 2.5 / 256
    )
    ode = cleit.propagate_ode(atom, fields, cell, 2.5 / 256)
    assert abs(general.omega1_out - ode.omega1_out) < 1e-10 * abs(ode.omega1_out)


def test_scan_and_fit_recover_the_beat_period():
    atom, fields = ref_atom(), ref_fields()
    cell = cleit.CellGeometry(z0=0.0, length=2.5)
    scan = cleit.scan_position(
        atom, fields, cell, cleit.ScanGrid(0.0, 9.0, 31), cleit.Polarization.RIGHT
    )
    fit = cleit.fit_sinusoid(scan)
    assert fit.converged
    assert fit.period == pytest.approx(2 * math.pi / 1.5, rel=1e-6)
    assert fit.residual_rms < 1e-10 * fit.offset


def test_spectrum_peaks_on_resonance():
    atom, fields = ref_atom(), ref_fields()
    cell = cleit.CellGeometry(z0=0.0, length=2.5)
    spectrum = cleit.scan_detuning(atom, fields, cell, cleit.ScanGrid(-2.0, 2.0, 81))
    peak = cleit.peak_amplitude(spectrum)
    transmissions = list(spectrum.transmissions)
    assert peak == max(transmissions)
    assert spectrum.detunings[transmissions.index(peak)] == 0.0


def test_apply_polarization_flips_the_microwave():
    fields = ref_fields()
    left = cleit.apply_polarization(fields, cleit.Polarization.LEFT)
    assert left.omega_mu == -fields.omega_mu
    again = cleit.apply_polarization(left, cleit.Polarization.LEFT)
    assert again.omega_mu == fields.omega_mu


def test_coupling_constant_scalings():
    base = cleit.compute_coupling_constant(1e18, 2.5377e-29, 2 * math.pi * 377.107463e12)
    assert base == pytest.approx(2725523717811.7725, rel=1e-12)
    doubled = cleit.compute_coupling_constant(2e18, 2.5377e-29, 2 * math.pi * 377.107463e12)
    assert doubled == pytest.approx(2 * base, rel=1e-14)


def test_validation_errors_surface_as_python_exceptions():
    with pytest.raises(ValueError):
        cleit.AtomParams(gamma_ab=-1.0, gamma_ac=1.0, gamma_cb=1.0, eta=0.0)
    with pytest.raises(ValueError):
        cleit.ScanGrid(1.0, -1.0, 5)
