"""Closed-loop three-level EIT simulator.

Steady-state coherences, probe propagation through the cell, detuning and
cell-position scans, and sinusoid fitting of the phase dependence. See the
README for the physics conventions and the CLI front end.
"""

from ._cleit import (
    AtomParams,
    CellGeometry,
    DecayModel,
    DegenerateDenominatorError,
    DensityMatrix,
    FieldParams,
    FitDataError,
    PhaseScan,
    Polarization,
    PropagationMethod,
    PropagationResult,
    ResonantDenominatorError,
    ScanError,
    ScanGrid,
    SingularLiouvillianError,
    Spectrum,
    SinusoidFit,
    absorption_coefficient,
    apply_polarization,
    compute_coupling_constant,
    fit_sinusoid,
    full_steady_state,
    gamma_complex,
    liouvillian_matrix,
    peak_amplitude,
    propagate_closed_form,
    propagate_general,
    propagate_ode,
    scan_detuning,
    scan_position,
    weak_probe_coherence,
)

__all__ = [
    "AtomParams",
    "CellGeometry",
    "DecayModel",
    "DegenerateDenominatorError",
    "DensityMatrix",
    "FieldParams",
    "FitDataError",
    "PhaseScan",
    "Polarization",
    "PropagationMethod",
    "PropagationResult",
    "ResonantDenominatorError",
    "ScanError",
    "ScanGrid",
    "SingularLiouvillianError",
    "Spectrum",
    "SinusoidFit",
    "absorption_coefficient",
    "apply_polarization",
    "compute_coupling_constant",
    "fit_sinusoid",
    "full_steady_state",
    "gamma_complex",
    "liouvillian_matrix",
    "peak_amplitude",
    "propagate_closed_form",
    "propagate_general",
    "propagate_ode",
    "scan_detuning",
    "scan_position",
    "weak_probe_coherence",
]
