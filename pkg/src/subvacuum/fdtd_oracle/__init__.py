"""Finite-difference oracle for the probe wave equation."""

from ._kernels import NUMBA_AVAILABLE, USE_NUMBA
from .solver import (
    ConvergenceReport,
    ConvergenceScenario,
    CourantError,
    FieldState,
    Grid1D,
    GridSpec,
    InstabilityError,
    MediumProfile,
    RunReport,
    SpectralRunReport,
    WalkOffWarning,
    convergence_study,
    discrete_energy,
    gaussian_envelope,
    numerical_group_velocity,
    numerical_omega,
    packet_state,
    run,
    run_comoving,
    run_spectral,
    spatial_analytic_signal,
    step,
    time_of_flight_velocity,
)

__all__ = [name for name in dir() if not name.startswith("_")]
