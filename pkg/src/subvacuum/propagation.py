"""Probe propagation through the background-induced effective medium.

For a probe in a region where <E_q^2> is roughly constant the linearized
wave equation has phase velocity 1/sqrt(eps + 3 chi3 <E_q^2>).  Exact and
first-order forms are always returned side by side.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .background_field import FieldModulation, SqueezedPlaneWaveMode, modulation_value
from .quantities import DielectricMaterial


class UnphysicalMediumError(ValueError):
    pass


@dataclass(frozen=True)
class ProbePulse:
    omega0: float
    amplitude: float = 1.0
    delta_omega_p: float | None = None
    lineshape: str = "lorentzian"

    def __post_init__(self):
        if not self.omega0 > 0:
            raise ValueError("omega0 must be positive")
        if not self.amplitude > 0:
            raise ValueError("amplitude must be positive")
        if self.delta_omega_p is not None and not 0 < self.delta_omega_p < self.omega0:
            raise ValueError("delta_omega_p must lie in (0, omega0)")

    def k0(self, material: DielectricMaterial) -> float:
        return self.omega0 * math.sqrt(float(material.epsilon(self.omega0)))

    def wavelength(self) -> float:
        """lambda = 2 pi sqrt(eps) / k0 = 2 pi / omega0 (vacuum wavelength)."""
        return 2.0 * math.pi / self.omega0


@dataclass(frozen=True)
class Velocity:
    v0: float
    exact: float
    linearized: float


@dataclass(frozen=True)
class PropagationResult:
    v0: float
    v_eff: float
    v_eff_linearized: float
    k0: float
    k: float
    k_linearized: float
    delta_phi: float
    delta_phi_linearized: float
    delta_phi_closed_form: float
    distance: float
    validity_time: float

    def as_dict(self) -> dict:
        return dict(self.__dict__)


def _radicand(eps: float, chi3: float, mean_sq: float) -> float:
    s = eps + 3.0 * chi3 * mean_sq
    if not s > 0:
        raise UnphysicalMediumError(
            f"eps + 3 chi3 <E^2> = {s:.6g} <= 0: effective medium is unphysical"
        )
    return s


def effective_velocity(material: DielectricMaterial, mean_sq: float, omega: float = 1.0) -> Velocity:
    """Exact 1/sqrt(eps + 3 chi3 <E^2>) and v0 (1 - 3 chi3 <E^2> / 2 eps)."""
    eps = float(material.epsilon(omega))
    s = _radicand(eps, material.chi3, mean_sq)
    v0 = 1.0 / math.sqrt(eps)
    return Velocity(v0, 1.0 / math.sqrt(s), v0 * (1.0 - 1.5 * material.chi3 * mean_sq / eps))


def shifted_wavenumber(pulse: ProbePulse, material: DielectricMaterial, mean_sq: float) -> tuple[float, float]:
    """(exact, linearized) wavenumber at unchanged carrier frequency."""
    v = effective_velocity(material, mean_sq, pulse.omega0)
    eps = 1.0 / v.v0**2
    k0 = pulse.omega0 / v.v0
    return pulse.omega0 / v.exact, k0 * (1.0 + 1.5 * material.chi3 * mean_sq / eps)


def validity_time(pulse: ProbePulse, f_max_abs: float) -> float:
    """Largest t for which the first-order WKB expansion holds, 1/(omega0 max|f|)."""
    return math.inf if f_max_abs == 0 else 1.0 / (pulse.omega0 * f_max_abs)


def phase_shift(pulse: ProbePulse, material: DielectricMaterial, mean_sq: float, d: float) -> PropagationResult:
    """Phase accumulated over distance ``d`` relative to the unperturbed probe.

    ``delta_phi`` is (k - k0) d from the exact wavenumber; the linearized
    and 3 pi (chi3/sqrt eps) <E^2> (d/lambda) forms are reported alongside.
    """
    if not d > 0:
        raise ValueError("distance must be positive")
    v = effective_velocity(material, mean_sq, pulse.omega0)
    eps = 1.0 / v.v0**2
    k0 = pulse.omega0 / v.v0
    k_exact, k_lin = shifted_wavenumber(pulse, material, mean_sq)
    lam = 2.0 * math.pi * math.sqrt(eps) / k0
    closed = 3.0 * math.pi * material.chi3 / math.sqrt(eps) * mean_sq * d / lam
    f = 1.5 * material.chi3 * mean_sq / eps
    # k - k0 = omega0 (sqrt s - sqrt eps) without the cancellation
    shift = 3.0 * material.chi3 * mean_sq
    dk = pulse.omega0 * shift / (math.sqrt(eps + shift) + math.sqrt(eps))
    return PropagationResult(
        v0=v.v0,
        v_eff=v.exact,
        v_eff_linearized=v.linearized,
        k0=k0,
        k=k_exact,
        k_linearized=k_lin,
        delta_phi=dk * d,
        delta_phi_linearized=pulse.omega0 * math.sqrt(eps) * f * d,
        delta_phi_closed_form=closed,
        distance=d,
        validity_time=validity_time(pulse, abs(f)),
    )


@dataclass(frozen=True)
class WKBField:
    exponential: np.ndarray
    expanded: np.ndarray
    valid: np.ndarray  # |f| omega0 |t| < 1 pointwise

    @property
    def all_valid(self) -> bool:
        return bool(np.all(self.valid))


def wkb_field(pulse: ProbePulse, modulation: FieldModulation | float, x, t, material: DielectricMaterial | None = None) -> WKBField:
    """E0 exp(i k0 [x - v0 (1 - f) t]) and its first-order expansion.

    ``modulation`` may be a FieldModulation or a constant f.  Points where
    |f| omega0 |t| >= 1 are flagged in ``valid``; both branches are still
    returned there, and callers must check the flag.
    """
    eps = 1.0 if material is None else float(material.epsilon(pulse.omega0))
    k0 = pulse.omega0 * math.sqrt(eps)
    x = np.asarray(x, dtype=float)
    t = np.asarray(t, dtype=float)
    if isinstance(modulation, FieldModulation):
        f = modulation_value(modulation, x, t)
    else:
        f = np.full(np.broadcast(x, t).shape, float(modulation))
    carrier = pulse.amplitude * np.exp(1j * (k0 * x - pulse.omega0 * t))
    exp_branch = carrier * np.exp(1j * pulse.omega0 * f * t)
    lin_branch = carrier * (1.0 + 1j * pulse.omega0 * f * t)
    valid = np.abs(f) * pulse.omega0 * np.abs(t) < 1.0
    return WKBField(exp_branch[()], lin_branch[()], valid[()])


@dataclass(frozen=True)
class ComovingCheck:
    ratio: float
    tolerance: float

    @property
    def ok(self) -> bool:
        return abs(self.ratio - 1.0) <= self.tolerance


def comoving_check(
    mode: SqueezedPlaneWaveMode,
    material: DielectricMaterial,
    pulse: ProbePulse,
    tolerance: float = 1e-3,
) -> ComovingCheck:
    """Ratio of the trough speed Omega/k_b to the probe speed v0 = 1/sqrt(eps(omega0))."""
    v0 = 1.0 / math.sqrt(float(material.epsilon(pulse.omega0)))
    return ComovingCheck(mode.Omega / (mode.k_b * v0), tolerance)


def comoving_wavenumber(Omega: float, material: DielectricMaterial, omega0: float) -> float:
    """k_b for which the background trough travels with the probe."""
    return Omega * math.sqrt(float(material.epsilon(omega0)))


def linearization_ratio(probe_amplitude: float, mean_sq: float) -> float:
    """E_c^2 / |<E_q^2>|, the diagnostic for neglecting the cubic self term."""
    return math.inf if mean_sq == 0 else probe_amplitude**2 / abs(mean_sq)
