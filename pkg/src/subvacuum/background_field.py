"""Squeezed-vacuum background field and the modulation it imprints.

The background is a single plane-wave mode E0 exp[i(k_b x - Omega t)] in a
squeezed vacuum state with real squeeze parameter r.  Its normal-ordered
mean-squared field oscillates about a positive mean and dips below zero
once per half period of the phase ``k_b x - Omega t``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .quantities import DielectricMaterial


class UndefinedRatioError(ZeroDivisionError):
    pass


@dataclass(frozen=True)
class SqueezedPlaneWaveMode:
    E0: float
    Omega: float
    k_b: float
    r: float = 1.0

    def __post_init__(self):
        if self.E0 < 0:
            raise ValueError("E0 must be non-negative")
        if not (self.Omega > 0 and self.k_b > 0):
            raise ValueError("Omega and k_b must be positive")
        if self.r < 0:
            raise ValueError("squeeze parameter r must be non-negative")
        if self.Omega / self.k_b > 1.0 + 1e-12:
            raise ValueError("phase speed Omega/k_b exceeds the vacuum speed of light")

    def phase(self, x, t):
        return self.k_b * np.asarray(x) - self.Omega * np.asarray(t)


@dataclass(frozen=True)
class TwoModeState:
    """Coherent probe |z> times squeezed background |r>."""

    z: float
    background: SqueezedPlaneWaveMode

    def __post_init__(self):
        if self.z < 0:
            raise ValueError("probe amplitude z must be real and non-negative")


@dataclass(frozen=True)
class FieldModulation:
    """f(x, t) = alpha + beta cos[2(k_b x - Omega t)]."""

    alpha: float
    beta: float
    Omega: float
    k_b: float

    def __post_init__(self):
        if self.alpha < 0:
            raise ValueError("alpha must be non-negative")

    def is_subvacuum(self) -> bool:
        return abs(self.beta) > self.alpha

    @property
    def minimum(self) -> float:
        return self.alpha - abs(self.beta)

    @property
    def maximum(self) -> float:
        return self.alpha + abs(self.beta)

    @property
    def max_abs(self) -> float:
        return max(abs(self.minimum), abs(self.maximum))

    def ratio(self) -> float:
        """|beta| / alpha."""
        if self.alpha == 0:
            raise UndefinedRatioError("|beta|/alpha is undefined for alpha = 0")
        return abs(self.beta) / self.alpha

    def scaled(self, factor: float) -> "FieldModulation":
        return FieldModulation(self.alpha * factor, self.beta * factor, self.Omega, self.k_b)


def general_two_mode_mean_squared(mode_value, r):
    """<:E^2:> for a squeezed mode with complex mode-function value ``mode_value``.

    2 sinh r [ |E2|^2 sinh r - Re(E2^2) cosh r ]
    """
    if np.any(np.asarray(r) < 0):
        raise ValueError("r must be non-negative")
    e2 = np.asarray(mode_value, dtype=complex)
    sh, ch = np.sinh(r), np.cosh(r)
    return 2.0 * sh * (np.abs(e2) ** 2 * sh - np.real(e2 * e2) * ch)


def mean_squared_field(mode: SqueezedPlaneWaveMode, x, t):
    # sinh^2 r - sinh r cosh r cos(2 phase): no coth, exact zero at r = 0
    sh, ch = math.sinh(mode.r), math.cosh(mode.r)
    c = np.cos(2.0 * mode.phase(x, t))
    return 2.0 * mode.E0**2 * (sh * sh - sh * ch * c)


def mean_squared_minimum(mode: SqueezedPlaneWaveMode) -> float:
    """Minimum over phase, -E0^2 (1 - exp(-2r))."""
    return -mode.E0**2 * -math.expm1(-2.0 * mode.r)


def mean_squared_average(mode: SqueezedPlaneWaveMode) -> float:
    return 2.0 * mode.E0**2 * math.sinh(mode.r) ** 2


def modulation_from_mode(
    mode: SqueezedPlaneWaveMode,
    material: DielectricMaterial,
    omega_probe: float | None = None,
) -> FieldModulation:
    """alpha, beta of f = (3 chi3 / 2 eps) <E_q^2>.

    ``eps`` is evaluated at the probe frequency when given (the probe's
    equation carries the coupling), otherwise at the mode frequency.
    """
    omega = mode.Omega if omega_probe is None else omega_probe
    eps = float(material.epsilon(omega))
    if not math.isfinite(eps):
        raise ValueError("permittivity is not finite at the requested frequency")
    scale = 3.0 * material.chi3 / eps * mode.E0**2
    sh, ch = math.sinh(mode.r), math.cosh(mode.r)
    return FieldModulation(scale * sh * sh, -scale * sh * ch, mode.Omega, mode.k_b)


def modulation_value(mod: FieldModulation, x, t):
    return mod.alpha + mod.beta * np.cos(2.0 * (mod.k_b * np.asarray(x) - mod.Omega * np.asarray(t)))


@dataclass(frozen=True)
class QuantumInequalityMargin:
    min_value: float
    bound: float
    tau: float
    C: float
    implied_C: float

    @property
    def satisfied(self) -> bool:
        return self.min_value >= self.bound

    @property
    def margin(self) -> float:
        return self.min_value - self.bound


def quantum_inequality_margin(mode: SqueezedPlaneWaveMode, C: float = 1.0) -> QuantumInequalityMargin:
    """Compare min <E_q^2> with -C / tau^4, tau = 1/Omega.

    A failed check flags an unphysical mode amplitude for the given
    frequency rather than an error in the evaluation.
    """
    tau = 1.0 / mode.Omega
    lo = mean_squared_minimum(mode)
    return QuantumInequalityMargin(lo, -C / tau**4, tau, C, abs(lo) * tau**4)
