"""TE modes of a rectangular guide filled with a Kerr dielectric.

The guide has a perfectly conducting a x b cross section and is periodic
with length L along z.  A band of TE_mn modes with wavenumbers in
[k_center - delta_k/2, k_center + delta_k/2] is prepared in a multimode
squeezed vacuum; everything here follows from the mode functions, the
zero-point normalization and the continuum limit sum_k -> (L/2pi) int dk.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import Callable

import numpy as np
from scipy import integrate, optimize

from .quantities import DEFAULT_UNITS, DielectricMaterial, UnitSystem, chi3_from_si

QUAD_EPSREL = 1e-9
# 4 panels x 21-point Gauss-Kronrod = 84 nodes across the band, at least
QUAD_PANELS = 4


class QuadratureError(ArithmeticError):
    pass


class NarrowBandWarning(UserWarning):
    pass


@dataclass(frozen=True)
class WaveguideGeometry:
    a: float
    b: float
    L: float = 1.0

    def __post_init__(self):
        if not (self.a > 0 and self.b > 0 and self.L > 0):
            raise ValueError("waveguide dimensions must be positive")


@dataclass(frozen=True)
class TEModeIndices:
    m: int = 1
    n: int = 1

    def __post_init__(self):
        if int(self.m) != self.m or int(self.n) != self.n or self.m < 1 or self.n < 1:
            raise ValueError("TE mode indices must be positive integers")


@dataclass(frozen=True)
class SqueezeSpectrum:
    """Squeeze parameter r_k over a band of wavenumbers.

    ``r`` is a constant (top-hat band) or a callable of k; it is forced to
    zero outside the band.
    """

    k_center: float
    delta_k: float
    r: float | Callable[[np.ndarray], np.ndarray] = 1.0

    def __post_init__(self):
        if not self.delta_k > 0:
            raise ValueError("delta_k must be positive")
        if not self.delta_k < self.k_center:
            raise ValueError("delta_k must be smaller than k_center")
        if not callable(self.r) and self.r < 0:
            raise ValueError("r must be non-negative")

    @property
    def k_lo(self) -> float:
        return self.k_center - 0.5 * self.delta_k

    @property
    def k_hi(self) -> float:
        return self.k_center + 0.5 * self.delta_k

    @property
    def is_top_hat(self) -> bool:
        return not callable(self.r)

    def r_at(self, k):
        k = np.asarray(k, dtype=float)
        inside = (k >= self.k_lo) & (k <= self.k_hi)
        values = np.full(k.shape, float(self.r)) if self.is_top_hat else np.asarray(self.r(k), dtype=float)
        if np.any(values[inside] < 0):
            raise ValueError("r_of_k must be non-negative on the band")
        return np.where(inside, values, 0.0)[()]

    @property
    def r_center(self) -> float:
        return float(self.r_at(self.k_center))


@dataclass(frozen=True)
class TEModeField:
    B_x: complex
    B_y: complex
    B_z: complex
    E_x: complex
    E_y: complex
    E_z: complex = 0.0


def cutoff_gamma(geom: WaveguideGeometry, idx: TEModeIndices) -> float:
    return math.hypot(math.pi * idx.m / geom.a, math.pi * idx.n / geom.b)


def _self_consistent_omega(kappa: float, material: DielectricMaterial) -> float:
    """Solve omega * sqrt(eps(omega)) = kappa."""
    if material.is_constant:
        return kappa / math.sqrt(material.epsilon_value)
    lo, hi = material.table_omega[0], material.table_omega[-1]
    g = lambda w: w * math.sqrt(float(material.epsilon(w))) - kappa
    # eps is held constant outside the table, so widen until bracketed
    lo = min(lo, kappa / math.sqrt(float(material.epsilon(lo)))) * 0.5
    hi = max(hi, kappa) * 2.0
    return optimize.brentq(g, lo, hi, xtol=1e-15 * max(kappa, 1.0), rtol=1e-15)


def dispersion_omega(geom, idx, k, material: DielectricMaterial):
    """omega = sqrt(gamma^2 + k^2) / sqrt(eps), with eps taken at omega."""
    gamma = cutoff_gamma(geom, idx)
    kappa = np.hypot(gamma, np.asarray(k, dtype=float))
    if material.is_constant:
        return (kappa / math.sqrt(material.epsilon_value))[()]
    return np.vectorize(lambda q: _self_consistent_omega(q, material))(kappa)[()]


def band_center(geom, idx, spectrum: SqueezeSpectrum, material) -> tuple[float, float]:
    """(Omega, eps_bar): frequency at k_center and the permittivity there."""
    omega = float(dispersion_omega(geom, idx, spectrum.k_center, material))
    return omega, float(material.epsilon(omega))


def normalization_B0(geom, idx, k, material) -> float:
    omega = float(dispersion_omega(geom, idx, k, material))
    if not omega > 0:
        raise ValueError("mode frequency must be positive")
    eps = float(material.epsilon(omega))
    return cutoff_gamma(geom, idx) * math.sqrt(2.0 / (geom.a * geom.b * geom.L * eps * omega))


def mode_field_at(geom, idx, k, material, x, y, phi) -> TEModeField:
    """TE_mn field components at (x, y) with longitudinal phase ``phi = kz - wt``.

    Transverse B is (ik/gamma^2) grad_t B_z, so that div E = 0 and the
    tangential E vanishes on the walls.
    """
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    tol = 1e-12 * max(geom.a, geom.b)
    if np.any(x < -tol) or np.any(x > geom.a + tol) or np.any(y < -tol) or np.any(y > geom.b + tol):
        raise ValueError("point lies outside the waveguide cross section")
    gamma = cutoff_gamma(geom, idx)
    omega = float(dispersion_omega(geom, idx, k, material))
    B0 = normalization_B0(geom, idx, k, material)
    p, q = math.pi * idx.m / geom.a, math.pi * idx.n / geom.b
    phase = np.exp(1j * np.asarray(phi))
    cx, sx = np.cos(p * x), np.sin(p * x)
    cy, sy = np.cos(q * y), np.sin(q * y)
    Bz = B0 * cx * cy * phase
    dBz_dx = -B0 * p * sx * cy * phase
    dBz_dy = -B0 * q * cx * sy * phase
    Bx = 1j * k / gamma**2 * dBz_dx
    By = 1j * k / gamma**2 * dBz_dy
    # E_x = (w/k) B_y, E_y = -(w/k) B_x, written to stay finite at k = 0
    Ex = 1j * omega / gamma**2 * dBz_dy
    Ey = -1j * omega / gamma**2 * dBz_dx
    return TEModeField(Bx[()], By[()], Bz[()], Ex[()], Ey[()], 0.0)


def mode_energy_numeric(geom, idx, k, material, n: int = 64) -> float:
    """Midpoint-rule value of (1/2) int (eps |E|^2 + |B|^2) d^3x over one period."""
    omega = float(dispersion_omega(geom, idx, k, material))
    eps = float(material.epsilon(omega))
    xs = (np.arange(n) + 0.5) * geom.a / n
    ys = (np.arange(n) + 0.5) * geom.b / n
    zs = (np.arange(n) + 0.5) * geom.L / n
    X, Y = np.meshgrid(xs, ys, indexing="ij")
    total = 0.0
    for z in zs:
        fld = mode_field_at(geom, idx, k, material, X, Y, k * z)
        density = eps * (abs(fld.E_x) ** 2 + abs(fld.E_y) ** 2) + (
            abs(fld.B_x) ** 2 + abs(fld.B_y) ** 2 + abs(fld.B_z) ** 2
        )
        total += density.sum()
    cell = geom.a * geom.b * geom.L / n**3
    return 0.5 * total * cell


# ---------------------------------------------------------------------------
# band integrals


def _quad_band(fun, spectrum: SqueezeSpectrum, what: str) -> float:
    edges = np.linspace(spectrum.k_lo, spectrum.k_hi, QUAD_PANELS + 1)
    total = 0.0
    for lo, hi in zip(edges[:-1], edges[1:]):
        res = integrate.quad(fun, lo, hi, epsrel=QUAD_EPSREL, epsabs=0.0, limit=200, full_output=1)
        value, err, info = res[:3]
        if len(res) > 3 or not math.isfinite(value):
            raise QuadratureError(
                f"{what}: k integral did not converge on [{lo:.6g}, {hi:.6g}] "
                f"(value={value:.6g}, error estimate={err:.3g}, subdivisions={info['last']}): "
                + (res[3] if len(res) > 3 else "non-finite result")
            )
        total += value
    return total


def _band_omega(geom, idx, material, spectrum):
    gamma = cutoff_gamma(geom, idx)
    _, eps_bar = band_center(geom, idx, spectrum, material)
    return gamma, eps_bar, (lambda k: math.sqrt(gamma * gamma + k * k) / math.sqrt(eps_bar))


def band_integral(geom, idx, spectrum, material, z=0.0, t=0.0) -> float:
    """int dk (omega/eps) sinh r_k [sinh r_k - cosh r_k cos(kz - omega t)]."""
    _, eps_bar, omega_of = _band_omega(geom, idx, material, spectrum)

    def integrand(k):
        r = float(spectrum.r_at(k))
        w = omega_of(k)
        sh, ch = math.sinh(r), math.cosh(r)
        return w / eps_bar * sh * (sh - ch * math.cos(k * z - w * t))

    return _quad_band(integrand, spectrum, "mean-squared field")


def transverse_profile(geom, idx, x, y):
    """Bracketed sin^2/cos^2 combination; its cross-section average is gamma^2/4."""
    p, q = math.pi * idx.m / geom.a, math.pi * idx.n / geom.b
    x, y = np.asarray(x, dtype=float), np.asarray(y, dtype=float)
    return (
        p * p * np.sin(p * x) ** 2 * np.cos(q * y) ** 2
        + q * q * np.cos(p * x) ** 2 * np.sin(q * y) ** 2
    )


def mean_sq_field_local(geom, idx, spectrum, material, x, y, z=0.0, t=0.0):
    gamma = cutoff_gamma(geom, idx)
    # 4/(a b L gamma^2) * (L / 2 pi) int dk ...
    pref = 2.0 / (math.pi * geom.a * geom.b * gamma**2)
    return pref * transverse_profile(geom, idx, x, y) * band_integral(geom, idx, spectrum, material, z, t)


def mean_sq_field_avg(geom, idx, spectrum, material, z=0.0, t=0.0) -> float:
    return band_integral(geom, idx, spectrum, material, z, t) / (2.0 * math.pi * geom.a * geom.b)


def min_mean_sq(geom, idx, spectrum, material, warn_fraction: float = 0.1) -> float:
    """Narrow-band closed form for the cross-section-averaged minimum."""
    if spectrum.delta_k / spectrum.k_center > warn_fraction:
        warnings.warn(
            f"delta_k/k_center = {spectrum.delta_k / spectrum.k_center:.3g}: narrow-band "
            "closed form degrades",
            NarrowBandWarning,
            stacklevel=2,
        )
    Omega, eps_bar = band_center(geom, idx, spectrum, material)
    r = spectrum.r_center
    s = math.sinh(r) * math.exp(-r)  # sinh r (cosh r - sinh r)
    return -Omega * spectrum.delta_k / (2.0 * math.pi * geom.a * geom.b * eps_bar) * s


def coupling_G(geom, idx, spectrum, material) -> float:
    Omega, eps_bar = band_center(geom, idx, spectrum, material)
    return 3.0 * material.chi3 * Omega * spectrum.delta_k / (4.0 * math.pi * geom.a * geom.b * eps_bar**2)


def modulation_coefficients(G: float, r: float) -> tuple[float, float]:
    """(alpha, |beta|) = (G sinh^2 r, G sinh r cosh r)."""
    if r < 0:
        raise ValueError("r must be non-negative")
    sh = math.sinh(r)
    return G * sh * sh, G * sh * math.cosh(r)


def modulation_difference(G: float, r: float) -> float:
    """|beta| - alpha = G (1 - exp(-2r)) / 2, without cancellation."""
    return -0.5 * G * math.expm1(-2.0 * r)


def beta_estimate(
    chi3_si: float,
    dk_over_Omega: float,
    omega0_over_dwp: float,
    lambda_b: float,
    area: float,
    eps: float = 1.0,
    units: UnitSystem = DEFAULT_UNITS,
) -> float:
    """(omega0 / dw_p) |beta| with |beta| ~ G.

    ``lambda_b`` is the background wavelength inside the medium and ``area``
    the cross section a*b, both in metres; chi3 is in m^2 V^-2.
    """
    for name, v in (("chi3", chi3_si), ("dk/Omega", dk_over_Omega), ("omega0/dw_p", omega0_over_dwp),
                    ("lambda_b", lambda_b), ("area", area), ("eps", eps)):
        if not v > 0:
            raise ValueError(f"{name} must be positive")
    chi3 = chi3_from_si(chi3_si, units)
    Omega = 2.0 * math.pi / (lambda_b * math.sqrt(eps))
    G = 3.0 * chi3 * Omega * (dk_over_Omega * Omega) / (4.0 * math.pi * area * eps**2)
    return omega0_over_dwp * G


# ---------------------------------------------------------------------------
# quantum inequality


@dataclass(frozen=True)
class QIReport:
    lhs_min: float
    integral_bound: float
    omega2_bound: float
    gamma2_mn_bound: float
    gamma2_bound: float
    omega4_bound: float
    Omega: float
    eps_bar: float
    implied_C: float

    @property
    def bound_chain(self) -> list[float]:
        return [self.integral_bound, self.omega2_bound, -self.gamma2_bound, -self.omega4_bound]

    def checks(self) -> dict[str, bool]:
        return {
            "min >= -(1/pi ab) int omega/eps dk": self.lhs_min >= self.integral_bound,
            "integral bound >= -Omega^2/(pi ab sqrt eps)": self.integral_bound >= self.omega2_bound,
            "Omega^2/(pi ab sqrt eps) <= gamma^2 Omega^2/(pi^3 m n sqrt eps)": -self.omega2_bound <= self.gamma2_mn_bound,
            "gamma^2 Omega^2/(pi^3 m n sqrt eps) <= gamma^2 Omega^2/(pi^3 sqrt eps)": self.gamma2_mn_bound <= self.gamma2_bound,
            "gamma^2 Omega^2/(pi^3 sqrt eps) < sqrt(eps) Omega^4/pi^3": self.gamma2_bound < self.omega4_bound,
            "C < 1": self.implied_C < 1.0,
        }

    @property
    def satisfied(self) -> bool:
        return all(self.checks().values())

    def as_dict(self) -> dict:
        return {
            "lhs_min": self.lhs_min,
            "bound_chain": self.bound_chain,
            "integral_bound": self.integral_bound,
            "omega2_bound": self.omega2_bound,
            "gamma2_mn_bound": self.gamma2_mn_bound,
            "gamma2_bound": self.gamma2_bound,
            "omega4_bound": self.omega4_bound,
            "Omega": self.Omega,
            "eps_bar": self.eps_bar,
            "tau": 1.0 / self.Omega,
            "implied_C": self.implied_C,
            "checks": self.checks(),
            "satisfied": self.satisfied,
        }


def local_minimum(geom, idx, spectrum, material) -> float:
    """Minimum of the local <E_q^2> over the cross section and over z, t.

    Every k term is smallest where cos(kz - wt) = 1, i.e. at z = t = 0, and
    the transverse bracket is bilinear in sin^2 x, sin^2 y, so its maximum
    sits on a corner of the unit square: max((pi m/a)^2, (pi n/b)^2).
    """
    gamma = cutoff_gamma(geom, idx)
    peak = max((math.pi * idx.m / geom.a) ** 2, (math.pi * idx.n / geom.b) ** 2)
    value = band_integral(geom, idx, spectrum, material, 0.0, 0.0)
    pref = 2.0 / (math.pi * geom.a * geom.b * gamma**2)
    return pref * (peak if value < 0 else 0.0) * value


def qi_verify(geom, idx, spectrum, material) -> QIReport:
    Omega, eps_bar = band_center(geom, idx, spectrum, material)
    gamma = cutoff_gamma(geom, idx)
    _, _, omega_of = _band_omega(geom, idx, material, spectrum)
    lhs = local_minimum(geom, idx, spectrum, material)
    ab = geom.a * geom.b
    freq_integral = _quad_band(lambda k: omega_of(k) / eps_bar, spectrum, "quantum inequality")
    se = math.sqrt(eps_bar)
    return QIReport(
        lhs_min=lhs,
        integral_bound=-freq_integral / (math.pi * ab),
        omega2_bound=-Omega**2 / (math.pi * ab * se),
        gamma2_mn_bound=gamma**2 * Omega**2 / (math.pi**3 * idx.m * idx.n * se),
        gamma2_bound=gamma**2 * Omega**2 / (math.pi**3 * se),
        omega4_bound=se * Omega**4 / math.pi**3,
        Omega=Omega,
        eps_bar=eps_bar,
        implied_C=abs(lhs) * Omega**-4,
    )
