"""Frequency and power spectra of the modulated probe, and their features.

Conventions: the probe carries exp(-i omega0 t) and spectra use the kernel
exp(+i omega t), so the central peak sits at +omega0 and the traveling
modulation produces derivative-shaped side bands at omega0 -/+ 2 Omega.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np
from scipy import integrate
from scipy.interpolate import CubicSpline

from .background_field import FieldModulation
from .propagation import ProbePulse


class ResolutionError(ValueError):
    pass


class WindowOverlapError(ValueError):
    pass


class AliasingError(ValueError):
    pass


class SpectrumWarning(UserWarning):
    pass


# ---------------------------------------------------------------------------
# line shapes


def lorentzian(omega, delta_omega_p):
    """Unit-area Lorentzian of half width ``delta_omega_p``."""
    if not delta_omega_p > 0:
        raise ValueError("delta_omega_p must be positive")
    w = np.asarray(omega, dtype=float)
    return (delta_omega_p / (math.pi * (delta_omega_p**2 + w * w)))[()]


def lorentzian_derivative(omega, delta_omega_p):
    w = np.asarray(omega, dtype=float)
    return (-2.0 * delta_omega_p * w / (math.pi * (delta_omega_p**2 + w * w) ** 2))[()]


@dataclass(frozen=True)
class LineShape:
    """Symmetric, unit-area probe line shape g and its derivative.

    ``kind`` is "lorentzian" (closed form) or "sampled", in which case
    ``samples`` holds (offset, g) on a symmetric grid and g is taken as
    zero outside it.
    """

    delta_omega_p: float
    kind: str = "lorentzian"
    samples: tuple[tuple[float, ...], tuple[float, ...]] | None = None

    def __post_init__(self):
        if not self.delta_omega_p > 0:
            raise ValueError("delta_omega_p must be positive")
        if self.kind not in ("lorentzian", "sampled"):
            raise ValueError(f"unknown line shape {self.kind!r}")
        if self.kind == "sampled":
            nu, g = (np.asarray(a, dtype=float) for a in self.samples)
            if not np.allclose(nu, -nu[::-1], rtol=0, atol=1e-12 * np.abs(nu).max()):
                raise ValueError("sampled line shape must be given on a symmetric grid")
            if not np.allclose(g, g[::-1], rtol=1e-9, atol=0):
                raise ValueError("sampled line shape must be symmetric")
            area = CubicSpline(nu, g).integrate(nu[0], nu[-1])
            if abs(area - 1.0) > 1e-6:
                raise ValueError(f"sampled line shape has area {area:.9g}, expected 1")

    @classmethod
    def sampled(cls, offsets, values, delta_omega_p) -> "LineShape":
        return cls(delta_omega_p, "sampled", (tuple(map(float, offsets)), tuple(map(float, values))))

    @cached_property
    def _spline(self):
        nu, g = (np.asarray(a, dtype=float) for a in self.samples)
        return CubicSpline(nu, g)

    @property
    def support(self) -> float:
        return math.inf if self.kind == "lorentzian" else float(self.samples[0][-1])

    def __call__(self, nu):
        if self.kind == "lorentzian":
            return lorentzian(nu, self.delta_omega_p)
        nu = np.asarray(nu, dtype=float)
        return np.where(np.abs(nu) <= self.support, self._spline(nu), 0.0)[()]

    def derivative(self, nu):
        if self.kind == "lorentzian":
            return lorentzian_derivative(nu, self.delta_omega_p)
        nu = np.asarray(nu, dtype=float)
        return np.where(np.abs(nu) <= self.support, self._spline(nu, 1), 0.0)[()]

    @property
    def peak(self) -> float:
        return float(self(0.0))

    # window integrals used for truncation corrections -------------------

    def window_area(self, W: float) -> float:
        """int_{-W}^{W} g."""
        if self.kind == "lorentzian":
            return 2.0 / math.pi * math.atan(W / self.delta_omega_p)
        W = min(W, self.support)
        return float(self._spline.integrate(-W, W))

    def window_drop(self, W: float) -> float:
        """g(0) - g(W) = int_{-W}^{0} g'."""
        return self.peak - float(self(W))

    def _quad(self, fun, W):
        lim = min(W, self.support)
        if math.isinf(lim):
            v = integrate.quad(fun, 0.0, np.inf, epsabs=0, epsrel=1e-12, limit=400)[0]
        else:
            brk = np.linspace(0.0, lim, 9)
            v = sum(integrate.quad(fun, lo, hi, epsabs=0, epsrel=1e-12, limit=400)[0]
                    for lo, hi in zip(brk[:-1], brk[1:]))
        return 2.0 * v

    def square_integral(self, W: float = math.inf) -> float:
        """int_{-W}^{W} g^2."""
        if self.kind == "lorentzian":
            D = self.delta_omega_p
            if math.isinf(W):
                return 1.0 / (2.0 * math.pi * D)
            return D * D / math.pi**2 * (W / (D * D * (D * D + W * W)) + math.atan(W / D) / D**3)
        return self._quad(lambda v: float(self(v)) ** 2, W)

    def derivative_square_integral(self, W: float = math.inf) -> float:
        """int_{-W}^{W} g'^2."""
        if self.kind == "lorentzian" and math.isinf(W):
            return 1.0 / (4.0 * math.pi * self.delta_omega_p**3)
        return self._quad(lambda v: float(self.derivative(v)) ** 2, W)


# ---------------------------------------------------------------------------
# spectra containers


@dataclass
class FrequencySpectrum:
    omega: np.ndarray
    amplitude: np.ndarray  # real part of E_hat after carrier demodulation
    omega0: float
    Omega: float
    lineshape: LineShape
    amplitude_scale: float | None = None  # E0 when known
    alpha: float | None = None
    beta: float | None = None
    complex_amplitude: np.ndarray | None = None
    warnings: list[str] = field(default_factory=list)

    def __post_init__(self):
        self.omega = np.asarray(self.omega, dtype=float)
        self.amplitude = np.asarray(self.amplitude, dtype=float)
        if self.omega.shape != self.amplitude.shape:
            raise ValueError("omega and amplitude must have the same shape")
        if np.any(np.diff(self.omega) <= 0):
            raise ValueError("frequency grid must be strictly increasing")

    @property
    def delta_omega_p(self) -> float:
        return self.lineshape.delta_omega_p

    def metadata(self) -> dict:
        return {
            "omega0": self.omega0,
            "Omega": self.Omega,
            "delta_omega_p": self.delta_omega_p,
            "lineshape": self.lineshape.kind,
            "E0": self.amplitude_scale,
            "alpha": self.alpha,
            "beta": self.beta,
        }

    def power(self) -> "PowerSpectrum":
        """P = |E_hat|^2 / 2 pi from this spectrum."""
        values = self.complex_amplitude if self.complex_amplitude is not None else self.amplitude
        return PowerSpectrum(
            self.omega, np.abs(values) ** 2 / (2.0 * math.pi), self.omega0, self.Omega, self.lineshape,
            self.amplitude_scale, self.alpha, self.beta, list(self.warnings),
        )


@dataclass
class PowerSpectrum:
    omega: np.ndarray
    power: np.ndarray
    omega0: float
    Omega: float
    lineshape: LineShape
    amplitude_scale: float | None = None
    alpha: float | None = None
    beta: float | None = None
    warnings: list[str] = field(default_factory=list)

    @property
    def delta_omega_p(self) -> float:
        return self.lineshape.delta_omega_p

    def metadata(self) -> dict:
        return FrequencySpectrum.metadata(self)  # same fields


# ---------------------------------------------------------------------------
# grids and integration


def default_grid(omega0: float, Omega: float, delta_omega_p: float, points_per_width: int = 64,
                 patch_widths: float = 40.0, max_uniform: int = 400_000) -> np.ndarray:
    """Grid over [omega0 - 3 Omega, omega0 + 3 Omega] (or wider) resolving every feature.

    The left edge lies at least ten widths beyond the lower side band.
    Uniform when affordable, otherwise dense patches around the three
    features joined by a coarser filler.
    """
    D = delta_omega_p
    pad = max(Omega, 12.0 * D)
    lo, hi = omega0 - 2.0 * Omega - pad, omega0 + 2.0 * Omega + pad
    h = D / points_per_width
    if (hi - lo) / h <= max_uniform:
        n = int(math.ceil((omega0 - lo) / h))
        m = int(math.ceil((hi - omega0) / h))
        return omega0 + h * np.arange(-n, m + 1)
    pieces = []
    for c in (omega0 - 2.0 * Omega, omega0, omega0 + 2.0 * Omega):
        k = int(patch_widths * points_per_width)
        pieces.append(c + h * np.arange(-k, k + 1))
    filler = np.geomspace(1.0, 1.0 + (hi - lo), 4000) - 1.0 + lo
    grid = np.unique(np.concatenate(pieces + [filler, [hi]]))
    return grid


def integrate_on_grid(omega: np.ndarray, values: np.ndarray, lo: float, hi: float) -> float:
    """Integral of the cubic interpolant of ``values`` over [lo, hi]."""
    lo = max(lo, omega[0])
    hi = min(hi, omega[-1])
    if hi <= lo:
        return 0.0
    i0 = max(np.searchsorted(omega, lo) - 4, 0)
    i1 = min(np.searchsorted(omega, hi) + 4, omega.size)
    return float(CubicSpline(omega[i0:i1], values[i0:i1]).integrate(lo, hi))


def _check_resolution(omega: np.ndarray, center: float, D: float, n_window: float = 5.0) -> None:
    mask = np.abs(omega - center) <= n_window * D
    if mask.sum() < 2 or np.max(np.diff(omega[mask])) > D / 16.0:
        raise ResolutionError("grid has fewer than 16 points per probe line width near the peak")


# ---------------------------------------------------------------------------
# analytic spectra


def analytic_frequency_spectrum(pulse: ProbePulse, modulation: FieldModulation, lineshape: LineShape | None = None,
                                grid: np.ndarray | None = None) -> FrequencySpectrum:
    """2 pi E0 { g + w0 alpha g' + (w0 beta / 2)[g'(. + 2 Omega) + g'(. - 2 Omega)] }."""
    if lineshape is None:
        if pulse.delta_omega_p is None:
            raise ValueError("probe bandwidth is required for a spectrum")
        lineshape = LineShape(pulse.delta_omega_p)
    D, w0, Om = lineshape.delta_omega_p, pulse.omega0, modulation.Omega
    omega = default_grid(w0, Om, D) if grid is None else np.asarray(grid, dtype=float)
    _check_resolution(omega, w0, D)
    notes = []
    if 2.0 * Om < 10.0 * D:
        msg = f"side bands at 2 Omega = {2 * Om:.4g} are not well separated from the width {D:.4g}"
        warnings.warn(msg, SpectrumWarning, stacklevel=2)
        notes.append(msg)
    nu = omega - w0
    a, b = modulation.alpha, modulation.beta
    amp = 2.0 * math.pi * pulse.amplitude * (
        lineshape(nu)
        + w0 * a * lineshape.derivative(nu)
        + 0.5 * w0 * b * (lineshape.derivative(nu + 2.0 * Om) + lineshape.derivative(nu - 2.0 * Om))
    )
    return FrequencySpectrum(omega, amp, w0, Om, lineshape, pulse.amplitude, a, b, warnings=notes)


def analytic_power_spectrum(pulse: ProbePulse, modulation: FieldModulation, lineshape: LineShape | None = None,
                            grid: np.ndarray | None = None) -> PowerSpectrum:
    """Power spectrum with side-band cross terms dropped.

    The dropped terms are measured against |E_hat|^2/2pi on the same grid
    and a warning is attached when they exceed 1% of the retained ones.
    """
    spec = analytic_frequency_spectrum(pulse, modulation, lineshape, grid)
    ls, w0, Om = spec.lineshape, spec.omega0, spec.Omega
    nu = spec.omega - w0
    a, b = modulation.alpha, modulation.beta
    g, dg = ls(nu), ls.derivative(nu)
    side = ls.derivative(nu + 2.0 * Om) ** 2 + ls.derivative(nu - 2.0 * Om) ** 2
    P = 2.0 * math.pi * pulse.amplitude**2 * (
        g * g + 2.0 * w0 * a * g * dg + (w0 * a) ** 2 * dg * dg + 0.25 * (w0 * b) ** 2 * side
    )
    notes = list(spec.warnings)
    if w0 * a > 0.5 * ls.delta_omega_p:
        notes.append("omega0*alpha exceeds delta_omega_p/2: positivity of P is not guaranteed")
    full = spec.amplitude**2 / (2.0 * math.pi)
    dropped = integrate_on_grid(spec.omega, np.abs(full - P), spec.omega[0], spec.omega[-1])
    kept = integrate_on_grid(spec.omega, np.abs(P), spec.omega[0], spec.omega[-1])
    if dropped > 0.01 * kept:
        notes.append(f"neglected cross terms are {dropped / kept:.2%} of the retained terms")
    for n in notes[len(spec.warnings):]:
        warnings.warn(n, SpectrumWarning, stacklevel=2)
    return PowerSpectrum(spec.omega, P, w0, Om, ls, pulse.amplitude, a, b, notes)


# ---------------------------------------------------------------------------
# numerical spectra


def lorentzian_wkb_time_series(pulse: ProbePulse, modulation: FieldModulation, t, branch: str = "expanded"):
    """E_c(0, t) for a packet whose line shape is Lorentzian.

    The envelope exp(-dw_p |t|) has Fourier transform 2 pi g, so the
    expanded branch reproduces the analytic spectrum exactly.
    """
    t = np.asarray(t, dtype=float)
    D = pulse.delta_omega_p
    f = modulation.alpha + modulation.beta * np.cos(2.0 * modulation.Omega * t)
    base = pulse.amplitude * np.exp(-1j * pulse.omega0 * t - D * np.abs(t))
    if branch == "expanded":
        return base * (1.0 + 1j * pulse.omega0 * f * t)
    if branch == "exponential":
        return base * np.exp(1j * pulse.omega0 * f * t)
    raise ValueError(f"unknown branch {branch!r}")


def analytic_signal(x, axis: int = -1):
    """Complex signal holding twice the exp(-i w t), w > 0, content of a real record."""
    x = np.asarray(x, dtype=float)
    X = np.fft.fft(x, axis=axis)
    freqs = np.fft.fftfreq(x.shape[axis])
    shape = [1] * x.ndim
    shape[axis] = -1
    # numpy's forward kernel is exp(-i...), so exp(-i w t) sits at negative bins
    weight = np.where(freqs < 0, 2.0, np.where(freqs == 0, 1.0, 0.0)).reshape(shape)
    return np.fft.ifft(X * weight, axis=axis)


def dft_spectrum(
    time_series,
    dt: float,
    t0: float = 0.0,
    omega0: float | None = None,
    Omega: float = 0.0,
    lineshape: LineShape | None = None,
    pad_to: int | None = None,
    demodulate: bool = True,
    alias_tolerance: float = 1e-8,
) -> FrequencySpectrum:
    """Discrete approximation of int exp(i w t) E(t) dt on the FFT grid.

    ``t0`` is the time of the first sample.  The record is zero padded to
    ``pad_to`` samples (flat window).  With ``demodulate`` the spectrum is
    rotated so that it is real and positive at the bin nearest ``omega0``.
    """
    e = np.asarray(time_series, dtype=complex)
    n = e.size if pad_to is None else int(pad_to)
    if n < e.size:
        raise ValueError("pad_to must not truncate the record")
    # sum_j E_j exp(+i w_k t_j) = N * ifft
    spec = np.fft.ifft(e, n=n) * n * dt
    w = 2.0 * math.pi * np.fft.fftfreq(n, d=dt)
    spec = np.fft.fftshift(spec * np.exp(1j * w * t0))
    w = np.fft.fftshift(w)
    power = np.abs(spec) ** 2
    edge = np.abs(w) >= 0.9 * np.abs(w).max()
    if power[edge].sum() > alias_tolerance * power.sum():
        raise AliasingError(
            f"{power[edge].sum() / power.sum():.3g} of the power lies within 10% of the Nyquist frequency"
        )
    if omega0 is None:
        omega0 = float(w[np.argmax(power)])
    if demodulate:
        i0 = int(np.argmin(np.abs(w - omega0)))
        spec = spec * np.exp(-1j * np.angle(spec[i0]))
    if lineshape is None:
        lineshape = LineShape(max(2.0 * math.pi / (n * dt), 1e-300))
    return FrequencySpectrum(w, spec.real, omega0, Omega, lineshape, complex_amplitude=spec)


@dataclass(frozen=True)
class ParsevalCheck:
    time_energy: float
    frequency_energy: float

    @property
    def relative_error(self) -> float:
        return abs(self.time_energy - self.frequency_energy) / self.time_energy


def parseval_check(time_series, dt: float, spectrum: FrequencySpectrum) -> ParsevalCheck:
    """sum |E|^2 dt against (1/2pi) sum |E_hat|^2 dw on the DFT grid."""
    e = np.asarray(time_series)
    Ehat = spectrum.complex_amplitude
    dw = spectrum.omega[1] - spectrum.omega[0]
    return ParsevalCheck(float(np.sum(np.abs(e) ** 2) * dt), float(np.sum(np.abs(Ehat) ** 2) * dw / (2.0 * math.pi)))


# ---------------------------------------------------------------------------
# features


@dataclass
class SpectralFeatures:
    n_window: float
    A_L: float | None = None
    A_R: float | None = None
    A_S: float | None = None
    A_C: float | None = None
    A_L_window: float | None = None
    A_R_window: float | None = None
    A_S_edge: float | None = None
    u_L: float | None = None
    u_R: float | None = None
    u_S: float | None = None
    u_S_raw: float | None = None
    u_S_lower: float | None = None
    u_S_upper: float | None = None
    u_C: float | None = None
    u_L_window: float | None = None
    u_R_window: float | None = None
    omega0: float | None = None
    delta_omega_p: float | None = None

    def merged(self, other: "SpectralFeatures") -> "SpectralFeatures":
        out = SpectralFeatures(self.n_window)
        for k, v in self.__dict__.items():
            ov = other.__dict__[k]
            out.__dict__[k] = v if v is not None else ov
        return out

    def ratios(self) -> dict:
        out = {}
        if self.A_C:
            out["A_S/A_C"] = self.A_S / self.A_C
            out["(A_L-A_R)/A_C"] = (self.A_L - self.A_R) / self.A_C
        if self.u_C:
            out["(u_L-u_R)/u_C"] = (self.u_L - self.u_R) / self.u_C
            out["u_S/u_C"] = self.u_S / self.u_C
        return out

    def as_dict(self) -> dict:
        d = dict(self.__dict__)
        d["ratios"] = self.ratios()
        return d


def _validate_window(n_window: float, D: float, Omega: float) -> float:
    if not n_window > 1:
        raise WindowOverlapError("n_window must exceed 1")
    if not n_window * D < 0.2 * (2.0 * Omega):
        raise WindowOverlapError(
            f"integration window n*dw_p = {n_window * D:.4g} overlaps the side bands (2 Omega = {2 * Omega:.4g})"
        )
    return n_window * D


def extract_frequency_features(spectrum: FrequencySpectrum, n_window: float = 5.0) -> SpectralFeatures:
    """Areas of the central peak halves and of one positive side-band lobe.

    Window integrals are corrected for the part of the line shape lying
    outside the window, so A_C -> 2 pi E0 and A_L - A_R -> 4 pi E0 w0 alpha
    g(0).  A_S comes from the odd part of each side-band doublet, averaged
    over both side bands, which cancels the smooth tail of the central
    peak; the raw integral from the grid edge is kept as ``A_S_edge``.
    """
    ls, w0, Om = spectrum.lineshape, spectrum.omega0, spectrum.Omega
    W = _validate_window(n_window, ls.delta_omega_p, Om)
    om, amp = spectrum.omega, spectrum.amplitude
    _check_resolution(om, w0, ls.delta_omega_p, n_window)
    left = integrate_on_grid(om, amp, w0 - W, w0)
    right = integrate_on_grid(om, amp, w0, w0 + W)
    A_C = (left + right) / ls.window_area(W)
    asym = (left - right) * ls.peak / ls.window_drop(W)
    odd = []
    for ws in (w0 - 2.0 * Om, w0 + 2.0 * Om):
        odd.append(integrate_on_grid(om, amp, ws - W, ws) - integrate_on_grid(om, amp, ws, ws + W))
    A_S = 0.5 * abs(0.5 * (odd[0] + odd[1])) * ls.peak / ls.window_drop(W)
    edge = abs(integrate_on_grid(om, amp, om[0], w0 - 2.0 * Om))
    return SpectralFeatures(
        n_window, A_L=0.5 * (A_C + asym), A_R=0.5 * (A_C - asym), A_S=A_S, A_C=A_C,
        A_L_window=left, A_R_window=right, A_S_edge=edge, omega0=w0, delta_omega_p=ls.delta_omega_p,
    )


def extract_power_features(spectrum: PowerSpectrum, n_window: float = 5.0) -> SpectralFeatures:
    """Energies on each side of the central peak and in one side-band lobe.

    The windowed energies are matched to the model
    2 pi E0^2 [g^2 + 2 y g g' + y^2 g'^2] (y = w0 alpha), giving E0^2 and y
    and hence the untruncated u_L, u_R and u_C = 2 pi E0^2 int g^2.  u_S is
    the mean energy of the two outer side-band lobes (below omega0 - 2 Omega
    and above omega0 + 2 Omega) after removing the fitted central-peak tail.
    ``u_S_raw`` is the uncorrected lower-lobe integral.
    """
    ls, w0, Om = spectrum.lineshape, spectrum.omega0, spectrum.Omega
    W = _validate_window(n_window, ls.delta_omega_p, Om)
    om, P = spectrum.omega, spectrum.power
    _check_resolution(om, w0, ls.delta_omega_p, n_window)
    left = integrate_on_grid(om, P, w0 - W, w0)
    right = integrate_on_grid(om, P, w0, w0 + W)
    s, d = left + right, left - right
    I0 = ls.square_integral(W)
    I1 = 0.5 * (ls.peak**2 - float(ls(W)) ** 2)
    I2 = ls.derivative_square_integral(W)
    rho = d / s
    if rho == 0:
        y = 0.0
    else:
        disc = 16.0 * I1 * I1 - 4.0 * rho * rho * I0 * I2
        if disc < 0:
            raise ValueError("central-peak asymmetry is too large for the first-order model")
        y = (4.0 * I1 - math.sqrt(disc)) / (2.0 * rho * I2)
    e2 = s / (2.0 * math.pi * (I0 + y * y * I2))
    I0_inf = ls.square_integral()
    I2_inf = ls.derivative_square_integral()
    base = 2.0 * math.pi * e2
    u_L = base * (0.5 * I0_inf + y * ls.peak**2 + 0.5 * y * y * I2_inf)
    u_R = base * (0.5 * I0_inf - y * ls.peak**2 + 0.5 * y * y * I2_inf)
    # Outer lobes of both side bands, each less the fitted central-peak tail.
    # The tail-sideband cross term has opposite signs on the two outer lobes
    # and cancels in their mean.
    tail = lambda nu: (float(ls(nu)) + y * float(ls.derivative(nu))) ** 2  # noqa: E731

    def leak(a, b):
        return base * integrate.quad(tail, a, b, limit=200, epsabs=0.0, epsrel=1e-10)[0]

    lower_raw = integrate_on_grid(om, P, om[0], w0 - 2.0 * Om)
    upper_raw = integrate_on_grid(om, P, w0 + 2.0 * Om, om[-1])
    lower = lower_raw - leak(om[0] - w0, -2.0 * Om)
    upper = upper_raw - leak(2.0 * Om, om[-1] - w0)
    return SpectralFeatures(
        n_window, u_L=u_L, u_R=u_R, u_S=0.5 * (lower + upper), u_S_raw=lower_raw,
        u_S_lower=lower, u_S_upper=upper, u_C=base * I0_inf, u_L_window=left, u_R_window=right,
        omega0=w0, delta_omega_p=ls.delta_omega_p,
    )


@dataclass(frozen=True)
class SubvacuumTest:
    ratio: float | None  # |beta|/alpha, None when A_L = A_R
    subvacuum_present: bool


def ratio_beta_alpha(features: SpectralFeatures, rtol: float = 1e-6) -> SubvacuumTest:
    """|beta|/alpha = 4 A_S / (A_L - A_R) and the strict test 4 A_S > A_L - A_R.

    ``rtol`` absorbs extraction round-off so that |beta| = alpha is
    classified as no subvacuum effect.
    """
    diff = features.A_L - features.A_R
    scale = rtol * features.A_C
    if abs(diff) <= scale:
        return SubvacuumTest(None, features.A_S > scale)
    ratio = 4.0 * features.A_S / diff
    return SubvacuumTest(ratio, 4.0 * features.A_S > diff * (1.0 + rtol))


def parameters_from_features(features: SpectralFeatures) -> dict:
    """alpha, |beta| implied by the Lorentzian closed forms, from both spectra."""
    out = {}
    x = features.omega0 / features.delta_omega_p
    if features.A_C:
        out["alpha_from_A"] = math.pi / 2.0 * (features.A_L - features.A_R) / features.A_C / x
        out["beta_from_A"] = 2.0 * math.pi * features.A_S / features.A_C / x
    if features.u_C:
        out["alpha_from_u"] = math.pi / 4.0 * (features.u_L - features.u_R) / features.u_C / x
        out["beta_from_u"] = 4.0 * math.sqrt(features.u_S / features.u_C) / x
    return out
