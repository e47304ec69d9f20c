"""Leapfrog kernels for  d2E/dx2 = s(x, t) d2E/dt2 + chi3 d2(E^3)/dt2.

s(x, t) = eps [1 + 2 alpha + 2 beta cos(2 k_b (x - x_ref) - 2 Omega t)].
The cosine is split as c_x cos(2 Omega t) + s_x sin(2 Omega t) with the
spatial factors precomputed, so a step costs no transcendental calls per
cell.

Two interchangeable implementations: a numba-compiled loop and a
vectorized numpy version.  Set SUBVACUUM_DISABLE_NUMBA=1 (or run without
numba installed) to use numpy.
"""

from __future__ import annotations

import math
import os

import numpy as np

try:
    import numba
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None

NUMBA_AVAILABLE = numba is not None
DISABLED = os.environ.get("SUBVACUUM_DISABLE_NUMBA", "").strip().lower() in ("1", "true", "yes", "on")
USE_NUMBA = NUMBA_AVAILABLE and not DISABLED

# status codes
OK = 0
UNSTABLE = 1

NEWTON_ITERATIONS = 4


def _advance_numpy(e_prev, e_cur, t0, dt, dx, n_steps, eps, alpha, beta, Omega, cos_x, sin_x,
                   chi3, cubic, probes, series, growth_limit, check_every):
    e_prev = e_prev.copy()
    e_cur = e_cur.copy()
    ref = max(np.abs(e_cur).max(), np.abs(e_prev).max())
    lam = dt * dt / (dx * dx)
    base = eps * (1.0 + 2.0 * alpha)
    amp = 2.0 * eps * beta
    for i in range(probes.size):
        series[0, i] = e_cur[probes[i]]
    for n in range(n_steps):
        t = t0 + n * dt
        s = base + amp * (cos_x * math.cos(2.0 * Omega * t) + sin_x * math.sin(2.0 * Omega * t))
        lap = np.roll(e_cur, -1) - 2.0 * e_cur + np.roll(e_cur, 1)
        if cubic:
            c_cur = e_cur**3
            rhs = lam * lap + s * (2.0 * e_cur - e_prev) + chi3 * (2.0 * c_cur - e_prev**3)
            u = 2.0 * e_cur - e_prev
            for _ in range(NEWTON_ITERATIONS):
                u = u - (s * u + chi3 * u**3 - rhs) / (s + 3.0 * chi3 * u * u)
            e_next = u
        else:
            e_next = 2.0 * e_cur - e_prev + (lam / s) * lap
        e_prev, e_cur = e_cur, e_next
        series[n + 1, :] = e_cur[probes]
        if check_every > 0 and (n + 1) % check_every == 0:
            peak = np.abs(e_cur).max()
            if not peak <= growth_limit * ref:
                return e_prev, e_cur, n + 1, UNSTABLE
    return e_prev, e_cur, n_steps, OK


def _cell(a_i, b_i, lap, s, lam, chi3, cubic):
    if not cubic:
        return 2.0 * b_i - a_i + (lam / s) * lap
    rhs = lam * lap + s * (2.0 * b_i - a_i) + chi3 * (2.0 * b_i**3 - a_i**3)
    u = 2.0 * b_i - a_i
    for _ in range(NEWTON_ITERATIONS):
        u = u - (s * u + chi3 * u * u * u - rhs) / (s + 3.0 * chi3 * u * u)
    return u


def _advance_loop(e_prev, e_cur, t0, dt, dx, n_steps, eps, alpha, beta, Omega, cos_x, sin_x,
                  chi3, cubic, probes, series, growth_limit, check_every):
    nx = e_cur.size
    a = e_prev.copy()
    b = e_cur.copy()
    c = np.empty_like(b)
    ref = 0.0
    for i in range(nx):
        ref = max(ref, abs(a[i]), abs(b[i]))
    lam = dt * dt / (dx * dx)
    base = eps * (1.0 + 2.0 * alpha)
    amp = 2.0 * eps * beta
    for p in range(probes.size):
        series[0, p] = b[probes[p]]
    for n in range(n_steps):
        t = t0 + n * dt
        ct = amp * math.cos(2.0 * Omega * t)
        st = amp * math.sin(2.0 * Omega * t)
        # interior without wrap-around branches
        if cubic:
            for i in range(1, nx - 1):
                s = base + cos_x[i] * ct + sin_x[i] * st
                c[i] = _cell(a[i], b[i], b[i - 1] - 2.0 * b[i] + b[i + 1], s, lam, chi3, True)
        else:
            for i in range(1, nx - 1):
                s = base + cos_x[i] * ct + sin_x[i] * st
                c[i] = 2.0 * b[i] - a[i] + (lam / s) * (b[i - 1] - 2.0 * b[i] + b[i + 1])
        for i in (0, nx - 1):
            s = base + cos_x[i] * ct + sin_x[i] * st
            lap = b[(i - 1) % nx] - 2.0 * b[i] + b[(i + 1) % nx]
            c[i] = _cell(a[i], b[i], lap, s, lam, chi3, cubic)
        a, b, c = b, c, a
        for p in range(probes.size):
            series[n + 1, p] = b[probes[p]]
        if check_every > 0 and (n + 1) % check_every == 0:
            peak = 0.0
            for i in range(nx):
                v = abs(b[i])
                if not v <= peak:  # also catches NaN
                    peak = v
            if not peak <= growth_limit * ref:
                return a, b, n + 1, UNSTABLE
    return a, b, n_steps, OK


if USE_NUMBA:
    _cell = numba.njit(cache=True, inline="always")(_cell)
    _advance_compiled = numba.njit(cache=True)(_advance_loop)
else:
    _advance_compiled = None


def advance(e_prev, e_cur, t0, dt, dx, n_steps, eps, alpha, beta, Omega, cos_x, sin_x,
            chi3=0.0, cubic=False, probes=None, growth_limit=10.0, check_every=64, backend=None):
    """Take ``n_steps`` leapfrog steps from (E^{n-1}, E^n) at time t0.

    Returns (E_prev, E_cur, steps_taken, status, series) where ``series``
    holds E at the probe indices for each time level, including the first.
    """
    probes = np.zeros(0, dtype=np.int64) if probes is None else np.asarray(probes, dtype=np.int64)
    series = np.empty((n_steps + 1, probes.size))
    args = (
        np.ascontiguousarray(e_prev, dtype=np.float64), np.ascontiguousarray(e_cur, dtype=np.float64),
        float(t0), float(dt), float(dx), int(n_steps), float(eps), float(alpha), float(beta), float(Omega),
        np.ascontiguousarray(cos_x, dtype=np.float64), np.ascontiguousarray(sin_x, dtype=np.float64),
        float(chi3), bool(cubic), probes, series, float(growth_limit), int(check_every),
    )
    backend = backend or ("numba" if USE_NUMBA else "numpy")
    if backend == "numba":
        if _advance_compiled is None:
            raise RuntimeError("numba backend requested but unavailable or disabled")
        a, b, steps, status = _advance_compiled(*args)
    elif backend == "numpy":
        a, b, steps, status = _advance_numpy(*args)
    elif backend == "python":
        a, b, steps, status = _advance_loop(*args)
    else:
        raise ValueError(f"unknown backend {backend!r}")
    return a, b, steps, status, series[: steps + 1]
