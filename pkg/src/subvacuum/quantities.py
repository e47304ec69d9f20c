"""Natural units, SI conversion and the dielectric material model.

All quantities are carried in Lorentz-Heaviside units with hbar = c = eps0 = 1
and the metre as the single base length.  A field strength therefore has
dimension m^-2, a mean-squared field m^-4, an angular frequency m^-1 and a
third-order susceptibility m^4.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np
from scipy.interpolate import PchipInterpolator

#: Inverse metres per volt, as printed (three figures).
VOLT_IN_INVERSE_METERS = 1.67e7
SPEED_OF_LIGHT = 299_792_458.0  # m/s


class UnitError(ValueError):
    pass


@dataclass(frozen=True)
class UnitSystem:
    volt_in_inverse_meters: float = VOLT_IN_INVERSE_METERS

    def __post_init__(self):
        if not self.volt_in_inverse_meters > 0:
            raise UnitError("volt_in_inverse_meters must be positive")

    # one volt expressed in m^-1
    @property
    def volt(self) -> float:
        return self.volt_in_inverse_meters


DEFAULT_UNITS = UnitSystem()


def chi3_from_si(value_si: float, units: UnitSystem = DEFAULT_UNITS) -> float:
    """Convert chi3 from m^2 V^-2 to natural units (m^4)."""
    if value_si < 0:
        raise UnitError(f"chi3 must be non-negative, got {value_si!r}")
    return value_si / units.volt**2


def chi3_to_si(value: float, units: UnitSystem = DEFAULT_UNITS) -> float:
    if value < 0:
        raise UnitError(f"chi3 must be non-negative, got {value!r}")
    return value * units.volt**2


def field_squared_si_to_natural(value, units: UnitSystem = DEFAULT_UNITS):
    """Mean-squared field in V^2 m^-2 -> natural units (m^-4)."""
    return value * units.volt**2


def field_squared_natural_to_si(value, units: UnitSystem = DEFAULT_UNITS):
    return value / units.volt**2


def field_si_to_natural(value, units: UnitSystem = DEFAULT_UNITS):
    """Field strength in V/m -> natural units (m^-2)."""
    return value * units.volt


def field_natural_to_si(value, units: UnitSystem = DEFAULT_UNITS):
    return value / units.volt


# --------------------------------------------------------------------------
# quantity strings such as "1 um", "3e-19 m2/V2", "1 um^-4", "2.5e15 rad/s"

# base unit -> (natural value in m^power, length power)
def _base_units(units: UnitSystem) -> dict[str, tuple[float, int]]:
    return {
        "m": (1.0, 1),
        "cm": (1e-2, 1),
        "mm": (1e-3, 1),
        "um": (1e-6, 1),
        "µm": (1e-6, 1),
        "nm": (1e-9, 1),
        "km": (1e3, 1),
        "V": (units.volt, -1),
        "s": (SPEED_OF_LIGHT, 1),
        "ns": (SPEED_OF_LIGHT * 1e-9, 1),
        "ps": (SPEED_OF_LIGHT * 1e-12, 1),
        "fs": (SPEED_OF_LIGHT * 1e-15, 1),
        "Hz": (1.0 / SPEED_OF_LIGHT, -1),
        "rad": (1.0, 0),
    }


_NUMBER = r"[-+]?(?:\d+\.?\d*|\.\d+)(?:[eE][-+]?\d+)?"
_QUANTITY_RE = re.compile(rf"^\s*({_NUMBER})\s*(.*?)\s*$")
_FACTOR_RE = re.compile(r"^([A-Za-zµ]+)(?:\^?([-+]?\d+))?$")


@dataclass(frozen=True)
class Quantity:
    value: float  # natural units (powers of metres)
    length_power: int


def parse_unit(expr: str, units: UnitSystem = DEFAULT_UNITS) -> tuple[float, int]:
    """Return (scale, length power) for a unit expression like ``m2/V2``."""
    expr = expr.strip()
    if not expr or expr == "1":
        return 1.0, 0
    table = _base_units(units)
    scale, power = 1.0, 0
    # "1/um" and "m2/V2": everything after the first '/' is in the denominator
    numer, _, denom = expr.partition("/")
    for sign, part in ((1, numer), (-1, denom)):
        for token in re.split(r"[\s*]+", part.strip()):
            if not token or token == "1":
                continue
            match = _FACTOR_RE.match(token)
            if match is None or match.group(1) not in table:
                raise UnitError(f"unknown unit {token!r} in {expr!r}")
            base_scale, base_power = table[match.group(1)]
            exponent = sign * int(match.group(2) or 1)
            scale *= base_scale**exponent
            power += base_power * exponent
    return scale, power


def parse_quantity(text, units: UnitSystem = DEFAULT_UNITS) -> Quantity:
    """Parse ``"<number> <unit>"`` into natural units.

    Bare numbers are returned unchanged with length power 0 so that
    dimensionless inputs, and values already in natural units, pass through.
    """
    if isinstance(text, (int, float)):
        return Quantity(float(text), 0)
    match = _QUANTITY_RE.match(str(text))
    if match is None:
        raise UnitError(f"cannot parse quantity {text!r}")
    scale, power = parse_unit(match.group(2), units)
    return Quantity(float(match.group(1)) * scale, power)


# --------------------------------------------------------------------------


@dataclass(frozen=True)
class DielectricMaterial:
    """Centrosymmetric Kerr medium: permittivity eps(omega) and chi3.

    ``epsilon`` is either a constant or a table ``(omega, eps)`` that is
    interpolated with a monotone cubic.  Outside the table the end values
    are held.
    """

    epsilon_value: float | None = 1.0
    chi3: float = 0.0
    table_omega: tuple[float, ...] = ()
    table_epsilon: tuple[float, ...] = ()
    _interp: Callable | None = field(default=None, init=False, repr=False, compare=False)

    chi2_is_zero = True

    def __post_init__(self):
        if self.chi3 < 0:
            raise UnitError("chi3 must be non-negative")
        if self.table_omega:
            omega = np.asarray(self.table_omega, dtype=float)
            eps = np.asarray(self.table_epsilon, dtype=float)
            if omega.shape != eps.shape or omega.size < 2:
                raise UnitError("permittivity table needs matching omega/eps arrays")
            if np.any(np.diff(omega) <= 0):
                raise UnitError("permittivity table omega must be strictly increasing")
            if np.any(eps < 1) or not np.all(np.isfinite(eps)):
                raise UnitError("permittivity must be finite and >= 1")
            object.__setattr__(self, "_interp", PchipInterpolator(omega, eps, extrapolate=False))
            object.__setattr__(self, "epsilon_value", None)
        else:
            if self.epsilon_value is None or not self.epsilon_value >= 1:
                raise UnitError("permittivity must be >= 1")
            if not math.isfinite(self.epsilon_value):
                raise UnitError("permittivity must be finite")

    @classmethod
    def tabulated(cls, omega: Sequence[float], epsilon: Sequence[float], chi3: float = 0.0):
        return cls(None, chi3, tuple(map(float, omega)), tuple(map(float, epsilon)))

    @property
    def is_constant(self) -> bool:
        return self._interp is None

    def epsilon(self, omega):
        if self._interp is None:
            return np.full_like(np.asarray(omega, dtype=float), self.epsilon_value)[()]
        w = np.clip(np.asarray(omega, dtype=float), self.table_omega[0], self.table_omega[-1])
        return self._interp(w)[()]

    def with_chi3(self, chi3: float) -> "DielectricMaterial":
        if self.is_constant:
            return DielectricMaterial(self.epsilon_value, chi3)
        return DielectricMaterial(None, chi3, self.table_omega, self.table_epsilon)
