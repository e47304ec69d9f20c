import math

import numpy as np
import pytest

from subvacuum.quantities import (
    DEFAULT_UNITS,
    DielectricMaterial,
    UnitError,
    UnitSystem,
    chi3_from_si,
    chi3_to_si,
    field_natural_to_si,
    field_si_to_natural,
    field_squared_natural_to_si,
    field_squared_si_to_natural,
    parse_quantity,
    parse_unit,
)


def test_default_volt_conversion():
    assert DEFAULT_UNITS.volt == 1.67e7
    with pytest.raises(UnitError):
        UnitSystem(0.0)


def test_chi3_zero_and_negative():
    assert chi3_from_si(0.0) == 0.0
    with pytest.raises(UnitError):
        chi3_from_si(-1e-20)
    with pytest.raises(UnitError):
        chi3_to_si(-1.0)


@pytest.mark.parametrize("v", [3e-19, 1e-25, 7.7e-16, 1.0])
def test_chi3_round_trip(v):
    assert chi3_to_si(chi3_from_si(v)) == pytest.approx(v, rel=1e-12)


def test_field_squared_scaling():
    # (1.67e7)^2 = 2.7889e14
    assert field_squared_si_to_natural(1.0) == pytest.approx(2.7889e14, rel=1e-12)
    assert field_squared_si_to_natural(0.0) == 0.0
    v = np.array([1e-3, 2.0, 5e8])
    assert np.allclose(field_squared_natural_to_si(field_squared_si_to_natural(v)), v, rtol=1e-12, atol=0)
    assert field_natural_to_si(field_si_to_natural(3.3)) == pytest.approx(3.3, rel=1e-12)


def test_reference_dimensionless_combination():
    # chi3 <E^2> with chi3 = 3e-19 m^2/V^2 and <E^2> = 1 um^-4
    prod = chi3_from_si(3e-19) * 1e24
    assert prod == pytest.approx(3e-19 * 1e24 / 1.67e7**2, rel=1e-12)
    # 3 pi chi3 <E^2> d / lambda with d = 10 m, lambda = 0.1 um is ~1
    assert 3 * math.pi * prod * 10 / 1e-7 == pytest.approx(1.0, rel=0.05)


@pytest.mark.parametrize(
    "text, value, power",
    [
        ("1 um", 1e-6, 1),
        ("3e-19 m2/V2", 3e-19 / 1.67e7**2, 4),
        ("1 um^-4", 1e24, -4),
        ("2 1/m", 2.0, -1),
        ("1 V/m", 1.67e7, -2),
        ("1 s", 299_792_458.0, 1),
        ("4.5", 4.5, 0),
        ("1 rad/s", 1 / 299_792_458.0, -1),
    ],
)
def test_parse_quantity(text, value, power):
    q = parse_quantity(text)
    assert q.value == pytest.approx(value, rel=1e-12)
    assert q.length_power == power


@pytest.mark.parametrize("bad", ["1 furlong", "abc", "1 m/furlong", "1 m^x"])
def test_parse_quantity_rejects(bad):
    with pytest.raises(UnitError):
        parse_quantity(bad)


def test_parse_unit_dimensionless():
    assert parse_unit("") == (1.0, 0)
    assert parse_unit("rad") == (1.0, 0)


def test_material_constant():
    m = DielectricMaterial(2.25, 1e-30)
    assert m.chi2_is_zero
    assert m.is_constant
    assert m.epsilon(3.0) == 2.25
    assert np.all(m.epsilon(np.linspace(0, 10, 5)) == 2.25)
    with pytest.raises(UnitError):
        DielectricMaterial(0.9)
    with pytest.raises(UnitError):
        DielectricMaterial(float("inf"))
    with pytest.raises(UnitError):
        DielectricMaterial(1.0, -1.0)


def test_material_tabulated():
    m = DielectricMaterial.tabulated([1.0, 2.0, 3.0, 4.0], [1.5, 1.6, 1.8, 1.9], chi3=2.0)
    w = np.linspace(0.0, 5.0, 501)
    eps = m.epsilon(w)
    assert np.all(eps >= 1) and np.all(np.isfinite(eps))
    assert m.epsilon(2.0) == pytest.approx(1.6)
    assert np.all(np.diff(eps) >= 0)  # monotone data stays monotone
    assert m.with_chi3(0.0).chi3 == 0.0
    with pytest.raises(UnitError):
        DielectricMaterial.tabulated([1.0, 2.0], [0.5, 1.2])
    with pytest.raises(UnitError):
        DielectricMaterial.tabulated([2.0, 1.0], [1.5, 1.2])
