import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from subvacuum.background_field import FieldModulation, SqueezedPlaneWaveMode
from subvacuum.propagation import (
    ProbePulse,
    UnphysicalMediumError,
    comoving_check,
    comoving_wavenumber,
    effective_velocity,
    linearization_ratio,
    phase_shift,
    shifted_wavenumber,
    validity_time,
    wkb_field,
)
from subvacuum.quantities import DielectricMaterial, chi3_from_si, parse_quantity


def test_probe_validation():
    with pytest.raises(ValueError):
        ProbePulse(0.0)
    with pytest.raises(ValueError):
        ProbePulse(1.0, amplitude=0.0)
    with pytest.raises(ValueError):
        ProbePulse(1.0, delta_omega_p=2.0)


def test_velocity_unperturbed_and_sign():
    mat = DielectricMaterial(2.25, chi3=0.01)
    v = effective_velocity(mat, 0.0)
    assert v.exact == v.v0 == pytest.approx(1 / 1.5, rel=1e-15)
    v = effective_velocity(mat, -1.0)
    assert v.v0 < v.exact < 1
    assert effective_velocity(mat, 1.0).exact < v.v0


def test_velocity_linearization_order():
    mat = DielectricMaterial(2.25, chi3=1.0)
    v = effective_velocity(mat, -1e-6 / 3)
    assert v.linearized == pytest.approx(v.exact, rel=1e-12)


def test_unphysical_medium():
    with pytest.raises(UnphysicalMediumError):
        effective_velocity(DielectricMaterial(1.0, chi3=1.0), -1.0)


def test_velocity_monotone():
    mat = DielectricMaterial(2.0, chi3=0.1)
    vs = [effective_velocity(mat, m).exact for m in np.linspace(-5, 5, 101)]
    assert np.all(np.diff(vs) < 0)


def test_shifted_wavenumber():
    mat, pulse = DielectricMaterial(2.25, chi3=1e-3), ProbePulse(7.0)
    k0 = pulse.k0(mat)
    assert shifted_wavenumber(pulse, mat, 0.0)[0] == pytest.approx(k0, rel=1e-15)
    k, k_lin = shifted_wavenumber(pulse, mat, -1e-3 / 3)
    assert k < k0 and k_lin < k0
    assert k * effective_velocity(mat, -1e-3 / 3, 7.0).exact == pytest.approx(7.0, rel=1e-15)
    # first-order agreement: the mismatch is second order in the shift
    assert abs(k - k_lin) / abs(k - k0) < 1e-3


def test_phase_shift_reference_values():
    chi3 = parse_quantity("3e-19 m2/V2").value
    assert chi3 == pytest.approx(chi3_from_si(3e-19), rel=1e-14)
    mean_sq = parse_quantity("1 um^-4").value
    pulse = ProbePulse(2 * math.pi / 0.1e-6)
    res = phase_shift(pulse, DielectricMaterial(1.0, chi3=chi3), mean_sq, 10.0)
    assert res.delta_phi == pytest.approx(1.0, rel=5e-2)
    assert res.delta_phi_closed_form == pytest.approx(res.delta_phi, rel=1e-6)


def test_phase_shift_zero_and_linear_in_d():
    mat, pulse = DielectricMaterial(1.5, chi3=1e-3), ProbePulse(3.0)
    assert phase_shift(pulse, mat, 0.0, 1.0).delta_phi == 0.0
    a, b = phase_shift(pulse, mat, -0.1, 1.0), phase_shift(pulse, mat, -0.1, 2.0)
    assert b.delta_phi == pytest.approx(2 * a.delta_phi, rel=1e-14)
    assert a.delta_phi < 0
    with pytest.raises(ValueError):
        phase_shift(pulse, mat, -0.1, 0.0)


@given(eps=st.floats(1.0, 10.0), x=st.floats(-1e-6, 1e-6), d=st.floats(1e-3, 1e3))
def test_phase_shift_forms_agree(eps, x, d):
    # x = chi3 <E^2> / eps
    mat, pulse = DielectricMaterial(eps, chi3=1.0), ProbePulse(5.0)
    res = phase_shift(pulse, mat, x * eps, d)
    if x == 0:
        assert res.delta_phi == 0
        return
    assert res.delta_phi_closed_form == pytest.approx(res.delta_phi, rel=1e-5)
    assert res.delta_phi_linearized == pytest.approx(res.delta_phi_closed_form, rel=1e-12)


def test_validity_time():
    assert validity_time(ProbePulse(2.0), 0.0) == math.inf
    assert validity_time(ProbePulse(2.0), 1e-3) == pytest.approx(500.0)


def test_wkb_branches():
    pulse = ProbePulse(4.0, amplitude=2.0)
    x = np.linspace(0, 3, 11)
    plain = wkb_field(pulse, 0.0, x, 1.3)
    assert np.allclose(plain.exponential, 2.0 * np.exp(1j * (4.0 * x - 4.0 * 1.3)), rtol=0, atol=1e-14)
    start = wkb_field(pulse, 1e-2, x, 0.0)
    assert np.array_equal(start.exponential, start.expanded)
    assert np.allclose(start.exponential, 2.0 * np.exp(4j * x))
    # omega0 f t = 1e-3 for a uniform f
    t = 1.0
    w = wkb_field(pulse, 1e-3 / (4.0 * t), x, t)
    assert np.max(np.abs(w.exponential - w.expanded)) <= 1e-6 * pulse.amplitude
    assert w.all_valid


def test_wkb_validity_flag_and_modulus():
    pulse = ProbePulse(10.0, amplitude=0.5)
    mod = FieldModulation(1e-3, -2e-3, 1.0, 1.0)
    t = np.linspace(0, 200, 1001)
    w = wkb_field(pulse, mod, 0.0, t)
    assert np.allclose(np.abs(w.exponential), 0.5, rtol=1e-14)
    assert w.valid[0] and not w.valid[-1]
    assert not w.all_valid


def test_comoving_check():
    mat = DielectricMaterial(2.25)
    pulse = ProbePulse(50.0)
    k_b = comoving_wavenumber(1.0, mat, pulse.omega0)
    res = comoving_check(SqueezedPlaneWaveMode(1.0, 1.0, k_b, 1.0), mat, pulse)
    assert res.ratio == pytest.approx(1.0, abs=1e-15) and res.ok
    # permittivity 1% higher at omega0 than at Omega
    disp = DielectricMaterial.tabulated([1.0, 50.0], [2.25, 2.25 * 1.01])
    mode = SqueezedPlaneWaveMode(1.0, 1.0, 1.0 * math.sqrt(2.25), 1.0)
    off = comoving_check(mode, disp, pulse)
    assert off.ratio == pytest.approx(math.sqrt(1.01), rel=1e-12)
    assert not off.ok
    assert comoving_check(mode, disp, pulse, tolerance=1e-2).ok


def test_linearization_ratio():
    assert linearization_ratio(1.0, 0.0) == math.inf
    assert linearization_ratio(2.0, -0.5) == pytest.approx(8.0)
