import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from scatter2d.model import (
    AmplitudeResult,
    Angle,
    Coupling,
    Kinematics,
    Method,
    as_theta,
    as_x,
    coupling_from_physical,
    dcs_from_reduced,
    momentum_transfer_sq,
    sigma_closed_form,
)
from scatter2d.partial_waves import reduced_amplitude_pw
from scatter2d.dispersion import reduced_amplitude_disp


class TestCoupling:
    def test_from_physical(self):
        assert coupling_from_physical(1, 0.5, 1).x == 1.0
        # x^2 = 2 m kappa / hbar^2 = 16 / 4
        assert coupling_from_physical(2, 4, 2).x == 2.0
        assert coupling_from_physical(2, 1, 2).x == 1.0
        free = coupling_from_physical(1, 0, 1)
        assert free.x == 0.0 and free.is_free

    @pytest.mark.parametrize("args", [(0, 1, 1), (1, 1, 0), (-1, 1, 1), (1, -1, 1)])
    def test_rejects(self, args):
        with pytest.raises(ValueError):
            coupling_from_physical(*args)

    def test_invalid_values(self):
        for bad in (-1.0, math.nan, math.inf):
            with pytest.raises(ValueError):
                Coupling(bad)
        with pytest.raises(ValueError):
            as_x(0.0, allow_zero=False)
        assert as_x(Coupling(2.0)) == 2.0


class TestAngle:
    def test_bounds(self):
        assert Angle(math.pi).theta == math.pi
        assert Angle(-math.pi).theta == -math.pi
        for bad in (3.2, -3.2, math.nan):
            with pytest.raises(ValueError):
                Angle(bad)
        with pytest.raises(ValueError):
            as_theta(2 * math.pi)
        assert as_theta(Angle(1.0)) == 1.0


class TestKinematics:
    def test_from_physical_consistency(self):
        kin = Kinematics.from_physical(m=2.0, hbar=0.5, E=3.0)
        assert kin.E == pytest.approx(kin.hbar ** 2 * kin.k ** 2 / (2 * kin.m), rel=1e-12)
        assert kin.k == pytest.approx(math.sqrt(12.0) / 0.5)

    def test_inconsistent(self):
        with pytest.raises(ValueError):
            Kinematics(k=1.0, E=1.0, m=1.0, hbar=1.0)
        with pytest.raises(ValueError):
            Kinematics(k=0.0)


class TestKinematicFormulas:
    def test_momentum_transfer(self):
        assert momentum_transfer_sq(1, 0.0) == 0.0
        assert momentum_transfer_sq(1, math.pi) == 4.0
        assert momentum_transfer_sq(1, math.pi / 2) == pytest.approx(2.0, abs=1e-15)

    @given(st.floats(min_value=0, max_value=math.pi), st.floats(min_value=0, max_value=math.pi))
    def test_momentum_transfer_even_monotone(self, a, b):
        assert momentum_transfer_sq(2.0, a) == momentum_transfer_sq(2.0, -a)
        lo, hi = sorted((a, b))
        assert momentum_transfer_sq(2.0, lo) <= momentum_transfer_sq(2.0, hi)
        assert 0.0 <= momentum_transfer_sq(2.0, hi) <= 16.0

    def test_dcs(self):
        assert dcs_from_reduced(0j, 3.0) == 0.0
        assert dcs_from_reduced(complex(1, 1), math.pi) == pytest.approx(1.0)
        with pytest.raises(ValueError):
            dcs_from_reduced(1j, 0.0)

    def test_dcs_cross_method_at_pi_neighbourhood(self):
        pw = reduced_amplitude_pw(1.0, math.pi).F
        val = dcs_from_reduced(pw, 1.0)
        assert val == pytest.approx(math.pi / 2 * (pw.real ** 2 + pw.imag ** 2))
        # dispersion stays outside the backscatter margin; compare just inside it
        theta = math.pi - 2e-3
        a = dcs_from_reduced(reduced_amplitude_pw(1.0, theta).F, 1.0)
        b = dcs_from_reduced(reduced_amplitude_disp(1.0, theta).F, 1.0)
        assert a == pytest.approx(b, rel=1e-6)

    @given(st.complex_numbers(max_magnitude=1e6), st.floats(min_value=1e-3, max_value=1e3))
    def test_dcs_nonnegative(self, F, k):
        assert dcs_from_reduced(F, k) >= 0.0

    def test_sigma_closed_form(self):
        assert sigma_closed_form(1.0, 1.0) == pytest.approx(9.869604401, abs=1e-9)
        assert sigma_closed_form(0.0, 1.0) == 0.0
        assert sigma_closed_form(2.0, 4.0) == pytest.approx(math.pi ** 2)

    @pytest.mark.parametrize("x", [0.3, 1.0, 7.5])
    def test_k_sigma_scale_invariance(self, x):
        values = [sigma_closed_form(x, k) * k for k in (0.1, 1.0, 10.0)]
        assert max(values) - min(values) <= 1e-14 * values[0]


def test_amplitude_result_guards():
    r = AmplitudeResult(0.5, complex(3, 4), Method.PARTIAL_WAVE, 0.0, 10)
    assert r.abs_F2 == 25.0
    with pytest.raises(ValueError):
        AmplitudeResult(0.5, 0j, Method.DISPERSION, -1.0, 0)
