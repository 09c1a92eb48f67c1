import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import bessel_series, bisect_zero, direct_polylog
from scatter2d import specfun
from scatter2d.exceptions import DomainError, SingularityError
from scatter2d.specfun import bessel_j0, bessel_j1, j1_positive_zeros, polylog_unit_circle

# Values frozen from the high-precision power-series oracle.
J1_AT_1 = 0.4400505857449335
J0_AT_1 = 0.7651976865579666
J1_ZERO_1 = 3.8317059702075123
J1_ZERO_2 = 7.0155866698156187
J0_ZERO_1 = 2.404825557695773


def test_frozen_values_match_oracle():
    assert bessel_series(1, 1.0) == pytest.approx(J1_AT_1, abs=1e-16)
    assert bessel_series(0, 1.0) == pytest.approx(J0_AT_1, abs=1e-16)
    assert bisect_zero(lambda z: bessel_series(1, z, 40), 3.5, 4.0) == pytest.approx(J1_ZERO_1, abs=1e-14)
    assert bisect_zero(lambda z: bessel_series(1, z, 40), 6.8, 7.2) == pytest.approx(J1_ZERO_2, abs=1e-14)


class TestBessel:
    def test_examples(self, backend):
        assert bessel_j1(0.0) == 0.0
        assert bessel_j0(0.0) == 1.0
        assert bessel_j1(1.0) == pytest.approx(J1_AT_1, abs=1e-15)
        assert bessel_j0(1.0) == pytest.approx(J0_AT_1, abs=1e-15)
        assert abs(bessel_j1(J1_ZERO_1)) < 1e-12
        assert abs(bessel_j0(J0_ZERO_1)) < 1e-12

    @pytest.mark.parametrize("bad", [-1.0, -1e-300, math.inf, math.nan])
    def test_domain(self, bad):
        with pytest.raises(DomainError):
            bessel_j1(bad)
        with pytest.raises(DomainError):
            bessel_j0(bad)
        with pytest.raises(DomainError):
            bessel_j1(np.array([1.0, bad]))

    def test_against_series_oracle(self, backend):
        zs = np.linspace(0.0, 60.0, 241)
        j1 = bessel_j1(zs)
        j0 = bessel_j0(zs)
        for z, a, b in zip(zs, j1, j0):
            assert abs(a - bessel_series(1, z)) < 1e-12
            assert abs(b - bessel_series(0, z)) < 1e-12

    def test_large_argument_against_scipy(self, backend):
        special = pytest.importorskip("scipy.special")
        z = np.linspace(0.0, 1e4, 100001)
        assert np.max(np.abs(bessel_j1(z) - special.j1(z))) < 1e-12
        assert np.max(np.abs(bessel_j0(z) - special.j0(z))) < 1e-12

    def test_derivative_identity(self, backend):
        z = np.linspace(0.5, 99.5, 397)
        h = 1e-5
        d = ((z + h) * bessel_j1(z + h) - (z - h) * bessel_j1(z - h)) / (2 * h)
        assert np.max(np.abs(d - z * bessel_j0(z))) < 1e-8

    def test_envelope(self):
        z = np.linspace(2.0, 1e4, 200001)
        assert np.max(np.abs(bessel_j1(z))) <= 1 / math.sqrt(2)

    @given(st.floats(min_value=0.0, max_value=1e4))
    @settings(max_examples=200, deadline=None)
    def test_hypothesis_bounded(self, z):
        assert abs(bessel_j1(z)) <= 0.5820
        assert abs(bessel_j0(z)) <= 1.0


class TestZeros:
    def test_examples(self):
        assert j1_positive_zeros(1) == pytest.approx([J1_ZERO_1], abs=1e-12)
        assert j1_positive_zeros(2) == pytest.approx([J1_ZERO_1, J1_ZERO_2], abs=1e-12)

    def test_fifty(self, backend):
        z = j1_positive_zeros(50)
        assert np.all(np.diff(z) > 0)
        assert abs(z[-1] - z[-2] - math.pi) < 1e-3
        assert np.max(np.abs(bessel_j1(z))) < 1e-11

    def test_many_zeros_interlace_j0(self):
        z = j1_positive_zeros(300)
        # J0 changes sign exactly once between consecutive J1 zeros
        mid = 0.5 * (z[:-1] + z[1:])
        assert np.all(bessel_j0(z[:-1]) * bessel_j0(z[1:]) < 0)
        assert mid.size == 299

    def test_bracketed_fallback(self):
        assert specfun._refine_zero(7.2) == pytest.approx(J1_ZERO_2, abs=1e-13)

    @pytest.mark.parametrize("n", [0, -3, 2.5])
    def test_bad_count(self, n):
        with pytest.raises(ValueError):
            j1_positive_zeros(n)


class TestPolylog:
    def test_examples(self):
        assert polylog_unit_circle(1, math.pi) == pytest.approx(complex(-math.log(2), 0), abs=1e-15)
        v = polylog_unit_circle(2, math.pi)
        assert v.real == pytest.approx(-math.pi ** 2 / 12, abs=1e-15)
        assert abs(v.imag) < 1e-14
        assert polylog_unit_circle(2, 0.0) == complex(math.pi ** 2 / 6, 0)

    def test_alternating_oracle(self):
        l = np.arange(1, 2_000_001, dtype=float)
        alt = np.sum((-1.0) ** l / l ** 2)
        assert polylog_unit_circle(2, math.pi).real == pytest.approx(alt, abs=1e-12)

    @pytest.mark.parametrize("theta", [0.05, 0.7, 1.9, 3.1, -2.2, 5.0, 12.0])
    @pytest.mark.parametrize("s", [2, 3])
    def test_direct_summation(self, s, theta):
        assert abs(polylog_unit_circle(s, theta) - direct_polylog(s, theta)) < 2e-6

    @pytest.mark.parametrize("theta", [1e-3, 0.3, 2.9, -1.0, 4.0])
    def test_s1_log_branch(self, theta):
        import cmath

        expected = -cmath.log(1 - cmath.exp(1j * theta))
        assert abs(polylog_unit_circle(1, theta) - expected) < 1e-13 * abs(expected)

    def test_clausen_derivative_links(self):
        # d/dt Re Li3 = -Im Li2
        for t in (0.2, 1.0, 2.5):
            h = 1e-5
            d = (polylog_unit_circle(3, t + h).real - polylog_unit_circle(3, t - h).real) / (2 * h)
            assert d == pytest.approx(-polylog_unit_circle(2, t).imag, abs=1e-9)

    def test_errors(self):
        with pytest.raises(SingularityError):
            polylog_unit_circle(1, 0.0)
        with pytest.raises(SingularityError):
            polylog_unit_circle(1, 4 * math.pi)
        with pytest.raises(ValueError):
            polylog_unit_circle(4, 1.0)

    @given(st.floats(min_value=-20, max_value=20), st.sampled_from([2, 3]))
    def test_symmetry(self, theta, s):
        a = polylog_unit_circle(s, theta)
        b = polylog_unit_circle(s, -theta)
        assert a.real == pytest.approx(b.real, abs=1e-13)
        assert a.imag == pytest.approx(-b.imag, abs=1e-13)
