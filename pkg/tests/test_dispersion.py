import math

import mpmath
import numpy as np
import pytest

from oracles import im_closed_form
from scatter2d.dispersion import (
    DispParams,
    im_reduced_amplitude,
    principal_value_integral,
    re_reduced_amplitude_disp,
    reduced_amplitude_disp,
    spectral_density,
    spectral_density_derivative,
    subtracted_pv_integrand,
    tail_integral,
    tail_integrand,
)
from scatter2d.exceptions import AccuracyError, BackscatterMarginError, ForwardDivergenceError
from scatter2d.partial_waves import reduced_amplitude_pw


def mp_tail(x, theta):
    """Tail integral via mpmath's oscillatory quadrature (independent route)."""
    with mpmath.workdps(25):
        x = mpmath.mpf(x)
        c = mpmath.cos(theta)

        def h(t):
            s = mpmath.sqrt(mpmath.pi ** 2 + t * t)
            return x * mpmath.besselj(1, x * s) / s * mpmath.sinh(t) / (c + mpmath.cosh(t))

        zeros = lambda n: mpmath.sqrt((mpmath.besseljzero(1, n + int(x) + 1) / x) ** 2 - mpmath.pi ** 2)
        return float(mpmath.quadosc(h, [0, mpmath.inf], zeros=zeros))


def mp_pv(x, theta):
    with mpmath.workdps(25):
        x, t = mpmath.mpf(x), mpmath.mpf(theta)
        g = lambda v: x * mpmath.besselj(1, x * mpmath.sqrt(v * (2 * mpmath.pi - v))) / mpmath.sqrt(v * (2 * mpmath.pi - v))
        gt = g(t)
        f = lambda v: (g(v) - gt) * mpmath.sin(v) / (mpmath.cos(t) - mpmath.cos(v))
        return float(mpmath.quad(f, [0, t, mpmath.pi]) + gt * mpmath.log((1 + mpmath.cos(t)) / (1 - mpmath.cos(t))))


class TestImaginaryPart:
    def test_examples(self):
        assert im_reduced_amplitude(1.0, 0.0) == pytest.approx(math.pi / 2, abs=1e-15)
        assert im_reduced_amplitude(1.0, math.pi) == pytest.approx(0.28461534317975273, abs=1e-14)
        assert im_reduced_amplitude(2.0, 0.0) == pytest.approx(2 * math.pi, abs=1e-14)

    def test_against_mpmath(self):
        for x in (0.5, 1.0, 4.0):
            for theta in (-2.0, 0.01, 1.0, 3.0):
                assert im_reduced_amplitude(x, theta) == pytest.approx(im_closed_form(x, theta), abs=1e-13)

    def test_positive_below_first_zero(self):
        x = 0.5  # u < 3.83 for every angle
        for theta in np.linspace(-math.pi, math.pi, 41):
            assert im_reduced_amplitude(x, theta) > 0


class TestSpectralDensity:
    def test_smooth_at_origin(self):
        for x in (0.5, 1.0, 3.0):
            assert spectral_density(x, 0.0) == pytest.approx(x * x / 2, rel=1e-15)
            assert spectral_density(x, 1e-12) == pytest.approx(x * x / 2, rel=1e-10)

    @pytest.mark.parametrize("x,v", [(1.0, 0.3), (2.0, 1.7), (0.5, 3.0), (3.0, 0.05)])
    def test_derivative(self, x, v):
        h = 1e-6
        fd = (spectral_density(x, v + h) - spectral_density(x, v - h)) / (2 * h)
        assert spectral_density_derivative(x, v) == pytest.approx(fd, abs=1e-8)

    @pytest.mark.parametrize("x,t", [(1.0, 0.5), (2.0, 2.0), (0.5, 3.0)])
    def test_removable_limit(self, x, t):
        f = subtracted_pv_integrand(x, t)
        dg = spectral_density_derivative(x, t)
        for v in (t - 1e-6, t + 1e-6):
            assert abs(f(v) - dg) < 1e-4 * (1 + abs(dg))
        assert f(np.array([t]))[0] == dg


class TestPieces:
    @pytest.mark.parametrize("x,theta", [(1.0, math.pi / 2), (2.0, 0.4), (0.5, 2.5)])
    def test_pv_against_mpmath(self, x, theta):
        assert principal_value_integral(x, theta).value == pytest.approx(mp_pv(x, theta), abs=1e-10)

    @pytest.mark.parametrize("x,theta", [(1.0, math.pi / 2), (2.0, 0.4), (0.5, 2.5)])
    def test_tail_against_mpmath(self, x, theta):
        res = tail_integral(x, theta)
        assert res.value == pytest.approx(mp_tail(x, theta), abs=1e-9)
        assert res.error < 1e-9

    def test_tail_integrand_vanishes_at_zero(self):
        assert tail_integrand(1.0, 1.0)(np.array([0.0]))[0] == 0.0

    def test_tail_panel_doubling(self):
        a = tail_integral(1.0, math.pi / 2, DispParams(tail_panels=200)).value
        b = tail_integral(1.0, math.pi / 2, DispParams(tail_panels=400)).value
        assert abs(a - b) < 1e-9

    def test_tail_accuracy_error(self):
        with pytest.raises(AccuracyError) as info:
            tail_integral(1.0, 1.0, DispParams(tol=1e-15, tail_panels=10))
        assert math.isfinite(info.value.estimate)


class TestAmplitude:
    @pytest.mark.parametrize("x,theta", [(1.0, math.pi / 2), (1.0, 2.0), (0.5, 0.3), (2.0, 1.0)])
    def test_matches_partial_waves(self, x, theta, backend):
        d = reduced_amplitude_disp(x, theta).F
        p = reduced_amplitude_pw(x, theta).F
        assert abs(d.real - p.real) < 1e-6
        assert abs(d.imag - p.imag) < 1e-6

    def test_weak_coupling_limit(self):
        # the s-wave shift -pi x/2 dominates: Re F = -x + O(x^2), Im F = O(x^2)
        for x in (1e-2, 1e-3):
            F = reduced_amplitude_disp(x, math.pi / 2).F
            assert F.real / x == pytest.approx(-1.0, abs=2 * x)
            assert F.real == pytest.approx(reduced_amplitude_pw(x, math.pi / 2).F.real, abs=1e-9)
            assert F.imag / x ** 2 == pytest.approx(math.pi / 2, rel=1e-3)

    def test_logarithmic_forward_growth(self):
        # the coefficient is measured, not assumed: compare against partial waves
        d = reduced_amplitude_disp(1.0, 0.001).F.real - reduced_amplitude_disp(1.0, 0.01).F.real
        p = reduced_amplitude_pw(1.0, 0.001).F.real - reduced_amplitude_pw(1.0, 0.01).F.real
        assert d == pytest.approx(p, abs=1e-8)
        assert abs(d) == pytest.approx(math.log(10), rel=1e-2)

    def test_evenness(self):
        a = reduced_amplitude_disp(1.0, 0.8).F
        b = reduced_amplitude_disp(1.0, -0.8).F
        assert a == b

    def test_domain_errors(self):
        with pytest.raises(ForwardDivergenceError):
            reduced_amplitude_disp(1.0, 0.0)
        with pytest.raises(ForwardDivergenceError):
            reduced_amplitude_disp(1.0, 5e-7)
        with pytest.raises(BackscatterMarginError):
            reduced_amplitude_disp(1.0, math.pi)
        with pytest.raises(BackscatterMarginError):
            tail_integral(1.0, -math.pi + 1e-4)
        with pytest.raises(ValueError):
            DispParams(theta_min=3.2)

    def test_free_particle(self):
        assert reduced_amplitude_disp(0.0, 1.0).F == 0j

    def test_optical_theorem_identity(self):
        for x in (0.5, 1.0, 2.0):
            # sigma k = 2 pi Im F(0)... in reduced units 4 Im F(0) = 2 pi x^2
            assert 4 * im_reduced_amplitude(x, 0.0) == pytest.approx(2 * math.pi * x * x, rel=1e-15)
