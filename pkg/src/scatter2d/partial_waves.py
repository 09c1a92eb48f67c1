"""Partial-wave series for the reduced amplitude and the cross-section sum.

The reduced amplitude is

    F(theta) = (2/pi) [a_0 + 2 sum_{l>=1} cos(l theta) a_l],
    a_l = exp(i d_l) sin(d_l),  d_l = (pi/2)(|l| - sqrt(l^2 + x^2)).

The series converges only conditionally (a_l ~ 1/l), so terms beyond the
cutoff L are replaced by their large-l expansion c1/l + c2/l^2 + c3/l^3,
summed in closed form with polylogarithms on the unit circle.
"""
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import kernels
from .exceptions import ForwardDivergenceError
from .model import AmplitudeResult, Method, as_theta, as_x
from .quadrature import integrate
from .specfun import polylog_unit_circle

_EPS = np.finfo(float).eps
L_CAP = 1 << 22


@dataclass(frozen=True)
class PwParams:
    """Series controls.

    ``l_max=None`` starts from ``max(64, ceil(8 x^2))`` and doubles the
    cutoff until the truncation estimate drops below ``tol``.
    """

    l_max: Optional[int] = None
    tail_order: int = 3
    tol: float = 1e-10

    def __post_init__(self):
        if self.l_max is not None and (int(self.l_max) != self.l_max or self.l_max < 1):
            raise ValueError("l_max must be a positive integer")
        if self.tail_order not in (0, 1, 2, 3):
            raise ValueError("tail_order must be 0, 1, 2 or 3")
        if not self.tol > 0:
            raise ValueError("tol must be positive")


@dataclass(frozen=True)
class SigmaSum:
    """S = sum_l sin^2(d_l), with error bound and the explicit cutoff used."""

    value: float
    error: float
    l_max: int


def default_l_max(x):
    return max(64, math.ceil(8.0 * x * x))


def phase_shift(x, l):
    """d_l = (pi/2)(|l| - sqrt(l^2 + x^2)), written to avoid cancellation."""
    x = as_x(x)
    l = abs(int(l))
    return -0.5 * math.pi * x * x / (l + math.sqrt(l * l + x * x))


def partial_wave_coefficient(x, l):
    """a_l = exp(i d_l) sin(d_l)."""
    d = phase_shift(x, l)
    return complex(0.5 * math.sin(2.0 * d), math.sin(d) ** 2)


def tail_coefficients(x):
    """(c1, c2, c3, c4) in a_l = sum_s c_s / l^s + O(l^-5)."""
    d1 = -0.25 * math.pi * x * x
    d3 = math.pi * x ** 4 / 16.0
    return (
        complex(d1, 0.0),
        complex(0.0, d1 * d1),
        complex(d3 - 2.0 * d1 ** 3 / 3.0, 0.0),
        complex(0.0, 2.0 * d1 * d3 - d1 ** 4 / 3.0),
    )


def _truncation_error(x, theta, l_max, order, coef):
    """Bound on the neglected part of the tail, sum_{l>L} cos(l theta) R_l."""
    n = l_max + 1
    exact = partial_wave_coefficient(x, n)
    approx = sum(coef[s] / n ** (s + 1) for s in range(order))
    remainder = max(abs(exact - approx), abs(coef[order]) / n ** (order + 1))
    # Abel summation: partial sums of cos(l theta) are bounded by 1/|sin(theta/2)|.
    bound = 1.0 / abs(math.sin(0.5 * theta))
    if order >= 1:
        bound = min(bound, n / order + 1.0)
    return 4.0 / math.pi * remainder * bound


def _select_l_max(x, theta, params, coef):
    if params.l_max is not None:
        return int(params.l_max)
    l_max = default_l_max(x)
    while (
        _truncation_error(x, theta, l_max, params.tail_order, coef) > params.tol
        and l_max < L_CAP
    ):
        l_max *= 2
    return l_max


def reduced_amplitude_pw(x, theta, params=None):
    """F(theta) from the partial-wave series with resummed tail.

    There is deliberately no wavenumber argument: the phase shifts are
    energy independent, so F depends on x and theta only.
    """
    params = params or PwParams()
    x = as_x(x)
    theta = as_theta(theta)
    if theta == 0.0:
        raise ForwardDivergenceError(
            "Re F diverges logarithmically at theta = 0; only Im F(0) is finite"
        )
    t = abs(theta)
    if x == 0.0:
        return AmplitudeResult(theta, 0j, Method.PARTIAL_WAVE, 0.0, 0)
    coef = tail_coefficients(x)
    order = params.tail_order
    l_max = _select_l_max(x, t, params, coef)
    s_re, s_im, p1, p2, p3 = kernels.pw_sums(x, t, l_max)
    body = complex(s_re, s_im)
    partial = (p1, p2, p3)
    tail = 0j
    for s in range(order):
        remaining = polylog_unit_circle(s + 1, t).real - partial[s]
        tail += coef[s] * remaining
    a0 = partial_wave_coefficient(x, 0)
    F = 2.0 / math.pi * (a0 + 2.0 * (body + tail))
    err = _truncation_error(x, t, l_max, order, coef)
    err += 4.0 * _EPS * (
        sum(abs(c) for c in coef[:order]) * (1.0 + math.log(l_max)) + math.sqrt(l_max)
    )
    return AmplitudeResult(theta, F, Method.PARTIAL_WAVE, err, l_max)


def _sin2_integrand(x, l_max):
    def f(t):
        # sum_{l>L} f(l) -> integral over t = L/l in (0, 1]; smooth at t = 0
        root = np.sqrt(l_max * l_max + x * x * t * t)
        d_over_t = -0.5 * math.pi * x * x / (l_max + root)
        d = d_over_t * t
        return l_max * (np.sinc(d / math.pi) * d_over_t) ** 2

    return f


def _sin2_derivatives(x, l):
    """f'(l) and f'''(l) for f(l) = sin^2(d(l)) on continuous l."""
    r = math.hypot(l, x)
    d = -0.5 * math.pi * x * x / (l + r)
    d1 = 0.5 * math.pi * x * x / (r * (r + l))
    d2 = -0.5 * math.pi * x * x / r ** 3
    d3 = 1.5 * math.pi * x * x * l / r ** 5
    s2, c2 = math.sin(2.0 * d), math.cos(2.0 * d)
    f1 = s2 * d1
    f3 = -4.0 * s2 * d1 ** 3 + 6.0 * c2 * d1 * d2 + s2 * d3
    return f1, f3


def sigma_sum(x, params=None):
    """S = sum over all l of sin^2(d_l); the cross-section is 4 S / k.

    Explicit sum to L, Euler-Maclaurin for the rest (integral plus
    endpoint corrections through the third derivative).
    """
    params = params or PwParams()
    x = as_x(x)
    if x == 0.0:
        return SigmaSum(0.0, 0.0, 0)
    l_max = int(params.l_max) if params.l_max is not None else default_l_max(x)
    head = kernels.sin2_sum(x, l_max)
    quad = integrate(_sin2_integrand(x, l_max), [0.0, 1.0], epsabs=0.0, epsrel=1e-14)
    d_end = phase_shift(x, l_max)
    f_end = math.sin(d_end) ** 2
    f1, f3 = _sin2_derivatives(x, l_max)
    tail = quad.value - 0.5 * f_end - f1 / 12.0 + f3 / 720.0
    value = math.sin(0.5 * math.pi * x) ** 2 + 2.0 * (head + tail)
    error = 2.0 * (abs(f3) / 720.0 + quad.error) + 8.0 * _EPS * value
    return SigmaSum(value, error, l_max)


def sigma_partial_sums(x, l_values):
    """Untailed sums sin^2(d_0) + 2 sum_{l=1}^{L} sin^2(d_l) for each L."""
    x = as_x(x)
    base = math.sin(0.5 * math.pi * x) ** 2
    return [base + 2.0 * kernels.sin2_sum(x, int(L)) for L in l_values]
