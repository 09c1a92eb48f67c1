"""Special functions on the real line: J0, J1, zeros of J1 and polylogarithms
on the unit circle.

The Bessel kernels live in :mod:`scatter2d.kernels`; this module adds domain
checks and the scalar/array conveniences callers want.
"""
import math
from fractions import Fraction

import numpy as np

from . import kernels
from .exceptions import DomainError, SingularityError

ZETA3 = 1.2020569031595942853997381615114


def _check_argument(z):
    arr = np.asarray(z, dtype=float)
    if not np.all(np.isfinite(arr)) or np.any(arr < 0):
        raise DomainError("Bessel functions are implemented for finite z >= 0 only")
    return arr


def bessel_j0(z):
    """Bessel function J0 for finite ``z >= 0`` (scalar or array)."""
    _check_argument(z)
    return kernels.j0(z)


def bessel_j1(z):
    """Bessel function J1 for finite ``z >= 0`` (scalar or array).

    Absolute error is below 1e-12 on [0, 1e4]; see ``_pykernels`` for the
    three evaluation branches.
    """
    _check_argument(z)
    return kernels.j1(z)


def j1_over_z(z):
    """J1(z)/z with the limit 1/2 at z = 0."""
    z = np.asarray(z, dtype=float)
    safe = np.where(z == 0.0, 1.0, z)
    out = np.where(z == 0.0, 0.5, kernels.j1(safe) / safe)
    return float(out) if out.ndim == 0 else out


def _refine_zero(guess):
    lo, hi = guess - 0.5, guess + 0.5
    flo = kernels.j1(lo)
    z = guess
    for _ in range(60):
        f = kernels.j1(z)
        if f == 0.0:
            return z
        if (f > 0) == (flo > 0):
            lo, flo = z, f
        else:
            hi = z
        step = f / (kernels.j0(z) - f / z)
        candidate = z - step
        if not lo < candidate < hi:
            candidate = 0.5 * (lo + hi)
        if abs(candidate - z) <= 1e-15 * candidate:
            return candidate
        z = candidate
    return z


def j1_positive_zeros(n):
    """First ``n`` positive zeros of J1, increasing.

    McMahon's expansion seeds Newton's method on all zeros at once; any
    zero whose sign change is not confirmed afterwards is redone with a
    bracketed, bisection-safeguarded Newton iteration.
    """
    if int(n) != n or n < 1:
        raise ValueError("n must be a positive integer")
    m = np.arange(1, int(n) + 1, dtype=float)
    beta = (m + 0.25) * math.pi
    seeds = beta - 3.0 / (8.0 * beta) + 36.0 / (3.0 * (8.0 * beta) ** 3)
    z = seeds.copy()
    for _ in range(6):
        f = kernels.j1(z)
        z = z - f / (kernels.j0(z) - f / z)
    delta = 1e-12 * z
    bad = (np.abs(z - seeds) > 0.5) | (kernels.j1(z - delta) * kernels.j1(z + delta) > 0)
    for i in np.flatnonzero(bad):
        z[i] = _refine_zero(seeds[i])
    return z


def _bernoulli_even(count):
    # Akiyama-Tanigawa in exact arithmetic; returns B_2, B_4, ..., B_{2 count}.
    size = 2 * count + 1
    a = [Fraction(0)] * (size + 1)
    out = []
    for m in range(size + 1):
        a[m] = Fraction(1, m + 1)
        for j in range(m, 0, -1):
            a[j - 1] = j * (a[j - 1] - a[j])
        if m >= 2 and m % 2 == 0:
            out.append(a[0])
    return out


_CLAUSEN_TERMS = 30
# zeta(2n) / (2 pi)^(2n) = |B_2n| / (2 (2n)!)
_ZETA_SCALED = tuple(
    float(abs(b)) / (2.0 * math.factorial(2 * n))
    for n, b in enumerate(_bernoulli_even(_CLAUSEN_TERMS), start=1)
)


def _clausen2(t):
    """sum_{l>=1} sin(l t)/l**2 for 0 < t <= pi."""
    t2 = t * t
    power = t2
    acc = 0.0
    for n, zs in enumerate(_ZETA_SCALED, start=1):
        acc += zs * power / (n * (2 * n + 1))
        power *= t2
    return t - t * math.log(t) + t * acc


def _clausen3(t):
    """sum_{l>=1} cos(l t)/l**3 for 0 < t <= pi."""
    t2 = t * t
    power = t2
    acc = 0.0
    for n, zs in enumerate(_ZETA_SCALED, start=1):
        acc += zs * power / (n * (2 * n + 1) * (2 * n + 2))
        power *= t2
    return ZETA3 - 0.75 * t2 + 0.5 * t2 * math.log(t) - t2 * acc


def polylog_unit_circle(s, theta):
    """Li_s(exp(i theta)) for s in {1, 2, 3}.

    Real and imaginary parts are assembled from the elementary Bernoulli
    polynomial parts and the Clausen functions, with the argument reduced
    to (-pi, pi].
    """
    if s not in (1, 2, 3):
        raise ValueError("s must be 1, 2 or 3")
    theta = float(theta)
    if not math.isfinite(theta):
        raise DomainError("theta must be finite")
    t = math.remainder(theta, 2.0 * math.pi)
    if t == -math.pi:
        t = math.pi
    sign = -1.0 if t < 0 else 1.0
    a = abs(t)
    if s == 1:
        if a == 0.0:
            raise SingularityError("Li_1(exp(i theta)) is singular at theta = 0 mod 2pi")
        # principal branch of -log(1 - exp(i a))
        return complex(-math.log(2.0 * math.sin(0.5 * a)), sign * 0.5 * (math.pi - a))
    if s == 2:
        re = math.pi ** 2 / 6.0 - a * (2.0 * math.pi - a) / 4.0
        im = _clausen2(a) if a > 0 else 0.0
    else:
        re = _clausen3(a) if a > 0 else ZETA3
        im = (a ** 3 - 3.0 * math.pi * a * a + 2.0 * math.pi ** 2 * a) / 12.0
    return complex(re, sign * im)
