"""Pure-Python (numpy) implementations of the hot kernels.

This module mirrors ``_ckernels.pyx`` function for function; ``kernels``
picks one of the two at import time.
"""
import math

import numpy as np

BACKEND = "python"

# Branch points for J0/J1: power series below SERIES_MAX, Miller backward
# recurrence in between, Hankel asymptotic expansion from ASYM_MIN on.
SERIES_MAX = 8.0
ASYM_MIN = 25.0
MILLER_START = 70
SERIES_TERMS = 30
ASYM_TERMS = 21

_INV_SQRT2 = 1.0 / math.sqrt(2.0)
_TWO_OVER_PI = 2.0 / math.pi


def _hankel_coefficients(nu, n):
    coef = [1.0]
    a = 1.0
    for k in range(1, n):
        a *= (4.0 * nu * nu - (2 * k - 1) ** 2) / (8.0 * k)
        coef.append(a)
    return tuple(coef)


HANKEL_J0 = _hankel_coefficients(0, ASYM_TERMS)
HANKEL_J1 = _hankel_coefficients(1, ASYM_TERMS)


def _series(z, order):
    h2 = 0.25 * z * z
    term = np.ones_like(z) if order == 0 else 0.5 * z
    total = term.copy()
    for k in range(SERIES_TERMS):
        term = -term * h2 / ((k + 1) * (k + 1 + order))
        total += term
    return total


def _miller(z):
    """Return (J0, J1) by backward recurrence normalised with J0 + 2*sum J2k = 1."""
    jp1 = np.zeros_like(z)
    j = np.full_like(z, 1e-30)
    norm = np.zeros_like(z)
    j1 = np.zeros_like(z)
    for n in range(MILLER_START, 0, -1):
        jm1 = (2.0 * n / z) * j - jp1
        jp1, j = j, jm1
        m = n - 1
        if m == 1:
            j1 = j.copy()
        elif m > 0 and m % 2 == 0:
            norm += 2.0 * j
    norm += j
    return j / norm, j1 / norm


def _hankel_pq(z, coef):
    inv = 1.0 / z
    p = np.zeros_like(z)
    q = np.zeros_like(z)
    power = np.ones_like(z)
    for k, a in enumerate(coef):
        t = a * power
        r = k % 4
        if r == 0:
            p += t
        elif r == 1:
            q += t
        elif r == 2:
            p -= t
        else:
            q -= t
        power = power * inv
    return p, q


def _asym(z, order):
    s = np.sin(z)
    c = np.cos(z)
    if order == 0:
        p, q = _hankel_pq(z, HANKEL_J0)
        cos_chi = (c + s) * _INV_SQRT2
        sin_chi = (s - c) * _INV_SQRT2
    else:
        p, q = _hankel_pq(z, HANKEL_J1)
        cos_chi = (s - c) * _INV_SQRT2
        sin_chi = -(s + c) * _INV_SQRT2
    return np.sqrt(_TWO_OVER_PI / z) * (p * cos_chi - q * sin_chi)


def _bessel(z, order):
    z = np.asarray(z, dtype=float)
    scalar = z.ndim == 0
    z = np.atleast_1d(z)
    out = np.empty_like(z)
    lo = z < SERIES_MAX
    hi = z >= ASYM_MIN
    mid = ~(lo | hi)
    if lo.any():
        out[lo] = _series(z[lo], order)
    if mid.any():
        pair = _miller(z[mid])
        out[mid] = pair[order]
    if hi.any():
        out[hi] = _asym(z[hi], order)
    return float(out[0]) if scalar else out


def j0(z):
    return _bessel(z, 0)


def j1(z):
    return _bessel(z, 1)


def _phase_shifts(x, l):
    return -0.5 * math.pi * x * x / (l + np.sqrt(l * l + x * x))


_CHUNK = 1 << 18


def pw_sums(x, theta, l_max):
    """Cosine-weighted partial sums over l = 1..l_max.

    Returns ``(sum cos(l t) Re a_l, sum cos(l t) Im a_l, sum cos(l t)/l,
    sum cos(l t)/l**2, sum cos(l t)/l**3)`` with ``a_l = exp(i d_l) sin d_l``.
    """
    acc = np.zeros(5)
    for start in range(1, l_max + 1, _CHUNK):
        l = np.arange(start, min(start + _CHUNK, l_max + 1), dtype=float)
        d = _phase_shifts(x, l)
        c = np.cos(l * theta)
        inv = 1.0 / l
        acc[0] += np.sum(c * 0.5 * np.sin(2.0 * d))
        acc[1] += np.sum(c * np.sin(d) ** 2)
        acc[2] += np.sum(c * inv)
        acc[3] += np.sum(c * inv * inv)
        acc[4] += np.sum(c * inv * inv * inv)
    return tuple(float(v) for v in acc)


def sin2_sum(x, l_max):
    """sum_{l=1}^{l_max} sin(d_l)**2."""
    total = 0.0
    for start in range(1, l_max + 1, _CHUNK):
        l = np.arange(start, min(start + _CHUNK, l_max + 1), dtype=float)
        total += float(np.sum(np.sin(_phase_shifts(x, l)) ** 2))
    return total
