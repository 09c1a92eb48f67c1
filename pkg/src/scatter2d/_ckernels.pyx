# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: J0/J1 and the partial-wave summation loops.

Algorithms and branch points are identical to ``_pykernels``.
"""
import numpy as np

from libc.math cimport sin, cos, sqrt, fabs, M_PI

BACKEND = "cython"

cdef enum:
    MILLER_START = 70
    SERIES_TERMS = 30
    ASYM_TERMS = 21

cdef double SERIES_MAX = 8.0
cdef double ASYM_MIN = 25.0

cdef double INV_SQRT2 = 0.70710678118654752440
cdef double TWO_OVER_PI = 0.63661977236758134308
cdef double HANKEL0[ASYM_TERMS]
cdef double HANKEL1[ASYM_TERMS]


cdef void _fill(double* coef, double nu):
    cdef int k
    coef[0] = 1.0
    for k in range(1, ASYM_TERMS):
        coef[k] = coef[k - 1] * (4.0 * nu * nu - (2 * k - 1) * (2 * k - 1)) / (8.0 * k)


_fill(HANKEL0, 0.0)
_fill(HANKEL1, 1.0)


cdef inline double _series(double z, int order) nogil:
    cdef double h2 = 0.25 * z * z
    cdef double term = 1.0 if order == 0 else 0.5 * z
    cdef double total = term
    cdef int k
    for k in range(SERIES_TERMS):
        term = -term * h2 / ((k + 1) * (k + 1 + order))
        total += term
    return total


cdef inline double _miller(double z, int order) nogil:
    cdef double jp1 = 0.0, j = 1e-30, jm1, norm = 0.0, j1 = 0.0
    cdef int n, m
    for n in range(MILLER_START, 0, -1):
        jm1 = (2.0 * n / z) * j - jp1
        jp1 = j
        j = jm1
        m = n - 1
        if m == 1:
            j1 = j
        elif m > 0 and m % 2 == 0:
            norm += 2.0 * j
    norm += j
    if order == 0:
        return j / norm
    return j1 / norm


cdef inline double _asym(double z, int order) nogil:
    cdef double* coef = &HANKEL0[0] if order == 0 else &HANKEL1[0]
    cdef double inv = 1.0 / z, power = 1.0, p = 0.0, q = 0.0, t
    cdef double s = sin(z), c = cos(z), cos_chi, sin_chi
    cdef int k
    for k in range(ASYM_TERMS):
        t = coef[k] * power
        if k % 4 == 0:
            p += t
        elif k % 4 == 1:
            q += t
        elif k % 4 == 2:
            p -= t
        else:
            q -= t
        power *= inv
    if order == 0:
        cos_chi = (c + s) * INV_SQRT2
        sin_chi = (s - c) * INV_SQRT2
    else:
        cos_chi = (s - c) * INV_SQRT2
        sin_chi = -(s + c) * INV_SQRT2
    return sqrt(TWO_OVER_PI / z) * (p * cos_chi - q * sin_chi)


cdef inline double _bessel(double z, int order) nogil:
    if z < SERIES_MAX:
        return _series(z, order)
    if z < ASYM_MIN:
        return _miller(z, order)
    return _asym(z, order)


def _apply(z, int order):
    arr = np.asarray(z, dtype=float)
    if arr.ndim == 0:
        return _bessel(float(arr), order)
    flat = np.ascontiguousarray(arr).ravel()
    out = np.empty_like(flat)
    cdef double[::1] zv = flat
    cdef double[::1] ov = out
    cdef Py_ssize_t i
    with nogil:
        for i in range(zv.shape[0]):
            ov[i] = _bessel(zv[i], order)
    return out.reshape(arr.shape)


def j0(z):
    return _apply(z, 0)


def j1(z):
    return _apply(z, 1)


cdef inline double _phase_shift(double x, double l) nogil:
    return -0.5 * M_PI * x * x / (l + sqrt(l * l + x * x))


def pw_sums(double x, double theta, long l_max):
    """Cosine-weighted partial sums over l = 1..l_max (see ``_pykernels``)."""
    # Kahan-compensated accumulators; numpy's pairwise sum is comparably accurate.
    cdef double s[5]
    cdef double comp[5]
    cdef double v[5]
    cdef double d, c, inv, y, t, sd
    cdef long l
    cdef int i
    for i in range(5):
        s[i] = 0.0
        comp[i] = 0.0
    with nogil:
        for l in range(1, l_max + 1):
            d = _phase_shift(x, <double>l)
            c = cos(<double>l * theta)
            inv = 1.0 / l
            sd = sin(d)
            v[0] = c * sd * cos(d)
            v[1] = c * sd * sd
            v[2] = c * inv
            v[3] = v[2] * inv
            v[4] = v[3] * inv
            for i in range(5):
                y = v[i] - comp[i]
                t = s[i] + y
                comp[i] = (t - s[i]) - y
                s[i] = t
    return (s[0], s[1], s[2], s[3], s[4])


def sin2_sum(double x, long l_max):
    """sum_{l=1}^{l_max} sin(d_l)**2."""
    cdef double total = 0.0, comp = 0.0, y, t, sd
    cdef long l
    with nogil:
        for l in range(1, l_max + 1):
            sd = sin(_phase_shift(x, <double>l))
            y = sd * sd - comp
            t = total + y
            comp = (t - total) - y
            total = t
    return total
