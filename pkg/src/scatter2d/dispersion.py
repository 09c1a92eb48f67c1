"""Dispersion-relation evaluation of the reduced amplitude.

Re F is a principal-value integral over physical momentum transfers plus a
semi-infinite integral over unphysical ones; Im F comes entirely from the
delta-function half of the i*epsilon prescription and is closed form.

Sign convention: the real part is returned with the orientation that
matches the partial-wave series built from the (negative) phase shifts,
i.e. ``Re F = -(PV integral + tail integral)``. Both representations then
agree component by component.
"""
import math
from dataclasses import dataclass

import numpy as np

from . import kernels
from .exceptions import AccuracyError, BackscatterMarginError, ForwardDivergenceError
from .model import AmplitudeResult, Method, as_theta, as_x
from .quadrature import integrate, wynn_epsilon
from .specfun import j1_over_z, j1_positive_zeros

PI = math.pi


@dataclass(frozen=True)
class DispParams:
    tol: float = 1e-9
    theta_min: float = 1e-6
    theta_back_margin: float = 1e-3
    tail_panels: int = 200

    def __post_init__(self):
        if min(self.tol, self.theta_min, self.theta_back_margin, self.tail_panels) <= 0:
            raise ValueError("dispersion parameters must be positive")
        if not self.theta_min < PI - self.theta_back_margin:
            raise ValueError("theta_min must be below pi - theta_back_margin")


@dataclass(frozen=True)
class IntegralResult:
    value: float
    error: float
    panels: int


def spectral_density(x, v):
    """g(v) = x J1(x sqrt(v(2pi - v))) / sqrt(v(2pi - v)); g(0) = x^2/2."""
    v = np.asarray(v, dtype=float)
    return x * x * j1_over_z(x * np.sqrt(v * (2.0 * PI - v)))


def _j2_over_z2(z):
    if z < 2.0:
        h2 = 0.25 * z * z
        term = 0.125
        total = term
        for k in range(1, 30):
            term *= -h2 / (k * (k + 2))
            total += term
        return total
    j0 = float(kernels.j0(z))
    j1 = float(kernels.j1(z))
    return (2.0 * j1 / z - j0) / (z * z)


def spectral_density_derivative(x, v):
    """g'(v) = -x^4 (pi - v) J2(z) / z^2 with z = x sqrt(v(2pi - v))."""
    z = x * math.sqrt(v * (2.0 * PI - v))
    return -(x ** 4) * (PI - v) * _j2_over_z2(z)


def im_reduced_amplitude(x, theta):
    """Im F = pi x^2 J1(u)/u, u = x sqrt(|theta|(2pi - |theta|)); pi x^2/2 at theta = 0."""
    x = as_x(x)
    t = abs(as_theta(theta))
    return PI * float(spectral_density(x, t))


def _check_window(theta, params):
    t = abs(theta)
    if t < params.theta_min:
        raise ForwardDivergenceError(
            f"|theta| = {t:g} is below theta_min = {params.theta_min:g}: "
            "Re F diverges logarithmically in the forward direction"
        )
    if t > PI - params.theta_back_margin:
        raise BackscatterMarginError(
            f"|theta| = {t:g} is within {params.theta_back_margin:g} of pi; "
            "use the partial-wave method for backscattering"
        )
    return t


def _graded_points(lo, hi, anchor):
    """Breakpoints from lo to hi refined geometrically around ``anchor``."""
    pts = {lo, hi}
    if lo < anchor < hi:
        pts.add(anchor)
    step = max(anchor - lo, 1e-300)
    scale = step
    while scale > 1e-3 * step and anchor - scale > lo:
        scale *= 0.25
        pts.add(anchor - scale)
    scale = 1.0
    while anchor + scale * max(anchor, 1e-300) < hi and scale < 1e12:
        pts.add(anchor + scale * max(anchor, 1e-300))
        scale *= 4.0
    return sorted(p for p in pts if lo <= p <= hi)


def subtracted_pv_integrand(x, t):
    """[g(v) - g(t)] sin v / (cos t - cos v), with the removable value g'(t) at v = t."""
    g_t = float(spectral_density(x, t))
    dg_t = spectral_density_derivative(x, t)

    def f(v):
        v = np.asarray(v, dtype=float)
        denom = 2.0 * np.sin(0.5 * (v + t)) * np.sin(0.5 * (v - t))
        at_pole = denom == 0.0
        safe = np.where(at_pole, 1.0, denom)
        out = (spectral_density(x, v) - g_t) * np.sin(v) / safe
        return np.where(at_pole, dg_t, out)

    return f


def principal_value_integral(x, theta, params=None):
    """PV of int_0^pi g(v) sin v / (cos theta - cos v) dv by singularity subtraction."""
    params = params or DispParams()
    x = as_x(x, allow_zero=False)
    t = _check_window(as_theta(theta), params)
    points = _graded_points(0.0, PI, t)
    res = integrate(subtracted_pv_integrand(x, t), points, epsabs=0.25 * params.tol, epsrel=0.0)
    g_t = float(spectral_density(x, t))
    # ln((1 + cos t)/(1 - cos t)) without the cancellation in 1 - cos t
    weight = -2.0 * math.log(math.tan(0.5 * t))
    if not res.converged:
        raise AccuracyError("principal-value quadrature did not converge", res.value + g_t * weight, res.error)
    return IntegralResult(res.value + g_t * weight, res.error, res.n_intervals)


def tail_integrand(x, theta):
    """x J1(x s)/s * sinh(tau)/(cos theta + cosh tau), s = sqrt(pi^2 + tau^2)."""
    c = math.cos(theta)

    def f(tau):
        tau = np.asarray(tau, dtype=float)
        s = np.sqrt(PI * PI + tau * tau)
        # sinh/(c + cosh) = (1 - e^{-2tau}) / (1 + 2c e^{-tau} + e^{-2tau}), overflow free
        e1 = np.exp(-tau)
        e2 = e1 * e1
        ratio = (1.0 - e2) / (1.0 + 2.0 * c * e1 + e2)
        return x * x * j1_over_z(x * s) * ratio

    return f


def tail_integral(x, theta, params=None):
    """Integral over unphysical momentum transfers, tau in [0, inf).

    Adaptive quadrature up to the first zero of the Bessel factor, then one
    panel per half-oscillation between consecutive zeros, with the
    alternating partial sums accelerated by Wynn's epsilon algorithm.
    """
    params = params or DispParams()
    x = as_x(x, allow_zero=False)
    t = abs(as_theta(theta))
    if t > PI - params.theta_back_margin:
        raise BackscatterMarginError(
            f"|theta| = {t:g} is within {params.theta_back_margin:g} of pi"
        )
    f = tail_integrand(x, t)
    n_skip = int(x) + 2
    zeros = j1_positive_zeros(n_skip + params.tail_panels + 1)
    zeros = zeros[zeros > x * PI][: params.tail_panels + 1]
    taus = np.sqrt((zeros / x) ** 2 - PI * PI)
    panel_tol = 0.1 * params.tol
    # near theta = pi the integrand peaks at tau ~ pi - theta
    width = PI - t
    head_pts = [0.0]
    p = width
    while p < taus[0]:
        head_pts.append(p)
        p *= 4.0
    head_pts.append(taus[0])
    head = integrate(f, head_pts, epsabs=panel_tol, epsrel=0.0)
    sums = [head.value]
    quad_err = head.error
    estimate, err = head.value, float("inf")
    history = []
    for i in range(len(taus) - 1):
        res = integrate(f, [taus[i], taus[i + 1]], epsabs=panel_tol / 10.0, epsrel=0.0)
        quad_err += res.error
        sums.append(sums[-1] + res.value)
        if len(sums) >= 6:
            estimate, err = wynn_epsilon(sums[-min(len(sums), 24):])
            history.append(estimate)
            if len(history) >= 3:
                drift = max(abs(history[-1] - history[-2]), abs(history[-1] - history[-3]))
                total_err = max(err, drift) + quad_err
                if total_err < 0.5 * params.tol:
                    return IntegralResult(estimate, total_err, i + 1)
    raise AccuracyError(
        f"tail integral did not reach tol={params.tol:g} within {params.tail_panels} panels",
        estimate,
        err + quad_err,
    )


def re_reduced_amplitude_disp(x, theta, params=None):
    """Re F from the dispersion integrals; returns (value, error)."""
    params = params or DispParams()
    pv = principal_value_integral(x, theta, params)
    tail = tail_integral(x, theta, params)
    return -(pv.value + tail.value), pv.error + tail.error, tail.panels


def reduced_amplitude_disp(x, theta, params=None):
    params = params or DispParams()
    x_val = as_x(x)
    theta = as_theta(theta)
    if x_val == 0.0:
        return AmplitudeResult(theta, 0j, Method.DISPERSION, 0.0, 0)
    re, err, panels = re_reduced_amplitude_disp(x_val, theta, params)
    im = im_reduced_amplitude(x_val, theta)
    return AmplitudeResult(theta, complex(re, im), Method.DISPERSION, err, panels)
