"""Large-coupling (hbar -> 0) asymptotics and forward-divergence diagnostics."""
import math
from dataclasses import dataclass

import numpy as np

from .exceptions import DomainError, ForwardDivergenceError
from .model import AmplitudeResult, Method, as_theta, as_x
from .partial_waves import reduced_amplitude_pw


def _angular_factor(theta):
    t = abs(as_theta(theta))
    if t == 0.0:
        raise ForwardDivergenceError("the classical limit is taken at fixed theta != 0")
    return t * (2.0 * math.pi - t)


def asymptotic_reduced_amplitude(x, theta):
    """Leading large-x form of F(theta).

    F ~ sqrt(2 pi x) [sin(w) + i cos(w)] / q^(3/4), q = |theta|(2pi - |theta|),
    w = x sqrt(q) - 3pi/4. The real part carries the sign that matches the
    partial-wave series (see :mod:`scatter2d.dispersion`).
    """
    x = as_x(x, allow_zero=False)
    q = _angular_factor(theta)
    w = x * math.sqrt(q) - 0.75 * math.pi
    return math.sqrt(2.0 * math.pi * x) * complex(math.sin(w), math.cos(w)) / q ** 0.75


def asymptotic_result(x, theta):
    """:func:`asymptotic_reduced_amplitude` wrapped as an AmplitudeResult.

    The error estimate is the size of the first neglected order, |F|/u with
    u = x sqrt(q), a heuristic rather than a bound.
    """
    theta = as_theta(theta)
    F = asymptotic_reduced_amplitude(x, theta)
    u = as_x(x) * math.sqrt(_angular_factor(theta))
    return AmplitudeResult(theta, F, Method.ASYMPTOTIC, abs(F) / u, 0)


def classical_dcs(kappa_over_E, theta):
    """Classical d(sigma)/d(theta) = sqrt(kappa/E) pi^2 / q^(3/2)."""
    if not kappa_over_E > 0:
        raise ValueError("kappa/E must be positive")
    t = abs(as_theta(theta))
    if t == 0.0:
        raise ForwardDivergenceError("classical cross-section diverges as theta^(-3/2) at theta = 0")
    return math.sqrt(kappa_over_E) * math.pi ** 2 / (t * (2.0 * math.pi - t)) ** 1.5


@dataclass(frozen=True)
class ForwardFit:
    """Comparison of |F|^2 ~ (a ln theta + b)^2 + c against A theta^(-3/2) + B.

    Residuals are RMS relative residuals of weighted least squares.
    """

    a: float
    b: float
    c: float
    log2_residual: float
    power_residual: float
    preferred: str
    degenerate: bool

    @property
    def ratio(self) -> float:
        """power-law residual / ln^2 residual; large means ln^2 fits better."""
        if self.log2_residual == 0.0:
            return math.inf if self.power_residual > 0 else 1.0
        return self.power_residual / self.log2_residual

    @property
    def passed(self) -> bool:
        return self.preferred == "log2"


def _relative_lstsq(columns, y):
    design = np.column_stack(columns) / y[:, None]
    coef, *_ = np.linalg.lstsq(design, np.ones_like(y), rcond=None)
    resid = design @ coef - 1.0
    return coef, float(np.sqrt(np.mean(resid ** 2)))


def fit_forward_models(thetas, values, threshold=10.0):
    """Fit both forward models to positive samples ``values`` at ``thetas``."""
    t = np.asarray(thetas, dtype=float)
    y = np.asarray(values, dtype=float)
    if t.size < 4 or t.size != y.size:
        raise ValueError("need at least 4 (theta, value) samples")
    if np.any(t <= 0) or np.any(y <= 0):
        raise ValueError("thetas and values must be positive")
    L = np.log(t)
    (alpha, beta, gamma), r_log = _relative_lstsq([L * L, L, np.ones_like(L)], y)
    _, r_pow = _relative_lstsq([t ** -1.5, np.ones_like(t)], y)
    spread = (y.max() - y.min()) / y.max()
    degenerate = spread < 1e-12 or alpha <= 1e-12 * abs(gamma)
    a = math.sqrt(max(alpha, 0.0))
    b = beta / (2.0 * a) if a > 0 else 0.0
    c = gamma - b * b
    if degenerate:
        preferred = "degenerate"
    elif r_pow >= threshold * r_log:
        preferred = "log2"
    elif r_log >= threshold * r_pow:
        preferred = "power"
    else:
        preferred = "inconclusive"
    return ForwardFit(float(a), float(b), float(c), r_log, r_pow, preferred, bool(degenerate))


def forward_divergence_probe(x, theta_samples, params=None):
    """Model comparison on partial-wave |F|^2 at small angles.

    ``theta_samples`` must be decreasing, in (0, 0.1], at least 4 of them.
    """
    samples = [float(s) for s in theta_samples]
    if len(samples) < 4:
        raise ValueError("forward probe needs at least 4 samples")
    if any(not 0 < s <= 0.1 for s in samples):
        raise DomainError("forward probe samples must lie in (0, 0.1]")
    if any(b >= a for a, b in zip(samples, samples[1:])):
        raise ValueError("forward probe samples must be strictly decreasing")
    values = [reduced_amplitude_pw(x, s, params).abs_F2 for s in samples]
    return fit_forward_models(samples, values)
