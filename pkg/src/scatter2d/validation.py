"""Cross-method and identity checks collected into a structured report."""
import math
from dataclasses import asdict, dataclass, field
from typing import List, Optional, Sequence

import numpy as np

from .classical import classical_dcs, fit_forward_models, forward_divergence_probe
from .dispersion import DispParams, im_reduced_amplitude, reduced_amplitude_disp
from .model import as_x
from .partial_waves import PwParams, reduced_amplitude_pw, sigma_sum

FORWARD_SAMPLES = (1e-2, 3e-3, 1e-3, 3e-4)
CLASSICAL_XS = (5.0, 20.0, 80.0)


@dataclass(frozen=True)
class Check:
    name: str
    group: str
    residual: float
    tolerance: float
    passed: bool
    details: str = ""

    def to_dict(self):
        out = asdict(self)
        for key in ("residual", "tolerance"):
            if not math.isfinite(out[key]):
                out[key] = str(out[key])
        return out


def make_check(name, group, residual, tolerance, details=""):
    residual = float(residual)
    return Check(name, group, residual, float(tolerance), abs(residual) <= tolerance, details)


def failed_check(name, group, tolerance, exc):
    return Check(name, group, math.inf, float(tolerance), False, f"{type(exc).__name__}: {exc}")


@dataclass
class ValidationReport:
    checks: List[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self):
        return [c for c in self.checks if not c.passed]

    def to_dict(self):
        return {
            "passed": self.passed,
            "n_checks": len(self.checks),
            "n_failed": len(self.failures()),
            "checks": [c.to_dict() for c in self.checks],
        }


def default_grid(n=25, lo=0.05, hi=math.pi - 0.01):
    return [float(v) for v in np.linspace(lo, hi, n)]


def check_method_agreement(x, grid, tol=1e-6, group="", pw_params=None, disp_params=None):
    """max over the grid of |F_pw - F_disp|."""
    grid = list(grid)
    if not grid:
        raise ValueError("method agreement needs a nonempty theta grid")
    x = as_x(x)
    worst, where = 0.0, None
    try:
        for theta in grid:
            diff = abs(
                reduced_amplitude_pw(x, theta, pw_params).F
                - reduced_amplitude_disp(x, theta, disp_params).F
            )
            if diff >= worst:
                worst, where = diff, theta
    except (ArithmeticError, ValueError) as exc:
        return failed_check("method_agreement", group, tol, exc)
    return make_check(
        "method_agreement", group, worst, tol,
        f"x={x:g}, {len(grid)} angles, worst at theta={where:.6g}",
    )


def _gauss_panels(n_halvings, upper_splits, nodes):
    t, w = np.polynomial.legendre.leggauss(nodes)
    edges = [math.pi * 0.5 ** j for j in range(n_halvings, 1, -1)]
    edges += list(np.linspace(math.pi / 4.0, math.pi, upper_splits + 1))
    pts, wts = [], []
    for a, b in zip(edges[:-1], edges[1:]):
        pts.append(0.5 * (b - a) * t + 0.5 * (a + b))
        wts.append(0.5 * (b - a) * w)
    return edges[0], np.concatenate(pts), np.concatenate(wts)


def optical_integral(x, n_halvings=40, upper_splits=8, nodes=20, pw_params=None):
    """int_{-pi}^{pi} |F|^2 d(theta) on a mesh graded geometrically toward 0.

    |F|^2 grows like ln^2(theta) at the origin; the piece below the
    smallest panel edge is estimated from the endpoint value.
    """
    x = as_x(x)
    if x == 0.0:
        return 0.0, 0.0
    lo, pts, wts = _gauss_panels(n_halvings, upper_splits, nodes)
    vals = np.array([reduced_amplitude_pw(x, p, pw_params).abs_F2 for p in pts])
    first = reduced_amplitude_pw(x, lo, pw_params).abs_F2
    # int_0^e ln^2 ~ e (ln^2 e - 2 ln e + 2); bounded by 2 e |F(e)|^2 for tiny e
    head = lo * first
    return 2.0 * (float(np.dot(wts, vals)) + head), 2.0 * head


def check_optical_theorem(x, tol=1e-3, group="", pw_params=None):
    """Relative gap between int |F|^2 and 4 Im F(0) = 2 pi x^2."""
    x = as_x(x)
    try:
        integral, head = optical_integral(x, pw_params=pw_params)
    except (ArithmeticError, ValueError) as exc:
        return failed_check("optical_theorem", group, tol, exc)
    target = 4.0 * im_reduced_amplitude(x, 0.0) if x > 0 else 0.0
    residual = abs(integral - target) / target if target > 0 else abs(integral)
    return make_check(
        "optical_theorem", group, residual, tol,
        f"int|F|^2={integral:.12g}, 4 Im F(0)={target:.12g}, forward piece={head:.3g}",
    )


def check_sigma_consistency(x, tol=1e-8, group="", pw_params=None):
    """|4 S - pi^2 x^2| / pi^2 x^2 with S the phase-shift sum."""
    x = as_x(x)
    s = sigma_sum(x, pw_params)
    exact = math.pi ** 2 * x * x
    residual = abs(4.0 * s.value - exact) / max(exact, 1e-300)
    return make_check(
        "sigma_consistency", group, residual, tol,
        f"4S={4 * s.value:.15g}, pi^2 x^2={exact:.15g}, L={s.l_max}, bound={4 * s.error:.3g}",
    )


def check_forward_divergence(x, tol=0.1, group="", samples=FORWARD_SAMPLES, pw_params=None):
    """Residual is (ln^2 residual)/(power-law residual); passes when <= 0.1."""
    try:
        fit = forward_divergence_probe(x, samples, pw_params)
    except (ArithmeticError, ValueError) as exc:
        return failed_check("forward_log2", group, tol, exc)
    residual = 1.0 / fit.ratio if fit.ratio > 0 else math.inf
    if fit.degenerate:
        residual = math.inf
    return make_check(
        "forward_log2", group, residual, tol,
        f"preferred={fit.preferred}, a={fit.a:.6g}, ln2 res={fit.log2_residual:.3g}, "
        f"power res={fit.power_residual:.3g}",
    )


def classical_deviation(x, theta=math.pi / 2, pw_params=None):
    """| |F_pw|^2 - 2 pi x / q^(3/2) | relative to the asymptotic value."""
    q = theta * (2.0 * math.pi - theta)
    asym = 2.0 * math.pi * x / q ** 1.5
    return abs(reduced_amplitude_pw(x, theta, pw_params).abs_F2 - asym) / asym


def check_classical_limit(tol=0.05, group="classical", x_ref=50.0, theta=math.pi / 2):
    dev = classical_deviation(x_ref, theta)
    return make_check(
        "classical_limit", group, dev, tol, f"x={x_ref:g}, theta={theta:.6g}"
    )


def check_classical_monotone(tol=0.0, group="classical", xs=CLASSICAL_XS, theta=math.pi / 2):
    """Residual is the largest increase of the deviation along increasing x."""
    devs = [classical_deviation(x, theta) for x in xs]
    increase = max([0.0] + [b - a for a, b in zip(devs, devs[1:])])
    text = ", ".join(f"x={x:g}: {d:.3g}" for x, d in zip(xs, devs))
    return make_check("classical_monotone", group, increase, tol, text)


def check_classical_forward_power(tol=0.1, group="classical", samples=FORWARD_SAMPLES):
    vals = [classical_dcs(1.0, s) for s in samples]
    fit = fit_forward_models(samples, vals)
    residual = fit.power_residual / fit.log2_residual if fit.log2_residual > 0 else math.inf
    return make_check(
        "classical_forward_power", group, residual, tol, f"preferred={fit.preferred}"
    )


@dataclass(frozen=True)
class SuiteConfig:
    grid_points: int = 25
    theta_lo: float = 0.05
    theta_hi: float = math.pi - 0.01
    tol: Optional[float] = None
    classical: bool = True
    pw_params: Optional[PwParams] = None
    disp_params: Optional[DispParams] = None

    def pick(self, default):
        return default if self.tol is None else self.tol


def run_full_suite(x_list: Sequence[float], config: Optional[SuiteConfig] = None):
    """Run every check for each x, then the x-independent classical group.

    Report order follows ``x_list`` and a fixed check order.
    """
    config = config or SuiteConfig()
    report = ValidationReport()
    grid = default_grid(config.grid_points, config.theta_lo, config.theta_hi)
    for x in x_list:
        group = f"x={float(x):g}"
        report.checks.append(check_method_agreement(
            x, grid, config.pick(1e-6), group, config.pw_params, config.disp_params))
        report.checks.append(check_optical_theorem(x, config.pick(1e-3), group, config.pw_params))
        report.checks.append(check_sigma_consistency(x, config.pick(1e-8), group, config.pw_params))
        if float(x) > 0:
            report.checks.append(check_forward_divergence(x, config.pick(0.1), group))
    if x_list and config.classical:
        report.checks.append(check_classical_limit(config.pick(0.05)))
        report.checks.append(check_classical_monotone(0.0))
        report.checks.append(check_classical_forward_power(config.pick(0.1)))
    return report
