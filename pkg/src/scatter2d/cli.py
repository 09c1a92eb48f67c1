"""Command-line interface.

    scatter2d amplitude --x 1 --theta 1.5 --method dispersion
    scatter2d sweep --x 1 --n 25 --method partial_wave,dispersion --format csv
    scatter2d sigma --x 1 --k 1
    scatter2d classical --x 50 --theta 1.5707963
    scatter2d validate --x-list 0.5,1,2

Exit codes: 0 success, 1 validation failure, 2 argument or domain error.
"""
import argparse
import csv
import io
import json
import math
import sys
from dataclasses import asdict, dataclass
from typing import Optional, Tuple

import numpy as np

from . import __version__
from .classical import asymptotic_result, classical_dcs
from .dispersion import DispParams, reduced_amplitude_disp
from .exceptions import AccuracyError, DomainError
from .model import Method, coupling_from_physical, dcs_from_reduced, sigma_closed_form
from .partial_waves import PwParams, reduced_amplitude_pw, sigma_sum
from .validation import SuiteConfig, run_full_suite

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_USAGE = 2

AMPLITUDE_FIELDS = ("theta", "method", "re_F", "im_F", "abs_F2", "dsigma_dtheta", "err_estimate")
SIGMA_FIELDS = ("x", "k", "sigma_closed_form", "sigma_from_sum", "rel_diff")
CLASSICAL_FIELDS = (
    "theta", "re_F_asym", "im_F_asym", "abs_F2_asym",
    "dsigma_dtheta_classical", "abs_F2_pw", "rel_dev",
)


class UsageError(Exception):
    pass


def fmt(value):
    """17 significant digits; None prints as an empty field."""
    if value is None:
        return ""
    if isinstance(value, str):
        return value
    return format(float(value), ".17g")


def write_csv(stream, fields, rows):
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(fields)
    for row in rows:
        writer.writerow([fmt(row.get(f)) for f in fields])


def read_csv(stream):
    """Parse a CSV written by :func:`write_csv`; numeric fields become floats."""
    reader = csv.reader(stream)
    fields = next(reader)
    rows = []
    for raw in reader:
        row = {}
        for name, cell in zip(fields, raw):
            if cell == "":
                row[name] = None
            else:
                try:
                    row[name] = float(cell)
                except ValueError:
                    row[name] = cell
        rows.append(row)
    return fields, rows


def _json_value(v):
    if isinstance(v, float) and not math.isfinite(v):
        return str(v)
    return v


@dataclass(frozen=True)
class SweepSpec:
    x: float
    k: float = 1.0
    theta_count: int = 25
    theta_range: Tuple[float, float] = (0.01, math.pi)
    methods: Tuple[str, ...] = ("dispersion", "partial_wave")

    def __post_init__(self):
        if self.theta_count < 2:
            raise UsageError("--n must be at least 2")
        lo, hi = self.theta_range
        if not -math.pi <= lo <= hi <= math.pi:
            raise UsageError("theta range must satisfy -pi <= theta-min <= theta-max <= pi")
        valid = {m.value for m in Method}
        bad = [m for m in self.methods if m not in valid]
        if bad or not self.methods:
            raise UsageError(f"unknown method(s) {bad}; choose from {sorted(valid)}")

    def thetas(self):
        return [float(t) for t in np.linspace(*self.theta_range, self.theta_count)]


def evaluate(method, x, theta, tol=None, lmax=None):
    if method == Method.PARTIAL_WAVE.value:
        params = PwParams(l_max=lmax) if tol is None else PwParams(l_max=lmax, tol=tol)
        return reduced_amplitude_pw(x, theta, params)
    if method == Method.DISPERSION.value:
        return reduced_amplitude_disp(x, theta, DispParams() if tol is None else DispParams(tol=tol))
    if method == Method.ASYMPTOTIC.value:
        return asymptotic_result(x, theta)
    raise UsageError(f"unknown method {method!r}")


def amplitude_row(result, k):
    return {
        "theta": result.theta,
        "method": result.method.value,
        "re_F": result.F.real,
        "im_F": result.F.imag,
        "abs_F2": result.abs_F2,
        "dsigma_dtheta": dcs_from_reduced(result.F, k),
        "err_estimate": result.err_estimate,
    }


def sweep_rows(spec, tol=None, lmax=None):
    rows = []
    for theta in spec.thetas():
        for method in sorted(spec.methods):
            try:
                rows.append(amplitude_row(evaluate(method, spec.x, theta, tol, lmax), spec.k))
            except (DomainError, AccuracyError, ValueError) as exc:
                row = {f: None for f in AMPLITUDE_FIELDS}
                row.update(theta=theta, method=method, error=f"{type(exc).__name__}: {exc}")
                rows.append(row)
    return rows


def _resolve_x(args):
    if args.x is not None:
        if args.x < 0 or not math.isfinite(args.x):
            raise UsageError("--x must be finite and >= 0")
        return float(args.x)
    if None not in (args.m, args.kappa, args.hbar):
        try:
            return coupling_from_physical(args.m, args.kappa, args.hbar).x
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
    raise UsageError("give --x or all of --m, --kappa, --hbar")


def _resolve_k(args):
    if args.k is not None:
        k = args.k
    elif None not in (args.m, args.hbar, args.E):
        if not (args.m > 0 and args.hbar > 0 and args.E > 0):
            raise UsageError("--m, --hbar and --E must be positive")
        k = math.sqrt(2.0 * args.m * args.E) / args.hbar
    else:
        k = 1.0
    if not k > 0:
        raise UsageError("--k must be positive")
    return k


def _emit(args, fields, rows, payload):
    out = io.StringIO()
    if args.format == "json":
        json.dump(payload, out, indent=2)
        out.write("\n")
    else:
        write_csv(out, fields, rows)
    text = out.getvalue()
    if args.out:
        with open(args.out, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_amplitude(args):
    x, k = _resolve_x(args), _resolve_k(args)
    if args.theta is None:
        raise UsageError("--theta is required")
    result = evaluate(args.method, x, args.theta, args.tol, args.lmax)
    row = amplitude_row(result, k)
    _emit(args, AMPLITUDE_FIELDS, [row], {k_: _json_value(v) for k_, v in row.items()})
    return EXIT_OK


def cmd_sweep(args):
    methods = tuple(m.strip() for m in args.method.split(",") if m.strip())
    spec = SweepSpec(
        x=_resolve_x(args),
        k=_resolve_k(args),
        theta_count=args.n,
        theta_range=(args.theta_min, args.theta_max),
        methods=methods,
    )
    rows = sweep_rows(spec, args.tol, args.lmax)
    payload = {
        "spec": {**asdict(spec), "theta_range": list(spec.theta_range), "methods": list(spec.methods)},
        "rows": [{k_: _json_value(v) for k_, v in r.items()} for r in rows],
        "version": __version__,
    }
    _emit(args, AMPLITUDE_FIELDS, rows, payload)
    return EXIT_OK


def cmd_sigma(args):
    x, k = _resolve_x(args), _resolve_k(args)
    s = sigma_sum(x, PwParams(l_max=args.lmax))
    closed = sigma_closed_form(x, k)
    from_sum = 4.0 * s.value / k
    rel = abs(from_sum - closed) / closed if closed > 0 else abs(from_sum)
    row = {"x": x, "k": k, "sigma_closed_form": closed, "sigma_from_sum": from_sum, "rel_diff": rel}
    _emit(args, SIGMA_FIELDS, [row], row)
    return EXIT_OK


def cmd_classical(args):
    x, k = _resolve_x(args), _resolve_k(args)
    if x <= 0:
        raise UsageError("the classical comparison needs --x > 0")
    if args.theta is not None:
        thetas = [args.theta]
    else:
        thetas = [float(t) for t in np.linspace(args.theta_min, args.theta_max, args.n)]
    kappa_over_E = (x / k) ** 2
    rows = []
    for theta in thetas:
        asym = asymptotic_result(x, theta)
        pw = reduced_amplitude_pw(x, theta)
        rows.append({
            "theta": theta,
            "re_F_asym": asym.F.real,
            "im_F_asym": asym.F.imag,
            "abs_F2_asym": asym.abs_F2,
            "dsigma_dtheta_classical": classical_dcs(kappa_over_E, theta),
            "abs_F2_pw": pw.abs_F2,
            "rel_dev": abs(pw.abs_F2 - asym.abs_F2) / asym.abs_F2,
        })
    _emit(args, CLASSICAL_FIELDS, rows, {"x": x, "k": k, "rows": rows, "version": __version__})
    return EXIT_OK


def cmd_validate(args):
    try:
        xs = [float(v) for v in args.x_list.split(",") if v.strip()]
    except ValueError as exc:
        raise UsageError(f"bad --x-list: {exc}") from exc
    report = run_full_suite(xs, SuiteConfig(tol=args.tol))
    payload = {"x_list": xs, "tol": args.tol, "version": __version__, **report.to_dict()}
    text = json.dumps(payload, indent=2) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    for c in report.failures():
        print(f"FAILED {c.group} {c.name}: residual={c.residual:.3g} tol={c.tolerance:.3g}",
              file=sys.stderr)
    return EXIT_OK if report.passed else EXIT_VALIDATION


def _common(p):
    p.add_argument("--x", type=float, help="dimensionless coupling, x^2 = 2 m kappa / hbar^2")
    p.add_argument("--k", type=float, help="wavenumber (default 1)")
    p.add_argument("--m", type=float, help="mass")
    p.add_argument("--kappa", type=float, help="potential strength in V = kappa / r^2")
    p.add_argument("--hbar", type=float, help="reduced Planck constant")
    p.add_argument("--E", type=float, help="beam energy")
    p.add_argument("--tol", type=float, default=None, help="absolute accuracy target")
    p.add_argument("--lmax", type=int, default=None, help="explicit partial-wave cutoff")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out", default=None, help="output file (default stdout)")


def _angles(p, n_default=25):
    p.add_argument("--theta-min", type=float, default=0.01)
    p.add_argument("--theta-max", type=float, default=math.pi)
    p.add_argument("--n", type=int, default=n_default)


def build_parser():
    parser = argparse.ArgumentParser(prog="scatter2d", description=__doc__.split("\n")[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("amplitude", help="reduced amplitude at one angle")
    _common(p)
    p.add_argument("--theta", type=float)
    p.add_argument("--method", default="partial_wave", choices=[m.value for m in Method])
    p.set_defaults(func=cmd_amplitude)

    p = sub.add_parser("sweep", help="amplitudes over an angle grid")
    _common(p)
    _angles(p)
    p.add_argument("--method", default="dispersion,partial_wave",
                   help="comma-separated subset of partial_wave,dispersion,asymptotic")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("sigma", help="integrated cross-section, closed form vs phase-shift sum")
    _common(p)
    p.set_defaults(func=cmd_sigma)

    p = sub.add_parser("classical", help="large-x asymptotics vs the partial-wave result")
    _common(p)
    _angles(p)
    p.add_argument("--theta", type=float, default=None)
    p.set_defaults(func=cmd_classical)

    p = sub.add_parser("validate", help="run the validation suite; JSON report")
    p.add_argument("--x-list", default="0.5,1,2")
    p.add_argument("--tol", type=float, default=None, help="override every check tolerance")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_validate)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, DomainError, AccuracyError, ValueError) as exc:
        print(f"scatter2d {args.command}: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
