"""Value types, unit conversions and kinematics.

Everything inside the package is dimensionless: the coupling ``x`` with
``x**2 = 2 m kappa / hbar**2`` and the angle ``theta``. The wavenumber ``k``
only appears when restoring units, because the phase shifts carry no
energy dependence.
"""
import enum
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np


class Method(str, enum.Enum):
    PARTIAL_WAVE = "partial_wave"
    DISPERSION = "dispersion"
    ASYMPTOTIC = "asymptotic"


@dataclass(frozen=True)
class Coupling:
    """Dimensionless strength ``x >= 0``; ``x == 0`` is the free particle."""

    x: float

    def __post_init__(self):
        if not math.isfinite(self.x) or self.x < 0:
            raise ValueError(f"coupling x must be finite and >= 0, got {self.x!r}")

    @property
    def is_free(self) -> bool:
        return self.x == 0.0


@dataclass(frozen=True)
class Angle:
    """Scattering angle in [-pi, pi]. Out-of-range input is rejected, not wrapped."""

    theta: float

    def __post_init__(self):
        if not math.isfinite(self.theta) or abs(self.theta) > math.pi:
            raise ValueError(f"theta must lie in [-pi, pi], got {self.theta!r}")


@dataclass(frozen=True)
class Kinematics:
    k: float
    E: Optional[float] = None
    m: Optional[float] = None
    hbar: Optional[float] = None

    def __post_init__(self):
        if not self.k > 0 or not math.isfinite(self.k):
            raise ValueError("wavenumber k must be positive")
        if None not in (self.E, self.m, self.hbar):
            expected = self.hbar ** 2 * self.k ** 2 / (2.0 * self.m)
            if abs(self.E - expected) > 1e-12 * abs(expected):
                raise ValueError("E, m, hbar and k violate E = hbar^2 k^2 / (2m)")

    @classmethod
    def from_physical(cls, m, hbar, E):
        for name, v in (("m", m), ("hbar", hbar), ("E", E)):
            if not v > 0:
                raise ValueError(f"{name} must be positive")
        k = math.sqrt(2.0 * m * E) / hbar
        # Store E recomputed from k so the invariant holds to rounding.
        return cls(k=k, E=hbar ** 2 * k ** 2 / (2.0 * m), m=m, hbar=hbar)


@dataclass(frozen=True)
class AmplitudeResult:
    theta: float
    F: complex
    method: Method
    err_estimate: float
    terms_or_panels: int

    def __post_init__(self):
        if not self.err_estimate >= 0:
            raise ValueError("err_estimate must be nonnegative")

    @property
    def abs_F2(self) -> float:
        return self.F.real ** 2 + self.F.imag ** 2


def as_x(x, allow_zero=True):
    """Coerce a float or :class:`Coupling` to a validated float."""
    value = x.x if isinstance(x, Coupling) else Coupling(float(x)).x
    if not allow_zero and value == 0.0:
        raise ValueError("this operation needs x > 0")
    return value


def as_theta(theta):
    """Coerce a float or :class:`Angle` to a validated float."""
    return theta.theta if isinstance(theta, Angle) else Angle(float(theta)).theta


def coupling_from_physical(m, kappa, hbar):
    """x = sqrt(2 m kappa) / hbar. kappa = 0 gives the free case."""
    if not m > 0 or not hbar > 0:
        raise ValueError("m and hbar must be positive")
    if kappa < 0:
        raise ValueError("attractive couplings (kappa < 0) are not supported")
    return Coupling(math.sqrt(2.0 * m * kappa) / hbar)


def momentum_transfer_sq(k, theta):
    """(k_in - k_out)^2 = 2 k^2 (1 - cos theta)."""
    if not k > 0:
        raise ValueError("k must be positive")
    theta = as_theta(theta)
    return 2.0 * k * k * (1.0 - math.cos(theta))


def dcs_from_reduced(F, k):
    """|f|^2 = (pi / 2k) |F|^2, the differential cross-section in length units."""
    if not k > 0:
        raise ValueError("k must be positive")
    F = complex(F)
    return 0.5 * math.pi / k * (F.real ** 2 + F.imag ** 2)


def sigma_closed_form(x, k):
    """Integrated cross-section pi^2 x^2 / k."""
    x = as_x(x)
    if not k > 0:
        raise ValueError("k must be positive")
    return math.pi ** 2 * x * x / k


def reduced_to_amplitude(F, k):
    """Undo the reduction: f = sqrt(pi / 2k) F."""
    return np.sqrt(0.5 * math.pi / k) * complex(F)
