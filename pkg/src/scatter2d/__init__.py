"""Exact 2D quantum scattering off V = kappa / r^2.

The reduced amplitude F(theta) = sqrt(2k/pi) f(theta) is computed from the
partial-wave series and, independently, from its dispersion representation.
"""
__version__ = "0.1.0"

from .classical import asymptotic_reduced_amplitude, classical_dcs, forward_divergence_probe
from .dispersion import (
    DispParams,
    im_reduced_amplitude,
    re_reduced_amplitude_disp,
    reduced_amplitude_disp,
    tail_integral,
)
from .exceptions import (
    AccuracyError,
    BackscatterMarginError,
    DomainError,
    ForwardDivergenceError,
    SingularityError,
)
from .kernels import BACKEND
from .model import (
    AmplitudeResult,
    Angle,
    Coupling,
    Kinematics,
    Method,
    coupling_from_physical,
    dcs_from_reduced,
    momentum_transfer_sq,
    sigma_closed_form,
)
from .partial_waves import PwParams, phase_shift, reduced_amplitude_pw, sigma_sum
from .specfun import bessel_j0, bessel_j1, j1_positive_zeros, polylog_unit_circle
from .validation import SuiteConfig, ValidationReport, run_full_suite
