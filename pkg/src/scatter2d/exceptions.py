"""Exception hierarchy. Argument errors are plain ``ValueError``."""


class DomainError(ValueError):
    """Input outside the domain where a quantity is defined or computable."""


class SingularityError(DomainError):
    """Evaluation at a genuine singularity of the function."""


class ForwardDivergenceError(DomainError):
    """Re F diverges logarithmically as the scattering angle goes to zero."""


class BackscatterMarginError(DomainError):
    """Angle too close to +-pi for the dispersion representation."""


class AccuracyError(ArithmeticError):
    """Requested tolerance not reached.

    The best available estimate and its error are attached so callers can
    decide whether to accept them.
    """

    def __init__(self, message, estimate=float("nan"), error=float("inf")):
        super().__init__(message)
        self.estimate = estimate
        self.error = error
