"""Exception hierarchy shared by all lrotor modules."""


class LrotorError(Exception):
    """Base class for every error raised by this package."""


class DomainError(LrotorError):
    """Evaluation requested outside the algebraic or validity domain."""


class EmptyDomain(LrotorError):
    """No validity interval exists for the requested class and causal sign."""


class SingularIntegral(LrotorError):
    """Adaptive quadrature did not converge: the integral diverges."""


class OutOfRange(LrotorError):
    """Query lies outside the span covered by the samples."""


class NotMonotone(LrotorError):
    """Graph samples are not strictly monotone over the queried span."""


class DegenerateMetric(LrotorError):
    """|EG - F^2| fell below the degeneracy threshold."""


class Degenerate(LrotorError):
    """Point sits within tolerance of a causal-type change."""


class UnsolvableForDerivative(LrotorError):
    """Custom relation supplies only Phi and cannot be solved for k_m."""


class StepFailure(LrotorError):
    """ODE integrator could not meet the tolerance (stiffness or blow-up)."""


class DomainExit(LrotorError):
    """ODE solution left the validity domain.

    Attributes
    ----------
    boundary_r : float
        Last r at which the solution was still valid.
    """

    def __init__(self, message, boundary_r=None):
        super().__init__(message)
        self.boundary_r = boundary_r


class Inadmissible(LrotorError):
    """(mu, c) pair cannot occur for the requested rotation class."""


class ComplexEigenvalues(LrotorError):
    """Numeric shape operator has no real spectrum at this point."""


class ConfigError(LrotorError):
    """CLI job configuration is missing or inconsistent."""
