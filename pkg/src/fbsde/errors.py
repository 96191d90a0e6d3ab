"""Exception hierarchy for the solver and benchmark harness."""


class FbsdeError(Exception):
    """Base class for all errors raised by this package."""


class OddN(FbsdeError):
    """The number of time steps must be even (the schemes pair steps)."""


class TooFewNodes(FbsdeError):
    """A spatial axis has fewer than the 4 nodes cubic splines require."""


class SingularDiffusion(FbsdeError):
    """The diffusion matrix is not invertible where it must be."""


class MissingDerivative(FbsdeError):
    """A forward scheme needs a coefficient derivative the problem lacks."""


class OrderOutOfRange(FbsdeError):
    """Gauss-Hermite order outside the supported range."""


class NonFiniteSample(FbsdeError):
    """An integrand returned NaN or infinity at a quadrature point."""


class PicardDiverged(FbsdeError):
    """The implicit solve hit the iteration cap with a growing residual."""


class DegenerateParameters(FbsdeError):
    """Model parameters violate the constraints of a closed-form solution."""


class BoxTouchesZero(FbsdeError):
    """A truncation box includes points where coefficients are singular."""


class InsufficientPoints(FbsdeError):
    """At least two (error, step) pairs are needed to fit a rate."""


class NonPositiveError(FbsdeError):
    """Rate fitting requires strictly positive errors and step sizes."""


class IoFailure(FbsdeError):
    """Writing a report to its output target failed."""


class ConfigError(FbsdeError):
    """A scheme configuration field has an invalid value."""
