"""Exception hierarchy for the plankton map analysis package."""


class PlanktonMapError(Exception):
    """Base class for all package-specific errors."""


class NonPositiveParameterError(PlanktonMapError):
    """A model parameter is zero or negative."""

    def __init__(self, name: str, value: float):
        self.name = name
        self.value = value
        super().__init__(f"parameter {name!r} must be > 0, got {value!r}")


class NonFiniteParameterError(PlanktonMapError):
    """A model parameter is NaN or infinite."""

    def __init__(self, name: str, value: float):
        self.name = name
        self.value = value
        super().__init__(f"parameter {name!r} must be finite, got {value!r}")


class NonFiniteResultError(PlanktonMapError):
    """Map iteration overflowed; the orbit is divergent."""


class NotAFixedPointError(PlanktonMapError):
    """An abscissa failed the positive-fixed-point residual gate."""


class ClassifierDisagreementError(PlanktonMapError):
    """The closed-form classification and the eigenvalue-modulus
    classification disagree beyond the hyperbolicity tolerance."""


class NoSignChangeError(PlanktonMapError):
    """No critical parameter value found in the search interval."""


class ExistenceLostError(PlanktonMapError):
    """The interior fixed point does not exist on (part of) the interval."""


class PConditionFailedError(PlanktonMapError):
    """Trace condition p(u*) < 2 fails at the critical parameter, so the
    critical eigenvalues are not a complex conjugate pair."""


class RealEigenvaluesError(PlanktonMapError):
    """Perturbation pushed the eigenvalue pair onto the real axis."""


class DegenerateLError(PlanktonMapError):
    """|L| is below the degeneracy tolerance; the cubic normal form cannot
    decide the stability of the bifurcating curve."""
