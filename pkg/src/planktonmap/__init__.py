"""Discrete-time phytoplankton-zooplankton map with a Holling type II
functional response: fixed points, stability classification, the full
Neimark-Sacker bifurcation pipeline, and orbit simulation."""

from .exceptions import (
    ClassifierDisagreementError,
    DegenerateLError,
    ExistenceLostError,
    NoSignChangeError,
    NonFiniteParameterError,
    NonFiniteResultError,
    NonPositiveParameterError,
    NotAFixedPointError,
    PConditionFailedError,
    PlanktonMapError,
    RealEigenvaluesError,
)
from .fixed_points import (
    ExistenceCase,
    FixedPointRecord,
    all_fixed_points,
    existence_case,
    positive_fixed_points,
)
from .model import (
    Matrix2,
    Parameters,
    State,
    initial_state,
    jacobian,
    jacobian_at_fixed,
    step,
    validate_params,
)
from .ns import (
    CriticalPoint,
    NormalFormData,
    NSReport,
    TaylorCoefficients,
    Verdict,
    critical_eigenvalues,
    lyapunov_quantities,
    nondegeneracy,
    normal_form,
    ns_report,
    solve_theta0,
    taylor_coefficients,
    transversality,
)
from .simulate import (
    AttractorKind,
    AttractorSummary,
    OrbitResult,
    SweepResult,
    SweepRow,
    attractor_summary,
    orbit,
    sweep_theta,
)
from .stability import (
    RootLocation,
    StabilityClass,
    StabilityReport,
    char_poly,
    classify_fixed_point,
    classify_roots,
    eigenvalues,
)

__all__ = [
    "AttractorKind",
    "AttractorSummary",
    "ClassifierDisagreementError",
    "CriticalPoint",
    "DegenerateLError",
    "ExistenceCase",
    "ExistenceLostError",
    "FixedPointRecord",
    "Matrix2",
    "NSReport",
    "NoSignChangeError",
    "NonFiniteParameterError",
    "NonFiniteResultError",
    "NonPositiveParameterError",
    "NormalFormData",
    "NotAFixedPointError",
    "OrbitResult",
    "PConditionFailedError",
    "Parameters",
    "PlanktonMapError",
    "RealEigenvaluesError",
    "RootLocation",
    "StabilityClass",
    "StabilityReport",
    "State",
    "SweepResult",
    "SweepRow",
    "TaylorCoefficients",
    "Verdict",
    "all_fixed_points",
    "attractor_summary",
    "char_poly",
    "classify_fixed_point",
    "classify_roots",
    "critical_eigenvalues",
    "eigenvalues",
    "existence_case",
    "initial_state",
    "jacobian",
    "jacobian_at_fixed",
    "lyapunov_quantities",
    "nondegeneracy",
    "normal_form",
    "ns_report",
    "orbit",
    "positive_fixed_points",
    "solve_theta0",
    "step",
    "sweep_theta",
    "taylor_coefficients",
    "transversality",
    "validate_params",
]

__version__ = "0.1.0"
