"""Stability classification of fixed points.

Two independent routes are computed for every point and cross-checked:

* a closed-form route built on the quadratic root-location lemma
  F(lambda) = lambda^2 + B*lambda + C evaluated at F(1), F(-1), C;
* a direct route from the moduli of the Jacobian eigenvalues.

Disagreement beyond the hyperbolicity tolerance raises
ClassifierDisagreementError: the routes are mathematically equivalent, so
a mismatch means an implementation fault or a pathological parameter set.
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass

from .exceptions import ClassifierDisagreementError
from .fixed_points import FixedPointRecord
from .model import Matrix2, Parameters, State, jacobian, require_fixed_abscissa

#: A fixed point is non-hyperbolic when min(| |lambda_i| - 1 |) <= this.
HYPERBOLICITY_TOL = 1e-9

#: Disagreements are forgiven (resolved to NonHyperbolic) only this close
#: to the unit circle, where the two routes' tolerance bands differ by a
#: bounded factor.
_NEAR_CIRCLE_SLACK = 4.0 * HYPERBOLICITY_TOL


class RootLocation(enum.Enum):
    BOTH_INSIDE = "BothInside"
    BOTH_OUTSIDE = "BothOutside"
    ONE_IN_ONE_OUT = "OneInOneOut"
    ROOT_AT_MINUS_ONE = "RootAtMinusOne"
    ROOT_AT_ONE = "RootAtOne"
    CONJUGATE_ON_CIRCLE = "ConjugateOnCircle"
    DOUBLE_MINUS_ONE = "DoubleMinusOne"
    ONE_OUTSIDE_OTHER_INSIDE = "OneOutsideOtherInside"
    ONE_OUTSIDE_OTHER_BEYOND_MINUS_ONE = "OneOutsideOtherBeyondMinusOne"
    ONE_OUTSIDE_OTHER_AT_MINUS_ONE = "OneOutsideOtherAtMinusOne"


@dataclass(frozen=True)
class RootLocationResult:
    tag: RootLocation
    f_at_one: float  # F(1) = 1 + B + C
    f_at_minus_one: float  # F(-1) = 1 - B + C
    constant: float  # C


class StabilityClass(enum.Enum):
    ATTRACTING = "attracting"
    REPELLING = "repelling"
    SADDLE = "saddle"
    NON_HYPERBOLIC = "non-hyperbolic"


@dataclass(frozen=True)
class StabilityReport:
    label: str
    cls: StabilityClass  # closed-form route (after cross-check)
    eigen_cls: StabilityClass  # eigenvalue-modulus route
    eigenvalues: tuple[complex, complex]
    p: float  # trace of the Jacobian
    q: float  # determinant of the Jacobian
    root_location: RootLocationResult


def classify_roots(b: float, c: float, tol: float = HYPERBOLICITY_TOL) -> RootLocationResult:
    """Locate the roots of lambda^2 + b*lambda + c relative to the unit
    circle. Total: every finite (b, c) receives exactly one tag."""
    f1 = 1.0 + b + c
    fm1 = 1.0 - b + c

    if abs(f1) <= tol:
        tag = RootLocation.ROOT_AT_ONE
    elif f1 > 0.0:
        if abs(fm1) <= tol:
            tag = (
                RootLocation.DOUBLE_MINUS_ONE
                if abs(b - 2.0) <= tol
                else RootLocation.ROOT_AT_MINUS_ONE
            )
        elif abs(c - 1.0) <= tol and -2.0 < b < 2.0:
            tag = RootLocation.CONJUGATE_ON_CIRCLE
        elif fm1 < 0.0:
            tag = RootLocation.ONE_IN_ONE_OUT
        elif c < 1.0:
            tag = RootLocation.BOTH_INSIDE
        else:
            tag = RootLocation.BOTH_OUTSIDE
    else:
        if abs(fm1) <= tol:
            tag = RootLocation.ONE_OUTSIDE_OTHER_AT_MINUS_ONE
        elif fm1 < 0.0:
            tag = RootLocation.ONE_OUTSIDE_OTHER_BEYOND_MINUS_ONE
        else:
            tag = RootLocation.ONE_OUTSIDE_OTHER_INSIDE
    return RootLocationResult(tag, f1, fm1, c)


def char_poly(params: Parameters, u_star: float) -> tuple[float, float]:
    """Characteristic coefficients (p, q) of the Jacobian at an interior
    fixed point: lambda^2 - p*lambda + q = 0."""
    require_fixed_abscissa(params, u_star)
    c, beta, theta = params.c, params.beta, params.theta
    u = u_star
    denom = 1.0 + c * u
    k = (1.0 - u) * (1.0 + 2.0 * c * u) / denom
    p = k + 1.0
    q = k + u * (1.0 - u) * (beta / denom**2 - theta)
    return p, q


def eigenvalues(m: Matrix2) -> tuple[complex, complex]:
    """Closed-form eigenvalues of a 2x2 matrix. A real pair is returned in
    descending order; a complex pair with non-negative imaginary part
    first."""
    t, d = m.trace, m.det
    disc = t * t - 4.0 * d
    if disc >= 0.0:
        root = math.sqrt(disc)
        return complex((t + root) / 2.0), complex((t - root) / 2.0)
    root = math.sqrt(-disc)
    return complex(t / 2.0, root / 2.0), complex(t / 2.0, -root / 2.0)


def _modulus_class(eigs: tuple[complex, complex], tol: float) -> StabilityClass:
    m1, m2 = abs(eigs[0]), abs(eigs[1])
    if min(abs(m1 - 1.0), abs(m2 - 1.0)) <= tol:
        return StabilityClass.NON_HYPERBOLIC
    if m1 < 1.0 and m2 < 1.0:
        return StabilityClass.ATTRACTING
    if m1 > 1.0 and m2 > 1.0:
        return StabilityClass.REPELLING
    return StabilityClass.SADDLE


_ROOT_LOCATION_CLASS = {
    RootLocation.BOTH_INSIDE: StabilityClass.ATTRACTING,
    RootLocation.BOTH_OUTSIDE: StabilityClass.REPELLING,
    RootLocation.ONE_IN_ONE_OUT: StabilityClass.SADDLE,
    RootLocation.ROOT_AT_MINUS_ONE: StabilityClass.NON_HYPERBOLIC,
    RootLocation.ROOT_AT_ONE: StabilityClass.NON_HYPERBOLIC,
    RootLocation.CONJUGATE_ON_CIRCLE: StabilityClass.NON_HYPERBOLIC,
    RootLocation.DOUBLE_MINUS_ONE: StabilityClass.NON_HYPERBOLIC,
    RootLocation.ONE_OUTSIDE_OTHER_INSIDE: StabilityClass.SADDLE,
    RootLocation.ONE_OUTSIDE_OTHER_BEYOND_MINUS_ONE: StabilityClass.REPELLING,
    RootLocation.ONE_OUTSIDE_OTHER_AT_MINUS_ONE: StabilityClass.NON_HYPERBOLIC,
}


def _closed_form_class(
    params: Parameters,
    fp: FixedPointRecord,
    root_location: RootLocationResult,
    eigs: tuple[complex, complex],
    p: float,
    q: float,
) -> StabilityClass:
    """Per-label closed-form rules."""
    tol = HYPERBOLICITY_TOL
    c, beta, r, theta = params.c, params.beta, params.r, params.theta

    if fp.label == "E0":  # eigenvalues 2 and 1 - r
        if abs(r - 2.0) <= tol:
            return StabilityClass.NON_HYPERBOLIC
        return StabilityClass.SADDLE if r < 2.0 else StabilityClass.REPELLING

    if fp.label == "E1":  # eigenvalues 0 and beta/(1+c) + 1 - r - theta
        lam2 = beta / (1.0 + c) + 1.0 - r - theta
        if abs(abs(lam2) - 1.0) <= tol:
            return StabilityClass.NON_HYPERBOLIC
        return StabilityClass.ATTRACTING if abs(lam2) < 1.0 else StabilityClass.SADDLE

    if fp.label == "E2":
        if abs(q - 1.0) <= tol:
            if p < 2.0:
                return StabilityClass.NON_HYPERBOLIC
            # q = 1 with p >= 2: real reciprocal pair, outside the lemma's
            # branches; defer to the root-location tag.
            return _ROOT_LOCATION_CLASS[root_location.tag]
        return StabilityClass.ATTRACTING if q < 1.0 else StabilityClass.REPELLING

    if fp.label == "E3":
        fm1 = root_location.f_at_minus_one
        if abs(fm1) <= tol:
            return StabilityClass.NON_HYPERBOLIC
        return StabilityClass.SADDLE if fm1 > 0.0 else StabilityClass.REPELLING

    if fp.label == "E4":
        return StabilityClass.NON_HYPERBOLIC

    raise ValueError(f"unknown fixed point label {fp.label!r}")


def classify_fixed_point(params: Parameters, fp: FixedPointRecord) -> StabilityReport:
    """Classify via the closed-form route and the eigenvalue route,
    recording both and raising on genuine disagreement."""
    jac = jacobian(params, State(fp.u, fp.v))
    eigs = eigenvalues(jac)
    p, q = jac.trace, jac.det
    # Root-location bridge: F(lambda) = lambda^2 + B lambda + C with
    # B = -p, C = q.
    root_location = classify_roots(-p, q)

    closed = _closed_form_class(params, fp, root_location, eigs, p, q)
    direct = _modulus_class(eigs, HYPERBOLICITY_TOL)

    if closed is not direct:
        near = min(abs(abs(e) - 1.0) for e in eigs) <= _NEAR_CIRCLE_SLACK
        if near:
            closed = direct = StabilityClass.NON_HYPERBOLIC
        else:
            raise ClassifierDisagreementError(
                f"{fp.label} at ({fp.u}, {fp.v}): closed-form says "
                f"{closed.value}, eigenvalue moduli say {direct.value} "
                f"(eigenvalues {eigs})"
            )
    return StabilityReport(fp.label, closed, direct, eigs, p, q, root_location)
