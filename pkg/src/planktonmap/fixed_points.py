"""Enumeration of the map's fixed points and their existence regimes.

The trivial points are E0 = (0, 0) and E1 = (1, 0). Interior points have
abscissae solving c*theta*u^2 - (beta - r*c - theta)*u + r = 0 with
0 < u < 1 and ordinate v = (1 - u)(1 + c u) > 0. Depending on the
parameters there are zero, one (E2 or E4) or two (E2, E3) of them.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .model import Parameters

#: Relative tolerance for the case-boundary equalities (CaseIV and the
#: degenerate u = 1 boundary). Exact float equality on derived expressions
#: is unattainable.
BOUNDARY_REL_TOL = 1e-9

#: Roots landing in [1, 1 + this) are rejected: v would be <= 0.
ROOT_AT_ONE_TOL = 1e-12


class ExistenceCase(enum.Enum):
    CASE_I = "CaseI"
    CASE_II = "CaseII"
    CASE_III = "CaseIII"
    CASE_IV = "CaseIV"
    NO_POSITIVE = "NoPositive"
    BOUNDARY_DEGENERATE = "BoundaryDegenerate"


@dataclass(frozen=True)
class FixedPointRecord:
    """A labeled fixed point with its existence-case provenance."""

    label: str  # "E0" .. "E4"
    u: float
    v: float
    case: ExistenceCase
    discriminant: float  # (beta - r*c - theta)^2 - 4*c*r*theta


def _discriminant(params: Parameters) -> float:
    c, beta, r, theta = params.c, params.beta, params.r, params.theta
    return (beta - r * c - theta) ** 2 - 4.0 * c * r * theta


def existence_case(params: Parameters) -> ExistenceCase:
    """Which interior-fixed-point regime the parameters fall into."""
    c, beta, r, theta = params.c, params.beta, params.r, params.theta
    if beta <= r + theta:
        return ExistenceCase.NO_POSITIVE

    c_single = (beta - r - theta) / (r + theta)  # upper bound for one point
    c_double = (beta + theta - 2.0 * math.sqrt(beta * theta)) / r  # D = 0
    big_beta = beta > (r + theta) ** 2 / theta

    if abs(c - c_single) <= BOUNDARY_REL_TOL * max(1.0, abs(c_single)):
        return ExistenceCase.BOUNDARY_DEGENERATE
    if big_beta and abs(c - c_double) <= BOUNDARY_REL_TOL * max(1.0, abs(c_double)):
        return ExistenceCase.CASE_IV
    if c < c_single:
        return ExistenceCase.CASE_II if big_beta else ExistenceCase.CASE_I
    if big_beta and c_single < c < c_double:
        return ExistenceCase.CASE_III
    return ExistenceCase.NO_POSITIVE


def _quadratic_roots(params: Parameters) -> tuple[float, float]:
    """Roots of c*theta*u^2 - (beta - r*c - theta)*u + r = 0, smaller first.

    Computed in the cancellation-free form: the larger-magnitude root from
    the quadratic formula, the other from the product of roots r/(c*theta).
    Caller guarantees a positive discriminant and beta - r*c - theta > 0.
    """
    c, beta, r, theta = params.c, params.beta, params.r, params.theta
    b_lin = beta - r * c - theta
    sqrt_d = math.sqrt(_discriminant(params))
    larger = (b_lin + sqrt_d) / (2.0 * c * theta)
    smaller = r / (c * theta * larger)
    return smaller, larger


def positive_fixed_points(params: Parameters) -> list[FixedPointRecord]:
    """Interior fixed points, labeled E2/E3/E4 per the existence case."""
    case = existence_case(params)
    disc = _discriminant(params)
    c = params.c

    if case in (ExistenceCase.NO_POSITIVE, ExistenceCase.BOUNDARY_DEGENERATE):
        return []

    if case is ExistenceCase.CASE_IV:
        # D ~ 0 makes the quadratic ill-conditioned; use the closed form.
        r, beta, theta = params.r, params.beta, params.theta
        u_bar = r / (math.sqrt(theta) * (math.sqrt(beta) - math.sqrt(theta)))
        v_bar = (1.0 - u_bar) * (1.0 + c * u_bar)
        return [FixedPointRecord("E4", u_bar, v_bar, case, disc)]

    smaller, larger = _quadratic_roots(params)
    records = []
    for label, u in (("E2", smaller), ("E3", larger)):
        if not (0.0 < u < 1.0) or u >= 1.0 - ROOT_AT_ONE_TOL:
            continue
        v = (1.0 - u) * (1.0 + c * u)
        records.append(FixedPointRecord(label, u, v, case, disc))
    return records


def all_fixed_points(params: Parameters) -> list[FixedPointRecord]:
    """[E0, E1] followed by any interior fixed points."""
    case = existence_case(params)
    disc = _discriminant(params)
    return [
        FixedPointRecord("E0", 0.0, 0.0, case, disc),
        FixedPointRecord("E1", 1.0, 0.0, case, disc),
        *positive_fixed_points(params),
    ]
