"""Orbit iteration, long-run behavior classification, and theta sweeps."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .exceptions import NonFiniteResultError, PlanktonMapError
from .fixed_points import FixedPointRecord, existence_case, positive_fixed_points
from .model import Parameters, State, step, validate_params
from .stability import StabilityReport, classify_fixed_point

#: Tail entirely within this distance of the reference point counts as
#: convergence; tail entirely outside it counts as a closed curve.
EPS_CONVERGED = 1e-3
EPS_CURVE = 1e-3

#: Orbits leaving this box are flagged as escaped.
ESCAPE_BOX = (-1.0, 10.0)


class AttractorKind(enum.Enum):
    CONVERGED_TO_POINT = "ConvergedToPoint"
    CLOSED_CURVE = "ClosedCurve"
    ESCAPED = "Escaped"
    UNRESOLVED = "Unresolved"


@dataclass(frozen=True)
class OrbitResult:
    initial: State
    params: Parameters
    n: int
    transient: int
    tail: tuple[State, ...]  # states at steps tail_start .. tail_start+len-1
    tail_start: int
    escaped: bool
    escape_step: int | None


@dataclass(frozen=True)
class AttractorSummary:
    kind: AttractorKind
    reference: FixedPointRecord | None
    min_distance: float  # nan when no reference
    max_distance: float
    mean_distance: float
    convergence_step: int | None


@dataclass(frozen=True)
class SweepRow:
    theta: float
    case: str
    e2: FixedPointRecord | None
    stability: StabilityReport | None
    orbit_result: OrbitResult
    summary: AttractorSummary
    error: str | None


@dataclass(frozen=True)
class SweepResult:
    rows: tuple[SweepRow, ...]


def _in_box(s: State) -> bool:
    lo, hi = ESCAPE_BOX
    return lo <= s.u <= hi and lo <= s.v <= hi


def orbit(params: Parameters, initial: State, n: int, transient: int) -> OrbitResult:
    """Iterate the map n times from `initial`, retaining the states at
    steps transient..n. Stops early, with the escape flag set, when the
    state leaves the escape box or overflows. Escape is data, not an
    error."""
    if not (n > transient >= 0):
        raise ValueError(f"need n > transient >= 0, got n={n}, transient={transient}")

    tail: list[State] = []
    state = initial
    escaped = False
    escape_step = None
    if transient == 0:
        tail.append(state)
    for i in range(1, n + 1):
        try:
            state = step(params, state)
        except NonFiniteResultError:
            escaped = True
            escape_step = i
            break
        if not _in_box(state):
            escaped = True
            escape_step = i
            if i >= transient:
                tail.append(state)  # finite exit state is kept
            break
        if i >= transient:
            tail.append(state)
    return OrbitResult(
        initial=initial,
        params=params,
        n=n,
        transient=transient,
        tail=tuple(tail),
        tail_start=transient,
        escaped=escaped,
        escape_step=escape_step,
    )


def attractor_summary(
    orbit_result: OrbitResult, reference: FixedPointRecord | None
) -> AttractorSummary:
    """Quantify the retained tail relative to a reference fixed point."""
    tail = orbit_result.tail
    if reference is None:
        kind = AttractorKind.ESCAPED if orbit_result.escaped else AttractorKind.UNRESOLVED
        nan = float("nan")
        return AttractorSummary(kind, None, nan, nan, nan, None)
    if not tail:
        if not orbit_result.escaped:
            raise ValueError("orbit tail is empty but the orbit did not escape")
        nan = float("nan")
        return AttractorSummary(AttractorKind.ESCAPED, reference, nan, nan, nan, None)

    distances = [math.hypot(s.u - reference.u, s.v - reference.v) for s in tail]
    d_min, d_max = min(distances), max(distances)
    d_mean = sum(distances) / len(distances)

    if orbit_result.escaped:
        kind, conv = AttractorKind.ESCAPED, None
    elif d_max < EPS_CONVERGED:
        kind = AttractorKind.CONVERGED_TO_POINT
        conv = orbit_result.tail_start + next(
            i for i, d in enumerate(distances) if d < EPS_CONVERGED
        )
    elif d_min > EPS_CURVE:
        kind, conv = AttractorKind.CLOSED_CURVE, None
    else:
        kind, conv = AttractorKind.UNRESOLVED, None
    return AttractorSummary(kind, reference, d_min, d_max, d_mean, conv)


def sweep_theta(
    c: float,
    beta: float,
    r: float,
    theta_grid: list[float],
    initial: State,
    n: int,
    transient: int,
) -> SweepResult:
    """Per-theta existence, stability, orbit, and attractor summary.
    Rows follow the grid order; per-theta failures are recorded in-row."""
    if not theta_grid:
        raise ValueError("theta grid is empty")
    if any(b <= a for a, b in zip(theta_grid, theta_grid[1:])):
        raise ValueError("theta grid must be strictly ascending")

    rows = []
    for theta in theta_grid:
        params = validate_params(c, beta, r, theta)
        case = existence_case(params).value
        e2 = None
        report = None
        error = None
        # The reference moves with theta: E2 is recomputed for every row.
        for record in positive_fixed_points(params):
            if record.label in ("E2", "E4"):
                e2 = record
                break
        if e2 is not None:
            try:
                report = classify_fixed_point(params, e2)
            except PlanktonMapError as exc:
                error = f"{type(exc).__name__}: {exc}"
        orbit_result = orbit(params, initial, n, transient)
        summary = attractor_summary(orbit_result, e2)
        rows.append(SweepRow(theta, case, e2, report, orbit_result, summary, error))
    return SweepResult(rows=tuple(rows))
