"""Shared fixtures: parameter samplers per existence case and
finite-difference derivative oracles used to cross-check closed forms."""

from __future__ import annotations

import math
import random

import pytest

from planktonmap import (
    ExistenceCase,
    Parameters,
    State,
    positive_fixed_points,
    solve_theta0,
    step,
)
from planktonmap.fixed_points import existence_case

# ---------------------------------------------------------------------------
# acceptance bookkeeping (printed by pytest_terminal_summary)

ACCEPTANCE_RESULTS: dict[int, bool] = {}


def record_acceptance(number: int, passed: bool) -> None:
    line = f"ACCEPTANCE {number}: {'PASS' if passed else 'FAIL'}"
    print(line)
    ACCEPTANCE_RESULTS[number] = passed


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE_RESULTS):
        verdict = "PASS" if ACCEPTANCE_RESULTS[number] else "FAIL"
        terminalreporter.write_line(f"ACCEPTANCE {number}: {verdict}")


# ---------------------------------------------------------------------------
# parameter samplers

MAX_DRAWS = 10_000


def _draw_case_i(rng: random.Random) -> Parameters | None:
    r = rng.uniform(0.1, 2.0)
    theta = rng.uniform(0.1, 1.5)
    lo, hi = r + theta, (r + theta) ** 2 / theta
    beta = lo + rng.uniform(0.05, 0.95) * (hi - lo)
    c_single = (beta - r - theta) / (r + theta)
    if c_single < 0.1:
        return None
    c = rng.uniform(0.05, 0.9 * c_single)
    return Parameters(c, beta, r, theta)


def _draw_case_ii(rng: random.Random) -> Parameters | None:
    r = rng.uniform(0.1, 2.0)
    theta = rng.uniform(0.1, 1.5)
    beta = (r + theta) ** 2 / theta * rng.uniform(1.1, 3.0)
    if beta > 40.0:
        return None
    c_single = (beta - r - theta) / (r + theta)
    if c_single < 0.1:
        return None
    c = rng.uniform(0.05, 0.9 * c_single)
    return Parameters(c, beta, r, theta)


def _draw_case_iii(rng: random.Random) -> Parameters | None:
    r = rng.uniform(0.1, 1.0)
    theta = rng.uniform(0.05, 0.5)
    beta = (r + theta) ** 2 / theta * rng.uniform(1.2, 4.0)
    if beta > 40.0:
        return None
    c_single = (beta - r - theta) / (r + theta)
    c_double = (beta + theta - 2.0 * math.sqrt(beta * theta)) / r
    if c_double < 1.1 * c_single:
        return None
    c = rng.uniform(1.02 * c_single, 0.98 * c_double)
    return Parameters(c, beta, r, theta)


def _draw_case_iv(rng: random.Random) -> Parameters | None:
    r = rng.uniform(0.1, 1.0)
    theta = rng.uniform(0.05, 0.5)
    beta = (r + theta) ** 2 / theta * rng.uniform(1.2, 4.0)
    if beta > 40.0:
        return None
    c_single = (beta - r - theta) / (r + theta)
    c_double = (beta + theta - 2.0 * math.sqrt(beta * theta)) / r
    if c_double < 1.1 * c_single:
        return None
    return Parameters(c_double, beta, r, theta)


def _draw_no_positive(rng: random.Random) -> Parameters | None:
    r = rng.uniform(0.1, 2.0)
    theta = rng.uniform(0.1, 1.5)
    if rng.random() < 0.5:
        beta = rng.uniform(0.1, 0.95) * (r + theta)
        c = rng.uniform(0.05, 5.0)
    else:
        # beyond the D = 0 boundary: no real interior roots
        beta = (r + theta) ** 2 / theta * rng.uniform(1.2, 3.0)
        if beta > 40.0:
            return None
        c_double = (beta + theta - 2.0 * math.sqrt(beta * theta)) / r
        c = c_double * rng.uniform(1.1, 2.0)
    return Parameters(c, beta, r, theta)


_DRAWERS = {
    ExistenceCase.CASE_I: _draw_case_i,
    ExistenceCase.CASE_II: _draw_case_ii,
    ExistenceCase.CASE_III: _draw_case_iii,
    ExistenceCase.CASE_IV: _draw_case_iv,
    ExistenceCase.NO_POSITIVE: _draw_no_positive,
}


def sample_params(rng: random.Random, case: ExistenceCase) -> Parameters:
    """Rejection-sample a parameter set whose existence case is `case`."""
    drawer = _DRAWERS[case]
    for _ in range(MAX_DRAWS):
        params = drawer(rng)
        if params is not None and existence_case(params) is case:
            return params
    raise RuntimeError(f"could not sample {case} in {MAX_DRAWS} draws")


def sample_critical_point(rng: random.Random, max_attempts: int = 200):
    """A CriticalPoint for a random CaseI/CaseII parameter family, found by
    searching theta over (0.02, min(0.98 (beta - r), 3))."""
    for _ in range(max_attempts):
        case = rng.choice([ExistenceCase.CASE_I, ExistenceCase.CASE_II])
        params = sample_params(rng, case)
        hi = min(0.98 * (params.beta - params.r), 3.0)
        if hi <= 0.02:
            continue
        try:
            cp = solve_theta0(params.c, params.beta, params.r, (0.02, hi))
        except Exception:
            continue
        at_crit = existence_case(cp.params)
        if at_crit in (ExistenceCase.CASE_I, ExistenceCase.CASE_II):
            return cp
    raise RuntimeError("could not find a critical point")


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20260826)


@pytest.fixture
def example1() -> Parameters:
    """The reference parameter set (c, beta, r) = (1, 4, 10/9) at the
    critical toxin rate theta = 4/9."""
    return Parameters(1.0, 4.0, 10.0 / 9.0, 4.0 / 9.0)


# ---------------------------------------------------------------------------
# finite-difference oracles (central stencils + one Richardson step)


def _richardson(stencil, h: float) -> float:
    """Eliminate the O(h^2) error term of a central stencil."""
    return (4.0 * stencil(0.5 * h) - stencil(h)) / 3.0


def fd_x(f, x, y, h=1e-5):
    return _richardson(lambda s: (f(x + s, y) - f(x - s, y)) / (2.0 * s), h)


def fd_y(f, x, y, h=1e-5):
    return _richardson(lambda s: (f(x, y + s) - f(x, y - s)) / (2.0 * s), h)


def fd_xx(f, x, y, h=1e-2):
    return _richardson(
        lambda s: (f(x + s, y) - 2.0 * f(x, y) + f(x - s, y)) / s**2, h
    )


def fd_xy(f, x, y, h=1e-2):
    return _richardson(
        lambda s: (
            f(x + s, y + s) - f(x + s, y - s) - f(x - s, y + s) + f(x - s, y - s)
        )
        / (4.0 * s**2),
        h,
    )


def fd_xxx(f, x, y, h=1e-2):
    return _richardson(
        lambda s: (
            f(x + 2 * s, y) - 2.0 * f(x + s, y) + 2.0 * f(x - s, y) - f(x - 2 * s, y)
        )
        / (2.0 * s**3),
        h,
    )


def fd_xxy(f, x, y, h=1e-2):
    def stencil(s):
        def d_xx(yy):
            return (f(x + s, yy) - 2.0 * f(x, yy) + f(x - s, yy)) / s**2

        return (d_xx(y + s) - d_xx(y - s)) / (2.0 * s)

    return _richardson(stencil, h)


def shifted_components(params: Parameters, u_star: float, v_star: float):
    """The two scalar components of the shifted map
    phi(x, y) = V(u* + x, v* + y) - (u*, v*)."""

    def phi1(x, y):
        return step(params, State(u_star + x, v_star + y)).u - u_star

    def phi2(x, y):
        return step(params, State(u_star + x, v_star + y)).v - v_star

    return phi1, phi2


def fd_taylor(params: Parameters, u_star: float, v_star: float) -> dict[str, float]:
    """All twelve structurally nonzero Taylor coefficients of the shifted
    map, from finite differences only."""
    phi1, phi2 = shifted_components(params, u_star, v_star)
    out = {}
    for prefix, f in (("a", phi1), ("b", phi2)):
        out[prefix + "10"] = fd_x(f, 0.0, 0.0)
        out[prefix + "01"] = fd_y(f, 0.0, 0.0)
        out[prefix + "20"] = fd_xx(f, 0.0, 0.0) / 2.0
        out[prefix + "11"] = fd_xy(f, 0.0, 0.0)
        out[prefix + "30"] = fd_xxx(f, 0.0, 0.0) / 6.0
        out[prefix + "21"] = fd_xxy(f, 0.0, 0.0) / 2.0
    return out


def e2_record(params: Parameters):
    for record in positive_fixed_points(params):
        if record.label in ("E2", "E4"):
            return record
    return None
