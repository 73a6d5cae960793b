"""Neimark-Sacker analysis at the interior fixed point E2.

Pipeline: locate the critical toxin rate theta0 where the Jacobian
determinant at E2 equals 1 (unit-modulus conjugate eigenvalue pair),
check transversality and nondegeneracy, expand the shifted map to third
order, transform to normal-form coordinates, and evaluate the
discriminating quantity L whose sign decides whether the bifurcating
invariant closed curve is attracting (L < 0) or repelling (L > 0).

The attracting curve exists on the side where E2 is repelling, i.e. for
theta below theta0 (the eigenvalue modulus decreases with theta).
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass

from .exceptions import (
    DegenerateLError,
    ExistenceLostError,
    NoSignChangeError,
    PConditionFailedError,
    RealEigenvaluesError,
)
from .fixed_points import positive_fixed_points
from .model import Matrix2, Parameters, validate_params
from .stability import char_poly

#: |q(u*(theta0)) - 1| must end up below this after bisection.
CRITICAL_Q_TOL = 1e-12

#: Bisection stops when the bracketing interval is narrower than this.
BISECTION_WIDTH = 1e-14

#: Grid resolution of the initial sign-change scan.
SCAN_POINTS = 512

#: |lambda^m - 1| must exceed this for m = 1..4 (no strong resonance).
RESONANCE_TOL = 1e-9

#: |L| below this is reported as degenerate.
DEGENERACY_TOL = 1e-9


@dataclass(frozen=True)
class CriticalPoint:
    """E2 and derived quantities at the critical parameter theta0."""

    theta0: float
    u_star: float
    v_star: float
    k: float  # (1-u*)(1+2cu*)/(1+cu*), the Jacobian's top-left entry
    m: float  # bottom-left entry of the Jacobian at E2
    d: float  # (1+k)^2 - 4, negative for a conjugate pair
    s: float  # 1 - c + 2cu*, so that (1-k)(1+cu*) = u* s
    params: Parameters  # model constants with theta = theta0
    brackets: tuple[tuple[float, float], ...]  # all sign-change brackets found


@dataclass(frozen=True)
class TaylorCoefficients:
    """Third-order expansion of the shifted map at the origin:
    x' = sum a_ij x^i y^j, y' = sum b_ij x^i y^j."""

    a10: float
    a01: float
    a20: float
    a11: float
    a02: float
    a30: float
    a21: float
    a12: float
    a03: float
    b10: float
    b01: float
    b20: float
    b11: float
    b02: float
    b30: float
    b21: float
    b12: float
    b03: float


@dataclass(frozen=True)
class NormalFormData:
    """Nonlinear part of the map in normal-form coordinates:
    F = c02 Y^2 + c03 Y^3 + c11 XY + c12 XY^2 and likewise G with d.
    Partials are derivatives of these polynomial forms."""

    c02: float
    c03: float
    c11: float
    c12: float
    d02: float
    d03: float
    d11: float
    d12: float
    f_xx: float
    f_xy: float
    f_yy: float
    f_xxx: float
    f_xxy: float
    f_xyy: float
    f_yyy: float
    g_xx: float
    g_xy: float
    g_yy: float
    g_xxx: float
    g_xxy: float
    g_xyy: float
    g_yyy: float


class Verdict(enum.Enum):
    ATTRACTING_CURVE = "AttractingCurve"
    REPELLING_CURVE = "RepellingCurve"
    DEGENERATE = "Degenerate"


@dataclass(frozen=True)
class NSReport:
    critical: CriticalPoint
    lambda1: complex  # negative imaginary part
    lambda2: complex
    d_modulus: float  # d|lambda|/dtheta* at 0, always negative
    nondegenerate: bool
    l20: complex
    l11: complex
    l02: complex
    l21: complex
    l: float
    verdict: Verdict


def _e2_abscissa(c: float, beta: float, r: float, theta: float) -> float | None:
    """u* of E2 at the given theta, or None if E2 does not exist."""
    try:
        params = validate_params(c, beta, r, theta)
    except Exception:
        return None
    for record in positive_fixed_points(params):
        if record.label == "E2":
            return record.u
    return None


def _q_minus_one(c: float, beta: float, r: float, theta: float) -> float | None:
    u = _e2_abscissa(c, beta, r, theta)
    if u is None:
        return None
    _, q = char_poly(Parameters(c, beta, r, theta), u)
    return q - 1.0


def solve_theta0(
    c: float,
    beta: float,
    r: float,
    search_interval: tuple[float, float],
    scan_points: int = SCAN_POINTS,
) -> CriticalPoint:
    """Find the critical theta0 with q(u*(theta0)) = 1 inside the interval.

    A uniform scan locates sign changes of g(theta) = q(u*) - 1; each is
    refined by bisection. Monotonicity of g is not assumed: if several
    brackets exist the smallest root is returned and every bracket is
    listed on the result.
    """
    lo, hi = search_interval
    if not (math.isfinite(lo) and math.isfinite(hi) and lo < hi):
        raise ValueError(f"invalid search interval ({lo}, {hi})")

    grid = [lo + (hi - lo) * i / (scan_points - 1) for i in range(scan_points)]
    values = [_q_minus_one(c, beta, r, theta) for theta in grid]

    if all(value is None for value in values):
        raise ExistenceLostError(
            f"E2 exists nowhere on the interval ({lo}, {hi}) for "
            f"c={c}, beta={beta}, r={r}"
        )

    brackets = []
    for i in range(scan_points - 1):
        g0, g1 = values[i], values[i + 1]
        if g0 is None or g1 is None:
            continue
        if g0 == 0.0 or (g0 < 0.0) != (g1 < 0.0):
            brackets.append((grid[i], grid[i + 1]))
    if not brackets:
        raise NoSignChangeError(
            f"no critical theta found in ({lo}, {hi}): q(u*) - 1 does not "
            "change sign"
        )

    a, b = brackets[0]
    ga = _q_minus_one(c, beta, r, a)
    while b - a > BISECTION_WIDTH:
        mid = 0.5 * (a + b)
        gm = _q_minus_one(c, beta, r, mid)
        if gm is None:
            raise ExistenceLostError(
                f"E2 disappeared at theta={mid} while refining the root"
            )
        if gm == 0.0:
            a = b = mid
            break
        if (gm < 0.0) == (ga < 0.0):
            a, ga = mid, gm
        else:
            b = mid

    theta0 = 0.5 * (a + b)
    u_star = _e2_abscissa(c, beta, r, theta0)
    if u_star is None:
        raise ExistenceLostError(f"E2 disappeared at the root theta={theta0}")
    params = validate_params(c, beta, r, theta0)
    p, q = char_poly(params, u_star)
    if abs(q - 1.0) >= CRITICAL_Q_TOL:
        raise NoSignChangeError(
            f"bisection converged to theta={theta0} but |q - 1| = "
            f"{abs(q - 1.0):.3e} exceeds {CRITICAL_Q_TOL}"
        )
    if p >= 2.0:
        raise PConditionFailedError(
            f"p(u*) = {p} >= 2 at theta0={theta0}: the critical eigenvalues "
            "are not a complex conjugate pair"
        )

    cu = 1.0 + c * u_star
    k = (1.0 - u_star) * (1.0 + 2.0 * c * u_star) / cu
    m = (1.0 - u_star) * cu * (beta / cu**2 - theta0)
    return CriticalPoint(
        theta0=theta0,
        u_star=u_star,
        v_star=(1.0 - u_star) * cu,
        k=k,
        m=m,
        d=(1.0 + k) ** 2 - 4.0,
        s=1.0 - c + 2.0 * c * u_star,
        params=params,
        brackets=tuple(brackets),
    )


def perturbed_jacobian(cp: CriticalPoint, theta_pert: float) -> Matrix2:
    """Jacobian of the shifted system at the origin for theta = theta0 +
    theta_pert."""
    c, beta = cp.params.c, cp.params.beta
    u = cp.u_star
    cu = 1.0 + c * u
    return Matrix2(
        a11=cp.k,
        a12=-u / cu,
        a21=(1.0 - u) * cu * (beta / cu**2 - cp.theta0 - theta_pert),
        a22=1.0 - theta_pert * u,
    )


def perturbed_trace_det(
    cp: CriticalPoint, params: Parameters, theta_pert: float
) -> tuple[float, float]:
    """Trace a(theta*) and determinant b(theta*) of the perturbed Jacobian,
    from the closed forms; cross-checked against the assembled matrix."""
    u = cp.u_star
    c = params.c
    cu = 1.0 + c * u
    a = cp.k + 1.0 - theta_pert * u
    b = 1.0 - theta_pert * u * (1.0 - u) * (2.0 + 3.0 * c * u) / cu

    matrix = perturbed_jacobian(cp, theta_pert)
    if abs(matrix.trace - a) > 1e-9 or abs(matrix.det - b) > 1e-9:
        raise ArithmeticError(
            "closed-form trace/det disagree with the assembled perturbed "
            f"Jacobian at theta*={theta_pert}"
        )
    return a, b


def critical_eigenvalues(cp: CriticalPoint, theta_pert: float) -> tuple[complex, complex]:
    """Eigenvalue pair (a +- i sqrt(4b - a^2))/2 of the perturbed Jacobian,
    negative imaginary part first. Modulus is sqrt(b)."""
    a, b = perturbed_trace_det(cp, cp.params, theta_pert)
    disc = 4.0 * b - a * a
    if disc <= 0.0:
        raise RealEigenvaluesError(
            f"4b - a^2 = {disc} <= 0 at theta*={theta_pert}; shrink the "
            "perturbation"
        )
    root = math.sqrt(disc)
    return complex(a / 2.0, -root / 2.0), complex(a / 2.0, root / 2.0)


def transversality(cp: CriticalPoint) -> float:
    """d|lambda|/dtheta* at theta* = 0; negative on the whole domain."""
    u, c = cp.u_star, cp.params.c
    return -u * (1.0 - u) * (2.0 + 3.0 * c * u) / (2.0 * (1.0 + c * u))


def nondegeneracy(cp: CriticalPoint) -> bool:
    """No strong resonance: lambda^m != 1 for m = 1..4 at theta* = 0."""
    lam = critical_eigenvalues(cp, 0.0)[0]
    return all(abs(lam**m - 1.0) > RESONANCE_TOL for m in range(1, 5))


def critical_eigenvector(cp: CriticalPoint) -> tuple[complex, tuple[complex, complex]]:
    """Eigenpair (lambda, v) with lambda = (1 + k + i sqrt(-d))/2 and
    v = (2u*, (k-1)(1+cu*) - i sqrt(-d)(1+cu*))."""
    cu = 1.0 + cp.params.c * cp.u_star
    root = math.sqrt(-cp.d)
    lam = complex((1.0 + cp.k) / 2.0, root / 2.0)
    vec = (complex(2.0 * cp.u_star), complex((cp.k - 1.0) * cu, -root * cu))
    return lam, vec


def taylor_coefficients(cp: CriticalPoint, params: Parameters) -> TaylorCoefficients:
    """Closed-form third-order Taylor coefficients of the shifted map."""
    if abs(params.theta - cp.theta0) > 1e-12 * max(1.0, abs(cp.theta0)):
        raise ValueError(
            f"params.theta={params.theta} does not match theta0={cp.theta0}"
        )
    c, beta = params.c, params.beta
    u = cp.u_star
    cu = 1.0 + c * u
    return TaylorCoefficients(
        a10=cp.k,
        a01=-u / cu,
        a20=c * (1.0 - u) / cu**2 - 1.0,
        a11=-1.0 / cu**2,
        a02=0.0,
        a30=-(c**2) * (1.0 - u) / cu**3,
        a21=c / cu**3,
        a12=0.0,
        a03=0.0,
        b10=cp.m,
        b01=1.0,
        b20=-beta * c * (1.0 - u) / cu**2,
        b11=beta / cu**2 - cp.theta0,
        b02=0.0,
        b30=beta * c**2 * (1.0 - u) / cu**3,
        b21=-beta * c / cu**3,
        b12=0.0,
        b03=0.0,
    )


def normal_form(cp: CriticalPoint, tc: TaylorCoefficients) -> NormalFormData:
    """Transform the third-order expansion to normal-form coordinates.

    With T = [[0, 2u*], [sqrt(-d)(1+cu*), (k-1)(1+cu*)]] the substitution
    (x, y) = T (X, Y) turns the expansion into linear rotation plus
    F(X,Y) = c02 Y^2 + c03 Y^3 + c11 XY + c12 XY^2 (and G with d_ij).
    The coefficients below follow from (1-k)(1+cu*) = u* s and collecting
    monomials; partials are then read off the polynomial forms.
    """
    u, s = cp.u_star, cp.s
    cu = 1.0 + cp.params.c * u
    root = math.sqrt(-cp.d)

    c02 = u**2 * (4.0 * tc.b20 + s * (2.0 * tc.a20 - 2.0 * tc.b11 - tc.a11 * s)) / (root * cu)
    c03 = 2.0 * u**3 * (4.0 * tc.b30 + s * (2.0 * tc.a30 - 2.0 * tc.b21 - tc.a21 * s)) / (root * cu)
    c11 = u * (s * tc.a11 + 2.0 * tc.b11)
    c12 = 2.0 * u**2 * (s * tc.a21 + 2.0 * tc.b21)
    d02 = u * (2.0 * tc.a20 - s * tc.a11)
    d03 = 2.0 * u**2 * (2.0 * tc.a30 - s * tc.a21)
    d11 = root * cu * tc.a11
    d12 = 2.0 * u * root * cu * tc.a21

    return NormalFormData(
        c02=c02,
        c03=c03,
        c11=c11,
        c12=c12,
        d02=d02,
        d03=d03,
        d11=d11,
        d12=d12,
        f_xx=0.0,
        f_xy=c11,
        f_yy=2.0 * c02,
        f_xxx=0.0,
        f_xxy=0.0,
        f_xyy=2.0 * c12,
        f_yyy=6.0 * c03,
        g_xx=0.0,
        g_xy=d11,
        g_yy=2.0 * d02,
        g_xxx=0.0,
        g_xxy=0.0,
        g_xyy=2.0 * d12,
        g_yyy=6.0 * d03,
    )


def lyapunov_quantities(cp: CriticalPoint, nf: NormalFormData) -> NSReport:
    """Normal-form constants L20, L11, L02, L21 and the discriminating
    quantity L, with the bifurcation verdict."""
    lam1, lam2 = critical_eigenvalues(cp, 0.0)

    l20 = ((nf.f_xx - nf.f_yy + 2.0 * nf.g_xy) + 1j * (nf.g_xx - nf.g_yy - 2.0 * nf.f_xy)) / 8.0
    l11 = ((nf.f_xx + nf.f_yy) + 1j * (nf.g_xx + nf.g_yy)) / 4.0
    l02 = ((nf.f_xx - nf.f_yy - 2.0 * nf.g_xy) + 1j * (nf.g_xx - nf.g_yy + 2.0 * nf.f_xy)) / 8.0
    l21 = (
        (nf.f_xxx + nf.f_xyy + nf.g_xxy + nf.g_yyy)
        + 1j * (nf.g_xxx + nf.g_xyy - nf.f_xxy - nf.f_yyy)
    ) / 16.0

    l = (
        -((1.0 - 2.0 * lam1) * lam2**2 / (1.0 - lam1) * l11 * l20).real
        - 0.5 * abs(l11) ** 2
        - abs(l02) ** 2
        + (lam2 * l21).real
    )
    if abs(l) <= DEGENERACY_TOL:
        raise DegenerateLError(
            f"|L| = {abs(l):.3e} is below the degeneracy tolerance; the "
            "cubic normal form cannot decide the curve's stability"
        )
    verdict = Verdict.ATTRACTING_CURVE if l < 0.0 else Verdict.REPELLING_CURVE
    return NSReport(
        critical=cp,
        lambda1=lam1,
        lambda2=lam2,
        d_modulus=transversality(cp),
        nondegenerate=nondegeneracy(cp),
        l20=l20,
        l11=l11,
        l02=l02,
        l21=l21,
        l=l,
        verdict=verdict,
    )


def ns_report(
    c: float, beta: float, r: float, search_interval: tuple[float, float]
) -> NSReport:
    """Full pipeline: critical parameter, expansion, normal form, L."""
    cp = solve_theta0(c, beta, r, search_interval)
    tc = taylor_coefficients(cp, cp.params)
    nf = normal_form(cp, tc)
    return lyapunov_quantities(cp, nf)
