"""Core types and evaluation of the discrete plankton map.

The map acts on (u, v) — phytoplankton and zooplankton densities — as

    u' = u(2 - u) - u v / (1 + c u)
    v' = beta u v / (1 + c u) + (1 - r) v - theta u v

with four positive constants: half-saturation shape c, conversion rate
beta, zooplankton death rate r, and toxin liberation rate theta.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .exceptions import (
    NonFiniteParameterError,
    NonFiniteResultError,
    NonPositiveParameterError,
    NotAFixedPointError,
)

#: Scale-aware residual gate for "u is an interior fixed-point abscissa".
FIXED_POINT_RESIDUAL_TOL = 1e-9


@dataclass(frozen=True)
class Parameters:
    """Validated model constants; all strictly positive."""

    c: float
    beta: float
    r: float
    theta: float

    def __post_init__(self):
        for name in ("c", "beta", "r", "theta"):
            value = getattr(self, name)
            if not isinstance(value, (int, float)) or isinstance(value, bool):
                raise NonFiniteParameterError(name, value)
            value = float(value)
            if not math.isfinite(value):
                raise NonFiniteParameterError(name, value)
            if value <= 0.0:
                raise NonPositiveParameterError(name, value)
            object.__setattr__(self, name, value)


def validate_params(c: float, beta: float, r: float, theta: float) -> Parameters:
    """Build Parameters, rejecting non-finite or non-positive inputs."""
    return Parameters(c=c, beta=beta, r=r, theta=theta)


@dataclass(frozen=True)
class State:
    """A point of the plane. Finiteness is enforced; sign is not, because
    iterated orbits may legitimately leave the positive quadrant."""

    u: float
    v: float

    def __post_init__(self):
        if not (math.isfinite(self.u) and math.isfinite(self.v)):
            raise NonFiniteResultError(f"non-finite state ({self.u!r}, {self.v!r})")
        object.__setattr__(self, "u", float(self.u))
        object.__setattr__(self, "v", float(self.v))


def initial_state(u: float, v: float) -> State:
    """Validate a user-supplied initial condition (non-negative quadrant)."""
    if u < 0 or v < 0:
        raise ValueError(f"initial state must be non-negative, got ({u}, {v})")
    return State(u, v)


@dataclass(frozen=True)
class Matrix2:
    """2x2 real matrix, row-major."""

    a11: float
    a12: float
    a21: float
    a22: float

    @property
    def trace(self) -> float:
        return self.a11 + self.a22

    @property
    def det(self) -> float:
        return self.a11 * self.a22 - self.a12 * self.a21


def step(params: Parameters, s: State) -> State:
    """One application of the map. No clamping; overflow raises
    NonFiniteResultError to signal a divergent orbit."""
    c, beta, r, theta = params.c, params.beta, params.r, params.theta
    u, v = s.u, s.v
    denom = 1.0 + c * u
    u1 = u * (2.0 - u) - u * v / denom
    v1 = beta * u * v / denom + (1.0 - r) * v - theta * u * v
    if not (math.isfinite(u1) and math.isfinite(v1)):
        raise NonFiniteResultError(f"map overflow at ({u!r}, {v!r})")
    return State(u1, v1)


def jacobian(params: Parameters, s: State) -> Matrix2:
    """Jacobian of the map at an arbitrary state."""
    c, beta, r, theta = params.c, params.beta, params.r, params.theta
    u, v = s.u, s.v
    denom = 1.0 + c * u
    return Matrix2(
        a11=2.0 - 2.0 * u - v / denom**2,
        a12=-u / denom,
        a21=beta * v / denom**2 - theta * v,
        a22=beta * u / denom + 1.0 - r - theta * u,
    )


def quadratic_residual(params: Parameters, u: float) -> float:
    """Residual of the interior fixed-point quadratic
    c*theta*u^2 - (beta - r*c - theta)*u + r at a candidate abscissa."""
    c, beta, r, theta = params.c, params.beta, params.r, params.theta
    return c * theta * u * u - (beta - r * c - theta) * u + r


def require_fixed_abscissa(params: Parameters, u: float) -> None:
    """Gate: raise unless u satisfies the interior fixed-point quadratic."""
    residual = quadratic_residual(params, u)
    if abs(residual) > FIXED_POINT_RESIDUAL_TOL * max(1.0, abs(params.beta)):
        raise NotAFixedPointError(
            f"u={u!r} is not an interior fixed-point abscissa "
            f"(quadratic residual {residual:.3e})"
        )


def jacobian_at_fixed(params: Parameters, u_star: float) -> Matrix2:
    """Jacobian at an interior fixed point, simplified using
    v = (1-u)(1+cu) and the fixed-point quadratic."""
    require_fixed_abscissa(params, u_star)
    c, beta, theta = params.c, params.beta, params.theta
    u = u_star
    denom = 1.0 + c * u
    return Matrix2(
        a11=(1.0 - u) * (1.0 + 2.0 * c * u) / denom,
        a12=-u / denom,
        a21=(1.0 - u) * denom * (beta / denom**2 - theta),
        a22=1.0,
    )
