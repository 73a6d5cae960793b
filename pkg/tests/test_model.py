import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from planktonmap import (
    Matrix2,
    NonFiniteParameterError,
    NonFiniteResultError,
    NonPositiveParameterError,
    NotAFixedPointError,
    Parameters,
    State,
    initial_state,
    jacobian,
    jacobian_at_fixed,
    step,
    validate_params,
)
from planktonmap.model import quadratic_residual, require_fixed_abscissa

from .conftest import fd_x, fd_y


@pytest.mark.parametrize("name", ["c", "beta", "r", "theta"])
@pytest.mark.parametrize("bad", [0.0, -1.0])
def test_rejects_non_positive(name, bad):
    kwargs = {"c": 1.0, "beta": 4.0, "r": 1.0, "theta": 0.5}
    kwargs[name] = bad
    with pytest.raises(NonPositiveParameterError):
        validate_params(**kwargs)


@pytest.mark.parametrize("bad", [float("nan"), float("inf"), -float("inf")])
def test_rejects_non_finite(bad):
    with pytest.raises(NonFiniteParameterError):
        validate_params(bad, 4.0, 1.0, 0.5)


def test_state_rejects_non_finite():
    with pytest.raises(NonFiniteResultError):
        State(float("nan"), 0.0)


def test_initial_state_rejects_negative():
    with pytest.raises(ValueError):
        initial_state(-0.1, 0.5)


def test_matrix2_trace_det():
    m = Matrix2(1.0, 2.0, 3.0, 4.0)
    assert m.trace == 5.0
    assert m.det == -2.0


def test_trivial_points_are_fixed(example1):
    for u, v in ((0.0, 0.0), (1.0, 0.0)):
        after = step(example1, State(u, v))
        assert after.u == u and after.v == v


def test_interior_point_is_fixed(example1):
    after = step(example1, State(0.5, 0.75))
    assert abs(after.u - 0.5) < 1e-15
    assert abs(after.v - 0.75) < 1e-15


def test_step_overflow_raises(example1):
    state = State(1e200, 1e200)
    with pytest.raises(NonFiniteResultError):
        step(example1, state)


def test_jacobian_example1_golden(example1):
    jac = jacobian_at_fixed(example1, 0.5)
    assert abs(jac.a11 - 2.0 / 3.0) < 1e-15
    assert abs(jac.a12 + 1.0 / 3.0) < 1e-15
    assert abs(jac.a21 - 1.0) < 1e-15
    assert abs(jac.a22 - 1.0) < 1e-15


def test_jacobian_matches_general_form_at_fixed(example1):
    general = jacobian(example1, State(0.5, 0.75))
    simplified = jacobian_at_fixed(example1, 0.5)
    for field in ("a11", "a12", "a21", "a22"):
        assert abs(getattr(general, field) - getattr(simplified, field)) < 1e-12


def test_jacobian_matches_finite_differences(rng):
    for _ in range(25):
        params = Parameters(
            rng.uniform(0.1, 5.0),
            rng.uniform(0.5, 10.0),
            rng.uniform(0.1, 2.0),
            rng.uniform(0.1, 2.0),
        )
        u, v = rng.uniform(0.05, 1.5), rng.uniform(0.05, 2.0)
        jac = jacobian(params, State(u, v))

        def f1(x, y):
            return step(params, State(x, y)).u

        def f2(x, y):
            return step(params, State(x, y)).v

        assert abs(jac.a11 - fd_x(f1, u, v)) < 1e-8
        assert abs(jac.a12 - fd_y(f1, u, v)) < 1e-8
        assert abs(jac.a21 - fd_x(f2, u, v)) < 1e-8
        assert abs(jac.a22 - fd_y(f2, u, v)) < 1e-8


def test_quadratic_residual_zero_at_example1_root(example1):
    assert abs(quadratic_residual(example1, 0.5)) < 1e-15


def test_require_fixed_abscissa_rejects_non_root(example1):
    with pytest.raises(NotAFixedPointError):
        require_fixed_abscissa(example1, 0.3)


@settings(max_examples=100, deadline=None)
@given(
    c=st.floats(0.05, 8.0),
    beta=st.floats(0.1, 20.0),
    r=st.floats(0.05, 3.0),
    theta=st.floats(0.05, 3.0),
    u=st.floats(0.0, 2.0),
    v=st.floats(0.0, 3.0),
)
def test_step_total_on_moderate_box(c, beta, r, theta, u, v):
    """One step from a moderate state never produces a non-finite value."""
    after = step(Parameters(c, beta, r, theta), State(u, v))
    assert math.isfinite(after.u) and math.isfinite(after.v)


@settings(max_examples=100, deadline=None)
@given(
    c=st.floats(0.05, 8.0),
    beta=st.floats(0.1, 20.0),
    r=st.floats(0.05, 3.0),
    theta=st.floats(0.05, 3.0),
    v=st.floats(0.0, 3.0),
)
def test_extinct_prey_axis_invariant(c, beta, r, theta, v):
    """u = 0 is invariant: with no phytoplankton the map stays on the axis."""
    after = step(Parameters(c, beta, r, theta), State(0.0, v))
    assert after.u == 0.0
