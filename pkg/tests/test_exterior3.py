import numpy as np
import pytest

from contactknots.errors import EvaluationError, ParameterError
from contactknots.exterior3 import (
    OneForm3,
    TwoForm3,
    abc_flow,
    beltrami_residual,
    curl,
    divergence,
    exterior_derivative,
    gradient,
    helmholtz_residual,
    hodge_star,
    maxwell_decomposition,
)


def grid(n=10):
    axis = np.linspace(0.0, 2 * np.pi, n, endpoint=False) + 0.1
    return [np.array(p) for p in np.stack(np.meshgrid(axis, axis, axis), -1).reshape(-1, 3)]


def rotation(p):
    x, y, z = p
    return np.array([-y, x, 0.0])


def test_hodge_star_is_an_involution():
    a = OneForm3(1.0, 2.0, 3.0)
    assert hodge_star(hodge_star(a)) == a
    assert hodge_star(a) == TwoForm3(b12=3.0, b31=2.0, b23=1.0)


def test_curl_of_rigid_rotation():
    # curl(-y, x, 0) = (0, 0, 2)
    assert np.allclose(curl(rotation, [0.3, -1.2, 0.7]), [0, 0, 2], atol=1e-8)
    d = exterior_derivative(rotation, [1.0, 2.0, 3.0])
    assert d.b12 == pytest.approx(2.0) and abs(d.b31) < 1e-9 and abs(d.b23) < 1e-9


def test_abc_flow_is_beltrami_on_grid():
    v = abc_flow(1.0, np.sqrt(2 / 3), np.sqrt(1 / 3))
    worst = max(np.max(np.abs(beltrami_residual(v, 1.0, p, h=1e-5))) for p in grid(6))
    assert worst < 1e-6


def test_curl_error_is_second_order():
    v = abc_flow()
    p = np.array([0.4, 1.1, -0.6])
    err = [np.linalg.norm(curl(v, p, h) - v(p)) for h in (0.1, 0.05)]
    assert 3.5 <= err[0] / err[1] <= 4.5


def test_div_curl_and_curl_grad_vanish():
    v = abc_flow(0.5, 1.5, 1.0)
    f = lambda p: np.sin(p[0]) * p[1] ** 2 + np.exp(p[2])  # noqa: E731
    p = np.array([0.2, -0.5, 0.9])
    assert abs(divergence(lambda q: curl(v, q, 1e-4), p, 1e-3)) < 1e-5
    assert np.allclose(curl(lambda q: gradient(f, q, 1e-4), p, 1e-3), 0, atol=1e-5)


def test_helmholtz_residual_of_abc():
    v = abc_flow()
    assert np.max(np.abs(helmholtz_residual(v, 1.0, [0.3, 0.2, 0.1]))) < 1e-5


def test_maxwell_decomposition():
    v = abc_flow()
    m = maxwell_decomposition(v, lambda p: 0.3, [0.1, 0.2, 0.3])
    assert abs(m.divergence) < 1e-9 and m.transport == 0.0
    assert np.allclose(m.E**2 + m.B**2, v(np.array([0.1, 0.2, 0.3])) ** 2)


def test_errors():
    with pytest.raises(ParameterError):
        curl(abc_flow(), [0, 0, 0], h=0.0)
    with pytest.raises(EvaluationError):
        curl(lambda p: np.array([np.nan, 0, 0]), [0, 0, 0])
    with pytest.raises(EvaluationError):
        curl(lambda p: np.zeros(2), [0, 0, 0])
