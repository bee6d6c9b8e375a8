"""Pointwise exterior calculus on flat R^3.

Vector fields are plain callables mapping a 3-point to a 3-vector.  Forms
are evaluated at a single point: a 1-form stores the coefficients of
dx1, dx2, dx3 and a 2-form those of dx1^dx2, dx3^dx1, dx2^dx3.  All
derivatives are central finite differences; the metric is the identity.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import EvaluationError, ParameterError

__all__ = [
    "OneForm3",
    "TwoForm3",
    "MaxwellFields",
    "abc_flow",
    "flat",
    "sharp",
    "hodge_star",
    "jacobian",
    "exterior_derivative",
    "curl",
    "divergence",
    "gradient",
    "laplacian",
    "beltrami_residual",
    "helmholtz_residual",
    "maxwell_decomposition",
]

Field = Callable[[np.ndarray], np.ndarray]
Scalar = Callable[[np.ndarray], float]


@dataclass(frozen=True)
class OneForm3:
    a1: float
    a2: float
    a3: float

    def coefficients(self) -> np.ndarray:
        return np.array([self.a1, self.a2, self.a3])


@dataclass(frozen=True)
class TwoForm3:
    b12: float
    b31: float
    b23: float

    def coefficients(self) -> np.ndarray:
        return np.array([self.b12, self.b31, self.b23])


@dataclass(frozen=True)
class MaxwellFields:
    E: np.ndarray
    B: np.ndarray
    divergence: float
    transport: float  # v . grad f


def abc_flow(A: float = 1.0, B: float = 1.0, C: float = 1.0) -> Field:
    """Arnold-Beltrami-Childress field; curl v = v for every A, B, C."""

    def v(p):
        x, y, z = p
        return np.array([A * np.sin(z) + C * np.cos(y), B * np.sin(x) + A * np.cos(z), C * np.sin(y) + B * np.cos(x)])

    return v


def _evaluate(v: Field, p) -> np.ndarray:
    out = np.asarray(v(np.asarray(p, dtype=float)), dtype=float)
    if out.shape != (3,) or not np.all(np.isfinite(out)):
        raise EvaluationError(f"field evaluation at {p!r} is not a finite 3-vector: {out!r}")
    return out


def _check_step(h: float):
    if not h > 0:
        raise ParameterError(f"finite-difference step must be positive, got {h}")


def flat(v: Field, p) -> OneForm3:
    return OneForm3(*_evaluate(v, p))


def sharp(alpha: OneForm3) -> np.ndarray:
    return alpha.coefficients()


def hodge_star(form: OneForm3 | TwoForm3) -> OneForm3 | TwoForm3:
    """*dx1 = dx2^dx3, *dx2 = dx3^dx1, *dx3 = dx1^dx2 and back again."""
    if isinstance(form, OneForm3):
        return TwoForm3(b12=form.a3, b31=form.a2, b23=form.a1)
    return OneForm3(a1=form.b23, a2=form.b31, a3=form.b12)


def jacobian(v: Field, p, h: float = 1e-5) -> np.ndarray:
    """J[i, j] = d v_i / d x_j by central differences."""
    _check_step(h)
    p = np.asarray(p, dtype=float)
    J = np.empty((3, 3))
    for j in range(3):
        e = np.zeros(3)
        e[j] = h
        J[:, j] = (_evaluate(v, p + e) - _evaluate(v, p - e)) / (2 * h)
    return J


def exterior_derivative(v: Field, p, h: float = 1e-5) -> TwoForm3:
    """d of the 1-form v-flat, evaluated at p."""
    J = jacobian(v, p, h)
    return TwoForm3(b12=J[1, 0] - J[0, 1], b31=J[0, 2] - J[2, 0], b23=J[2, 1] - J[1, 2])


def curl(v: Field, p, h: float = 1e-5) -> np.ndarray:
    return sharp(hodge_star(exterior_derivative(v, p, h)))


def divergence(v: Field, p, h: float = 1e-5) -> float:
    return float(np.trace(jacobian(v, p, h)))


def gradient(f: Scalar, p, h: float = 1e-5) -> np.ndarray:
    _check_step(h)
    p = np.asarray(p, dtype=float)
    g = np.empty(3)
    for j in range(3):
        e = np.zeros(3)
        e[j] = h
        g[j] = (float(f(p + e)) - float(f(p - e))) / (2 * h)
    if not np.all(np.isfinite(g)):
        raise EvaluationError(f"scalar function not finite near {p!r}")
    return g


def laplacian(v: Field, p, h: float = 1e-4) -> np.ndarray:
    _check_step(h)
    p = np.asarray(p, dtype=float)
    centre = _evaluate(v, p)
    acc = np.zeros(3)
    for j in range(3):
        e = np.zeros(3)
        e[j] = h
        acc += _evaluate(v, p + e) - 2 * centre + _evaluate(v, p - e)
    return acc / h**2


def beltrami_residual(v: Field, kappa: float, p, h: float = 1e-5) -> np.ndarray:
    """curl v - kappa v; vanishes for strong Beltrami fields."""
    return curl(v, p, h) - kappa * _evaluate(v, p)


def helmholtz_residual(v: Field, kappa: float, p, h: float = 1e-4) -> np.ndarray:
    return laplacian(v, p, h) + kappa**2 * _evaluate(v, p)


def maxwell_decomposition(v: Field, f: Scalar, p, h: float = 1e-5) -> MaxwellFields:
    """E = v cos f, B = v sin f at p, with the residuals div v and v . grad f.

    Both residuals must vanish for (E, B) to solve the source-free Maxwell
    equations built from a Beltrami field v and phase f.
    """
    p = np.asarray(p, dtype=float)
    val = _evaluate(v, p)
    phase = float(f(p))
    if not np.isfinite(phase):
        raise EvaluationError(f"phase not finite at {p!r}")
    return MaxwellFields(
        E=val * np.cos(phase),
        B=val * np.sin(phase),
        divergence=divergence(v, p, h),
        transport=float(val @ gradient(f, p, h)),
    )
