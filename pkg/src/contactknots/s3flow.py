"""Standard contact structure on the unit 3-sphere and its Reeb/Hamiltonian flow.

Points of R^4 are arrays ordered (x1, y1, x2, y2).  The contact form is
alpha = 1/2 sum (x dy - y dx), whose Reeb field is 2(-y1, x1, -y2, x2) and
whose exterior derivative is the symplectic form omega = dx1^dy1 + dx2^dy2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

import numpy as np

from .errors import DomainError, ParameterError

__all__ = [
    "Trajectory",
    "TorusKnotType",
    "reeb_at",
    "liouville_at",
    "hopf_field",
    "frame_fields",
    "alpha_at",
    "omega",
    "tangent_basis",
    "check_reeb_conditions",
    "omega_pairing",
    "linear_bracket",
    "energy",
    "bott_integral",
    "integrate_flow",
    "detect_closed_orbit",
    "winding_ratio",
    "torus_knot_type",
    "poisson_bracket",
    "random_unit_points",
    "BREVE",
    "CHECK",
]

SPHERE_TOL = 1e-9

# the rotation (x, y) -> (-y, x) in both complex planes
_J = np.array([[0.0, -1.0, 0.0, 0.0], [1.0, 0.0, 0.0, 0.0], [0.0, 0.0, 0.0, -1.0], [0.0, 0.0, 1.0, 0.0]])
# quaternionic frame fields, linear in the point
BREVE = np.array([[0, 0, -1, 0], [0, 0, 0, 1], [1, 0, 0, 0], [0, -1, 0, 0]], dtype=float)
CHECK = np.array([[0, 0, 0, -1], [0, 0, -1, 0], [0, 1, 0, 0], [1, 0, 0, 0]], dtype=float)


def _point(p) -> np.ndarray:
    p = np.asarray(p, dtype=float)
    if p.shape != (4,):
        raise ParameterError(f"expected a point of R^4, got shape {p.shape}")
    return p


def _on_sphere(p: np.ndarray, tol: float | None):
    if tol is not None and abs(np.linalg.norm(p) - 1.0) >= tol:
        raise DomainError(f"point {p.tolist()} is not on the unit sphere (|p| = {float(np.linalg.norm(p))!r})")


def reeb_at(p) -> np.ndarray:
    return 2.0 * (_J @ _point(p))


def liouville_at(p) -> np.ndarray:
    return 0.5 * _point(p)


def hopf_field(p) -> np.ndarray:
    """Unit-speed Hopf field (-y1, x1, -y2, x2), half the Reeb field."""
    return _J @ _point(p)


def frame_fields(p) -> tuple[np.ndarray, np.ndarray]:
    p = _point(p)
    return BREVE @ p, CHECK @ p


def alpha_at(p, v) -> float:
    x1, y1, x2, y2 = _point(p)
    v = np.asarray(v, dtype=float)
    return 0.5 * (x1 * v[1] - y1 * v[0] + x2 * v[3] - y2 * v[2])


def omega(u, v) -> float:
    u = np.asarray(u, dtype=float)
    v = np.asarray(v, dtype=float)
    return float(u[0] * v[1] - u[1] * v[0] + u[2] * v[3] - u[3] * v[2])


def tangent_basis(p) -> np.ndarray:
    """Three orthonormal rows spanning the tangent space of the sphere at p."""
    p = _point(p)
    _, _, vt = np.linalg.svd(p.reshape(1, 4))
    return vt[1:]


def check_reeb_conditions(p, tol: float | None = SPHERE_TOL) -> tuple[float, float]:
    """Return (alpha(R), max_k |d alpha(R, t_k)|) over an orthonormal tangent basis.

    For the Reeb field R both conditions hold exactly on the unit sphere:
    alpha(R) = 1 and R lies in the kernel of d alpha restricted to the sphere.
    """
    p = _point(p)
    _on_sphere(p, tol)
    R = reeb_at(p)
    value = alpha_at(p, R)
    defect = max(abs(omega(R, t)) for t in tangent_basis(p))
    return value, defect


def omega_pairing(p, tol: float | None = SPHERE_TOL) -> float:
    """The contraction i_R i_X omega of omega with the Liouville field X, then the Reeb field R.

    Equals alpha(R) because alpha = i_X omega, hence 1 on the unit sphere and
    |p|^2 in general.  As an ordered pair this is omega(X, R).
    """
    p = _point(p)
    _on_sphere(p, tol)
    return omega(liouville_at(p), reeb_at(p))


def linear_bracket(A: np.ndarray, B: np.ndarray) -> np.ndarray:
    """Matrix of [X, Y] for linear fields X(p) = A p, Y(p) = B p, with [X, Y] = DY.X - DX.Y."""
    return B @ A - A @ B


def energy(points: np.ndarray) -> np.ndarray:
    points = np.atleast_2d(points)
    return 0.5 * np.sum(points**2, axis=1)


def bott_integral(points: np.ndarray) -> np.ndarray:
    points = np.atleast_2d(points)
    f1 = points[:, 0] ** 2 + points[:, 1] ** 2
    f2 = points[:, 2] ** 2 + points[:, 3] ** 2
    return 0.5 * (f2 - f1)


@dataclass(frozen=True)
class Trajectory:
    times: np.ndarray
    points: np.ndarray
    energy: np.ndarray
    bott: np.ndarray

    def __len__(self):
        return len(self.times)

    def records(self) -> list[dict]:
        keys = ("x1", "y1", "x2", "y2")
        return [
            {"t": float(t), **{k: float(c) for k, c in zip(keys, x)}, "h": float(h), "F": float(F)}
            for t, x, h, F in zip(self.times, self.points, self.energy, self.bott)
        ]


@dataclass(frozen=True)
class TorusKnotType:
    p: int
    q: int
    sign: int = 1


def _flow_matrix(field: str | tuple, r1: float | None, r2: float | None) -> np.ndarray:
    if field == "standard":
        return _J.copy()
    if field == "weighted":
        if r1 is None or r2 is None or not (r1 > 0 and r2 > 0):
            raise ParameterError("weighted field needs r1 > 0 and r2 > 0")
        return np.diag([1 / r1, 1 / r1, 1 / r2, 1 / r2]) @ _J
    raise ParameterError(f"unknown field {field!r}")


def _rk4_step(f: Callable[[np.ndarray], np.ndarray], x: np.ndarray, dt: float) -> np.ndarray:
    k1 = f(x)
    k2 = f(x + 0.5 * dt * k1)
    k3 = f(x + 0.5 * dt * k2)
    k4 = f(x + dt * k3)
    return x + (dt / 6.0) * (k1 + 2 * k2 + 2 * k3 + k4)


def integrate_flow(
    x0,
    field: str = "standard",
    dt: float = 1e-3,
    steps: int = 1000,
    r1: float | None = None,
    r2: float | None = None,
    tol: float | None = SPHERE_TOL,
) -> Trajectory:
    """Fixed-step RK4 integration, projecting radially back onto the sphere after every step.

    ``standard`` is x1' = -y1, y1' = x1, x2' = -y2, y2' = x2.  ``weighted``
    runs the angles at rates 1/r1 and 1/r2 in the two complex planes.
    """
    if not dt > 0:
        raise ParameterError(f"dt must be positive, got {dt}")
    if steps <= 0:
        raise ParameterError(f"steps must be positive, got {steps}")
    x = _point(x0)
    _on_sphere(x, tol)
    x = x / np.linalg.norm(x)
    A = _flow_matrix(field, r1, r2)

    def f(y):
        return A @ y

    pts = np.empty((steps + 1, 4))
    pts[0] = x
    for k in range(1, steps + 1):
        x = _rk4_step(f, x, dt)
        x = x / math.sqrt(x @ x)
        pts[k] = x
    times = dt * np.arange(steps + 1)
    return Trajectory(times=times, points=pts, energy=energy(pts), bott=bott_integral(pts))


def detect_closed_orbit(traj: Trajectory, eps: float) -> float | None:
    """First return time T > 0 with |x(T) - x(0)| < eps, or None.

    Inside the first return to the eps-ball the crossing of the plane through
    x(0) normal to the initial direction of motion is located by linear
    interpolation between the bracketing samples.
    """
    if not eps > 0:
        raise ParameterError("eps must be positive")
    if len(traj) < 3:
        return None
    pts, times = traj.points, traj.times
    x0 = pts[0]
    dist = np.linalg.norm(pts - x0, axis=1)
    left = np.nonzero(dist >= eps)[0]
    if len(left) == 0:
        return None
    back = np.nonzero(dist[left[0]:] < eps)[0]
    if len(back) == 0:
        return None
    k = left[0] + back[0]
    u = pts[1] - pts[0]
    u = u / np.linalg.norm(u)
    s = (pts - x0) @ u
    while k + 1 < len(pts) and dist[k] < eps:
        if s[k] < 0 <= s[k + 1]:
            frac = -s[k] / (s[k + 1] - s[k])
            return float(times[k] + frac * (times[k + 1] - times[k]))
        if s[k] >= 0 and (k == 0 or s[k - 1] < 0):
            return float(times[k])
        k += 1
    # no crossing inside the ball: fall back to the closest sample
    window = slice(left[0] + back[0], k + 1)
    j = window.start + int(np.argmin(dist[window]))
    return float(times[j])


def winding_ratio(traj: Trajectory) -> tuple[float, float]:
    """Mean angular speeds of the two complex coordinates over the whole trajectory."""
    pts = traj.points
    phi1 = np.unwrap(np.arctan2(pts[:, 1], pts[:, 0]))
    phi2 = np.unwrap(np.arctan2(pts[:, 3], pts[:, 2]))
    span = traj.times[-1] - traj.times[0]
    return float((phi1[-1] - phi1[0]) / span), float((phi2[-1] - phi2[0]) / span)


def torus_knot_type(omega1: float, omega2: float, max_den: int = 100, tol: float = 1e-9) -> TorusKnotType | None:
    """Rational type p/q of the frequency ratio omega1/omega2, or None if it is not close to one."""
    if not (omega1 > 0 and omega2 > 0):
        raise ParameterError("frequencies must be positive")
    if max_den < 1:
        raise ParameterError("max_den must be >= 1")
    ratio = omega1 / omega2
    approx = Fraction(ratio).limit_denominator(max_den)
    if approx.numerator == 0 or abs(ratio - float(approx)) >= tol:
        return None
    return TorusKnotType(approx.numerator, approx.denominator, 1)


def poisson_bracket(f, g, p, h: float = 1e-6) -> float:
    """{f, g} with momenta (x1, x2) and coordinates (y1, y2), by central differences."""
    p = _point(p)

    def partial(fn, idx):
        e = np.zeros(4)
        e[idx] = h
        return (fn(p + e) - fn(p - e)) / (2 * h)

    total = 0.0
    for pi, qi in ((0, 1), (2, 3)):
        total += partial(f, pi) * partial(g, qi) - partial(f, qi) * partial(g, pi)
    return float(total)


def random_unit_points(count: int, seed: int = 0) -> np.ndarray:
    rng = np.random.default_rng(seed)
    pts = rng.normal(size=(count, 4))
    return pts / np.linalg.norm(pts, axis=1, keepdims=True)
