"""Lorenz system integration, lobe symbols, close returns and template braids."""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np

from .braid import BraidWord, alexander_from_braid, closure_components, transverse_invariants
from .errors import DomainError, ParameterError

__all__ = [
    "LorenzParams",
    "LorenzTrajectory",
    "SymbolWord",
    "NonPrimitiveWordWarning",
    "CloseReturn",
    "LorenzInvariants",
    "integrate_lorenz",
    "absorbing_bound",
    "lobe_maxima",
    "lobe_encoding",
    "close_return_candidates",
    "template_permutation",
    "template_braid",
    "lorenz_invariants",
    "primitive_words",
]


class NonPrimitiveWordWarning(UserWarning):
    """The word is a proper power, so its template orbit closes to a multi-component link."""


@dataclass(frozen=True)
class LorenzParams:
    sigma: float = 10.0
    b: float = 8.0 / 3.0
    r: float = 24.0

    def __post_init__(self):
        if not self.r > 0:
            raise ParameterError(f"Rayleigh number must be positive, got {self.r}")
        if not (self.sigma > 0 and self.b > 0):
            raise ParameterError("sigma and b must be positive")

    def rhs(self, p) -> np.ndarray:
        x, y, z = p
        return np.array([self.sigma * (y - x), self.r * x - y - x * z, -self.b * z + x * y])


@dataclass(frozen=True)
class LorenzTrajectory:
    times: np.ndarray
    points: np.ndarray
    params: LorenzParams

    def __len__(self):
        return len(self.times)

    def segment(self, start: int, stop: int) -> "LorenzTrajectory":
        return LorenzTrajectory(self.times[start:stop], self.points[start:stop], self.params)

    def mirrored(self) -> "LorenzTrajectory":
        return LorenzTrajectory(self.times, self.points * np.array([-1.0, -1.0, 1.0]), self.params)


def integrate_lorenz(params: LorenzParams, x0, dt: float = 1e-3, steps: int = 1000) -> LorenzTrajectory:
    """Fixed-step RK4; scalar arithmetic keeps long runs cheap."""
    if not dt > 0:
        raise ParameterError(f"dt must be positive, got {dt}")
    if steps < 0:
        raise ParameterError(f"steps must be non-negative, got {steps}")
    x, y, z = (float(c) for c in x0)
    s, b, r = float(params.sigma), float(params.b), float(params.r)
    h2, h6 = dt / 2.0, dt / 6.0
    out = np.empty((steps + 1, 3))
    out[0] = x, y, z
    for k in range(1, steps + 1):
        a1 = s * (y - x)
        b1 = r * x - y - x * z
        c1 = x * y - b * z
        xa, ya, za = x + h2 * a1, y + h2 * b1, z + h2 * c1
        a2 = s * (ya - xa)
        b2 = r * xa - ya - xa * za
        c2 = xa * ya - b * za
        xa, ya, za = x + h2 * a2, y + h2 * b2, z + h2 * c2
        a3 = s * (ya - xa)
        b3 = r * xa - ya - xa * za
        c3 = xa * ya - b * za
        xa, ya, za = x + dt * a3, y + dt * b3, z + dt * c3
        a4 = s * (ya - xa)
        b4 = r * xa - ya - xa * za
        c4 = xa * ya - b * za
        x += h6 * (a1 + 2 * a2 + 2 * a3 + a4)
        y += h6 * (b1 + 2 * b2 + 2 * b3 + b4)
        z += h6 * (c1 + 2 * c2 + 2 * c3 + c4)
        out[k] = x, y, z
    if not np.all(np.isfinite(out)):
        raise DomainError("Lorenz integration diverged; reduce dt")
    return LorenzTrajectory(dt * np.arange(steps + 1), out, params)


def absorbing_bound(params: LorenzParams, x0) -> float:
    """Upper bound on sqrt(x^2 + y^2 + (z - r - sigma)^2) along the whole orbit of x0.

    That quantity V decreases outside the ellipsoid
    sigma x^2 + y^2 + b (z - c/2)^2 <= b c^2 / 4 with c = r + sigma, so V
    never exceeds max(V(x0), max of V over the ellipsoid); the latter is
    bounded here by a box enclosing the ellipsoid.
    """
    c = params.r + params.sigma
    x, y, z = (float(v) for v in x0)
    v0 = x * x + y * y + (z - c) ** 2
    inside = params.b * c * c / 4.0 * (1.0 / params.sigma + 1.0) + c * c
    return float(np.sqrt(max(v0, inside)))


def lobe_maxima(traj: LorenzTrajectory, min_curvature: float = 1e-12) -> list[tuple[int, float, str]]:
    """Local maxima of z as (sample index, refined time, symbol).

    A maximum sits at sample i when z rises into it and does not rise out of
    it; a parabola through the three samples refines its time and the value
    of x there, whose sign picks L or R.  Flat stretches below
    ``min_curvature`` are ignored so equilibria produce nothing.
    """
    pts = traj.points
    if len(pts) < 3:
        return []
    z = pts[:, 2]
    dz = np.diff(z)
    idx = np.nonzero((dz[:-1] > 0) & (dz[1:] <= 0))[0] + 1
    out = []
    dt = traj.times[1] - traj.times[0]
    for i in idx:
        zm, z0, zp = z[i - 1], z[i], z[i + 1]
        curv = zm - 2 * z0 + zp
        if -curv <= min_curvature:
            continue
        delta = 0.5 * (zm - zp) / curv
        xm, x0, xp = pts[i - 1, 0], pts[i, 0], pts[i + 1, 0]
        x_at = x0 + 0.5 * delta * (xp - xm) + 0.5 * delta * delta * (xp - 2 * x0 + xm)
        if x_at == 0.0:
            continue
        out.append((int(i), float(traj.times[i] + delta * dt), "L" if x_at < 0 else "R"))
    return out


def lobe_encoding(traj: LorenzTrajectory) -> str:
    """The L/R itinerary of the trajectory, one symbol per maximum of z, in time order."""
    return "".join(sym for _, _, sym in lobe_maxima(traj))


@dataclass(frozen=True)
class SymbolWord:
    """Cyclic word over {L, R}, stored in its lexicographically least rotation."""

    word: str

    def __post_init__(self):
        w = str(self.word).upper()
        if set(w) - {"L", "R"}:
            raise ParameterError(f"symbol words use only L and R, got {self.word!r}")
        if w:
            w = min(w[k:] + w[:k] for k in range(len(w)))
        object.__setattr__(self, "word", w)

    def __len__(self):
        return len(self.word)

    def __str__(self):
        return self.word

    def period(self) -> int:
        """Length of the shortest repeating block."""
        n = len(self.word)
        for d in range(1, n + 1):
            if n % d == 0 and self.word[:d] * (n // d) == self.word:
                return d
        return 0

    def is_primitive(self) -> bool:
        return bool(self.word) and self.period() == len(self.word)

    def swapped(self) -> "SymbolWord":
        return SymbolWord(self.word.translate(str.maketrans("LR", "RL")))

    def syllables(self) -> int:
        """Number of maximal constant blocks of the cyclic word."""
        w = self.word
        if not w:
            return 0
        changes = sum(1 for k in range(len(w)) if w[k] != w[k - 1])
        return max(changes, 1)


@dataclass(frozen=True)
class CloseReturn:
    start: float
    period: float
    word: SymbolWord
    distance: float
    start_index: int
    stop_index: int


def close_return_candidates(traj: LorenzTrajectory, eps: float, max_period: int = 8) -> list[CloseReturn]:
    """Near-periodic segments found on the section of z-maxima.

    For each maximum the first later maximum, at most ``max_period`` symbols
    ahead, whose state lies within ``eps`` is reported together with the
    symbols in between.  The samples from just before the first maximum to
    just before the returning one re-encode to the same cyclic word.
    """
    if not eps > 0:
        raise ParameterError("eps must be positive")
    if max_period < 1:
        raise ParameterError("max_period must be >= 1")
    maxima = lobe_maxima(traj)
    symbols = "".join(s for _, _, s in maxima)
    found = []
    for a in range(len(maxima)):
        ia = maxima[a][0]
        for k in range(1, max_period + 1):
            if a + k >= len(maxima):
                break
            ib = maxima[a + k][0]
            dist = float(np.linalg.norm(traj.points[ib] - traj.points[ia]))
            if dist < eps:
                found.append(
                    CloseReturn(
                        start=float(traj.times[ia]),
                        period=float(traj.times[ib] - traj.times[ia]),
                        word=SymbolWord(symbols[a:a + k]),
                        distance=dist,
                        start_index=ia,
                        stop_index=ib,
                    )
                )
                break
    return found


def template_permutation(word: SymbolWord | str) -> list[int]:
    """perm[p] = position reached by the orbit point at position p under the shift.

    Positions rank the cyclic rotations of the word lexicographically with
    L < R.  A proper power u^m is m parallel copies of the orbit of u: the
    shift stays inside each copy and equal rotations are ordered by copy.
    """
    sw = word if isinstance(word, SymbolWord) else SymbolWord(word)
    w = sw.word
    k = len(w)
    if k == 0:
        raise ParameterError("template braid needs a nonempty word")
    d = sw.period()
    order = sorted(range(k), key=lambda j: (w[j:] + w[:j], j // d))
    rank = [0] * k
    for pos, j in enumerate(order):
        rank[j] = pos
    perm = [0] * k
    for j in range(k):
        nxt = (j // d) * d + (j % d + 1) % d
        perm[rank[j]] = rank[nxt]
    return perm


def template_braid(word: SymbolWord | str) -> BraidWord:
    """Positive permutation braid carrying each template strand to its image under the shift."""
    sw = word if isinstance(word, SymbolWord) else SymbolWord(word)
    if not sw.word:
        raise ParameterError("template braid needs a nonempty word")
    if not sw.is_primitive():
        warnings.warn(
            f"{sw.word} is a proper power; the closure is a link", NonPrimitiveWordWarning, stacklevel=2
        )
    perm = template_permutation(sw)
    k = len(perm)
    pos = list(range(k))  # pos[p] = strand at position p
    letters = []
    # bubble sort by destination: the strand further left (smaller itinerary) passes over
    changed = True
    while changed:
        changed = False
        for p in range(1, k):
            if perm[pos[p - 1]] > perm[pos[p]]:
                pos[p - 1], pos[p] = pos[p], pos[p - 1]
                letters.append((p, 1))
                changed = True
    return BraidWord(k, tuple(letters))


@dataclass(frozen=True)
class LorenzInvariants:
    word: str
    components: int
    e: int
    n: int
    beta: int
    genus: int | None
    trip: int
    positive: bool
    alexander: dict | None


def lorenz_invariants(word: SymbolWord | str) -> LorenzInvariants:
    sw = word if isinstance(word, SymbolWord) else SymbolWord(word)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", NonPrimitiveWordWarning)
        b = template_braid(sw)
    inv = transverse_invariants(b)
    knot = closure_components(b) == 1
    genus = None
    alex = None
    if knot:
        twice = inv.e - inv.n + 1
        genus = twice // 2
        alex = alexander_from_braid(b).to_json()
    return LorenzInvariants(
        word=sw.word,
        components=inv.components,
        e=inv.e,
        n=inv.n,
        beta=inv.beta,
        genus=genus,
        trip=sw.syllables() // 2,
        positive=b.is_positive(),
        alexander=alex,
    )


def primitive_words(max_len: int) -> list[SymbolWord]:
    """All primitive cyclic words of length 1..max_len, one per rotation class."""
    seen = set()
    out = []
    for k in range(1, max_len + 1):
        for bits in range(2**k):
            w = "".join("R" if bits >> (k - 1 - j) & 1 else "L" for j in range(k))
            sw = SymbolWord(w)
            if sw.word not in seen and sw.is_primitive():
                seen.add(sw.word)
                out.append(sw)
    return out
