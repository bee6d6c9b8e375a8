"""Braid words, closed-braid invariants and the Burau route to the Alexander polynomial.

A letter is a pair ``(i, s)`` meaning sigma_i to the power ``s`` with
``1 <= i <= n - 1`` and ``s`` in {+1, -1}.  On the wire a word is
``{"n": n, "w": [...]}`` with sigma_i -> +i and its inverse -> -i.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator

import numpy as np

from .errors import DomainError, ParameterError
from .laurent import LaurentPolynomial, laurent_det

__all__ = [
    "BraidWord",
    "TransverseInvariants",
    "ReductionResult",
    "free_reduce",
    "closure_components",
    "closure_permutation",
    "transverse_invariants",
    "torus_braid",
    "destabilize",
    "relation_rewrites",
    "exchange_moves",
    "exchange_reduce",
    "burau_matrix",
    "alexander_from_braid",
    "transversality_margin",
]

Letter = tuple[int, int]


@dataclass(frozen=True)
class BraidWord:
    n: int
    letters: tuple[Letter, ...] = ()

    def __post_init__(self):
        if self.n < 1:
            raise ParameterError(f"strand count must be >= 1, got {self.n}")
        letters = tuple((int(i), int(s)) for i, s in self.letters)
        for i, s in letters:
            if not 1 <= i <= self.n - 1:
                raise ParameterError(f"generator index {i} out of range for {self.n} strands")
            if s not in (1, -1):
                raise ParameterError(f"letter sign must be +1 or -1, got {s}")
        object.__setattr__(self, "letters", letters)

    @classmethod
    def from_ints(cls, n: int, word: Iterable[int]) -> "BraidWord":
        letters = []
        for g in word:
            if g == 0:
                raise ParameterError("0 is not a braid generator")
            letters.append((abs(g), 1 if g > 0 else -1))
        return cls(n, tuple(letters))

    def to_ints(self) -> list[int]:
        return [i * s for i, s in self.letters]

    def to_json(self) -> dict:
        return {"n": self.n, "w": self.to_ints()}

    @classmethod
    def from_json(cls, data) -> "BraidWord":
        if isinstance(data, str):
            data = json.loads(data)
        return cls.from_ints(data["n"], data["w"])

    def __len__(self):
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        n = max(self.n, other.n)
        return BraidWord(n, self.letters + other.letters)

    def inverse(self) -> "BraidWord":
        return BraidWord(self.n, tuple((i, -s) for i, s in reversed(self.letters)))

    def mirror(self) -> "BraidWord":
        return BraidWord(self.n, tuple((i, -s) for i, s in self.letters))

    def rotate(self, k: int) -> "BraidWord":
        if not self.letters:
            return self
        k %= len(self.letters)
        return BraidWord(self.n, self.letters[k:] + self.letters[:k])

    def algebraic_length(self) -> int:
        return sum(s for _, s in self.letters)

    def is_positive(self) -> bool:
        return all(s > 0 for _, s in self.letters)

    def sort_key(self):
        return (len(self.letters), self.n, self.letters)

    def __str__(self):
        if not self.letters:
            return f"1 (B{self.n})"
        return " ".join(f"s{i}" if s > 0 else f"s{i}^-1" for i, s in self.letters) + f" (B{self.n})"


@dataclass(frozen=True)
class TransverseInvariants:
    e: int
    n: int
    beta: int
    w: int
    components: int


def free_reduce(b: BraidWord) -> BraidWord:
    """Cancel adjacent ``sigma_i sigma_i^-1`` pairs until none remain."""
    stack: list[Letter] = []
    for i, s in b.letters:
        if stack and stack[-1] == (i, -s):
            stack.pop()
        else:
            stack.append((i, s))
    return BraidWord(b.n, tuple(stack))


def closure_permutation(b: BraidWord) -> list[int]:
    """perm[k] is the bottom position (0-based) reached by the strand starting at k."""
    pos = list(range(b.n))  # pos[p] = strand currently at position p
    for i, _ in b.letters:
        pos[i - 1], pos[i] = pos[i], pos[i - 1]
    perm = [0] * b.n
    for p, strand in enumerate(pos):
        perm[strand] = p
    return perm


def closure_components(b: BraidWord) -> int:
    perm = closure_permutation(b)
    seen = [False] * b.n
    cycles = 0
    for start in range(b.n):
        if not seen[start]:
            cycles += 1
            k = start
            while not seen[k]:
                seen[k] = True
                k = perm[k]
    return cycles


def transverse_invariants(b: BraidWord) -> TransverseInvariants:
    # each letter of a closed-braid diagram is exactly one signed crossing, so w = e
    e = b.algebraic_length()
    return TransverseInvariants(e=e, n=b.n, beta=e - b.n, w=e, components=closure_components(b))


def torus_braid(p: int, q: int, e: int = 1) -> BraidWord:
    """The word (sigma_{p-1} ... sigma_1)^|q| with every sign equal to e * sign(q)."""
    if p < 1:
        raise ParameterError(f"torus braid needs p >= 1, got {p}")
    if e not in (1, -1):
        raise ParameterError("orientation e must be +1 or -1")
    sign = e * (1 if q >= 0 else -1)
    block = [(i, sign) for i in range(p - 1, 0, -1)]
    return BraidWord(p, tuple(block * abs(q)))


def destabilize(b: BraidWord, sign: int) -> BraidWord | None:
    """Remove a trivial loop on the last strand, if the word has one of the requested sign.

    Applicable when sigma_{n-1} occurs exactly once, with exponent ``sign``;
    after a cyclic rotation the word reads ``u sigma_{n-1}^sign`` and ``u``
    is returned on ``n - 1`` strands.
    """
    if sign not in (1, -1):
        raise ParameterError("destabilization sign must be +1 or -1")
    if b.n < 2:
        return None
    top = b.n - 1
    where = [k for k, (i, _) in enumerate(b.letters) if i == top]
    if len(where) != 1 or b.letters[where[0]][1] != sign:
        return None
    k = where[0]
    rest = b.letters[k + 1:] + b.letters[:k]
    return BraidWord(b.n - 1, rest)


def relation_rewrites(b: BraidWord) -> Iterator[BraidWord]:
    """Every word obtained from ``b`` by one application of a braid relation.

    Far commutation, the braid relation in either direction and its
    mixed-sign consequences ``s_a^e s_b^d s_a^-e = s_b^-e s_a^d s_b^e``
    for |a - b| = 1.
    """
    w = b.letters
    for k in range(len(w) - 1):
        (a, s), (c, t) = w[k], w[k + 1]
        if abs(a - c) >= 2:
            yield BraidWord(b.n, w[:k] + ((c, t), (a, s)) + w[k + 2:])
    for k in range(len(w) - 2):
        (a, s), (c, t), (a2, s2) = w[k], w[k + 1], w[k + 2]
        if a2 != a or abs(a - c) != 1:
            continue
        if s2 == s and t == s:
            new = ((c, s), (a, s), (c, s))
        elif s2 == -s:
            new = ((c, -s), (a, t), (c, s))
        else:
            continue
        yield BraidWord(b.n, w[:k] + new + w[k + 3:])


def exchange_moves(b: BraidWord) -> Iterator[BraidWord]:
    """Birman-Menasco exchange moves ``U s^e V s^-e -> U s^-e V s^e`` with s = sigma_{n-1}.

    U and V must avoid sigma_{n-1}; the word is read cyclically.
    """
    if b.n < 3:
        return
    top = b.n - 1
    where = [k for k, (i, _) in enumerate(b.letters) if i == top]
    if len(where) != 2:
        return
    k1, k2 = where
    (_, s1), (_, s2) = b.letters[k1], b.letters[k2]
    if s1 != -s2:
        return
    w = list(b.letters)
    w[k1] = (top, -s1)
    w[k2] = (top, -s2)
    yield BraidWord(b.n, tuple(w))


@dataclass
class ReductionResult:
    word: BraidWord
    moves: list[tuple[str, BraidWord]] = field(default_factory=list)
    exhausted: bool = False


def _neighbours(b: BraidWord):
    red = free_reduce(b)
    if red != b:
        yield "free-reduce", red
    for k in range(1, len(b)):
        yield "conjugate", b.rotate(k)
    for r in relation_rewrites(b):
        yield "braid-relation", r
    for r in exchange_moves(b):
        yield "exchange", r
    for sign, name in ((1, "destabilize+"), (-1, "destabilize-")):
        d = destabilize(b, sign)
        if d is not None:
            yield name, d


def exchange_reduce(b: BraidWord, budget: int = 2000) -> ReductionResult:
    """Bounded breadth-first search for a smallest equivalent closed braid.

    Moves: conjugation, free reduction, braid relations, exchange moves and
    +/- destabilization.  ``budget`` caps the number of expanded words; the
    result is the minimal word seen under (length, strands, letters) and the
    move sequence that produced it.  This certifies unlinks when the budget
    suffices, but a non-empty answer proves nothing.
    """
    if budget < 0:
        raise ParameterError("budget must be >= 0")
    start = free_reduce(b)
    parent: dict[BraidWord, tuple[BraidWord, str] | None] = {b: None}
    if start != b:
        parent[start] = (b, "free-reduce")
    best = min(b, start, key=BraidWord.sort_key)
    queue = deque([start])
    expanded = 0
    while queue and expanded < budget:
        cur = queue.popleft()
        expanded += 1
        for name, nxt in _neighbours(cur):
            if nxt in parent:
                continue
            parent[nxt] = (cur, name)
            if nxt.sort_key() < best.sort_key():
                best = nxt
            if not nxt.letters and closure_components(nxt) == nxt.n:
                queue.clear()
                break
            queue.append(nxt)
    moves: list[tuple[str, BraidWord]] = []
    node = best
    while parent[node] is not None:
        prev, name = parent[node]
        moves.append((name, node))
        node = prev
    moves.reverse()
    done_unlink = not best.letters
    return ReductionResult(best, moves, exhausted=bool(queue) and not done_unlink)


def _generator_matrix(n: int, i: int, s: int) -> list[list[LaurentPolynomial]]:
    """Reduced Burau image of sigma_i^s, an (n-1) x (n-1) matrix."""
    one = LaurentPolynomial.constant(1)
    zero = LaurentPolynomial()
    t = LaurentPolynomial.t()
    tinv = LaurentPolynomial.monomial(-1)
    m = [[one if r == c else zero for c in range(n - 1)] for r in range(n - 1)]
    r = i - 1
    if s > 0:
        m[r][r] = -t
        if r > 0:
            m[r][r - 1] = t
        if r < n - 2:
            m[r][r + 1] = one
    else:
        m[r][r] = -tinv
        if r > 0:
            m[r][r - 1] = one
        if r < n - 2:
            m[r][r + 1] = tinv
    return m


def _matmul(a, b):
    n = len(a)
    zero = LaurentPolynomial()
    out = []
    for r in range(n):
        row = []
        for c in range(n):
            acc = zero
            for k in range(n):
                if not a[r][k].is_zero() and not b[k][c].is_zero():
                    acc = acc + a[r][k] * b[k][c]
            row.append(acc)
        out.append(row)
    return out


def burau_matrix(b: BraidWord) -> list[list[LaurentPolynomial]]:
    """Product of the reduced Burau matrices of the letters, left to right."""
    if b.n < 2:
        raise DomainError("the reduced Burau representation needs n >= 2")
    one = LaurentPolynomial.constant(1)
    zero = LaurentPolynomial()
    acc = [[one if r == c else zero for c in range(b.n - 1)] for r in range(b.n - 1)]
    for i, s in b.letters:
        acc = _matmul(acc, _generator_matrix(b.n, i, s))
    return acc


def alexander_from_braid(b: BraidWord) -> LaurentPolynomial:
    """Alexander polynomial of a knot closure, normalized (symmetric, positive leading term)."""
    if closure_components(b) != 1:
        raise DomainError("closure is a link; only knot closures have a one-variable Alexander here")
    if b.n == 1:
        return LaurentPolynomial.constant(1)
    B = burau_matrix(b)
    one = LaurentPolynomial.constant(1)
    size = b.n - 1
    diff = [[(one if r == c else LaurentPolynomial()) - B[r][c] for c in range(size)] for r in range(size)]
    det = laurent_det(diff)
    # det(I - B) = Delta * (1 + t + ... + t^{n-1}) up to units
    cyclo = LaurentPolynomial(0, [1] * b.n)
    try:
        delta = det.divmod_exact(cyclo)
    except ArithmeticError as exc:  # pragma: no cover - would be a bug in the representation
        raise AssertionError(f"Burau determinant {det} not divisible by {cyclo}") from exc
    delta = delta.normalized()
    value = delta(1)
    assert abs(value) == 1, f"Alexander polynomial {delta} has Delta(1) = {value}"
    return delta


def transversality_margin(curve, tau=None, form: str = "cylindrical") -> float:
    """Minimum of the contact form on the tangent of a sampled closed curve.

    ``curve`` is an (N, 3) array of samples with the first equal to the last.
    For ``form="cylindrical"`` the columns are (r, phi, z) and the form is
    r^2 dphi + dz; for ``"cartesian"`` they are (x, y, z) and the form is
    dz - y dx.  ``tau`` defaults to N - 1 equal steps over [0, 2 pi].
    """
    pts = np.asarray(curve, dtype=float)
    if pts.ndim != 2 or pts.shape[1] != 3 or len(pts) < 3:
        raise DomainError("need at least 3 samples of a 3-curve")
    gap = pts[-1] - pts[0]
    if form == "cylindrical":
        gap[1] = np.mod(gap[1] + np.pi, 2 * np.pi) - np.pi
    if not np.allclose(gap, 0.0, atol=1e-9):
        raise DomainError("curve must be closed (first sample equal to the last)")
    m = len(pts) - 1
    if tau is None:
        tau = np.linspace(0.0, 2.0 * np.pi, m + 1)
    tau = np.asarray(tau, dtype=float)
    if tau.shape != (m + 1,):
        raise DomainError("tau must have one entry per sample")
    period = tau[-1] - tau[0]
    steps = np.diff(tau)
    if np.any(steps <= 0):
        raise DomainError("sample parameters must be strictly increasing")
    core = pts[:-1]
    fwd = np.roll(core, -1, axis=0)
    bwd = np.roll(core, 1, axis=0)
    t_core = tau[:-1]
    t_fwd = np.roll(t_core, -1)
    t_fwd[-1] += period
    t_bwd = np.roll(t_core, 1)
    t_bwd[0] -= period
    width = t_fwd - t_bwd
    delta = fwd - bwd
    if form == "cylindrical":
        delta[:, 1] = np.mod(delta[:, 1] + np.pi, 2 * np.pi) - np.pi
        deriv = delta / width[:, None]
        values = core[:, 0] ** 2 * deriv[:, 1] + deriv[:, 2]
    elif form == "cartesian":
        deriv = delta / width[:, None]
        values = deriv[:, 2] - core[:, 1] * deriv[:, 0]
    else:
        raise ParameterError(f"unknown form {form!r}")
    return float(values.min())

