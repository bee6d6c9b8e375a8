"""Surgery calculus on linking matrices of framed links.

A framed link is recorded by its symmetric linking matrix: framings on the
diagonal, pairwise linking numbers off it.  Blow-ups, blow-downs and handle
slides act on that matrix exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import DomainError, ParameterError
from .laurent import bareiss_det

__all__ = [
    "FramedLink",
    "linking_number",
    "diagram_linking_number",
    "blow_up",
    "blow_down",
    "handle_slide",
    "determinant",
    "signature",
    "random_symmetric",
]


@dataclass(frozen=True)
class FramedLink:
    labels: tuple[str, ...]
    matrix: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        labels = tuple(str(s) for s in self.labels)
        rows = tuple(tuple(int(x) for x in row) for row in self.matrix)
        n = len(labels)
        if len(rows) != n or any(len(r) != n for r in rows):
            raise ParameterError(f"linking matrix must be {n} x {n}")
        for i in range(n):
            for j in range(i):
                if rows[i][j] != rows[j][i]:
                    raise ParameterError(f"linking matrix not symmetric at ({i}, {j})")
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "matrix", rows)

    @classmethod
    def from_matrix(cls, matrix: Sequence[Sequence[int]], labels: Sequence[str] | None = None) -> "FramedLink":
        if labels is None:
            labels = [f"K{k + 1}" for k in range(len(matrix))]
        return cls(tuple(labels), tuple(tuple(r) for r in matrix))

    def __len__(self):
        return len(self.labels)

    def framing(self, i: int) -> int:
        return self.matrix[i][i]

    def to_json(self) -> dict:
        return {"labels": list(self.labels), "matrix": [list(r) for r in self.matrix]}

    @classmethod
    def from_json(cls, data) -> "FramedLink":
        return cls.from_matrix(data["matrix"], data.get("labels"))

    def _index(self, i: int | str) -> int:
        if isinstance(i, str):
            try:
                return self.labels.index(i)
            except ValueError:
                raise ParameterError(f"no component labelled {i!r}") from None
        if not 0 <= i < len(self):
            raise ParameterError(f"component index {i} out of range")
        return i


def linking_number(signs: Sequence[int]) -> int:
    """Raw sum of crossing signs between two components."""
    total = 0
    for s in signs:
        if s not in (1, -1):
            raise ParameterError("crossing signs must be +1 or -1")
        total += s
    return total


def diagram_linking_number(signs: Sequence[int]) -> int:
    """Linking number from all crossings between two components: half the signed count."""
    total = linking_number(signs)
    if total % 2:
        raise DomainError("crossings between two closed components have an even signed count")
    return total // 2


def _fresh_label(link: FramedLink, stem: str) -> str:
    k = 1
    while f"{stem}{k}" in link.labels:
        k += 1
    return f"{stem}{k}"


def blow_up(link: FramedLink, sign: int, label: str | None = None) -> FramedLink:
    """Add a split unknot with framing ``sign``."""
    if sign not in (1, -1):
        raise ParameterError("blow-up sign must be +1 or -1")
    n = len(link)
    rows = [list(r) + [0] for r in link.matrix]
    rows.append([0] * n + [sign])
    return FramedLink(link.labels + (label or _fresh_label(link, "U"),), tuple(tuple(r) for r in rows))


def blow_down(link: FramedLink, i: int | str) -> FramedLink:
    """Remove a +-1 framed unknot, twisting everything that passes through it."""
    i = link._index(i)
    eps = link.matrix[i][i]
    if eps not in (1, -1):
        raise DomainError(f"component {link.labels[i]} has framing {eps}; only +-1 can be blown down")
    A = link.matrix
    keep = [k for k in range(len(link)) if k != i]
    rows = tuple(tuple(A[j][k] - eps * A[j][i] * A[i][k] for k in keep) for j in keep)
    return FramedLink(tuple(link.labels[k] for k in keep), rows)


def handle_slide(link: FramedLink, i: int | str, j: int | str, subtract: bool = False) -> FramedLink:
    """Slide component i over component j.

    The new framing of i is n_i + n_j + 2 lk(i, j) and lk(i, k) gains lk(j, k);
    as a matrix this is the congruence P A P^T with P = I + E_ij.  With
    ``subtract`` the slide uses the reversed copy of j (P = I - E_ij), which
    undoes an ordinary slide.
    """
    i, j = link._index(i), link._index(j)
    if i == j:
        raise ParameterError("cannot slide a component over itself")
    s = -1 if subtract else 1
    A = [list(r) for r in link.matrix]
    n = len(A)
    for k in range(n):
        A[i][k] += s * A[j][k]
    for k in range(n):
        A[k][i] += s * A[k][j]
    return FramedLink(link.labels, tuple(tuple(r) for r in A))


def determinant(link: FramedLink) -> int:
    if len(link) == 0:
        return 1
    return int(bareiss_det(link.matrix, 1, lambda a, b: a // b))


def signature(link: FramedLink) -> int:
    """Number of positive minus number of negative eigenvalues, by exact symmetric elimination."""
    A = [[Fraction(x) for x in r] for r in link.matrix]
    n = len(A)
    sig = 0
    active = list(range(n))
    while active:
        pivot = next((k for k in active if A[k][k] != 0), None)
        if pivot is None:
            pair = next(((p, q) for p in active for q in active if p < q and A[p][q] != 0), None)
            if pair is None:
                break  # the rest is the zero form
            p, q = pair
            # replace e_p by e_p + e_q; the new diagonal entry 2 A[p][q] is nonzero
            for k in range(n):
                A[p][k] += A[q][k]
            for k in range(n):
                A[k][p] += A[k][q]
            pivot = p
        d = A[pivot][pivot]
        sig += 1 if d > 0 else -1
        active.remove(pivot)
        for r in active:
            f = A[r][pivot] / d
            if f:
                for c in active:
                    A[r][c] -= f * A[pivot][c]
        for r in active:
            A[r][pivot] = A[pivot][r] = Fraction(0)
    return sig


def random_symmetric(n: int, rng, low: int = -3, high: int = 3) -> FramedLink:
    """A random integer symmetric matrix with entries in [low, high], as a framed link."""
    M = rng.integers(low, high + 1, size=(n, n))
    M = [[int(M[min(r, c)][max(r, c)]) for c in range(n)] for r in range(n)]
    return FramedLink.from_matrix(M)
