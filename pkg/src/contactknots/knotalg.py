"""Exact 2x2 matrix algebra for knot groups, Markov triples and geodesic lengths.

Matrices hold entries from one of three exact rings: the integers ("Z"),
the rationals ("Q", as Fractions) or the Eisenstein integers ("Z[w]"),
where w^2 + w + 1 = 0 and each element is u + v w with integer u, v.
"""

from __future__ import annotations

import cmath
import math
import re
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import DomainError, ParameterError
from .laurent import LaurentPolynomial, laurent_det

__all__ = [
    "Eisenstein",
    "Matrix2",
    "MonodromyResult",
    "SeifertResult",
    "Presentation",
    "RelatorReport",
    "monodromy_alexander",
    "alexander_from_seifert",
    "is_markov",
    "markov_neighbors",
    "markov_tree",
    "markov_numbers",
    "trace_map",
    "markov_integral",
    "traces_to_matrices",
    "fricke_defects",
    "geodesic_length",
    "L_MAT",
    "R_MAT",
    "I_HAT",
    "parse_twist_word",
    "twist_word_eval",
    "projective_equal",
    "ghys_word_eval",
    "ghys_to_twist_word",
    "simplify_twist_word",
    "presentation_check",
    "check_preset",
    "figure8_assignment",
    "commutator",
    "PRESETS",
]


@dataclass(frozen=True)
class Eisenstein:
    """u + v*w with w a primitive cube root of unity."""

    u: int = 0
    v: int = 0

    def __post_init__(self):
        object.__setattr__(self, "u", int(self.u))
        object.__setattr__(self, "v", int(self.v))

    @classmethod
    def coerce(cls, x) -> "Eisenstein":
        if isinstance(x, Eisenstein):
            return x
        if isinstance(x, int):
            return cls(x, 0)
        if isinstance(x, Fraction) and x.denominator == 1:
            return cls(x.numerator, 0)
        return NotImplemented

    def __add__(self, other):
        o = Eisenstein.coerce(other)
        if o is NotImplemented:
            return o
        return Eisenstein(self.u + o.u, self.v + o.v)

    __radd__ = __add__

    def __neg__(self):
        return Eisenstein(-self.u, -self.v)

    def __sub__(self, other):
        o = Eisenstein.coerce(other)
        if o is NotImplemented:
            return o
        return Eisenstein(self.u - o.u, self.v - o.v)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = Eisenstein.coerce(other)
        if o is NotImplemented:
            return o
        a, b, c, d = self.u, self.v, o.u, o.v
        # w^2 = -1 - w
        return Eisenstein(a * c - b * d, a * d + b * c - b * d)

    __rmul__ = __mul__

    def __eq__(self, other):
        o = Eisenstein.coerce(other)
        if o is NotImplemented:
            return False
        return self.u == o.u and self.v == o.v

    def __hash__(self):
        return hash((self.u, self.v))

    def conjugate(self) -> "Eisenstein":
        return Eisenstein(self.u - self.v, -self.v)

    def norm(self) -> int:
        return self.u * self.u - self.u * self.v + self.v * self.v

    def is_unit(self) -> bool:
        return self.norm() == 1

    def inverse(self) -> "Eisenstein":
        if not self.is_unit():
            raise ArithmeticError(f"{self} is not a unit of Z[w]")
        return self.conjugate()

    def to_complex(self, root: int = 1) -> complex:
        """Numeric value, with w = (-1 + i sqrt 3)/2 (root=1) or its conjugate (root=-1)."""
        w = complex(-0.5, root * math.sqrt(3) / 2)
        return self.u + self.v * w

    def to_json(self):
        return [self.u, self.v]

    def __str__(self):
        if self.v == 0:
            return str(self.u)
        mag = "" if abs(self.v) == 1 else str(abs(self.v))
        if self.u == 0:
            return f"{'-' if self.v < 0 else ''}{mag}w"
        return f"{self.u}{'+' if self.v > 0 else '-'}{mag}w"


W = Eisenstein(0, 1)

_RINGS = ("Z", "Q", "Z[w]")


def _entry(x, ring: str):
    if ring == "Z[w]":
        if isinstance(x, (list, tuple)):
            return Eisenstein(*x)
        e = Eisenstein.coerce(x)
        if e is NotImplemented:
            raise ParameterError(f"{x!r} is not an Eisenstein integer")
        return e
    if isinstance(x, Eisenstein):
        if x.v:
            raise ParameterError(f"{x} is not in ring {ring}")
        x = x.u
    if ring == "Z":
        if isinstance(x, Fraction) and x.denominator == 1:
            return int(x)
        if not isinstance(x, int):
            raise ParameterError(f"{x!r} is not an integer")
        return int(x)
    return Fraction(x)


@dataclass(frozen=True)
class Matrix2:
    """Exact 2x2 matrix ((a, b), (c, d))."""

    a: object
    b: object
    c: object
    d: object
    ring: str = "Z"

    def __post_init__(self):
        if self.ring not in _RINGS:
            raise ParameterError(f"unknown ring {self.ring!r}")
        for name in "abcd":
            object.__setattr__(self, name, _entry(getattr(self, name), self.ring))

    @classmethod
    def of(cls, rows, ring: str = "Z") -> "Matrix2":
        (a, b), (c, d) = rows
        return cls(a, b, c, d, ring)

    @classmethod
    def identity(cls, ring: str = "Z") -> "Matrix2":
        return cls(1, 0, 0, 1, ring)

    def rows(self):
        return ((self.a, self.b), (self.c, self.d))

    def _common(self, other: "Matrix2") -> str:
        order = {"Z": 0, "Q": 1, "Z[w]": 1}
        if {self.ring, other.ring} == {"Q", "Z[w]"}:
            raise ParameterError("cannot mix rational and Eisenstein matrices")
        return self.ring if order[self.ring] >= order[other.ring] else other.ring

    def __matmul__(self, o: "Matrix2") -> "Matrix2":
        ring = self._common(o)
        return Matrix2(
            self.a * o.a + self.b * o.c,
            self.a * o.b + self.b * o.d,
            self.c * o.a + self.d * o.c,
            self.c * o.b + self.d * o.d,
            ring,
        )

    def __neg__(self):
        return Matrix2(-self.a, -self.b, -self.c, -self.d, self.ring)

    def __eq__(self, other):
        if not isinstance(other, Matrix2):
            return NotImplemented
        return self.rows() == other.rows()

    def __hash__(self):
        return hash(self.rows())

    def det(self):
        return self.a * self.d - self.b * self.c

    def trace(self):
        return self.a + self.d

    def is_sl(self) -> bool:
        return self.det() == 1

    def inverse(self) -> "Matrix2":
        det = self.det()
        if self.ring == "Q":
            if det == 0:
                raise DomainError("singular matrix")
            return Matrix2(self.d / det, -self.b / det, -self.c / det, self.a / det, "Q")
        if self.ring == "Z":
            if det not in (1, -1):
                raise DomainError(f"matrix with det {det} is not invertible over Z")
            return Matrix2(self.d * det, -self.b * det, -self.c * det, self.a * det, "Z")
        if det == 0:
            raise DomainError("singular matrix")
        inv = det.inverse() if det.is_unit() else None
        if inv is None:
            raise DomainError(f"matrix with det {det} is not invertible over Z[w]")
        return Matrix2(self.d * inv, -self.b * inv, -self.c * inv, self.a * inv, "Z[w]")

    def __pow__(self, k: int) -> "Matrix2":
        base = self if k >= 0 else self.inverse()
        out = Matrix2.identity(self.ring)
        for _ in range(abs(k)):
            out = out @ base
        return out

    def is_identity(self, projective: bool = False) -> bool:
        one = Matrix2.identity(self.ring)
        return self == one or (projective and self == -one)

    def to_json(self) -> dict:
        def enc(x):
            if isinstance(x, Eisenstein):
                return x.to_json()
            if isinstance(x, Fraction):
                return int(x) if x.denominator == 1 else str(x)
            return x

        return {"ring": self.ring, "entries": [enc(x) for x in (self.a, self.b, self.c, self.d)]}

    @classmethod
    def from_json(cls, data) -> "Matrix2":
        ring = data.get("ring", "Z")
        entries = data["entries"]
        if ring == "Q":
            entries = [Fraction(x) for x in entries]
        return cls(*entries, ring=ring)

    def __str__(self):
        return f"[[{self.a}, {self.b}], [{self.c}, {self.d}]]"


# -- Alexander polynomials from monodromy and Seifert matrices ----------------


@dataclass(frozen=True)
class MonodromyResult:
    alexander: LaurentPolynomial
    fibered: bool  # monic with constant term +-1
    knot_like: bool  # Delta(1) = +-1


def monodromy_alexander(M: Matrix2) -> MonodromyResult:
    """t^2 - tr(M) t + det(M), the characteristic polynomial of the monodromy."""
    if M.ring != "Z":
        raise ParameterError("monodromy matrices are integral")
    det = M.det()
    if abs(det) != 1:
        raise DomainError(f"monodromy must be unimodular, got det {det}")
    poly = LaurentPolynomial(0, [det, -M.trace(), 1])
    return MonodromyResult(poly, fibered=abs(poly.trailing()) == 1 and poly.leading() == 1, knot_like=abs(poly(1)) == 1)


@dataclass(frozen=True)
class SeifertResult:
    alexander: LaurentPolynomial
    fibered: bool


def alexander_from_seifert(V: Sequence[Sequence[int]]) -> SeifertResult:
    """det(V^T - t V), normalized to a symmetric representative with positive leading term."""
    n = len(V)
    if any(len(row) != n for row in V):
        raise ParameterError("Seifert matrix must be square")
    t = LaurentPolynomial.t()
    rows = [[LaurentPolynomial.constant(int(V[j][i])) - t * int(V[i][j]) for j in range(n)] for i in range(n)]
    delta = laurent_det(rows).normalized()
    fibered = not delta.is_zero() and abs(delta.leading()) == 1 and abs(delta.trailing()) == 1
    return SeifertResult(delta, fibered)


# -- Markov triples ------------------------------------------------------------


def is_markov(m: Sequence[int]) -> bool:
    a, b, c = m
    return min(a, b, c) > 0 and a * a + b * b + c * c == 3 * a * b * c


def markov_neighbors(m: Sequence[int]) -> list[tuple[int, int, int]]:
    """The three Vieta flips of a Markov triple, each sorted ascending."""
    m = tuple(int(x) for x in m)
    if len(m) != 3 or not is_markov(m):
        raise DomainError(f"{m} is not a Markov triple")
    a, b, c = m
    flips = [(3 * b * c - a, b, c), (a, 3 * a * c - b, c), (a, b, 3 * a * b - c)]
    return [tuple(sorted(f)) for f in flips]


def markov_tree(depth: int) -> set[tuple[int, int, int]]:
    if depth < 0:
        raise ParameterError("depth must be >= 0")
    root = (1, 1, 1)
    seen = {root}
    frontier = deque([(root, 0)])
    while frontier:
        m, d = frontier.popleft()
        if d == depth:
            continue
        for nb in markov_neighbors(m):
            if nb not in seen:
                seen.add(nb)
                frontier.append((nb, d + 1))
    return seen


def markov_numbers(triples: Iterable[Sequence[int]]) -> set[int]:
    return {x for t in triples for x in t}


def trace_map(x: int, y: int, z: int) -> tuple[int, int, int]:
    """(x, y, z) -> (3yz - x, y, z), the first Vieta flip on rescaled traces."""
    return (3 * y * z - x, y, z)


def markov_integral(x: int, y: int, z: int) -> int:
    return x * x + y * y + z * z - 3 * x * y * z


def traces_to_matrices(x: int, y: int, z: int) -> tuple[Matrix2, Matrix2]:
    """Matrices a, b in SL(2, Q) with tr a = x, tr b = y, tr ab = z and tr[a, b] = -2."""
    if z == 0:
        raise DomainError("z must be nonzero")
    if x * x + y * y + z * z != x * y * z:
        raise DomainError(f"({x}, {y}, {z}) violates x^2 + y^2 + z^2 = xyz")
    f = Fraction(1, z)
    a = Matrix2(f * (x * z - y), f * x, f * x, f * y, "Q")
    b = Matrix2(f * (y * z - x), -f * y, -f * y, f * x, "Q")
    return a, b


def commutator(a: Matrix2, b: Matrix2) -> Matrix2:
    return a @ b @ a.inverse() @ b.inverse()


def fricke_defects(a: Matrix2, b: Matrix2) -> tuple:
    """Residuals of 2 + tr[a,b] = x^2+y^2+z^2-xyz and xy = tr(ab) + tr(ab^-1); both 0 in SL(2)."""
    x, y, z = a.trace(), b.trace(), (a @ b).trace()
    first = 2 + commutator(a, b).trace() - (x * x + y * y + z * z - x * y * z)
    second = x * y - z - (a @ b.inverse()).trace()
    return first, second


def geodesic_length(x) -> float | complex:
    """Length l with tr = 2 cosh(l/2); complex traces give a complex length with Re l > 0."""
    if isinstance(x, Eisenstein):
        x = x.to_complex()
    if isinstance(x, complex):
        if abs(abs(x) - 2) == 0 and abs(x.imag) == 0:
            raise DomainError("parabolic trace")
        ell = 2 * cmath.acosh(x / 2)
        if ell.real < 0:
            ell = -ell
        if ell.real == 0:
            raise DomainError(f"trace {x} is elliptic or parabolic")
        return ell
    x = float(x)
    if abs(x) <= 2:
        raise DomainError(f"|trace| = {abs(x)} <= 2 is not hyperbolic")
    return 2 * math.acosh(abs(x) / 2)


# -- Dehn-twist words ------------------------------------------------------------

L_MAT = Matrix2(1, 0, 1, 1)
R_MAT = Matrix2(1, 1, 0, 1)
I_HAT = Matrix2(0, -1, 1, 0)
_TWIST = {"L": L_MAT, "R": R_MAT, "I": I_HAT}

_TOKEN = re.compile(r"\s*([LRI])(?:\^?\(?(-?\d+)\)?)?\s*")


def parse_twist_word(text: str) -> list[tuple[str, int]]:
    """Parse words like ``"R L"``, ``"L^-1 I R^2"`` or ``"LIL"``; ``I`` stands for I-hat."""
    text = text.replace("Î", "I")
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            if text[pos:].strip() == "":
                break
            raise ParameterError(f"cannot parse twist word at {text[pos:]!r}")
        out.append((m.group(1), int(m.group(2)) if m.group(2) else 1))
        pos = m.end()
    return out


def twist_word_eval(word: str | Sequence[tuple[str, int]]) -> Matrix2:
    letters = parse_twist_word(word) if isinstance(word, str) else word
    out = Matrix2.identity()
    for sym, k in letters:
        if sym not in _TWIST:
            raise ParameterError(f"unknown twist letter {sym!r}")
        out = out @ (_TWIST[sym] ** k)
    return out


def projective_equal(m1: Matrix2, m2: Matrix2) -> bool:
    return m1 == m2 or m1 == -m2


U_MAT = -I_HAT
V_MAT = R_MAT.inverse()


def ghys_word_eval(eps: Sequence[int]) -> Matrix2:
    """U V^e1 U V^e2 ... U V^en with U = -I-hat and V = R^-1."""
    if not eps:
        raise ParameterError("need a nonempty sign sequence")
    out = Matrix2.identity()
    for e in eps:
        if e not in (1, -1):
            raise ParameterError("signs must be +1 or -1")
        out = out @ U_MAT @ (V_MAT ** e)
    return out


def ghys_to_twist_word(eps: Sequence[int]) -> list[tuple[str, int]]:
    """The same element as a word in L, R, I-hat, equal up to sign.

    U = I-hat up to sign, V = R^-1 and V^-1 = R; each resulting I R^-1 block
    is replaced using R^-1 = I-hat L I-hat, so I R^-1 = I^2 L I = L I up to
    sign, before the letters are simplified.
    """
    word: list[tuple[str, int]] = []
    for e in eps:
        if e not in (1, -1):
            raise ParameterError("signs must be +1 or -1")
        if e == 1:
            word += [("L", 1), ("I", 1)]
        else:
            word += [("I", 1), ("R", 1)]
    return simplify_twist_word(word)


_PROJECTIVE_RULES = [
    ((("L", 1), ("I", 1), ("L", 1)), (("R", 1),)),
    ((("R", 1), ("I", 1), ("R", 1)), (("L", 1),)),
    ((("R", 1), ("I", 1), ("L", 1)), (("I", 1),)),
    ((("L", 1), ("I", 1), ("R", 1)), (("I", 1),)),
    ((("I", 1), ("I", 1)), ()),
]


def _expand(word):
    out = []
    for sym, k in word:
        if sym == "I":
            k %= 2  # I-hat^2 = -1, trivial up to sign
            out += [("I", 1)] * k
        else:
            out += [(sym, 1 if k > 0 else -1)] * abs(k)
    return out


def simplify_twist_word(word: Sequence[tuple[str, int]]) -> list[tuple[str, int]]:
    """Shorten a word with relations that hold up to sign: LIL = R, RIR = L, RIL = LIR = I, I^2 = 1.

    Adjacent inverse letters cancel; the result is projectively equal to the input.
    """
    w = _expand(word)
    changed = True
    while changed:
        changed = False
        for k in range(len(w) - 1):
            (s1, e1), (s2, e2) = w[k], w[k + 1]
            if s1 == s2 and s1 != "I" and e1 == -e2:
                w = w[:k] + w[k + 2:]
                changed = True
                break
        if changed:
            continue
        for lhs, rhs in _PROJECTIVE_RULES:
            n = len(lhs)
            for k in range(len(w) - n + 1):
                if tuple(w[k:k + n]) == lhs:
                    w = w[:k] + list(rhs) + w[k + n:]
                    changed = True
                    break
            if changed:
                break
    merged: list[tuple[str, int]] = []
    for sym, k in w:
        if merged and merged[-1][0] == sym and sym != "I":
            merged[-1] = (sym, merged[-1][1] + k)
        else:
            merged.append((sym, k))
    return [(s, k) for s, k in merged if k]


# -- group presentations -------------------------------------------------------


@dataclass(frozen=True)
class Presentation:
    """Generators and relators; each relator is a word of (generator, exponent) pairs equal to 1."""

    generators: tuple[str, ...]
    relators: tuple[tuple[tuple[str, int], ...], ...]
    names: tuple[str, ...] = ()

    def __post_init__(self):
        gens = set(self.generators)
        for rel in self.relators:
            for g, _ in rel:
                if g not in gens:
                    raise ParameterError(f"relator uses undeclared generator {g!r}")
        if not self.names:
            object.__setattr__(self, "names", tuple(f"r{k + 1}" for k in range(len(self.relators))))

    @classmethod
    def parse(cls, generators: Sequence[str], relations: Sequence[str]) -> "Presentation":
        """Relations are strings like ``"a^3"``, ``"w a = b w"`` or ``"x y^-1 z^-1 y"``.

        Letters may be space separated; single-letter generators may also be
        run together (``"bcb^-1a^-1"``).  ``lhs = rhs`` becomes lhs rhs^-1.
        """
        gens = tuple(generators)
        rels = []
        for text in relations:
            if "=" in text:
                lhs, rhs = text.split("=")
                word = _parse_group_word(lhs, gens) + _invert(_parse_group_word(rhs, gens))
            else:
                word = _parse_group_word(text, gens)
            rels.append(tuple(word))
        return cls(gens, tuple(rels), tuple(relations))

    def to_json(self) -> dict:
        return {
            "generators": list(self.generators),
            "relators": [[[g, k] for g, k in rel] for rel in self.relators],
            "names": list(self.names),
        }

    @classmethod
    def from_json(cls, data) -> "Presentation":
        return cls(
            tuple(data["generators"]),
            tuple(tuple((g, int(k)) for g, k in rel) for rel in data["relators"]),
            tuple(data.get("names", ())),
        )


def _invert(word):
    return [(g, -k) for g, k in reversed(word)]


def _parse_group_word(text: str, gens: Sequence[str]) -> list[tuple[str, int]]:
    names = sorted(gens, key=len, reverse=True)
    pattern = re.compile(r"\s*(" + "|".join(re.escape(g) for g in names) + r")(?:\^\(?(-?\d+)\)?)?\s*")
    out = []
    pos = 0
    text = text.strip()
    if text == "1":
        return out
    while pos < len(text):
        m = pattern.match(text, pos)
        if not m:
            raise ParameterError(f"cannot parse group word at {text[pos:]!r}")
        out.append((m.group(1), int(m.group(2)) if m.group(2) else 1))
        pos = m.end()
    return out


@dataclass(frozen=True)
class RelatorReport:
    name: str
    value: Matrix2
    passed: bool


def presentation_check(
    pres: Presentation, assignment: Mapping[str, Matrix2], projective: bool = False
) -> list[RelatorReport]:
    """Evaluate each relator under the assignment; a relator passes when it is I (or -I if projective)."""
    inverses = {}
    for g in pres.generators:
        if g not in assignment:
            raise ParameterError(f"generator {g!r} has no matrix")
        m = assignment[g]
        if m.det() == 0:
            raise DomainError(f"generator {g!r} is assigned a singular matrix")
        inverses[g] = m.inverse()
    ring = next(iter(assignment.values())).ring if assignment else "Z"
    reports = []
    for name, rel in zip(pres.names, pres.relators):
        value = Matrix2.identity(ring)
        for g, k in rel:
            step = assignment[g] if k > 0 else inverses[g]
            for _ in range(abs(k)):
                value = value @ step
        reports.append(RelatorReport(name, value, value.is_identity(projective)))
    return reports


def _figure8_generators(root: int = 1) -> dict[str, Matrix2]:
    """a = [[1, 1], [0, 1]], b = [[1, 0], [-w, 1]] with w or its conjugate -1 - w."""
    w = W if root == 1 else Eisenstein(-1, -1)
    a = Matrix2(1, 1, 0, 1, "Z[w]")
    b = Matrix2(1, 0, -w, 1, "Z[w]")
    return {"a": a, "b": b}


def figure8_assignment(kind: str, root: int = 1) -> dict[str, Matrix2]:
    g = _figure8_generators(root)
    a, b = g["a"], g["b"]
    c = b.inverse() @ a @ b
    d = a.inverse() @ b @ a
    if kind == "wirtinger":
        return {"a": a, "b": b, "c": c, "d": d}
    if kind == "w-printed":
        return {"a": a, "b": b, "w": b.inverse() @ a @ b @ a.inverse()}
    if kind == "w-corrected":
        return {"a": a, "b": b, "w": a.inverse() @ b @ a @ b.inverse()}
    if kind == "xyz":
        return {"x": c.inverse(), "y": d, "z": b.inverse()}
    if kind == "xyza":
        return {"x": c.inverse(), "y": d, "z": b.inverse(), "a": a}
    raise ParameterError(f"unknown figure-eight assignment {kind!r}")


def _trefoil_assignment() -> dict[str, Matrix2]:
    return {"a": I_HAT @ R_MAT, "b": I_HAT}


def _d2_assignment() -> dict[str, Matrix2]:
    return {"t": Matrix2(-1, 0, 0, 1), "s": Matrix2(1, 0, 0, -1)}


# name -> (presentation, assignment factory, projective)
PRESETS: dict[str, tuple[Presentation, object, bool]] = {
    "trefoil-quotient": (Presentation.parse("ab", ["a^3", "b^2"]), _trefoil_assignment, True),
    "figure8-wirtinger": (
        Presentation.parse("abcd", ["b c b^-1 = a", "a d a^-1 = b", "d^-1 b d = c", "c^-1 a c = d"]),
        lambda root=1: figure8_assignment("wirtinger", root),
        False,
    ),
    "figure8-w-printed": (
        Presentation.parse("abw", ["w a = b w", "w = b^-1 a b a^-1"]),
        lambda root=1: figure8_assignment("w-printed", root),
        False,
    ),
    "figure8-w-corrected": (
        Presentation.parse("abw", ["w a = b w", "w = a^-1 b a b^-1"]),
        lambda root=1: figure8_assignment("w-corrected", root),
        False,
    ),
    "figure8-xyz-uncorrected": (
        Presentation.parse("xyz", ["z x^-1 y z^-1 x", "x y^-1 z^-1 y"]),
        lambda root=1: figure8_assignment("xyz", root),
        False,
    ),
    "figure8-xyz-corrected": (
        Presentation.parse("xyz", ["z x^-1 y x z^-1 x", "x y^-1 z^-1 y"]),
        lambda root=1: figure8_assignment("xyz", root),
        False,
    ),
    "figure8-xyz-consequences": (
        Presentation.parse("xyz", ["x^-1 y x z^-1 x = z^-1", "y^-1 z^-1 y = x^-1"]),
        lambda root=1: figure8_assignment("xyz", root),
        False,
    ),
    "figure8-xyz-relators": (
        Presentation.parse(
            "xyza", ["z^-1 x^-1 z = a", "a y a^-1 = z^-1", "y^-1 z^-1 y = x^-1", "x a x^-1 = y"]
        ),
        lambda root=1: figure8_assignment("xyza", root),
        False,
    ),
    "dihedral-d2": (Presentation.parse("ts", ["t^2", "s^2", "t s = s t"]), _d2_assignment, False),
    "dihedral-d2-conjugation": (Presentation.parse("ts", ["t^2", "s^2", "t s t = s^-1"]), _d2_assignment, False),
}


def check_preset(name: str, root: int = 1) -> list[RelatorReport]:
    if name not in PRESETS:
        raise ParameterError(f"unknown presentation {name!r}; choose from {sorted(PRESETS)}")
    pres, factory, projective = PRESETS[name]
    assignment = factory(root) if name.startswith("figure8") else factory()
    return presentation_check(pres, assignment, projective)
