"""Cables and iterated torus knots as explicit braid words.

The (p, q) cable of a closed braid on m strands is built on m*p strands:
every crossing of the base becomes a p x p grid of crossings between two
bundles of parallel strands, and the first bundle receives the torus
pattern (sigma_1 ... sigma_{p-1})^(q - p*w).  Subtracting p*w turns the
blackboard framing of the parallel copies into the Seifert framing, so q is
measured against the longitude that bounds in the knot complement.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from math import gcd
from typing import Sequence

from .braid import BraidWord, closure_components
from .errors import DomainError, ParameterError

__all__ = [
    "CableDescriptor",
    "TorusCurveClass",
    "validate_descriptor",
    "cable_braid",
    "iterated_cable",
    "normalize_curve_class",
]


@dataclass(frozen=True)
class CableDescriptor:
    stages: tuple[tuple[int, int], ...] = ()
    orientation: int = 1

    def __post_init__(self):
        object.__setattr__(self, "stages", tuple((int(p), int(q)) for p, q in self.stages))
        if self.orientation not in (1, -1):
            raise ParameterError("orientation must be +1 or -1")

    def to_json(self) -> dict:
        return {"stages": [list(s) for s in self.stages], "orientation": self.orientation}

    @classmethod
    def from_json(cls, data) -> "CableDescriptor":
        if isinstance(data, str):
            data = json.loads(data)
        if isinstance(data, list):
            return cls(tuple(tuple(s) for s in data))
        return cls(tuple(tuple(s) for s in data["stages"]), data.get("orientation", 1))


@dataclass(frozen=True)
class TorusCurveClass:
    """A curve nu*meridian + mu*longitude on a boundary torus."""

    nu: int
    mu: int


def validate_descriptor(d: CableDescriptor) -> list[str]:
    """List every rule a descriptor breaks; an empty list means it is valid."""
    problems = []
    for k, (p, q) in enumerate(d.stages, start=1):
        if p < 2:
            problems.append(f"stage {k}: p = {p} must be at least 2")
        if gcd(p, q) != 1:
            problems.append(f"stage {k}: gcd({p}, {q}) = {gcd(p, q)} is not 1")
    if d.stages:
        p1, q1 = d.stages[0]
        if not p1 < q1:
            problems.append(f"stage 1: need p1 < q1, got ({p1}, {q1})")
    return problems


def _bundle_crossing(i: int, p: int, sign: int) -> list[tuple[int, int]]:
    # strands of bundle i cross bundle i+1 one at a time, last strand first
    base = (i - 1) * p
    block = []
    for r in range(p, 0, -1):
        start = base + r
        block.extend((k, 1) for k in range(start, start + p))
    if sign > 0:
        return block
    return [(k, -1) for k, _ in reversed(block)]


def cable_braid(base: BraidWord, p: int, q: int) -> BraidWord:
    if p < 2:
        raise ParameterError(f"cable needs p >= 2, got {p}")
    if gcd(p, q) != 1:
        raise ParameterError(f"(p, q) = ({p}, {q}) is not coprime")
    if closure_components(base) != 1:
        raise DomainError("cable base must close to a knot")
    letters: list[tuple[int, int]] = []
    for i, s in base.letters:
        letters.extend(_bundle_crossing(i, p, s))
    twist = q - p * base.algebraic_length()
    sign = 1 if twist >= 0 else -1
    unit = [(k, sign) for k in range(1, p)]
    if sign < 0:
        unit = unit[::-1]
    letters.extend(unit * abs(twist))
    return BraidWord(base.n * p, tuple(letters))


def iterated_cable(d: CableDescriptor | Sequence[Sequence[int]]) -> BraidWord:
    if not isinstance(d, CableDescriptor):
        d = CableDescriptor(tuple(tuple(s) for s in d))
    problems = validate_descriptor(d)
    if problems:
        raise ParameterError("; ".join(problems))
    word = BraidWord(1)
    for p, q in d.stages:
        word = cable_braid(word, p, q)
    if d.orientation < 0:
        word = word.inverse().mirror()
    return word


def normalize_curve_class(c: TorusCurveClass) -> TorusCurveClass:
    nu, mu = c.nu, c.mu
    if nu == 0 and mu == 0:
        return c
    if mu < 0 or (mu == 0 and nu < 0):
        nu, mu = -nu, -mu
    g = gcd(nu, mu)
    nu, mu = nu // g, mu // g
    if mu > 0:
        nu %= mu
    return TorusCurveClass(nu, mu)
