"""Integer Laurent polynomials in one variable ``t`` and exact determinants.

A polynomial is stored as ``lowest`` (the exponent of the first coefficient)
plus a tuple of integer coefficients with nonzero ends.  The zero polynomial
has ``lowest == 0`` and no coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

__all__ = ["LaurentPolynomial", "bareiss_det", "laurent_det"]


@dataclass(frozen=True)
class LaurentPolynomial:
    lowest: int
    coeffs: tuple[int, ...]

    def __init__(self, lowest: int = 0, coeffs: Iterable[int] = ()):
        cs = [int(c) for c in coeffs]
        lo = int(lowest)
        while cs and cs[-1] == 0:
            cs.pop()
        start = 0
        while start < len(cs) and cs[start] == 0:
            start += 1
        cs = cs[start:]
        lo = lo + start if cs else 0
        object.__setattr__(self, "lowest", lo)
        object.__setattr__(self, "coeffs", tuple(cs))

    # construction -------------------------------------------------------

    @classmethod
    def constant(cls, c: int) -> "LaurentPolynomial":
        return cls(0, (c,))

    @classmethod
    def monomial(cls, exponent: int, c: int = 1) -> "LaurentPolynomial":
        return cls(exponent, (c,))

    @classmethod
    def t(cls) -> "LaurentPolynomial":
        return cls(1, (1,))

    @classmethod
    def from_dict(cls, terms: dict[int, int]) -> "LaurentPolynomial":
        terms = {k: v for k, v in terms.items() if v}
        if not terms:
            return cls()
        lo, hi = min(terms), max(terms)
        return cls(lo, [terms.get(k, 0) for k in range(lo, hi + 1)])

    @classmethod
    def coerce(cls, other) -> "LaurentPolynomial":
        if isinstance(other, LaurentPolynomial):
            return other
        if isinstance(other, int):
            return cls.constant(other)
        return NotImplemented

    # properties ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def highest(self) -> int:
        return self.lowest + len(self.coeffs) - 1

    @property
    def span(self) -> int:
        """Difference between the highest and lowest exponent (0 for constants)."""
        return max(len(self.coeffs) - 1, 0)

    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def trailing(self) -> int:
        return self.coeffs[0] if self.coeffs else 0

    def terms(self) -> dict[int, int]:
        return {self.lowest + i: c for i, c in enumerate(self.coeffs) if c}

    def is_unit(self) -> bool:
        """True for the units of Z[t, 1/t], i.e. ``±t^k``."""
        return len(self.coeffs) == 1 and abs(self.coeffs[0]) == 1

    # arithmetic ---------------------------------------------------------

    def __neg__(self):
        return LaurentPolynomial(self.lowest, [-c for c in self.coeffs])

    def __add__(self, other):
        other = LaurentPolynomial.coerce(other)
        if other is NotImplemented:
            return other
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        lo = min(self.lowest, other.lowest)
        hi = max(self.highest, other.highest)
        out = [0] * (hi - lo + 1)
        for i, c in enumerate(self.coeffs):
            out[self.lowest - lo + i] += c
        for i, c in enumerate(other.coeffs):
            out[other.lowest - lo + i] += c
        return LaurentPolynomial(lo, out)

    __radd__ = __add__

    def __sub__(self, other):
        other = LaurentPolynomial.coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = LaurentPolynomial.coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = LaurentPolynomial.coerce(other)
        if other is NotImplemented:
            return other
        if self.is_zero() or other.is_zero():
            return LaurentPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return LaurentPolynomial(self.lowest + other.lowest, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if not self.is_unit():
                raise ArithmeticError("only units have Laurent inverses")
            return LaurentPolynomial(-self.lowest * -k, (self.coeffs[0] ** -k,))
        result = LaurentPolynomial.constant(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, k: int) -> "LaurentPolynomial":
        """Multiply by ``t**k``."""
        if self.is_zero():
            return self
        return LaurentPolynomial(self.lowest + k, self.coeffs)

    def substitute_power(self, p: int) -> "LaurentPolynomial":
        """Return ``f(t**p)`` for ``p >= 1``."""
        if p < 1:
            raise ValueError("p must be positive")
        return LaurentPolynomial.from_dict({p * k: c for k, c in self.terms().items()})

    def divmod_exact(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        """Exact quotient ``self / other``; raises ArithmeticError if it is not in Z[t, 1/t]."""
        other = LaurentPolynomial.coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return self
        num = list(self.coeffs)
        den = other.coeffs
        lead = den[-1]
        if len(num) < len(den):
            raise ArithmeticError("not divisible")
        quot = [0] * (len(num) - len(den) + 1)
        for k in range(len(quot) - 1, -1, -1):
            c = num[k + len(den) - 1]
            if c % lead:
                raise ArithmeticError("not divisible over the integers")
            q = c // lead
            quot[k] = q
            if q:
                for j, d in enumerate(den):
                    num[k + j] -= q * d
        if any(num):
            raise ArithmeticError("nonzero remainder")
        return LaurentPolynomial(self.lowest - other.lowest, quot)

    def __truediv__(self, other):
        return self.divmod_exact(LaurentPolynomial.coerce(other))

    def __call__(self, t):
        if self.is_zero():
            return 0
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc * t ** self.lowest if self.lowest >= 0 else acc / t ** (-self.lowest)

    # normalization ------------------------------------------------------

    def normalized(self) -> "LaurentPolynomial":
        """Representative with exponents centred on zero and positive leading coefficient."""
        if self.is_zero():
            return self
        sign = -1 if self.leading() < 0 else 1
        return LaurentPolynomial(-(self.span // 2), [sign * c for c in self.coeffs])

    def as_polynomial(self) -> "LaurentPolynomial":
        """Representative with lowest exponent 0 and positive leading coefficient."""
        if self.is_zero():
            return self
        sign = -1 if self.leading() < 0 else 1
        return LaurentPolynomial(0, [sign * c for c in self.coeffs])

    def equal_up_to_units(self, other: "LaurentPolynomial") -> bool:
        return self.normalized() == LaurentPolynomial.coerce(other).normalized()

    def is_symmetric(self) -> bool:
        """True when the coefficient sequence is a palindrome up to overall sign."""
        cs = self.coeffs
        return cs == cs[::-1] or cs == tuple(-c for c in cs[::-1])

    # text ---------------------------------------------------------------

    def to_json(self) -> dict:
        return {"lowest": self.lowest, "coeffs": list(self.coeffs)}

    @classmethod
    def from_json(cls, data: dict) -> "LaurentPolynomial":
        return cls(data["lowest"], data["coeffs"])

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for k in sorted(self.terms(), reverse=True):
            c = self.terms()[k]
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                var = "t" if k == 1 else f"t^{k}"
                body = var if mag == 1 else f"{mag}{var}"
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)


def bareiss_det(rows: Sequence[Sequence], one, exact_div):
    """Fraction-free determinant over an integral domain.

    ``exact_div(a, b)`` must return ``a / b`` whenever ``b`` divides ``a``;
    Bareiss' elimination only ever asks for such divisions.
    """
    m = [list(r) for r in rows]
    n = len(m)
    if n == 0:
        return one
    if any(len(r) != n for r in m):
        raise ValueError("matrix must be square")
    zero = one - one
    sign = 1
    prev = one
    for k in range(n - 1):
        if m[k][k] == zero:
            for r in range(k + 1, n):
                if m[r][k] != zero:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return zero
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = exact_div(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev)
        prev = m[k][k]
    det = m[n - 1][n - 1]
    return det if sign == 1 else -det


def laurent_det(rows: Sequence[Sequence[LaurentPolynomial]]) -> LaurentPolynomial:
    rows = [[LaurentPolynomial.coerce(x) for x in r] for r in rows]
    return bareiss_det(rows, LaurentPolynomial.constant(1), LaurentPolynomial.divmod_exact)
