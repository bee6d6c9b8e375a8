import pytest
import sympy as sp
from hypothesis import given
from hypothesis import strategies as st

from contactknots.laurent import LaurentPolynomial, bareiss_det, laurent_det

T = sp.symbols("t")

polys = st.builds(
    LaurentPolynomial,
    st.integers(-5, 5),
    st.lists(st.integers(-6, 6), max_size=6),
)


def to_sympy(p: LaurentPolynomial):
    return sp.sympify(sum(c * T**k for k, c in p.terms().items()))


def test_zero_is_canonical():
    z = LaurentPolynomial(3, [0, 0])
    assert z.is_zero() and z.lowest == 0 and z.coeffs == ()
    assert LaurentPolynomial(0, [0, 1, 2, 0]) == LaurentPolynomial(1, [1, 2])


def test_string_form():
    assert str(LaurentPolynomial(-1, [1, -1, 1])) == "t - 1 + t^-1"
    assert str(LaurentPolynomial(0, [2, 0, -3])) == "-3t^2 + 2"
    assert str(LaurentPolynomial()) == "0"


@given(polys, polys)
def test_ring_operations_match_sympy(a, b):
    assert sp.expand(to_sympy(a + b) - (to_sympy(a) + to_sympy(b))) == 0
    assert sp.expand(to_sympy(a * b) - to_sympy(a) * to_sympy(b)) == 0
    assert sp.expand(to_sympy(a - b) - (to_sympy(a) - to_sympy(b))) == 0


@given(polys, polys)
def test_exact_division_inverts_multiplication(a, b):
    if b.is_zero():
        return
    assert (a * b).divmod_exact(b) == a


def test_inexact_division_raises():
    with pytest.raises(ArithmeticError):
        LaurentPolynomial(0, [1, 1]).divmod_exact(LaurentPolynomial(0, [1, 0, 1]))
    with pytest.raises(ZeroDivisionError):
        LaurentPolynomial.constant(1).divmod_exact(LaurentPolynomial())


@given(polys)
def test_json_round_trip(p):
    assert LaurentPolynomial.from_json(p.to_json()) == p


@given(polys, st.integers(-4, 4))
def test_normalized_is_unit_invariant(p, k):
    assert p.shift(k).normalized() == p.normalized()
    assert (-p).normalized() == p.normalized()


@given(polys, st.integers(1, 4))
def test_substitute_power(p, k):
    assert sp.expand(to_sympy(p.substitute_power(k)) - to_sympy(p).subs(T, T**k)) == 0


def test_unit_powers():
    t = LaurentPolynomial.t()
    assert t ** -2 == LaurentPolynomial.monomial(-2)
    with pytest.raises(ArithmeticError):
        LaurentPolynomial(0, [1, 1]) ** -1


def test_evaluation():
    p = LaurentPolynomial(-1, [1, -3, 1])
    assert p(1) == -1
    assert p(2) == pytest.approx(0.5 - 3 + 2)


@given(st.lists(st.lists(st.integers(-5, 5), min_size=3, max_size=3), min_size=3, max_size=3))
def test_integer_bareiss_matches_sympy(rows):
    assert bareiss_det(rows, 1, lambda a, b: a // b) == sp.Matrix(rows).det()


@given(st.lists(polys, min_size=9, max_size=9))
def test_laurent_det_matches_sympy(entries):
    rows = [entries[0:3], entries[3:6], entries[6:9]]
    expected = sp.Matrix([[to_sympy(x) for x in r] for r in rows]).det()
    assert sp.expand(to_sympy(laurent_det(rows)) - expected) == 0
