import cmath
import itertools
import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from contactknots.braid import BraidWord, alexander_from_braid
from contactknots.errors import DomainError, ParameterError
from contactknots.knotalg import (
    I_HAT,
    L_MAT,
    PRESETS,
    R_MAT,
    Eisenstein,
    Matrix2,
    Presentation,
    alexander_from_seifert,
    check_preset,
    fricke_defects,
    geodesic_length,
    ghys_to_twist_word,
    ghys_word_eval,
    is_markov,
    markov_integral,
    markov_neighbors,
    markov_numbers,
    markov_tree,
    monodromy_alexander,
    presentation_check,
    projective_equal,
    trace_map,
    traces_to_matrices,
    twist_word_eval,
)
from oracles import markov_numbers_upto, sympy_alexander_from_seifert

eis = st.builds(Eisenstein, st.integers(-20, 20), st.integers(-20, 20))
OMEGA = complex(-0.5, math.sqrt(3) / 2)


@given(eis, eis)
def test_eisenstein_arithmetic_matches_complex_numbers(x, y):
    for op in (lambda a, b: a + b, lambda a, b: a - b, lambda a, b: a * b):
        assert cmath.isclose(op(x, y).to_complex(), op(x.to_complex(), y.to_complex()), abs_tol=1e-9)
    assert x.norm() == pytest.approx(abs(x.to_complex()) ** 2)
    assert cmath.isclose(x.conjugate().to_complex(), x.to_complex().conjugate(), abs_tol=1e-9)


def test_omega_is_a_cube_root_of_unity():
    w = Eisenstein(0, 1)
    assert w * w + w + 1 == Eisenstein(0, 0)
    assert w * w * w == Eisenstein(1, 0)
    # the printed value (-1 + 3i)/2 is not a root
    printed = complex(-0.5, 1.5)
    assert abs(printed**2 + printed + 1) > 1


@pytest.mark.parametrize(
    "M,coeffs,knot_like",
    [((2, 1, 1, 1), [1, -3, 1], True), ((1, 1, -1, 0), [1, -1, 1], True), ((1, 0, 0, 1), [1, -2, 1], False)],
)
def test_monodromy_alexander(M, coeffs, knot_like):
    res = monodromy_alexander(Matrix2(*M))
    assert list(res.alexander.coeffs) == coeffs and res.alexander.lowest == 0
    assert res.knot_like is knot_like
    assert res.fibered


def test_monodromy_requires_unimodular():
    with pytest.raises(DomainError):
        monodromy_alexander(Matrix2(2, 0, 0, 1))


@pytest.mark.parametrize("V", [[[-1, 1], [0, -1]], [[1, 1], [0, -1]], [[0]], [[1, 0, 1], [1, -1, 0], [0, 1, 2]]])
def test_seifert_route_matches_sympy(V):
    assert alexander_from_seifert(V).alexander.to_json() == sympy_alexander_from_seifert(V)


def test_seifert_fibered_flags():
    assert alexander_from_seifert([[-1, 1], [0, -1]]).fibered
    assert not alexander_from_seifert([[0]]).fibered
    assert alexander_from_seifert([[0]]).alexander.is_zero()


def test_three_routes_agree():
    trefoil = [
        monodromy_alexander(Matrix2(1, 1, -1, 0)).alexander,
        alexander_from_seifert([[-1, 1], [0, -1]]).alexander,
        alexander_from_braid(BraidWord.from_ints(2, [1, 1, 1])),
    ]
    fig8 = [
        monodromy_alexander(Matrix2(2, 1, 1, 1)).alexander,
        alexander_from_seifert([[1, 1], [0, -1]]).alexander,
        alexander_from_braid(BraidWord.from_ints(3, [1, -2, 1, -2])),
    ]
    for group in (trefoil, fig8):
        assert all(p.equal_up_to_units(group[0]) for p in group)


def test_markov_neighbors():
    assert markov_neighbors((1, 1, 1)) == [(1, 1, 2)] * 3
    assert (1, 2, 5) in markov_neighbors((1, 1, 2))
    with pytest.raises(DomainError):
        markov_neighbors((1, 2, 3))


def test_markov_tree_against_exhaustive_search():
    assert markov_tree(0) == {(1, 1, 1)}
    assert {(1, 1, 1), (1, 1, 2), (1, 2, 5)} <= markov_tree(2)
    brute = markov_numbers_upto(500)
    tree = markov_tree(4)
    assert all(is_markov(t) for t in tree)
    nums = markov_numbers(tree)
    assert {1, 2, 5, 13, 29, 34} <= nums
    assert {n for n in nums if n <= 500} <= brute


@given(st.integers(-50, 50), st.integers(-50, 50), st.integers(-50, 50))
def test_trace_map_preserves_integral(x, y, z):
    assert markov_integral(*trace_map(x, y, z)) == markov_integral(x, y, z)


def test_traces_to_matrices_three_three_three():
    a, b = traces_to_matrices(3, 3, 3)
    assert a == Matrix2(2, 1, 1, 1) and b == Matrix2(2, -1, -1, 1)
    assert (a @ b).trace() == 3
    assert (a @ b @ a.inverse() @ b.inverse()).trace() == -2
    assert fricke_defects(a, b) == (0, 0)


@pytest.mark.parametrize("m", sorted(markov_tree(3)))
def test_fricke_identities_on_tree(m):
    x, y, z = (3 * k for k in m)
    a, b = traces_to_matrices(x, y, z)
    assert a.det() == 1 and b.det() == 1
    assert (a.trace(), b.trace(), (a @ b).trace()) == (x, y, z)
    assert fricke_defects(a, b) == (0, 0)


def test_traces_to_matrices_errors():
    with pytest.raises(DomainError):
        traces_to_matrices(3, 3, 0)
    with pytest.raises(DomainError):
        traces_to_matrices(1, 2, 3)


def test_rational_entries_stay_exact():
    a, _ = traces_to_matrices(6, 3, 15)  # Markov triple (1, 2, 5) after rescaling, permuted
    assert all(isinstance(x, Fraction) for x in (a.a, a.b, a.c, a.d))


def test_geodesic_lengths():
    assert geodesic_length(3) == pytest.approx(2 * math.log((3 + math.sqrt(5)) / 2), abs=1e-12)
    assert geodesic_length(6) == pytest.approx(2 * math.acosh(3), abs=1e-12)
    assert geodesic_length(-3) == geodesic_length(3)
    with pytest.raises(DomainError):
        geodesic_length(2)
    ell = geodesic_length(complex(3, 1))
    assert ell.real > 0 and cmath.isclose(2 * cmath.cosh(ell / 2), complex(3, 1))


def test_twist_words():
    assert twist_word_eval("R L") == Matrix2(2, 1, 1, 1)
    assert twist_word_eval("I^2") == -Matrix2.identity()
    assert twist_word_eval("LIL") == -R_MAT
    assert projective_equal(twist_word_eval("LIL"), R_MAT)
    assert projective_equal(twist_word_eval("L^-1"), I_HAT @ R_MAT @ I_HAT)
    assert twist_word_eval("L^2 R^-1") == L_MAT @ L_MAT @ R_MAT.inverse()
    with pytest.raises(ParameterError):
        twist_word_eval("LQ")


def test_ghys_words():
    assert ghys_word_eval([1]) == (-I_HAT) @ R_MAT.inverse()
    assert ghys_word_eval([1, -1]) == (-I_HAT) @ R_MAT.inverse() @ (-I_HAT) @ R_MAT
    for n in range(1, 7):
        for eps in itertools.product([1, -1], repeat=n):
            m = ghys_word_eval(eps)
            assert m.det() == 1
            assert projective_equal(twist_word_eval(ghys_to_twist_word(eps)), m)


def test_presentation_parsing():
    p = Presentation.parse(["a", "b"], ["a^3", "a b = b a"])
    assert p.relators == ((("a", 3),), (("a", 1), ("b", 1), ("a", -1), ("b", -1)))
    assert Presentation.from_json(p.to_json()) == p
    with pytest.raises(ParameterError):
        Presentation.parse(["a"], ["a c"])


def test_presentation_check_singular():
    p = Presentation.parse(["a"], ["a"])
    with pytest.raises(DomainError):
        presentation_check(p, {"a": Matrix2(1, 1, 1, 1)})


def _passes(name, root=1):
    return [r.passed for r in check_preset(name, root)]


@pytest.mark.parametrize("root", [1, -1])
def test_figure_eight_representation(root):
    a = Matrix2(1, 1, 0, 1, "Z[w]")
    assert a.is_sl()
    assert all(_passes("figure8-wirtinger", root))
    assert all(_passes("figure8-xyz-corrected", root))
    assert all(_passes("figure8-xyz-consequences", root))
    assert all(_passes("figure8-xyz-relators", root))
    assert _passes("figure8-xyz-uncorrected", root) == [False, True]
    assert all(_passes("figure8-w-corrected", root))
    # the printed commuting relation with w = b^-1 a b a^-1 is not a relation of the group
    assert _passes("figure8-w-printed", root) == [False, True]


def test_trefoil_and_dihedral_presets():
    assert all(_passes("trefoil-quotient"))
    assert all(_passes("dihedral-d2"))
    assert all(_passes("dihedral-d2-conjugation"))
    # strictly, (I R)^3 = -1 and I^2 = -1: the relators hold only up to sign
    exact = presentation_check(PRESETS["trefoil-quotient"][0], PRESETS["trefoil-quotient"][1](), projective=False)
    assert [r.passed for r in exact] == [False, False]


def test_matrix_json_round_trip():
    for m in (Matrix2(1, 2, 3, 4), Matrix2(1, 0, Eisenstein(0, -1), 1, "Z[w]"), Matrix2(Fraction(1, 3), 1, 0, 3, "Q")):
        assert Matrix2.from_json(m.to_json()) == m


@given(st.lists(st.sampled_from(["L", "R", "I"]), max_size=8))
def test_twist_products_stay_in_sl2(word):
    assert twist_word_eval("".join(word)).det() == 1
