import itertools
import warnings

import numpy as np
import pytest

from contactknots.braid import BraidWord, alexander_from_braid, closure_components, closure_permutation
from contactknots.errors import ParameterError
from contactknots.lorenz import (
    LorenzParams,
    LorenzTrajectory,
    NonPrimitiveWordWarning,
    SymbolWord,
    absorbing_bound,
    close_return_candidates,
    integrate_lorenz,
    lobe_encoding,
    lorenz_invariants,
    primitive_words,
    template_braid,
    template_permutation,
)


@pytest.fixture(scope="module")
def chaotic():
    return integrate_lorenz(LorenzParams(r=28.0), (1.0, 1.0, 1.0), 1e-3, 60000)


def test_origin_is_fixed():
    traj = integrate_lorenz(LorenzParams(), (0, 0, 0), 1e-3, 100)
    assert np.all(traj.points == 0)
    assert lobe_encoding(traj) == ""


def test_subcritical_decays_to_origin():
    traj = integrate_lorenz(LorenzParams(r=0.5), (1, 1, 1), 1e-3, 30000)
    assert np.linalg.norm(traj.points[-1]) < 1e-6


def test_long_run_stays_bounded():
    p = LorenzParams(r=24)
    traj = integrate_lorenz(p, (1, 1, 1), 1e-3, 1_000_000)
    assert np.max(np.abs(traj.points[:, 2])) < 60
    c = p.r + p.sigma
    V = np.sqrt(traj.points[:, 0] ** 2 + traj.points[:, 1] ** 2 + (traj.points[:, 2] - c) ** 2)
    assert V.max() <= absorbing_bound(p, (1, 1, 1))


def test_parameter_errors():
    with pytest.raises(ParameterError):
        LorenzParams(r=0)
    with pytest.raises(ParameterError):
        integrate_lorenz(LorenzParams(), (1, 1, 1), 0.0, 10)


def test_stable_spiral_is_all_right_lobe():
    traj = integrate_lorenz(LorenzParams(r=10), (1, 1, 1), 1e-3, 30000)
    word = lobe_encoding(traj)
    assert len(word) > 5 and set(word) == {"R"}
    assert set(lobe_encoding(traj.mirrored())) == {"L"}


def test_mirror_symmetry_swaps_symbols(chaotic):
    word = lobe_encoding(chaotic)
    assert set(word) == {"L", "R"}
    mirrored = integrate_lorenz(chaotic.params, (-1.0, -1.0, 1.0), 1e-3, 60000)
    assert lobe_encoding(mirrored) == word.translate(str.maketrans("LR", "RL"))


def test_symbol_word_canonical_form():
    assert SymbolWord("RLL").word == "LLR"
    assert SymbolWord("lr").word == "LR"
    assert SymbolWord("LRLR").period() == 2 and not SymbolWord("LRLR").is_primitive()
    assert SymbolWord("LRR").swapped() == SymbolWord("LLR")
    with pytest.raises(ParameterError):
        SymbolWord("LXR")


def test_close_returns_reencode(chaotic):
    assert close_return_candidates(chaotic.segment(0, 300), 1e-6) == []
    cands = close_return_candidates(chaotic, 0.5)
    assert cands
    for c in cands:
        seg = chaotic.segment(c.start_index - 1, c.stop_index)
        assert SymbolWord(lobe_encoding(seg)) == c.word
        assert c.distance < 0.5


def test_close_returns_on_synthetic_periodic_curve():
    n = 400
    dt = 4 * np.pi / n
    t = dt * np.arange(5 * n + 1)
    pts = np.column_stack([np.cos(t / 2), np.sin(t), np.cos(t)])
    traj = LorenzTrajectory(t, pts, LorenzParams())
    cands = close_return_candidates(traj, 1e-9)
    assert cands
    for c in cands:
        assert c.word == SymbolWord("LR")
        assert c.period == pytest.approx(4 * np.pi, abs=1e-12)


def brute_force_template(word: str) -> list[int]:
    """Positions of the periodic orbit points on the branch line, read as binary fractions."""
    k = len(word)
    pts = []
    for j in range(k):
        bits = (word[j:] + word[:j]) * 8
        pts.append(sum((1 if c == "R" else 0) * 2.0 ** -(i + 1) for i, c in enumerate(bits)))
    order = sorted(range(k), key=lambda j: pts[j])
    rank = {j: pos for pos, j in enumerate(order)}
    return [rank[(order[pos] + 1) % k] for pos in range(k)]


def test_template_permutation_matches_binary_positions():
    for w in primitive_words(7):
        assert template_permutation(w) == brute_force_template(w.word)


def test_template_braids_small_words():
    assert template_braid("LR") == BraidWord(2, ((1, 1),))
    assert template_braid("L") == BraidWord(1)
    b = template_braid("LLR")
    assert b.is_positive() and b.n == 3
    assert alexander_from_braid(b).to_json() == {"lowest": 0, "coeffs": [1]}


def _is_permutation_braid(b: BraidWord) -> bool:
    pos = list(range(b.n))
    crossed = set()
    for i, _ in b.letters:
        pair = frozenset((pos[i - 1], pos[i]))
        if pair in crossed:
            return False
        crossed.add(pair)
        pos[i - 1], pos[i] = pos[i], pos[i - 1]
    return True


def test_all_primitive_words_give_positive_permutation_knots():
    words = primitive_words(8)
    assert len(words) == 71
    for w in words:
        b = template_braid(w)
        assert b.is_positive() and _is_permutation_braid(b)
        assert closure_permutation(b) == template_permutation(w)
        if set(w.word) == {"L", "R"}:
            assert closure_components(b) == 1


def test_non_primitive_word_warns():
    with pytest.warns(NonPrimitiveWordWarning):
        b = template_braid("LRLR")
    assert closure_components(b) == 2


def test_invariants():
    inv = lorenz_invariants("LR")
    assert (inv.e, inv.n, inv.beta, inv.genus, inv.positive) == (1, 2, -1, 0, True)
    inv = lorenz_invariants("LLRLR")
    assert inv.alexander == {"lowest": -1, "coeffs": [1, -1, 1]}
    assert inv.genus == 1 and inv.trip == 2


def test_invariants_are_mirror_symmetric():
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        for w in primitive_words(6):
            a, b = lorenz_invariants(w), lorenz_invariants(w.swapped())
            assert (a.e, a.n, a.beta, a.genus, a.trip, a.alexander) == (b.e, b.n, b.beta, b.genus, b.trip, b.alexander)
            assert a.positive


def test_primitive_word_count_is_lyndon_count():
    # number of binary Lyndon words of length k, by Moebius inversion
    def mobius(n):
        out, m, p = 1, n, 2
        while p * p <= m:
            if m % p == 0:
                m //= p
                if m % p == 0:
                    return 0
                out = -out
            p += 1
        return -out if m > 1 else out

    for k in range(1, 9):
        lyndon = sum(mobius(d) * 2 ** (k // d) for d in range(1, k + 1) if k % d == 0) // k
        assert sum(1 for w in primitive_words(k) if len(w) == k) == lyndon
    assert all(len(set(itertools.islice(primitive_words(5), 100))) for _ in [0])
