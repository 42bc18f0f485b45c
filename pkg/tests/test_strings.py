import numpy as np
import pytest

from qmet.exceptions import InvalidScheme, NotASemilattice
from qmet.spaces import OrderRel
from qmet.partial_metrics import d_from_p, order_from_p
from qmet.weights import verify_weight
from qmet.semilattices import semilattice_from_order
from qmet.strings import (StringSet, ScoreScheme, align_score, alignment, alignment_score, brute_force_score,
                          dna_pm, prefix_pm, common_prefix_length)

SCHEME = ScoreScheme(1, -1, -2)


def _random_string(rng, length, alphabet="GATC"):
    return "".join(alphabet[i] for i in rng.integers(0, len(alphabet), size=length))


def test_dynamic_programming_matches_brute_force():
    rng = np.random.default_rng(5)
    schemes = [SCHEME, ScoreScheme(2, -1, -1), ScoreScheme(3, 1, "-1/2")]
    for trial in range(1000):
        total = int(rng.integers(0, 9))
        split = int(rng.integers(0, total + 1))
        x, y = _random_string(rng, split), _random_string(rng, total - split)
        sch = schemes[trial % len(schemes)]
        assert align_score(x, y, sch) == brute_force_score(x, y, sch), (x, y, sch)


def test_alignment_achieves_the_score():
    rng = np.random.default_rng(6)
    for _ in range(200):
        x, y = _random_string(rng, int(rng.integers(0, 7))), _random_string(rng, int(rng.integers(0, 7)))
        padded_x, padded_y = alignment(x, y, SCHEME)
        assert padded_x.replace("#", "") == x
        assert padded_y.replace("#", "") == y
        assert alignment_score(padded_x, padded_y, SCHEME) == align_score(x, y, SCHEME)


def test_gattaca():
    assert alignment_score("G#ATTAC#A", "GCATCACGA", SCHEME) == 1
    assert alignment_score("GA#TTACA#", "GCATCACGA", SCHEME) == -3
    assert align_score("GATTACA", "GCATCACGA", SCHEME) >= 1


def test_invalid_schemes():
    assert not ScoreScheme(1, -5, -2).valid
    assert not ScoreScheme(1, -1, 0).valid
    with pytest.raises(InvalidScheme):
        align_score("GA", "GA", ScoreScheme(1, 2, -2), strict=True)
    with pytest.raises(InvalidScheme):
        dna_pm(StringSet(["GA", "TC"]), ScoreScheme(1, -1, 0))


def test_blank_is_not_a_character():
    with pytest.raises(ValueError):
        align_score("G#", "GA", SCHEME)
    with pytest.raises(ValueError):
        StringSet(["GA"], alphabet="GA#")


def test_alignment_partial_metric_on_random_sets():
    rng = np.random.default_rng(8)
    for _ in range(100):
        strings = {_random_string(rng, int(rng.integers(0, 6))) for _ in range(int(rng.integers(1, 6)))}
        P = dna_pm(StringSet(sorted(strings)), SCHEME)
        assert P.strong
        X, w = d_from_p(P)
        assert verify_weight(X, w, "weak")


def test_alignment_order_is_equality():
    P = dna_pm(StringSet(["GATTACA", "GCATCACGA", "GAT"]), SCHEME)
    assert order_from_p(P) == OrderRel.equality(3)
    with pytest.raises(NotASemilattice):
        semilattice_from_order(order_from_p(P))


def test_alignment_quasi_metric():
    P = dna_pm(StringSet(["GAT", "GT"]), SCHEME)
    X, _ = d_from_p(P)
    assert X[0, 1] == 3 - align_score("GAT", "GT", SCHEME)
    assert X[1, 0] == 2 - align_score("GAT", "GT", SCHEME)


def test_prefix_partial_metric():
    P = prefix_pm(StringSet(["", "a", "ab", "b"], alphabet="ab"))
    assert P[0, 0] == 1
    assert P[1, 2] * 2 == 1
    assert common_prefix_length("ab", "b") == 0
    X, w = d_from_p(P)
    assert X[2, 1] * 4 == 1
    assert X[1, 2] == 0
