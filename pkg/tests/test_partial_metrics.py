import numpy as np
import pytest
import sympy

from qmet.exceptions import PMViolation, NegativeEntry, NotWeaklyWeighted
from qmet.utils import INF
from qmet.spaces import GQSpace, Partition, specialisation_order, disjoint_union
from qmet.semilattices import enumerate_meet_semilattices, dist_from_covaluation, random_covaluation
from qmet.weights import WeakWeight, CWeakWeight, synth_weak_weight, synth_cweak_weight
from qmet.partial_metrics import WPMSpace, validate_wpm, p_from_dw, d_from_p, roundtrip_check, order_from_p
from qmet.families import sierpinski, chain_space, power_set_space


def test_sierpinski_partial_metric():
    X, _ = sierpinski()
    P = p_from_dw(X, WeakWeight([1, 0]))
    assert P.p == ((1, 1), (1, 0))
    assert P.nonneg and not P.strong

    back, w = d_from_p(P)
    assert back == X
    assert w.values == (1, 0)


@pytest.mark.parametrize("matrix, axiom", [
    ([[0, 1], [2, 0]], "PM3"),
    ([[1, 0], [0, 0]], "PM2"),
    ([[0, 0], [0, 0]], "PM1"),
    ([[0, 1, 5], [1, 0, 1], [5, 1, 0]], "PM4"),
    ([["inf", "inf"], ["inf", 0]], "PM5"),
])
def test_axiom_violations_are_named(matrix, axiom):
    with pytest.raises(PMViolation) as info:
        validate_wpm(matrix)
    assert info.value.axiom == axiom


def test_strong_and_nonnegative_requirements():
    with pytest.raises(PMViolation) as info:
        validate_wpm([[1, 1], [1, 0]], require_strong=True)
    assert info.value.axiom == "PM2S"
    with pytest.raises(NegativeEntry):
        validate_wpm([[-1, 0], [0, 0]], require_nonneg=True)
    P = validate_wpm([[-1, 0], [0, 0]])
    assert not P.nonneg and not P.strong


def test_metrics_give_zero_diagonals():
    X = GQSpace([[0, 1, 2], [1, 0, 1], [2, 1, 0]])
    P = p_from_dw(X, synth_cweak_weight(X))
    assert [P[x, x] for x in range(3)] == [0, 0, 0]
    assert P.p == X.d


def test_components_become_infinite_partial_distances():
    X = disjoint_union([sierpinski()[0], sierpinski()[0]])
    P = p_from_dw(X, synth_cweak_weight(X))
    assert P[0, 2] is INF
    assert P.p_components() == Partition([[0, 1], [2, 3]])
    back, w = d_from_p(P)
    assert back == X
    assert w.partition == Partition([[0, 1], [2, 3]])


def test_p_from_dw_rejects_non_weights():
    X, _ = sierpinski()
    with pytest.raises(NotWeaklyWeighted):
        p_from_dw(X, WeakWeight([0, 0]))


@pytest.mark.parametrize("X", [sierpinski()[0], chain_space(4)[0], power_set_space(2)[0]])
def test_both_round_trips(X):
    w = synth_cweak_weight(X)
    P = p_from_dw(X, w)
    assert roundtrip_check(X, w, P)
    assert roundtrip_check(X, w.shift(-3), P.shift(5))


def test_shift_keeps_the_order():
    X, _ = power_set_space(2)
    P = p_from_dw(X, synth_cweak_weight(X))
    assert P.p[1][2] == 2
    shifted = P.shift("-7/2")
    assert order_from_p(shifted) == order_from_p(P)
    assert order_from_p(P) == specialisation_order(X)
    assert not shifted.nonneg


def test_weight_representative_changes_p_but_not_d():
    X, _ = chain_space(3)
    w = CWeakWeight([2, 1, 0], Partition.trivial(3))
    P = p_from_dw(X, w)
    Q = p_from_dw(X, w.shift(1))
    assert P != Q
    assert d_from_p(P)[0] == d_from_p(Q)[0] == X


def test_labels_are_carried():
    X = GQSpace([[0, 0], [1, 0]], labels=["a", "b"])
    P = p_from_dw(X, WeakWeight([1, 0]))
    assert P.labels == ("a", "b")
    assert d_from_p(WPMSpace(P.p, labels=P.labels))[0].labels == ("a", "b")


def test_shifted_partial_metrics_keep_distance_and_order():
    rng = np.random.default_rng(31)
    semilattices = list(enumerate_meet_semilattices(4))
    for _ in range(60):
        S = semilattices[int(rng.integers(len(semilattices)))]
        X = dist_from_covaluation(S, random_covaluation(rng, S))
        P = p_from_dw(X, synth_weak_weight(X))
        c = sympy.Rational(int(rng.integers(-6, 7)), int(rng.integers(1, 4)))
        shifted = P.shift(c)
        assert validate_wpm(shifted.p) == shifted
        assert d_from_p(shifted)[0] == d_from_p(P)[0]
        assert order_from_p(shifted) == order_from_p(P)
        assert all(shifted[x, x] == P[x, x] + c for x in range(P.n))
