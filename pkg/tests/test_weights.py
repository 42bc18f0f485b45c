import numpy as np
import pytest

from qmet.exceptions import NotWeaklyWeighted, NotCWW
from qmet.spaces import GQSpace, Partition, disjoint_union, conjugate, components
from qmet.semilattices import enumerate_meet_semilattices, dist_from_covaluation, random_covaluation
from qmet.weights import (WeakWeight, CWeakWeight, synth_weak_weight, synth_cweak_weight, verify_weight,
                          classify_bounds, check_ww_implies_dpc)
from qmet.families import sierpinski, chain_space, truncated_chain, power_set_space, cycle_space


def test_sierpinski_weight_and_coweight():
    X, _ = sierpinski()
    w = synth_weak_weight(X)
    assert w.is_equivalent([1, 0])
    assert verify_weight(X, [1, 0], "weight")
    assert verify_weight(X, [0, 1], "coweight")
    assert not verify_weight(X, [0, 1], "weight")

    classification = classify_bounds(X, w)
    assert classification.fading_weight == WeakWeight([1, 0])
    assert classification.fading_coweight == WeakWeight([0, 1])
    assert classification.upper_bound - classification.lower_bound == 1


def test_base_points_pick_the_representative():
    X, _ = chain_space(3)
    assert synth_weak_weight(X, base_points=[2]).values == (2, 1, 0)
    assert synth_weak_weight(X).values == (0, -1, -2)
    with pytest.raises(ValueError):
        synth_weak_weight(X, base_points=[5])


def test_truncated_chain_is_not_weakly_weighted():
    X, _ = truncated_chain()
    with pytest.raises(NotWeaklyWeighted) as info:
        synth_weak_weight(X)
    assert info.value.witness == (1, 2)


def test_one_bad_component_is_reported():
    Y = disjoint_union([sierpinski()[0], cycle_space(3)[0]])
    with pytest.raises(NotCWW) as info:
        synth_cweak_weight(Y)
    assert info.value.component == 1
    assert all(x in (2, 3, 4) for x in info.value.witness)


def test_componentwise_weight_without_a_global_one():
    Y = disjoint_union([sierpinski()[0], sierpinski()[0]])
    w = synth_cweak_weight(Y)
    assert isinstance(w, CWeakWeight)
    assert w.partition == Partition([[0, 1], [2, 3]])
    assert verify_weight(Y, w, "componentwise")
    assert w.is_equivalent(w.shift(3))
    assert w.is_equivalent([1, 0, 7, 6])
    assert not WeakWeight(w.values).is_equivalent([1, 0, 7, 6])


def test_infinity_in_one_direction_is_not_weakly_weighted():
    X = GQSpace([[0, 1], ["inf", 0]])
    synth_cweak_weight(X)
    with pytest.raises(NotWeaklyWeighted) as info:
        synth_weak_weight(X)
    assert info.value.reason == "infinite in one direction only"


def test_metric_weights_are_constant():
    X = GQSpace([[0, 1, 2], [1, 0, 1], [2, 1, 0]])
    w = synth_weak_weight(X)
    assert w.is_equivalent([5, 5, 5])
    assert not verify_weight(X, [0, 1, 0], "weak")


def test_verify_weight_rejects_bad_shapes():
    X, _ = sierpinski()
    with pytest.raises(ValueError):
        verify_weight(X, [1, 0, 0])
    with pytest.raises(ValueError):
        verify_weight(X, [1, 0], "strong")


@pytest.mark.parametrize("X", [sierpinski()[0], chain_space(5)[0], power_set_space(3)[0],
                               disjoint_union([chain_space(3)[0], sierpinski()[0]])])
def test_weakly_weighted_spaces_satisfy_dpc(X):
    w = synth_cweak_weight(X)
    assert check_ww_implies_dpc(X, w)


def test_ww_implies_dpc_needs_a_weight():
    X, _ = truncated_chain()
    with pytest.raises(NotWeaklyWeighted):
        check_ww_implies_dpc(X, WeakWeight([0, 0, 0]))


def test_weights_restrict_to_subspaces():
    X, _ = chain_space(4)
    w = synth_weak_weight(X)
    for indices in ([1, 3], [0, 2, 3], [2]):
        assert verify_weight(X.restrict(indices), w.restrict(indices), "weak")


def _weighted_spaces(rng, count):
    semilattices = list(enumerate_meet_semilattices(4))
    yield power_set_space(3)[0]
    for _ in range(count):
        parts = [semilattices[int(rng.integers(len(semilattices)))] for _ in range(int(rng.integers(1, 3)))]
        yield disjoint_union([dist_from_covaluation(S, random_covaluation(rng, S)) for S in parts])


def test_every_base_point_gives_an_equivalent_weight():
    rng = np.random.default_rng(11)
    for X in _weighted_spaces(rng, 60):
        assert X.n <= 8
        partition = components(X)
        reference = synth_weak_weight(X)
        for b in range(X.n):
            base_points = [b if b in block else block[0] for block in partition]
            w = synth_weak_weight(X, base_points=base_points)
            assert w[b] == 0
            assert verify_weight(X, w, "weak")
            assert w.is_equivalent(reference, partition)


def test_negated_weight_weights_the_conjugate():
    rng = np.random.default_rng(12)
    for X in _weighted_spaces(rng, 60):
        w = synth_weak_weight(X)
        negated = [-v for v in w.values]
        assert verify_weight(conjugate(X), negated, "weak")
        assert synth_weak_weight(conjugate(X)).is_equivalent(negated, components(X))
