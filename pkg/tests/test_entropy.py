import math

import numpy as np
import pytest

from qmet.exceptions import HorizonExceeded, MonotonicityViolated, PreconditionFailed, RespectCheckFailed
from qmet.spaces import Partition, components
from qmet.semilattices import (MeetSL, enumerate_meet_semilattices, random_covaluation, dist_from_covaluation,
                               synth_wX)
from qmet.families import truncated_chain, v_space
from qmet.entropy import (SLEndo, GenNorm, PowerSetCarrier, identity, integer_shift, coordinate_shift,
                          meet_endomorphisms, respects, diamond_endomorphism, trajectories, trajectory, is_inert,
                          inertness_criteria, entropy_point, entropy_sup, cardinality_norm, log_order_norm,
                          gennorm_entropy, distance_from_seed, weight_value, representative_dependence,
                          exhaustive_inertness_check)

CHAIN = MeetSL([[0, 0, 0], [0, 1, 1], [0, 1, 2]])


def identity_table(S):
    return SLEndo.from_table(S, range(S.n))


def test_shift_entropy_is_one():
    shift = integer_shift()
    seed = frozenset({0})
    estimate = entropy_point(shift, seed, distance_from_seed(shift.carrier, seed), horizon=64)
    assert estimate.value == 1
    assert estimate.converged
    assert set(estimate.increments) == {1}


def test_shift_entropy_over_several_seeds():
    shift = integer_shift()
    seeds = [frozenset({0}), frozenset({0, 5}), frozenset({-3, 3}), frozenset()]
    result = gennorm_entropy(shift, cardinality_norm(), seeds, horizon=32)
    assert result.value == 1
    assert result.flag == "lower bound"
    assert result.converged
    values = {tuple(sorted(seed)): estimate.value for seed, estimate in result.table}
    assert values[()] == 0


def test_faster_shift_has_the_same_entropy():
    shift = integer_shift(3)
    seed = frozenset({0})
    assert entropy_point(shift, seed, distance_from_seed(shift.carrier, seed), horizon=32).value == 1


def test_bernoulli_shift_entropy_is_one_bit():
    beta = coordinate_shift(2)
    H = beta.carrier.subgroup([[(0, 1)]])
    estimate = entropy_point(beta, H, distance_from_seed(beta.carrier, H), horizon=12, window=8, log_base=2)
    assert estimate.value == 1
    assert estimate.converged
    assert math.isclose(estimate.nats, math.log(2))

    result = gennorm_entropy(beta, log_order_norm(), [H], horizon=12, window=8, log_base=2)
    assert result.value == 1


def test_element_budget_reports_the_step():
    beta = coordinate_shift(2, budget=16)
    H = beta.carrier.subgroup([[(0, 1)]])
    with pytest.raises(HorizonExceeded) as info:
        list(trajectories(beta, H, 8))
    assert info.value.step == 5
    assert trajectory(beta, H, 4).order == 16


def test_oversized_generator_sets_are_refused():
    carrier = coordinate_shift(2, budget=4).carrier
    assert carrier.subgroup([[(0, 1)], [(1, 1)]]).order == 4
    with pytest.raises(HorizonExceeded, match="budget of 4 elements") as info:
        carrier.subgroup([[(0, 1)], [(1, 1)], [(2, 1)]])
    assert info.value.step is None
    assert "None" not in str(info.value)


def test_adding_a_constant_keeps_the_entropy():
    shift = integer_shift()
    seed = frozenset({0, 2})
    f = distance_from_seed(shift.carrier, seed)
    plain = entropy_point(shift, seed, f, horizon=32)
    moved = entropy_point(shift, seed, lambda T: f(T) + 5, horizon=32)
    assert plain.value == moved.value == 1


def test_identity_and_monotonicity():
    shift = integer_shift()
    assert gennorm_entropy(identity(shift.carrier), cardinality_norm(), [frozenset({1, 2})], horizon=16).value == 0
    growing = GenNorm(lambda A: max(A, default=0), "largest element")
    with pytest.raises(MonotonicityViolated):
        gennorm_entropy(shift, growing, [frozenset({0})], horizon=16)
    with pytest.raises(ValueError):
        gennorm_entropy(shift, GenNorm(lambda A: "inf"), [frozenset({0})], horizon=16)


def test_estimate_arguments():
    shift = integer_shift()
    seed = frozenset({0})
    f = distance_from_seed(shift.carrier, seed)
    with pytest.raises(ValueError):
        entropy_point(shift, seed, f, horizon=8, window=8)
    with pytest.raises(ValueError):
        entropy_point(shift, seed, f, horizon=8, window=0)
    with pytest.raises(ValueError):
        list(trajectories(shift, seed, 0))


def test_finite_endomorphisms_have_zero_entropy():
    rng = np.random.default_rng(1)
    for S in enumerate_meet_semilattices(4):
        X = dist_from_covaluation(S, random_covaluation(rng, S))
        for table in meet_endomorphisms(S):
            e = SLEndo.from_table(S, table, X)
            for x in range(S.n):
                estimate = entropy_point(e, x, distance_from_seed(e.carrier, x), horizon=12, window=4)
                assert estimate.value == 0
                assert estimate.converged


def test_exact_supremum_on_a_finite_carrier():
    X = dist_from_covaluation(CHAIN, [2, 1, 0])
    e = SLEndo.from_table(CHAIN, [0, 0, 1], X)
    w = synth_wX(X, CHAIN)
    result = entropy_sup(e, weight_value(w), Partition.trivial(3), range(3), horizon=12, window=4)
    assert result.value == 0
    assert result.flag == "exact"


def test_inertness_on_the_chain():
    collapse = SLEndo.from_table(CHAIN, [0, 0, 0])
    assert not is_inert(collapse, 2, Partition.discrete(3))
    assert is_inert(collapse, 0, Partition.discrete(3))
    assert is_inert(collapse, 2, Partition.trivial(3))
    assert is_inert(collapse, 2, Partition([[0, 1, 2]]), criterion="c")
    assert is_inert(collapse, 2, Partition.discrete(3), criterion="b") is False


def test_distance_criterion_agrees_with_trajectories():
    X = dist_from_covaluation(CHAIN, [5, 1, 0], Partition([[0], [1, 2]]))
    e = SLEndo.from_table(CHAIN, [0, 0, 0], X)
    for x in range(3):
        assert is_inert(e, x, "distance") == is_inert(e, x, "distance", criterion="a")
        assert is_inert(e, x, "distance") == is_inert(e, x, components(X))
    shift = integer_shift()
    for seed in (frozenset({0}), frozenset({1, 4})):
        assert is_inert(shift, seed, "distance") == is_inert(shift, seed, "distance", criterion="a", horizon=16)


def test_diamond_splits_the_criteria():
    e, cong = diamond_endomorphism()
    assert not respects(e, cong)
    assert inertness_criteria(e, 3, cong) == {"a": False, "b": False, "c": True}
    with pytest.raises(RespectCheckFailed):
        is_inert(e, 3, cong, criterion="c")


def test_criteria_agree_when_the_map_respects_the_congruence():
    counts = exhaustive_inertness_check(max_size=5)
    assert counts["semilattices"] == 24
    assert counts["pairs"] > 0
    assert 0 < counts["inert"] <= counts["points"]


def test_criterion_c_needs_a_finite_carrier():
    with pytest.raises(ValueError):
        is_inert(integer_shift(), frozenset({0}), Partition.trivial(1), criterion="c")
    with pytest.raises(ValueError):
        inertness_criteria(integer_shift(), frozenset({0}), Partition.trivial(1))


def test_representatives_without_dpc():
    X, S = truncated_chain()
    report = representative_dependence(X, S, SLEndo.from_table(S, [0, 0, 1]), 2, horizon=16)
    assert len(report.rows) == 3
    assert report.values == [0]


def test_representative_preconditions():
    X, S = v_space()
    with pytest.raises(PreconditionFailed) as info:
        representative_dependence(X, S, identity_table(S), 1, horizon=16)
    assert info.value.hypothesis == "invariance"

    Y = dist_from_covaluation(CHAIN, [5, 1, 0], Partition([[0], [1, 2]]))
    with pytest.raises(PreconditionFailed) as info:
        representative_dependence(Y, CHAIN, SLEndo.from_table(CHAIN, [0, 0, 0]), 2, horizon=16)
    assert info.value.hypothesis == "inertness"


def test_power_set_carrier_meet_preservation():
    C = PowerSetCarrier()
    shift = integer_shift()
    a, b = frozenset({0, 1}), frozenset({7})
    assert shift(C.meet(a, b)) == C.meet(shift(a), shift(b))
    assert C.distance(a, b) == 1
