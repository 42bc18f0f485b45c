import numpy as np
import pytest

from qmet.exceptions import NotASemilattice, NotStrictlyDecreasing, PreconditionFailed
from qmet.utils import INF
from qmet.spaces import Partition, OrderRel, specialisation_order
from qmet.weights import synth_cweak_weight
from qmet.semilattices import (MeetSL, semilattice_from_order, join_semilattice_from_order, check_congruence,
                               congruence_closure, check_valuation, dual_flavour, check_invariant,
                               dist_from_covaluation, synth_wx, synth_wX, check_dpc_iff_ww, check_mspace,
                               correspondence_roundtrip, check_top_bottom_signs, exhaustive_dpc_ww_check,
                               random_correspondence_check, enumerate_meet_semilattices, family_semilattice,
                               all_congruences, random_covaluation, truncate)
from qmet.families import sierpinski, chain_space, truncated_chain, v_space, power_set_space, subgroup_lattice_space


def test_semilattice_counts():
    sizes = [S.n for S in enumerate_meet_semilattices(5)]
    assert [sizes.count(n) for n in range(1, 6)] == [1, 1, 2, 5, 15]


def test_semilattice_from_the_power_set_order():
    X, S = power_set_space(2)
    assert semilattice_from_order(specialisation_order(X)) == S
    with pytest.raises(NotASemilattice):
        semilattice_from_order(OrderRel.from_pairs(3, [(0, 1), (0, 2)]).inverse())


def test_join_semilattice():
    J = join_semilattice_from_order(OrderRel.from_pairs(3, [(0, 1), (1, 2)]))
    assert J.meet(0, 2) == 2
    assert J.meet(1, 0) == 1


def test_family_must_be_union_closed():
    with pytest.raises(ValueError):
        family_semilattice([0b00, 0b01, 0b10], 2)


def test_congruences_of_the_power_set():
    _, S = power_set_space(2)
    congruences = all_congruences(S)
    assert all(check_congruence(S, cong) for cong in congruences)
    assert Partition.discrete(4) in congruences
    assert Partition.trivial(4) in congruences
    assert congruence_closure(S, [(0, 1)]) in congruences


def test_congruence_failures():
    chain = MeetSL([[0, 0, 0], [0, 1, 1], [0, 1, 2]])
    verdict = check_congruence(chain, Partition([[0, 2], [1]]))
    assert verdict.reason == "convexity"
    V = v_space()[1]
    verdict = check_congruence(V, Partition([[0], [1, 2]]))
    assert not verdict and verdict.reason in ("law", "convexity")


def test_valuation_flavours():
    _, S = power_set_space(2)
    size = [0, 1, 1, 2]
    assert check_valuation(S, size, "meet-coval")
    assert check_valuation(S, [-v for v in size], dual_flavour("meet-coval"))
    assert dual_flavour("join-val") == "join-coval"
    with pytest.raises(ValueError):
        check_valuation(S, size, "meet")


def test_v_space_is_not_invariant():
    X, S = v_space()
    verdict = check_invariant(X, S)
    assert not verdict
    assert verdict.witness == (1, 2)
    assert not any(verdict.forms.values())
    with pytest.raises(PreconditionFailed) as info:
        synth_wx(X, S, 1)
    assert info.value.hypothesis == "invariance"


def test_distance_of_the_size_covaluation():
    X, S = power_set_space(2)
    assert dist_from_covaluation(S, [0, 1, 1, 2]) == X
    with pytest.raises(NotStrictlyDecreasing):
        dist_from_covaluation(S, [0, -1, -1, -2])


def test_distance_with_a_congruence():
    chain = MeetSL([[0, 0, 0], [0, 1, 1], [0, 1, 2]])
    X = dist_from_covaluation(chain, [5, 1, 0], Partition([[0], [1, 2]]))
    assert X[1, 0] is INF
    assert X[0, 1] == 0
    assert X[2, 1] == 1


def test_join_flavour_gives_the_chain():
    J = join_semilattice_from_order(OrderRel.from_pairs(3, [(0, 1), (1, 2)]))
    assert dist_from_covaluation(J, [2, 1, 0], flavour="join-coval") == chain_space(3)[0]


def test_sierpinski_weight_from_the_top():
    X, S = sierpinski()
    assert synth_wx(X, S, 1) == {0: 1, 1: 0}


def test_chain_weight_from_the_top():
    X, S = chain_space(3)
    assert synth_wx(X, S, 2) == {0: 2, 1: 1, 2: 0}
    assert synth_wX(X, S, [2]).values == (2, 1, 0)


def test_empty_set_weight_is_the_size():
    X, S = power_set_space(3)
    w = synth_wx(X, S, 0)
    assert w == {A: bin(A).count("1") for A in range(8)}


def test_truncated_chain_is_invariant_without_dpc():
    X, S = truncated_chain()
    assert check_invariant(X, S)
    report = check_dpc_iff_ww(X, S)
    assert not report.dpc and not report.weighted
    assert report.dpc.witness == (2, 1, 0)
    assert report.weight is None
    with pytest.raises(PreconditionFailed) as info:
        synth_wx(X, S, 2)
    assert info.value.hypothesis == "DPC"
    assert synth_wx(X, S, 2, require_dpc=False) == {0: 1, 1: 1, 2: 0}


def test_glued_weight_matches_synthesis():
    X, S = power_set_space(3)
    report = check_dpc_iff_ww(X, S)
    assert report
    assert synth_wX(X, S).is_equivalent(synth_cweak_weight(X))


def test_mspace_constants():
    X, S = power_set_space(2)
    verdict = check_mspace(X, S, "m")
    assert verdict.constants == (2, 1, 1, 0)
    with pytest.raises(PreconditionFailed):
        check_mspace(*truncated_chain(), "m")


def test_top_and_bottom_weights():
    signs = check_top_bottom_signs(*power_set_space(2))
    assert signs["bottom"] and signs["top"]
    signs = check_top_bottom_signs(*v_space())
    assert signs["bottom"]
    assert signs["top"] is None


def test_truncation_keeps_invariance():
    X, S = chain_space(4)
    Y = truncate(X, 2)
    assert Y[3, 0] == 2
    assert check_invariant(Y, S)
    assert not check_dpc_iff_ww(Y, S)


def test_roundtrip_with_congruences():
    rng = np.random.default_rng(7)
    _, S = power_set_space(3)
    for cong in all_congruences(S)[:10]:
        assert correspondence_roundtrip(S, cong, rng, trials=2)


def test_random_covaluations_are_strictly_decreasing():
    rng = np.random.default_rng(3)
    for S in enumerate_meet_semilattices(4):
        f = random_covaluation(rng, S)
        assert all(f[x] > f[y] for x in range(S.n) for y in range(S.n) if S.order.lt(x, y))


def test_random_correspondence_check():
    assert random_correspondence_check(np.random.default_rng(2024), trials=200) == 200


def test_dpc_iff_weakly_weighted_exhaustively():
    counts = exhaustive_dpc_ww_check(max_size=5, per_semilattice=20, rng=np.random.default_rng(11))
    assert counts["spaces"] == 24 * 20
    assert counts["weighted"] + counts["not_weighted"] == counts["spaces"]
    assert counts["not_weighted"] > 0


@pytest.mark.parametrize("p, k, rank, size", [(2, 2, 1, 3), (2, 1, 2, 5), (3, 1, 2, 6)])
def test_subgroup_lattices(p, k, rank, size):
    X, S = subgroup_lattice_space(p, k, rank)
    assert X.n == size
    assert S.bottom() == size - 1
    assert check_invariant(X, S)
    report = check_dpc_iff_ww(X, S)
    assert report and report.weighted
    assert semilattice_from_order(specialisation_order(X)) == S


def test_subsemilattices():
    X, S = power_set_space(2)
    assert S.is_subsemilattice([0, 1, 3])
    assert not S.is_subsemilattice([1, 2])
    with pytest.raises(ValueError):
        MeetSL([[0, 1, 0], [1, 1, 2], [0, 2, 2]])
