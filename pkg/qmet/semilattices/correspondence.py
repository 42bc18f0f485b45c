"""Invariance, the distance of a co-valuation and the weight correspondences.

Join-semilattices are handled by duality: `S` stores the meet table of the opposite order,
and the join statements are the meet statements for the conjugate space.
"""
import logging

import numpy as np
from tqdm import tqdm

from ..exceptions import Disagreement, PreconditionFailed, NotStrictlyDecreasing, NotCWW
from ..utils import INF, Verdict
from ..spaces.relations import Partition
from ..spaces.qmetric import GQSpace, components, conjugate, specialisation_order, check_dpc
from ..weights.weights import CWeakWeight, synth_cweak_weight, verify_weight
from ..partial_metrics.partial_metric import p_from_dw, roundtrip_check
from .semilattice import check_congruence
from .valuations import as_function, base_order, check_valuation, dual_flavour
from .generators import (enumerate_meet_semilattices, random_union_closed_family, random_congruence,
                         random_covaluation, truncate)

logger = logging.getLogger(__name__)

COVALUATION_FLAVOURS = ("meet-coval", "join-coval")


class InvarianceVerdict(Verdict):
    """Verdict of :func:`check_invariant`, with the verdict of each equivalent form.

    Attributes
    ----------
    forms : dict
        ``"identity"``: d(x, y) = d(x, x ∧ y). ``"shift"``: d(z ∧ x, z ∧ y) <= d(x, y).
        ``"subadditive"``: d(x, y ∧ z) <= d(x, y) + d(x, z).
    """

    def __init__(self, forms):
        identity = forms["identity"]
        super().__init__(identity.holds, identity.witness)
        self.forms = forms

    def __repr__(self):
        return "InvarianceVerdict(holds={}, witness={})".format(self.holds, self.witness)


def _require_order(X, S):
    if specialisation_order(X) != S.order:
        raise PreconditionFailed("S is the semilattice of the specialisation order")


def check_invariant(X, S):
    """Check that d(x, y) = d(x, x ∧ y) for all x, y.

    The two equivalent forms (non-expansive shifts z ∧ -, and subadditivity in the second
    argument) are evaluated too, and all three must agree.

    Parameters
    ----------
    X : qmet.spaces.GQSpace
    S : MeetSL
        The meet-semilattice of the specialisation order of `X`.

    Returns
    -------
    InvarianceVerdict
        The witness is the pair ``(x, y)`` breaking the identity.

    Raises
    ------
    PreconditionFailed
        When the order of `S` is not the specialisation order of `X`.

    Examples
    --------
    >>> from qmet.spaces import GQSpace
    >>> from qmet.semilattices import MeetSL
    >>> V = GQSpace([[0, 0, 0], [2, 0, 1], [2, 1, 0]])
    >>> S = MeetSL([[0, 0, 0], [0, 1, 0], [0, 0, 2]])
    >>> check_invariant(V, S)
    InvarianceVerdict(holds=False, witness=(1, 2))
    >>> sorted(check_invariant(V, S).forms)
    ['identity', 'shift', 'subadditive']
    """
    _require_order(X, S)
    d = X.d
    n = X.n
    meet = S.meet

    identity = Verdict(True)
    for x in range(n):
        for y in range(n):
            if d[x][y] != d[x][meet(x, y)]:
                identity = Verdict(False, (x, y))
                break
        if not identity:
            break

    shift = Verdict(True)
    subadditive = Verdict(True)
    for x in range(n):
        for y in range(n):
            for z in range(n):
                if shift and not d[meet(z, x)][meet(z, y)] <= d[x][y]:
                    shift = Verdict(False, (x, y, z))
                if subadditive and not d[x][meet(y, z)] <= d[x][y] + d[x][z]:
                    subadditive = Verdict(False, (x, y, z))

    forms = {"identity": identity, "shift": shift, "subadditive": subadditive}
    if len({bool(v) for v in forms.values()}) != 1:
        raise Disagreement("Equivalent forms of invariance disagree: {}.".format(forms))
    return InvarianceVerdict(forms)


def _check_flavour(flavour):
    if flavour not in COVALUATION_FLAVOURS:
        raise ValueError("Unknown flavour '{}', expected one of {}.".format(flavour, COVALUATION_FLAVOURS))


def _not_strict_witness(values, order, cong):
    for x in range(order.n):
        for y in order.up_set(x):
            if y == x or (cong is not None and not cong.same(x, y)):
                continue
            if not values[x] > values[y]:
                return (x, y)
    return None


def dist_from_covaluation(S, f, cong=None, flavour="meet-coval"):
    """The distance d_f of a strictly decreasing (generalised) co-valuation.

    Meet flavour: d_f(x, y) = f(x ∧ y) - f(x). Join flavour, with `S` built by
    :func:`join_semilattice_from_order`: d_f(x, y) = f(y) - f(x ∨ y). With a congruence the
    value is infinite unless x ≅ x ∧ y (respectively y ≅ x ∨ y).

    Parameters
    ----------
    S : MeetSL
    f : list
    cong : qmet.spaces.Partition, defaults to None
    flavour : {"meet-coval", "join-coval"}

    Returns
    -------
    qmet.spaces.GQSpace
        An invariant space whose specialisation order is the order of the flavour, whose
        components are the blocks of `cong` and which `f` weighs block by block.

    Raises
    ------
    PreconditionFailed
        When `f` is not a co-valuation of the flavour.
    NotStrictlyDecreasing
        With a pair x < y (in one block) where f(x) <= f(y).

    Examples
    --------
    >>> from qmet.semilattices import MeetSL
    >>> from qmet.spaces import Partition
    >>> chain = MeetSL([[0, 0, 0], [0, 1, 1], [0, 1, 2]])
    >>> dist_from_covaluation(chain, [2, 1, 0]).d
    ((0, 0, 0), (1, 0, 0), (2, 1, 0))
    >>> dist_from_covaluation(chain, [5, 1, 0], Partition([[0], [1, 2]])).d
    ((0, 0, 0), (oo, 0, 0), (oo, 1, 0))
    >>> dist_from_covaluation(chain, [0, 1, 2])
    Traceback (most recent call last):
        ...
    qmet.exceptions.NotStrictlyDecreasing: Function is not strictly decreasing on (0, 1).
    """
    _check_flavour(flavour)
    values = as_function(f, S.n)
    order = base_order(S, flavour)
    witness = _not_strict_witness(values, order, cong)
    if witness is not None:
        raise NotStrictlyDecreasing(witness)
    verdict = check_valuation(S, values, flavour, cong)
    if not verdict:
        raise PreconditionFailed(flavour, verdict.witness)

    n = S.n
    meet = S.meet
    rows = [[INF] * n for _ in range(n)]
    for x in range(n):
        for y in range(n):
            xy = meet(x, y)
            if flavour == "meet-coval":
                if cong is None or cong.same(x, xy):
                    rows[x][y] = values[xy] - values[x]
            elif cong is None or cong.same(y, xy):
                rows[x][y] = values[y] - values[xy]
    X = GQSpace(rows)

    if specialisation_order(X) != order:
        raise Disagreement("The order of d_f differs from the order of f.")
    expected = cong if cong is not None else Partition.trivial(n)
    if components(X) != expected:
        raise Disagreement("The components of d_f differ from the congruence.")
    meet_space = X if flavour == "meet-coval" else conjugate(X)
    if not check_invariant(meet_space, S):
        raise Disagreement("d_f is not invariant.")
    if not verify_weight(X, values, "componentwise"):
        raise Disagreement("f does not weigh d_f.")
    logger.debug("d_f built on %d points with %d components", n, len(expected))
    return X


def _require_invariant(X, S):
    verdict = check_invariant(X, S)
    if not verdict:
        raise PreconditionFailed("invariance", verdict.witness)


def _wx_values(X, x):
    partition = components(X)
    block = partition.blocks[partition.block_of(x)]
    return {y: X.d[x][y] - X.d[y][x] for y in block}


def synth_wx(X, S, x, require_dpc=True):
    """The weak weight w_x(y) = d(x, y) - d(y, x) on the component of `x`.

    Parameters
    ----------
    X : qmet.spaces.GQSpace
        Invariant, with the descending path condition.
    S : MeetSL
    x : int
    require_dpc : bool, defaults to True
        With False the differences are returned for spaces without the descending path
        condition too, where they need not form a weak weight.

    Returns
    -------
    dict
        Maps each point y of the component of `x` to w_x(y).

    Raises
    ------
    PreconditionFailed
        Naming ``"invariance"`` or ``"DPC"``.

    Examples
    --------
    >>> from qmet.spaces import GQSpace
    >>> from qmet.semilattices import MeetSL
    >>> chain = GQSpace([[0, 0, 0], [1, 0, 0], [2, 1, 0]])
    >>> synth_wx(chain, MeetSL([[0, 0, 0], [0, 1, 1], [0, 1, 2]]), 2)
    {0: 2, 1: 1, 2: 0}
    """
    _require_invariant(X, S)
    if not require_dpc:
        return _wx_values(X, x)
    dpc = check_dpc(X)
    if not dpc:
        raise PreconditionFailed("DPC", dpc.witness)
    values = _wx_values(X, x)
    block = sorted(values)
    if not verify_weight(X.restrict(block), [values[y] for y in block], "weak"):
        raise Disagreement("w_x is not a weak weight of the component of x.", (x,))
    return values


def synth_wX(X, S, representatives=None, require_dpc=True):
    """Glue the weights w_x of one representative x per component.

    Parameters
    ----------
    X : qmet.spaces.GQSpace
    S : MeetSL
    representatives : list of int, defaults to None
        One point per component, in the order of ``components(X)``; the smallest index of each
        component when omitted.
    require_dpc : bool, defaults to True
        Passed on to :func:`synth_wx`.

    Returns
    -------
    qmet.weights.CWeakWeight or tuple
        A tuple of the glued values when `require_dpc` is False.

    Examples
    --------
    >>> from qmet.spaces import GQSpace
    >>> from qmet.semilattices import MeetSL
    >>> chain = GQSpace([[0, 0, 0], [1, 0, 0], [2, 1, 0]])
    >>> synth_wX(chain, MeetSL([[0, 0, 0], [0, 1, 1], [0, 1, 2]]), [1]).values
    (1, 0, -1)
    """
    partition = components(X)
    if representatives is None:
        representatives = [block[0] for block in partition]
    if len(representatives) != len(partition):
        raise ValueError("Got {} representatives for {} components.".format(len(representatives), len(partition)))
    values = [None] * X.n
    for block, x in zip(partition, representatives):
        if x not in block:
            raise ValueError("Representative {} is not in component {}.".format(x, block))
        for y, v in synth_wx(X, S, x, require_dpc).items():
            values[y] = v
    if not require_dpc:
        return tuple(values)
    return CWeakWeight(values, partition)


class DpcWeightReport:
    """Both sides of "DPC iff componentwise weakly weighted" for an invariant space.

    Attributes
    ----------
    dpc : Verdict
    weighted : Verdict
        Witness ``(component, pair)`` on failure.
    weight : qmet.weights.CWeakWeight or None
    """

    def __init__(self, dpc, weighted, weight):
        self.dpc = dpc
        self.weighted = weighted
        self.weight = weight

    @property
    def holds(self):
        return self.dpc.holds

    def __bool__(self):
        return self.holds

    def __repr__(self):
        return "DpcWeightReport(dpc={!r}, weighted={!r})".format(self.dpc, self.weighted)


def check_dpc_iff_ww(X, S):
    """Check DPC and componentwise weak weightedness and assert that they agree.

    Parameters
    ----------
    X : qmet.spaces.GQSpace
        Invariant.
    S : MeetSL

    Returns
    -------
    DpcWeightReport

    Raises
    ------
    PreconditionFailed
        When `X` is not invariant.
    Disagreement
        When exactly one of the two conditions holds.

    Examples
    --------
    >>> from qmet.spaces import GQSpace
    >>> from qmet.semilattices import MeetSL
    >>> chain = MeetSL([[0, 0, 0], [0, 1, 1], [0, 1, 2]])
    >>> check_dpc_iff_ww(GQSpace([[0, 0, 0], [1, 0, 0], [1, 1, 0]]), chain)
    DpcWeightReport(dpc=Verdict(holds=False, witness=(2, 1, 0)), weighted=Verdict(holds=False, witness=(0, (1, 2))))
    """
    _require_invariant(X, S)
    dpc = check_dpc(X)
    try:
        weight = synth_cweak_weight(X)
        weighted = Verdict(True)
    except NotCWW as e:
        weight = None
        weighted = Verdict(False, (e.component, e.witness))
    if dpc.holds != weighted.holds:
        raise Disagreement("DPC and weak weightedness disagree: {} vs {}.".format(dpc, weighted))
    return DpcWeightReport(dpc, weighted, weight)


class MSpaceVerdict(Verdict):
    """Verdict of :func:`check_mspace`, carrying the constant c'_x of every point."""

    def __init__(self, holds, constants, witness=None):
        super().__init__(holds, witness)
        self.constants = constants


def check_mspace(X, S, mode="m"):
    """Compute the m-space (or M-space) constants of an invariant space with DPC.

    Mode ``m``: c'_x = max d(x, y) over y <= x in the component of x, with `S` the
    meet-semilattice of the order. Mode ``M``: c'_x = max d(y, x) over y >= x, with `S` the
    join-semilattice built by :func:`join_semilattice_from_order`. The constants are cross-checked
    against the bounds of w_x: max w_x = c'_x in mode m and min w_x = -c'_x in mode M.

    Returns
    -------
    MSpaceVerdict

    Examples
    --------
    >>> from qmet.spaces import GQSpace
    >>> from qmet.semilattices import MeetSL
    >>> chain = GQSpace([[0, 0, 0], [1, 0, 0], [2, 1, 0]])
    >>> check_mspace(chain, MeetSL([[0, 0, 0], [0, 1, 1], [0, 1, 2]]), "m").constants
    (0, 1, 2)
    """
    if mode not in ("m", "M"):
        raise ValueError("Unknown mode '{}', expected 'm' or 'M'.".format(mode))
    Y = X if mode == "m" else conjugate(X)
    _require_invariant(Y, S)
    dpc = check_dpc(Y)
    if not dpc:
        raise PreconditionFailed("DPC", dpc.witness)

    d = Y.d
    partition = components(Y)
    constants = []
    for x in range(Y.n):
        below = [y for y in S.order.down_set(x) if partition.same(x, y)]
        constant = max(d[x][y] for y in below)
        bound = max(_wx_values(Y, x).values())
        if bound != constant:
            raise Disagreement("The bound of w_x differs from c'_x.", (x,))
        constants.append(constant)
    return MSpaceVerdict(True, tuple(constants))


def correspondence_roundtrip(S, cong=None, rng=None, trials=1, flavour="meet-coval"):
    """Round trip random co-valuations through distances and weights.

    For each trial a random strictly decreasing co-valuation f is drawn. Then -f must be a
    valuation of the dual flavour, d_f must satisfy DPC, the glued weight w of d_f must
    give back d_w = d_f, and p = d_f + w must survive both partial metric round trips.

    Parameters
    ----------
    S : MeetSL
    cong : qmet.spaces.Partition, defaults to None
    rng : numpy.random.Generator, defaults to None
    trials : int, defaults to 1
    flavour : {"meet-coval", "join-coval"}

    Returns
    -------
    Verdict
        On failure the reason names the broken leg and the witness is its evidence.

    Examples
    --------
    >>> from qmet.semilattices import MeetSL
    >>> correspondence_roundtrip(MeetSL([[0, 0, 0], [0, 1, 1], [0, 1, 2]]), trials=3)
    Verdict(holds=True, witness=None)
    """
    _check_flavour(flavour)
    if rng is None:
        rng = np.random.default_rng(0)
    if cong is not None:
        verdict = check_congruence(S, cong)
        if not verdict:
            raise ValueError("{} is not a congruence: {} at {}.".format(cong, verdict.reason, verdict.witness))

    for _ in range(trials):
        f = random_covaluation(rng, S, cong, flavour=flavour)
        dual = check_valuation(S, [-v for v in f], dual_flavour(flavour), cong)
        if not dual:
            return Verdict(False, dual.witness, "duality")
        X = dist_from_covaluation(S, f, cong, flavour)
        dpc = check_dpc(X)
        if not dpc:
            return Verdict(False, dpc.witness, "DPC")

        meet_space = X if flavour == "meet-coval" else conjugate(X)
        w = synth_wX(meet_space, S)
        if not w.is_equivalent(f if flavour == "meet-coval" else [-v for v in f]):
            return Verdict(False, None, "weight")
        back = dist_from_covaluation(S, list(w.values), w.partition)
        if back.d != meet_space.d:
            return Verdict(False, None, "d_w")
        partial = roundtrip_check(meet_space, w, p_from_dw(meet_space, w))
        if not partial:
            return Verdict(False, partial.witness, "partial metric")
    return Verdict(True)


def check_top_bottom_signs(X, S):
    """Sign and additivity of the weights anchored at the bottom and the top.

    For a quasi-metric meet-semilattice with bottom b, w_b(x) = -d(x, b) is nonpositive and
    supadditive: w_b(x ∧ y) >= w_b(x) + w_b(y). When there is a top t and `X` is invariant,
    w_t(x) = d(t, x) is nonnegative and subadditive.

    Returns
    -------
    dict
        ``{"bottom": Verdict, "top": Verdict or None}``. ``"top"`` is None without a top or
        without invariance.

    Examples
    --------
    >>> from qmet.spaces import GQSpace
    >>> from qmet.semilattices import MeetSL
    >>> chain = GQSpace([[0, 0, 0], [1, 0, 0], [2, 1, 0]])
    >>> check_top_bottom_signs(chain, MeetSL([[0, 0, 0], [0, 1, 1], [0, 1, 2]]))
    {'bottom': Verdict(holds=True, witness=None), 'top': Verdict(holds=True, witness=None)}
    """
    _require_order(X, S)
    if not X.is_quasi_metric():
        raise PreconditionFailed("finite distances")
    n = X.n
    d = X.d
    meet = S.meet

    b = S.bottom()
    w_bottom = [-d[x][b] for x in range(n)]
    bottom = Verdict(True)
    for x in range(n):
        if w_bottom[x] > 0:
            bottom = Verdict(False, (x,), "sign")
            break
        for y in range(n):
            if w_bottom[meet(x, y)] < w_bottom[x] + w_bottom[y]:
                bottom = Verdict(False, (x, y), "supadditivity")
                break
        if not bottom:
            break
    if not bottom:
        raise Disagreement("w_bottom breaks its sign or supadditivity.", bottom.witness)

    t = S.top()
    top = None
    if t is not None and check_invariant(X, S):
        w_top = [d[t][x] for x in range(n)]
        top = Verdict(True)
        for x in range(n):
            if w_top[x] < 0:
                top = Verdict(False, (x,), "sign")
                break
            for y in range(n):
                if w_top[meet(x, y)] > w_top[x] + w_top[y]:
                    top = Verdict(False, (x, y), "subadditivity")
                    break
            if not top:
                break
        if not top:
            raise Disagreement("w_top breaks its sign or subadditivity.", top.witness)
    return {"bottom": bottom, "top": top}


def exhaustive_dpc_ww_check(max_size=5, per_semilattice=20, rng=None, verbose=False):
    """Check "DPC iff componentwise weakly weighted" over every small meet-semilattice.

    For each semilattice, `per_semilattice` invariant spaces are drawn: d_f for random
    co-valuations (with a random congruence every other time), and every third one is truncated
    to produce invariant spaces without DPC.

    Returns
    -------
    dict
        Counts ``{"spaces": ..., "weighted": ..., "not_weighted": ...}``.

    Raises
    ------
    Disagreement
        On a counterexample.
    """
    if rng is None:
        rng = np.random.default_rng(0)
    counts = {"spaces": 0, "weighted": 0, "not_weighted": 0}
    semilattices = enumerate_meet_semilattices(max_size)
    for S in tqdm(semilattices, desc="semilattices", disable=not verbose):
        for trial in range(per_semilattice):
            cong = random_congruence(rng, S) if trial % 2 else None
            X = dist_from_covaluation(S, random_covaluation(rng, S, cong), cong)
            if trial % 3 == 2:
                finite = sorted({v for row in X.d for v in row if v is not INF and v > 0})
                if finite:
                    X = truncate(X, finite[int(rng.integers(0, len(finite)))] / 2)
            report = check_dpc_iff_ww(X, S)
            counts["spaces"] += 1
            counts["weighted" if report else "not_weighted"] += 1
    logger.debug("DPC / weak weight check: %s", counts)
    return counts


def random_correspondence_check(rng=None, trials=200, max_size=5, verbose=False):
    """Run :func:`correspondence_roundtrip` on random semilattices and congruences.

    Even trials use an enumerated semilattice of at most `max_size` points, odd trials a random
    union-closed family. Half of the trials use a random congruence.

    Returns
    -------
    int
        The number of trials, all of which passed.

    Raises
    ------
    Disagreement
        With the failing leg.
    """
    if rng is None:
        rng = np.random.default_rng(0)
    semilattices = enumerate_meet_semilattices(max_size)
    for trial in tqdm(range(trials), desc="round trips", disable=not verbose):
        if trial % 2:
            S = random_union_closed_family(rng)
        else:
            S = semilattices[int(rng.integers(0, len(semilattices)))]
        cong = random_congruence(rng, S) if rng.random() < 0.5 else None
        verdict = correspondence_roundtrip(S, cong, rng)
        if not verdict:
            raise Disagreement("Round trip breaks at {}.".format(verdict.reason), verdict.witness)
    return trials
