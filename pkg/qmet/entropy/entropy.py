"""Trajectories, inert points and the intrinsic entropy of a meet-preserving map.

For an endomorphism phi and a point x, the trajectories are
T_n = x ∧ phi(x) ∧ ... ∧ phi^(n-1)(x). A point is inert for a relation when every T_n stays
related to x, and the entropy at x relative to a value function f is the limsup of
f(T_n) / n. Limits are estimated from a finite horizon, see :func:`entropy_point`.
"""
import itertools
import logging

import sympy
from tqdm import tqdm

from ..exceptions import (Disagreement, HorizonExceeded, MonotonicityViolated, PreconditionFailed,
                          RespectCheckFailed)
from ..utils import INF, to_value
from ..spaces.relations import Partition
from ..spaces.qmetric import components
from ..semilattices.correspondence import check_invariant, synth_wX
from ..semilattices.generators import enumerate_meet_semilattices, all_congruences
from .endomorphisms import SLEndo, meet_endomorphisms, respects

logger = logging.getLogger(__name__)

DEFAULT_HORIZON = 128
DEFAULT_WINDOW = 8
CRITERIA = ("auto", "a", "b", "c", "distance")


def trajectories(e, x, n):
    """Yield T_1, ..., T_n.

    On carriers that are not finite, meet preservation is checked on every pair the
    iteration combines.

    Raises
    ------
    HorizonExceeded
        When an element grows past the carrier budget; `step` is the index of the trajectory
        that could not be built.

    Examples
    --------
    >>> from qmet.entropy import integer_shift
    >>> [sorted(T) for T in trajectories(integer_shift(), frozenset({0}), 3)]
    [[0], [0, 1], [0, 1, 2]]
    """
    if n < 1:
        raise ValueError("Trajectory index must be positive, got {}.".format(n))
    carrier = e.carrier
    current, power = x, x
    for step in range(1, n + 1):
        yield current
        if step == n:
            return
        try:
            power = e(power)
            if not carrier.finite:
                e.check_pair(current, power)
            current = carrier.meet(current, power)
        except HorizonExceeded as error:
            raise HorizonExceeded(step + 1, error.budget)


def trajectory(e, x, n):
    """T_n = x ∧ phi(x) ∧ ... ∧ phi^(n-1)(x).

    Examples
    --------
    >>> from qmet.semilattices import MeetSL
    >>> from qmet.entropy import SLEndo
    >>> chain = MeetSL([[0, 0, 0], [0, 1, 1], [0, 1, 2]])
    >>> trajectory(SLEndo.from_table(chain, [0, 0, 1]), 2, 2)
    1
    """
    for current in trajectories(e, x, n):
        pass
    return current


def _same(e, rel):
    if isinstance(rel, Partition):
        return rel.same
    if isinstance(rel, GenNorm):
        return rel.same
    if rel == "distance":
        distance = e.carrier.distance
        return lambda a, b: distance(a, b) is not INF and distance(b, a) is not INF
    if callable(rel):
        return rel
    raise ValueError("A relation is a Partition, a GenNorm, a predicate or 'distance', got {!r}.".format(rel))


def _criterion_a(e, x, same, steps):
    return all(same(current, x) for current in trajectories(e, x, steps))


def _criterion_b(e, x, same, steps):
    meet = e.carrier.meet
    power = x
    for _ in range(steps):
        power = e(power)
        if not same(meet(x, power), x):
            return False
    return True


def _criterion_c(e, x, same):
    return same(e.carrier.meet(x, e(x)), x)


def is_inert(e, x, rel, criterion="auto", horizon=DEFAULT_HORIZON):
    """Whether x is inert: T_n(phi, x) is related to x for every n.

    Parameters
    ----------
    e : SLEndo
    x : element of ``e.carrier``
    rel : qmet.spaces.Partition, GenNorm, callable or "distance"
        The relation, usually a congruence. ``"distance"`` relates two points when both
        distances between them are finite.
    criterion : {"auto", "a", "b", "c", "distance"}
        ``"a"`` checks T_n directly, ``"b"`` checks x ∧ phi^n(x), ``"c"`` checks x ∧ phi(x) and
        needs a congruence respected by phi, ``"distance"`` checks d(x, phi(x)) < oo. ``"auto"``
        picks ``"distance"`` when `rel` is ``"distance"`` and ``"a"`` otherwise.
    horizon : int, defaults to 128
        Number of steps checked on carriers that are not finite. Finite carriers are checked
        until the trajectories stabilise.

    Returns
    -------
    bool

    Raises
    ------
    RespectCheckFailed
        For criterion ``"c"`` when phi does not respect `rel`.

    Examples
    --------
    >>> from qmet.semilattices import MeetSL
    >>> from qmet.spaces import Partition
    >>> from qmet.entropy import SLEndo, integer_shift
    >>> chain = MeetSL([[0, 0, 0], [0, 1, 1], [0, 1, 2]])
    >>> is_inert(SLEndo.from_table(chain, [0, 0, 0]), 2, Partition.discrete(3))
    False
    >>> is_inert(SLEndo.from_table(chain, [0, 0, 0]), 2, Partition.trivial(3))
    True
    >>> is_inert(integer_shift(), frozenset({0}), "distance")
    True
    """
    if criterion not in CRITERIA:
        raise ValueError("Unknown inertness criterion '{}'.".format(criterion))
    same = _same(e, rel)
    carrier = e.carrier
    if criterion == "auto":
        criterion = "distance" if isinstance(rel, str) else "a"
    # a finite orbit repeats and the trajectories stabilise within n steps
    steps = carrier.n + 1 if carrier.finite else horizon

    if criterion == "a":
        return _criterion_a(e, x, same, steps)
    if criterion == "b":
        return _criterion_b(e, x, same, steps)
    if criterion == "c":
        if not isinstance(rel, Partition) or not carrier.finite:
            raise ValueError("Criterion 'c' needs a congruence on a finite carrier.")
        verdict = respects(e, rel)
        if not verdict:
            raise RespectCheckFailed(verdict.witness)
        return _criterion_c(e, x, same)
    return carrier.distance(x, e(x)) is not INF


def inertness_criteria(e, x, cong):
    """The verdicts of criteria a, b and c at x, without checking that phi respects `cong`.

    On a finite carrier where phi respects the congruence the three agree.

    Examples
    --------
    >>> from qmet.entropy import diamond_endomorphism
    >>> e, cong = diamond_endomorphism()
    >>> inertness_criteria(e, 3, cong)
    {'a': False, 'b': False, 'c': True}
    """
    if not e.carrier.finite:
        raise ValueError("The three criteria are compared on finite carriers only.")
    same = _same(e, cong)
    steps = e.carrier.n + 1
    return {
        "a": _criterion_a(e, x, same, steps),
        "b": _criterion_b(e, x, same, steps),
        "c": _criterion_c(e, x, same),
    }


class EntropyEstimate:
    """An estimate of limsup f(T_n) / n from the first `horizon` trajectories.

    Attributes
    ----------
    value : sympy.Rational
    horizon : int
    converged : bool
        True when the increments f(T_(n+1)) - f(T_n) were constant over the trailing window;
        `value` is then that increment.
    increments : tuple of sympy.Rational
        The trailing window of increments.
    log_base : int or None
        When set, `value` is in units of log(`log_base`).
    """

    def __init__(self, value, horizon, converged, increments, log_base=None):
        self.value = value
        self.horizon = horizon
        self.converged = bool(converged)
        self.increments = tuple(increments)
        self.log_base = log_base

    @property
    def nats(self):
        """float: The value in natural-log units, for display."""
        if self.log_base is None:
            return float(self.value)
        return float(self.value * sympy.log(self.log_base))

    def __repr__(self):
        return "EntropyEstimate(value={}, converged={}, horizon={})".format(self.value, self.converged,
                                                                            self.horizon)


def entropy_point(e, x, f, horizon=DEFAULT_HORIZON, window=DEFAULT_WINDOW, log_base=None):
    """Estimate the entropy of phi at x relative to the value function `f`.

    The values a_n = f(T_n) are computed for n = 1, ..., `horizon`. When the last `window`
    increments a_(n+1) - a_n are equal, that increment is the limit. Otherwise the estimate is
    the largest a_n / n over the last `window` indices and is flagged as not converged.

    Parameters
    ----------
    e : SLEndo
    x : element of ``e.carrier``
        Should be inert for the relation `f` is defined against.
    f : callable
        Maps elements to finite rationals.
    horizon : int, defaults to 128
    window : int, defaults to 8
    log_base : int, defaults to None

    Returns
    -------
    EntropyEstimate

    Raises
    ------
    HorizonExceeded

    Examples
    --------
    >>> from qmet.entropy import integer_shift, distance_from_seed
    >>> shift = integer_shift()
    >>> A = frozenset({0})
    >>> entropy_point(shift, A, distance_from_seed(shift.carrier, A), horizon=64)
    EntropyEstimate(value=1, converged=True, horizon=64)
    """
    if window < 1:
        raise ValueError("The window must be positive, got {}.".format(window))
    if horizon <= window:
        raise ValueError("The horizon {} must exceed the window {}.".format(horizon, window))
    values = []
    for current in trajectories(e, x, horizon):
        value = to_value(f(current), allow_negative=True)
        if value is INF:
            raise ValueError("f is infinite at T_{}.".format(len(values) + 1))
        values.append(value)
    increments = [values[n + 1] - values[n] for n in range(horizon - window - 1, horizon - 1)]
    if len(set(increments)) == 1:
        estimate = EntropyEstimate(increments[0], horizon, True, increments, log_base)
    else:
        ratio = max(values[n] / (n + 1) for n in range(horizon - window, horizon))
        estimate = EntropyEstimate(ratio, horizon, False, increments, log_base)
    logger.debug("entropy at %s: %s", e.carrier.format(x), estimate)
    return estimate


class EntropySup:
    """The largest entropy over a list of seeds.

    Attributes
    ----------
    value : sympy.Rational or None
        None when no seed is inert.
    exact : bool
        Whether the seeds covered every element of a finite carrier.
    table : list of tuple
        ``(seed, EntropyEstimate or None)`` per seed; None marks a seed that is not inert.
    """

    def __init__(self, value, exact, table):
        self.value = value
        self.exact = bool(exact)
        self.table = list(table)

    @property
    def flag(self):
        """str: ``"exact"`` or ``"lower bound"``."""
        return "exact" if self.exact else "lower bound"

    @property
    def converged(self):
        return all(estimate.converged for _, estimate in self.table if estimate is not None)

    def __repr__(self):
        return "EntropySup(value={}, flag='{}')".format(self.value, self.flag)


def _sup(e, seeds, table):
    estimates = [estimate.value for _, estimate in table if estimate is not None]
    value = max(estimates) if estimates else None
    exact = e.carrier.finite and set(e.carrier.elements()) <= set(seeds)
    return EntropySup(value, exact, table)


def entropy_sup(e, f, rel, seeds, horizon=DEFAULT_HORIZON, window=DEFAULT_WINDOW, criterion="auto",
                log_base=None):
    """The intrinsic entropy of phi relative to `f` and `rel`, over the inert seeds.

    Parameters
    ----------
    e : SLEndo
    f : callable
    rel : see :func:`is_inert`
    seeds : list
        Candidate points. The supremum is exact only for a finite carrier when the seeds cover
        every point.
    horizon, window : int
    criterion : str, defaults to "auto"
    log_base : int, defaults to None

    Returns
    -------
    EntropySup

    Examples
    --------
    >>> from qmet.entropy import integer_shift, distance_from_seed
    >>> shift = integer_shift()
    >>> seeds = [frozenset({0}), frozenset({0, 5}), frozenset({-3, 3})]
    >>> result = entropy_sup(shift, lambda T: len(T), "distance", seeds, horizon=32)
    >>> result, result.converged
    (EntropySup(value=1, flag='lower bound'), True)
    """
    seeds = list(seeds)
    table = []
    for seed in seeds:
        if is_inert(e, seed, rel, criterion, horizon):
            table.append((seed, entropy_point(e, seed, f, horizon, window, log_base)))
        else:
            logger.debug("seed %s is not inert", e.carrier.format(seed))
            table.append((seed, None))
    return _sup(e, seeds, table)


class GenNorm:
    """A generalised norm v: elements to nonnegative rationals or oo.

    It induces the value function f_v (v on the finite part F_v, 0 elsewhere) and the
    two-block relation that separates F_v from the rest.

    Parameters
    ----------
    v : callable
    name : str, defaults to None

    Examples
    --------
    >>> v = cardinality_norm()
    >>> v(frozenset({1, 2})), v.f(frozenset({1, 2}))
    (2, 2)
    >>> v.same(frozenset(), frozenset({4}))
    True
    """

    def __init__(self, v, name=None):
        self._v = v
        self.name = name

    @classmethod
    def from_values(cls, values, name=None):
        """The norm of a finite carrier given by one value per point."""
        values = tuple(to_value(value) for value in values)
        return cls(values.__getitem__, name)

    def __call__(self, x):
        return to_value(self._v(x))

    def in_domain(self, x):
        """Whether v(x) is finite."""
        return self(x) is not INF

    def f(self, x):
        value = self(x)
        return sympy.Integer(0) if value is INF else value

    def same(self, a, b):
        return self.in_domain(a) == self.in_domain(b)

    def __repr__(self):
        return "GenNorm({})".format(self.name or self._v)


def cardinality_norm():
    """v(A) = |A| on finite subsets; f_v gives the set-theoretic entropy."""
    return GenNorm(lambda A: len(A), "cardinality")


def log_order_norm():
    """v(H) = log_p |H| on finite subgroups; f_v gives the algebraic entropy in log_p units."""
    return GenNorm(lambda H: H.log_order, "log order")


def gennorm_entropy(e, v, seeds, horizon=DEFAULT_HORIZON, window=DEFAULT_WINDOW, log_base=None):
    """The entropy of phi relative to f_v and the relation of a generalised norm v.

    Every seed of finite norm is inert, so no separate inertness check runs: a trajectory of
    infinite norm means v is not subadditive and raises :class:`Disagreement`.

    Raises
    ------
    ValueError
        For a seed of infinite norm.
    MonotonicityViolated
        When v(phi(y)) > v(y) at some y of the first `horizon` points of a seed's orbit.

    Examples
    --------
    >>> from qmet.entropy import integer_shift, identity
    >>> gennorm_entropy(integer_shift(), cardinality_norm(), [frozenset({0})], horizon=32)
    EntropySup(value=1, flag='lower bound')
    >>> shift = integer_shift()
    >>> gennorm_entropy(identity(shift.carrier), cardinality_norm(), [frozenset({0})], horizon=32).value
    0
    """
    seeds = list(seeds)
    table = []
    for seed in seeds:
        if not v.in_domain(seed):
            raise ValueError("Seed {} has infinite norm.".format(e.carrier.format(seed)))
        point = seed
        for _ in range(horizon):
            image = e(point)
            if v(image) > v(point):
                raise MonotonicityViolated(e.carrier.format(point))
            point = image

        def checked(current):
            value = v(current)
            if value is INF:
                raise Disagreement("A trajectory of {} has infinite norm.".format(e.carrier.format(seed)))
            return value

        table.append((seed, entropy_point(e, seed, checked, horizon, window, log_base)))
    return _sup(e, seeds, table)


def distance_from_seed(carrier, x):
    """The value function T -> d(x, T)."""
    return lambda current: carrier.distance(x, current)


def weight_value(w):
    """The value function of a (componentwise) weak weight on a finite carrier."""
    return lambda current: w[current]


class RepresentativeReport:
    """Entropy of the glued weight w_X for each choice of component representatives.

    Attributes
    ----------
    rows : list of tuple
        ``(representatives, EntropyEstimate)``.
    """

    def __init__(self, rows):
        self.rows = list(rows)

    @property
    def values(self):
        """list of sympy.Rational: The distinct entropy values, sorted."""
        return sorted({estimate.value for _, estimate in self.rows})

    def __repr__(self):
        return "RepresentativeReport(choices={}, values={})".format(len(self.rows), self.values)


def representative_dependence(X, S, e, x, horizon=DEFAULT_HORIZON, window=DEFAULT_WINDOW, max_choices=64):
    """Record the entropy at x of w_X for every choice of representatives.

    The space needs to be invariant but not to satisfy the descending path condition; without
    it the glued differences need not be a weight, and whether the entropy depends on the
    representatives is left open. Nothing is asserted.

    Parameters
    ----------
    X : qmet.spaces.GQSpace
    S : qmet.semilattices.MeetSL
    e : SLEndo
        On a finite carrier over `S`.
    x : int
        Inert for the components of `X`.
    horizon, window : int
    max_choices : int, defaults to 64

    Returns
    -------
    RepresentativeReport

    Raises
    ------
    PreconditionFailed
        Naming ``"invariance"`` or ``"inertness"``.

    Examples
    --------
    >>> from qmet.spaces import GQSpace
    >>> from qmet.semilattices import MeetSL
    >>> chain = MeetSL([[0, 0, 0], [0, 1, 1], [0, 1, 2]])
    >>> X = GQSpace([[0, 0, 0], [1, 0, 0], [1, 1, 0]])
    >>> representative_dependence(X, chain, SLEndo.from_table(chain, [0, 0, 1]), 2, horizon=16)
    RepresentativeReport(choices=3, values=[0])
    """
    if not e.carrier.finite or e.carrier.semilattice != S:
        raise ValueError("The endomorphism must act on the semilattice of the space.")
    verdict = check_invariant(X, S)
    if not verdict:
        raise PreconditionFailed("invariance", verdict.witness)
    partition = components(X)
    if not is_inert(e, x, partition):
        raise PreconditionFailed("inertness", (x,))
    rows = []
    for representatives in itertools.islice(itertools.product(*partition.blocks), max_choices):
        values = synth_wX(X, S, list(representatives), require_dpc=False)
        rows.append((representatives, entropy_point(e, x, weight_value(values), horizon, window)))
    report = RepresentativeReport(rows)
    logger.debug("representative dependence at %d: %s", x, report)
    return report


def exhaustive_inertness_check(max_size=5, verbose=False):
    """Check that criteria a, b and c agree for every respecting endomorphism.

    Runs over every meet-semilattice with at most `max_size` points, every meet endomorphism
    and every congruence that the endomorphism respects.

    Returns
    -------
    dict
        Counts ``{"semilattices": ..., "pairs": ..., "points": ..., "inert": ...}``, where a pair is
        an endomorphism with a respected congruence.

    Raises
    ------
    Disagreement
        With witness ``(table, blocks, x)``.
    """
    counts = {"semilattices": 0, "pairs": 0, "points": 0, "inert": 0}
    for S in tqdm(enumerate_meet_semilattices(max_size), desc="semilattices", disable=not verbose):
        counts["semilattices"] += 1
        congruences = all_congruences(S)
        for table in meet_endomorphisms(S):
            e = SLEndo.from_table(S, table)
            for cong in congruences:
                if not respects(e, cong):
                    continue
                counts["pairs"] += 1
                for x in range(S.n):
                    verdicts = inertness_criteria(e, x, cong)
                    if len(set(verdicts.values())) != 1:
                        raise Disagreement("Inertness criteria disagree: {}.".format(verdicts),
                                           (table, cong.blocks, x))
                    counts["points"] += 1
                    counts["inert"] += verdicts["a"]
    logger.debug("inertness check: %s", counts)
    return counts
