import itertools
import logging

import numpy as np
import sympy

from ..exceptions import NotASemilattice
from ..utils import INF, to_value
from ..spaces.relations import OrderRel, Partition
from ..spaces.qmetric import GQSpace
from .semilattice import MeetSL, semilattice_from_order, check_congruence, congruence_closure

logger = logging.getLogger(__name__)


def _canonical_key(leq):
    n = leq.shape[0]
    best = None
    for perm in itertools.permutations(range(n)):
        perm = list(perm)
        key = tuple(leq[np.ix_(perm, perm)].flatten().tolist())
        if best is None or key < best[0]:
            best = (key, perm)
    return best


def enumerate_meet_semilattices(max_size):
    """Every meet-semilattice with at most `max_size` points, one per isomorphism type.

    Orders are generated with a natural labelling (x < y only when x has the smaller index),
    closed transitively, and deduplicated by a canonical form over all relabellings. The cost
    grows like ``2**(n*(n-1)/2) * n!``, so sizes above 5 are slow.

    Parameters
    ----------
    max_size : int

    Returns
    -------
    list of MeetSL
        Ordered by size.

    Examples
    --------
    >>> [S.n for S in enumerate_meet_semilattices(4)]
    [1, 2, 3, 3, 4, 4, 4, 4, 4]
    """
    if max_size < 1:
        raise ValueError("max_size must be positive, got {}.".format(max_size))
    found = []
    for n in range(1, max_size + 1):
        pairs = list(itertools.combinations(range(n), 2))
        seen = {}
        for mask in range(2 ** len(pairs)):
            leq = np.eye(n, dtype=bool)
            for bit, (x, y) in enumerate(pairs):
                if mask >> bit & 1:
                    leq[x, y] = True
            composed = (leq.astype(np.int64) @ leq.astype(np.int64)) > 0
            if (composed != leq).any():
                continue
            key, perm = _canonical_key(leq)
            if key in seen:
                continue
            relabelled = leq[np.ix_(perm, perm)]
            try:
                seen[key] = semilattice_from_order(OrderRel(relabelled))
            except NotASemilattice:
                seen[key] = None
        size_found = [S for _, S in sorted(seen.items(), key=lambda item: item[0]) if S is not None]
        logger.debug("%d meet-semilattices of size %d", len(size_found), n)
        found.extend(size_found)
    return found


def _set_label(mask, ground):
    return "{" + ",".join(str(i) for i in range(ground) if mask >> i & 1) + "}"


def family_semilattice(masks, ground):
    """The meet-semilattice of a union-closed family of subsets ordered by reverse inclusion.

    Subsets are bitmasks over ``{0, ..., ground-1}``; the meet of two members is their union.

    Examples
    --------
    >>> S = family_semilattice([0b00, 0b01, 0b10, 0b11], 2)
    >>> S.labels
    ('{}', '{0}', '{1}', '{0,1}')
    >>> S.meet(1, 2), S.bottom(), S.top()
    (3, 3, 0)
    """
    masks = sorted(set(masks))
    index = {mask: i for i, mask in enumerate(masks)}
    table = []
    for a in masks:
        row = []
        for b in masks:
            if a | b not in index:
                raise ValueError("Family is not closed under union: {} and {}.".format(
                    _set_label(a, ground), _set_label(b, ground)))
            row.append(index[a | b])
        table.append(row)
    return MeetSL(table, [_set_label(mask, ground) for mask in masks])


def random_union_closed_family(rng, ground=4, size=3):
    """A random finite meet-semilattice: `size` random subsets closed under union, ordered by ⊇.

    Every finite meet-semilattice arises this way for a large enough ground set.

    Parameters
    ----------
    rng : numpy.random.Generator
    ground : int, defaults to 4
    size : int, defaults to 3
        Number of random generating subsets.

    Returns
    -------
    MeetSL

    Examples
    --------
    >>> S = random_union_closed_family(np.random.default_rng(0), ground=3, size=2)
    >>> S.n <= 4
    True
    """
    family = {0}
    for mask in rng.integers(0, 2 ** ground, size=size):
        family.add(int(mask))
    changed = True
    while changed:
        changed = False
        for a, b in itertools.combinations(sorted(family), 2):
            if a | b not in family:
                family.add(a | b)
                changed = True
    logger.debug("union-closed family of %d sets over %d points", len(family), ground)
    return family_semilattice(family, ground)


def random_congruence(rng, S, merges=1):
    """Congruence closure of `merges` random pairs of points.

    Examples
    --------
    >>> chain = MeetSL([[0, 0, 0], [0, 1, 1], [0, 1, 2]])
    >>> len(random_congruence(np.random.default_rng(1), chain)) in (1, 2, 3)
    True
    """
    pairs = [tuple(int(v) for v in rng.integers(0, S.n, size=2)) for _ in range(merges)]
    return congruence_closure(S, pairs)


def _restricted_growth_strings(n):
    if n == 0:
        yield ()
        return
    for head in _restricted_growth_strings(n - 1):
        for label in range(max(head, default=-1) + 2):
            yield head + (label,)


def all_congruences(S):
    """Every congruence of `S`, found by testing each set partition of its points.

    Examples
    --------
    >>> chain = MeetSL([[0, 0, 0], [0, 1, 1], [0, 1, 2]])
    >>> len(all_congruences(chain))
    4
    """
    found = [partition for partition in map(Partition.from_labels, _restricted_growth_strings(S.n))
             if check_congruence(S, partition)]
    logger.debug("%d congruences on %d points", len(found), S.n)
    return found


def random_covaluation(rng, S, cong=None, max_coefficient=3, flavour="meet-coval"):
    """A random strictly decreasing (generalised) co-valuation.

    The meet flavour is f(x) = sum of c_a over the points a with a not below x, plus a constant
    per block of `cong`, with every c_a a positive rational. The join flavour is its negation:
    when `S` stores a join-semilattice, that is a join co-valuation of the original order.

    Parameters
    ----------
    rng : numpy.random.Generator
    S : MeetSL
    cong : qmet.spaces.Partition, defaults to None
    max_coefficient : int, defaults to 3
    flavour : {"meet-coval", "join-coval"}

    Returns
    -------
    list of sympy.Rational

    Examples
    --------
    >>> chain = MeetSL([[0, 0, 0], [0, 1, 1], [0, 1, 2]])
    >>> f = random_covaluation(np.random.default_rng(0), chain)
    >>> f[0] > f[1] > f[2]
    True
    """
    if flavour not in ("meet-coval", "join-coval"):
        raise ValueError("Unknown co-valuation flavour '{}'.".format(flavour))
    coefficients = [sympy.Rational(int(rng.integers(1, max_coefficient + 1)), int(rng.integers(1, 3)))
                    for _ in range(S.n)]
    blocks = len(cong) if cong is not None else 1
    offsets = [sympy.Integer(int(v)) for v in rng.integers(-3, 4, size=blocks)]
    order = S.order
    values = []
    for x in range(S.n):
        value = sum((coefficients[a] for a in range(S.n) if not order.leq(a, x)), sympy.Integer(0))
        value += offsets[cong.block_of(x) if cong is not None else 0]
        values.append(value if flavour == "meet-coval" else -value)
    return values


def truncate(X, c):
    """min(d, c) on the finite entries of `X`.

    The specialisation order, the components and invariance survive; the descending path
    condition usually does not.

    Examples
    --------
    >>> truncate(GQSpace([[0, 0, 0], [1, 0, 0], [2, 1, 0]]), 1).d
    ((0, 0, 0), (1, 0, 0), (1, 1, 0))
    """
    c = to_value(c, allow_inf=False)
    if c <= 0:
        raise ValueError("Truncation level must be positive, got {}.".format(c))
    return GQSpace([[v if v is INF else min(v, c) for v in row] for row in X.d], X.labels)
