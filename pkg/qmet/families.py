"""Named spaces used throughout the documentation and the tests.

Each generator returns ``(space, semilattice)``, with ``semilattice`` None when the
specialisation order has no meets.
"""
import itertools

import sympy

from .spaces.qmetric import GQSpace
from .semilattices.semilattice import MeetSL
from .semilattices.generators import family_semilattice
from .graphs.digraph import Digraph, path_qmetric
from .entropy.carriers import Subgroup, vector


def _chain_semilattice(n):
    return MeetSL([[min(x, y) for y in range(n)] for x in range(n)])


def sierpinski():
    """Two points with d(0, 1) = 0 and d(1, 0) = 1.

    Examples
    --------
    >>> X, S = sierpinski()
    >>> X.d
    ((0, 0), (1, 0))
    """
    return GQSpace([[0, 0], [1, 0]]), _chain_semilattice(2)


def chain_space(n=3):
    """The chain 0 < 1 < ... < n-1 with d(x, y) = max(x - y, 0).

    Examples
    --------
    >>> chain_space(3)[0].d
    ((0, 0, 0), (1, 0, 0), (2, 1, 0))
    """
    if n < 1:
        raise ValueError("A chain needs at least one point, got {}.".format(n))
    return GQSpace([[max(x - y, 0) for y in range(n)] for x in range(n)]), _chain_semilattice(n)


def truncated_chain():
    """The three-point chain with d(2, 0) cut down to 1: invariant, without DPC, not weighted."""
    return GQSpace([[0, 0, 0], [1, 0, 0], [1, 1, 0]]), _chain_semilattice(3)


def v_space():
    """The "V": 0 below the incomparable points 1 and 2, with d(1, 2) = 1 < d(1, 0) = 2.

    The distance is not invariant at (1, 2).
    """
    S = MeetSL([[0, 0, 0], [0, 1, 0], [0, 0, 2]])
    return GQSpace([[0, 0, 0], [2, 0, 1], [2, 1, 0]]), S


def power_set_space(k=2):
    """Subsets of {0, ..., k-1} as bitmasks with d(A, B) = |B minus A|.

    The specialisation order is reverse inclusion and the meet is the union.

    Examples
    --------
    >>> X, S = power_set_space(2)
    >>> X.labels
    ('{}', '{0}', '{1}', '{0,1}')
    >>> X[1, 3], X[3, 1]
    (1, 0)
    """
    size = 2 ** k
    S = family_semilattice(range(size), k)
    entries = [[bin(b & ~a).count("1") for b in range(size)] for a in range(size)]
    return GQSpace(entries, S.labels), S


def _all_subgroups(p, k, rank):
    modulus = p ** k
    group = [vector(list(enumerate(values)), modulus)
             for values in itertools.product(range(modulus), repeat=rank)]
    found = {Subgroup.generated([], p, k)}
    frontier = list(found)
    while frontier:
        grown = []
        for H in frontier:
            for g in group:
                K = H + Subgroup.generated([g], p, k)
                if K not in found:
                    found.add(K)
                    grown.append(K)
        frontier = grown
    return sorted(found, key=lambda H: (H.order, sorted(H.elements)))


def subgroup_lattice_space(p=2, k=1, rank=2):
    """Every subgroup of (Z/p^k)^rank with d(H, K) = log_p |H + K : H|.

    Ordered by reverse inclusion, with the sum as meet. Points are sorted by order.

    Examples
    --------
    >>> X, S = subgroup_lattice_space(2, 1, 2)
    >>> X.n, S.bottom(), X[0, 4]
    (5, 4, 2)
    """
    subgroups = _all_subgroups(p, k, rank)
    index = {H: i for i, H in enumerate(subgroups)}
    table = [[index[H + K] for K in subgroups] for H in subgroups]
    entries = [[sympy.Integer((H + K).log_order - H.log_order) for K in subgroups] for H in subgroups]
    labels = ["H{}".format(i) for i in range(len(subgroups))]
    return GQSpace(entries, labels), MeetSL(table, labels)


def cycle_space(n=3):
    """The path quasi-metric of the directed n-cycle: one component, not weakly weighted.

    Examples
    --------
    >>> cycle_space(3)[0].d
    ((0, 1, 2), (2, 0, 1), (1, 2, 0))
    """
    if n < 2:
        raise ValueError("A directed cycle needs at least two vertices, got {}.".format(n))
    return path_qmetric(Digraph(n, [(i, (i + 1) % n) for i in range(n)])), None
