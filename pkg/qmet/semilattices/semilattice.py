import logging

import numpy as np

from ..exceptions import NotASemilattice
from ..utils import Verdict
from ..spaces.relations import Partition, OrderRel

logger = logging.getLogger(__name__)


class MeetSL:
    """A finite meet-semilattice given by its meet table.

    The table must be idempotent, commutative and associative; the order is recovered as
    x <= y iff x ∧ y = x. A join-semilattice is stored as the :class:`MeetSL` of the opposite
    order (see :func:`join_semilattice_from_order`).

    Parameters
    ----------
    meet : array_like of int, shape (n, n)
    labels : list of str, defaults to None

    Examples
    --------
    >>> S = MeetSL([[0, 0, 0], [0, 1, 1], [0, 1, 2]])
    >>> S.meet(1, 2), S.bottom(), S.top()
    (1, 0, 2)
    >>> S.order.leq(0, 2)
    True
    >>> MeetSL([[0, 1], [0, 1]])
    Traceback (most recent call last):
        ...
    ValueError: Meet table is not commutative at (0, 1).
    """

    def __init__(self, meet, labels=None):
        table = np.array(meet, dtype=np.int64)
        if table.ndim != 2 or table.shape[0] != table.shape[1] or table.shape[0] == 0:
            raise ValueError("The meet table must be square and nonempty, got shape {}.".format(table.shape))
        n = table.shape[0]
        if table.min() < 0 or table.max() >= n:
            raise ValueError("Meet table entries must lie in 0..{}.".format(n - 1))

        index = np.arange(n)
        broken = np.nonzero(table[index, index] != index)[0]
        if broken.size:
            raise ValueError("Meet table is not idempotent at {}.".format(int(broken[0])))
        broken = np.argwhere(table != table.T)
        if broken.size:
            raise ValueError("Meet table is not commutative at {}.".format(tuple(int(i) for i in broken[0])))
        left = table[table, :]
        right = table[index[:, None, None], table[None, :, :]]
        broken = np.argwhere(left != right)
        if broken.size:
            raise ValueError("Meet table is not associative at {}.".format(tuple(int(i) for i in broken[0])))

        table.setflags(write=False)
        self._table = table
        self._order = OrderRel(table == index[:, None])
        self._labels = tuple(str(label) for label in labels) if labels is not None else None

    @property
    def n(self):
        """int: Carrier size."""
        return self._table.shape[0]

    @property
    def table(self):
        """numpy.ndarray: Read-only meet table."""
        return self._table

    @property
    def order(self):
        """OrderRel: x <= y iff x ∧ y = x."""
        return self._order

    @property
    def labels(self):
        return self._labels

    def label(self, x):
        return self._labels[x] if self._labels is not None else str(x)

    def meet(self, x, y):
        return int(self._table[x, y])

    def meet_all(self, points):
        """Meet of a nonempty iterable of points."""
        points = iter(points)
        result = next(points)
        for x in points:
            result = int(self._table[result, x])
        return result

    def bottom(self):
        """The least element (always exists in a finite meet-semilattice)."""
        return self.meet_all(range(self.n))

    def top(self):
        """The greatest element, or None."""
        for x in range(self.n):
            if all(self._order.leq(y, x) for y in range(self.n)):
                return x
        return None

    def is_subsemilattice(self, block):
        members = set(block)
        return all(self.meet(x, y) in members for x in block for y in block)

    def __eq__(self, other):
        if not isinstance(other, MeetSL):
            return NotImplemented
        return self._table.shape == other._table.shape and bool((self._table == other._table).all())

    def __hash__(self):
        return hash(self._table.tobytes())

    def __repr__(self):
        return "MeetSL({})".format(self._table.tolist())


def semilattice_from_order(order, labels=None):
    """Build the meet-semilattice of a partial order, if every pair has an infimum.

    Parameters
    ----------
    order : OrderRel

    Returns
    -------
    MeetSL

    Raises
    ------
    NotASemilattice
        With a pair that has no infimum.

    Examples
    --------
    >>> from qmet.spaces import OrderRel
    >>> semilattice_from_order(OrderRel.from_pairs(3, [(0, 1), (1, 2)])).table.tolist()
    [[0, 0, 0], [0, 1, 1], [0, 1, 2]]
    >>> semilattice_from_order(OrderRel.equality(2))
    Traceback (most recent call last):
        ...
    qmet.exceptions.NotASemilattice: Points (0, 1) have no infimum.
    """
    n = order.n
    leq = order.matrix
    table = np.zeros((n, n), dtype=np.int64)
    for x in range(n):
        for y in range(x, n):
            lower = np.nonzero(leq[:, x] & leq[:, y])[0]
            greatest = [g for g in lower if leq[lower, g].all()]
            if not greatest:
                raise NotASemilattice((x, y))
            table[x, y] = table[y, x] = greatest[0]
    return MeetSL(table, labels)


def join_semilattice_from_order(order, labels=None):
    """The join-semilattice of `order`, stored as the meet-semilattice of the opposite order.

    The table of the result computes x ∨ y for the original order.

    Examples
    --------
    >>> from qmet.spaces import OrderRel
    >>> J = join_semilattice_from_order(OrderRel.from_pairs(3, [(0, 1), (0, 2)]))
    Traceback (most recent call last):
        ...
    qmet.exceptions.NotASemilattice: Points (1, 2) have no infimum.
    >>> J = join_semilattice_from_order(OrderRel.from_pairs(3, [(0, 2), (1, 2)]))
    >>> J.meet(0, 1)
    2
    """
    return semilattice_from_order(order.inverse(), labels)


def check_congruence(S, partition):
    """Check that `partition` is a congruence of `S` with convex blocks.

    Parameters
    ----------
    S : MeetSL
    partition : qmet.spaces.Partition

    Returns
    -------
    Verdict
        Reason ``"law"`` with witness ``(x, y, z, z)``: x and y are together but x ∧ z and
        y ∧ z are not. Reason ``"convexity"`` with witness ``(x, y, z)``.

    Examples
    --------
    >>> from qmet.spaces import Partition
    >>> chain = MeetSL([[0, 0, 0], [0, 1, 1], [0, 1, 2]])
    >>> check_congruence(chain, Partition([[0], [1, 2]]))
    Verdict(holds=True, witness=None)
    >>> check_congruence(chain, Partition([[0, 2], [1]]))
    Verdict(holds=False, witness=(0, 1, 2), reason='convexity')
    """
    if partition.n != S.n:
        raise ValueError("Partition of {} points for a semilattice of {}.".format(partition.n, S.n))
    for block in partition:
        verdict = S.order.is_convex(block)
        if not verdict:
            return Verdict(False, verdict.witness, "convexity")
    for block in partition:
        for i, x in enumerate(block):
            for y in block[i + 1:]:
                for z in range(S.n):
                    if not partition.same(S.meet(x, z), S.meet(y, z)):
                        return Verdict(False, (x, y, z, z), "law")
    return Verdict(True)


def congruence_closure(S, pairs):
    """The least congruence of `S` that identifies every pair in `pairs`.

    Examples
    --------
    >>> chain = MeetSL([[0, 0, 0], [0, 1, 1], [0, 1, 2]])
    >>> congruence_closure(chain, [(0, 2)])
    Partition([(0, 1, 2)])
    >>> congruence_closure(chain, [(1, 2)])
    Partition([(0,), (1, 2)])
    """
    parent = list(range(S.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        rx, ry = find(x), find(y)
        if rx == ry:
            return False
        parent[max(rx, ry)] = min(rx, ry)
        return True

    for x, y in pairs:
        union(x, y)
    changed = True
    while changed:
        changed = False
        for x in range(S.n):
            r = find(x)
            if r == x:
                continue
            for z in range(S.n):
                if union(S.meet(x, z), S.meet(r, z)):
                    changed = True
    partition = Partition.from_labels([find(x) for x in range(S.n)])
    logger.debug("congruence closure has %d blocks", len(partition))
    return partition
