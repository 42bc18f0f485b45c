import numpy as np

from ..exceptions import NotAPartialOrder
from ..utils import Verdict


class Partition:
    """A partition of the carrier ``{0, ..., n-1}`` into blocks.

    Blocks are stored sorted, and ordered by their smallest element, so two partitions with
    the same blocks compare equal.

    Parameters
    ----------
    blocks : iterable of iterable of int
    n : int, defaults to None
        Carrier size. Inferred from the blocks when omitted.

    Examples
    --------
    >>> P = Partition([[2, 0], [1]])
    >>> P
    Partition([(0, 2), (1,)])
    >>> P.same(0, 2), P.same(0, 1)
    (True, False)
    >>> P.block_of(2)
    0
    >>> Partition([[0, 1], [1, 2]])
    Traceback (most recent call last):
        ...
    ValueError: Point 1 is in more than one block.
    """

    def __init__(self, blocks, n=None):
        blocks = [tuple(sorted(int(x) for x in block)) for block in blocks]
        if any(len(block) == 0 for block in blocks):
            raise ValueError("Blocks must be nonempty.")
        blocks.sort(key=lambda block: block[0])
        if n is None:
            n = sum(len(block) for block in blocks)

        index = [-1] * n
        for i, block in enumerate(blocks):
            for x in block:
                if not 0 <= x < n:
                    raise ValueError("Point {} is outside the carrier of size {}.".format(x, n))
                if index[x] != -1:
                    raise ValueError("Point {} is in more than one block.".format(x))
                index[x] = i
        if -1 in index:
            raise ValueError("Point {} is in no block.".format(index.index(-1)))

        self._blocks = tuple(blocks)
        self._index = tuple(index)

    @classmethod
    def from_labels(cls, labels):
        """Build a partition from a block label per point.

        Examples
        --------
        >>> Partition.from_labels(["a", "b", "a"])
        Partition([(0, 2), (1,)])
        """
        groups = {}
        for x, label in enumerate(labels):
            groups.setdefault(label, []).append(x)
        return cls(groups.values(), len(labels))

    @classmethod
    def discrete(cls, n):
        """The equality partition (singleton blocks)."""
        return cls([[x] for x in range(n)], n)

    @classmethod
    def trivial(cls, n):
        """The one-block partition."""
        return cls([range(n)], n)

    @property
    def blocks(self):
        """tuple of tuple of int: Blocks ordered by smallest element."""
        return self._blocks

    @property
    def n(self):
        """int: Carrier size."""
        return len(self._index)

    def block_of(self, x):
        return self._index[x]

    def same(self, x, y):
        return self._index[x] == self._index[y]

    def refines(self, other):
        """Whether every block of `self` lies inside a block of `other`.

        Examples
        --------
        >>> Partition.discrete(3).refines(Partition([[0, 1], [2]]))
        True
        """
        return all(len({other.block_of(x) for x in block}) == 1 for block in self._blocks)

    def __len__(self):
        return len(self._blocks)

    def __iter__(self):
        return iter(self._blocks)

    def __eq__(self, other):
        if not isinstance(other, Partition):
            return NotImplemented
        return self._blocks == other._blocks and self.n == other.n

    def __hash__(self):
        return hash(self._blocks)

    def __repr__(self):
        return "Partition({})".format(list(self._blocks))


class OrderRel:
    """A partial order on ``{0, ..., n-1}`` stored as a boolean matrix.

    Reflexivity, antisymmetry and transitivity are checked on construction.

    Parameters
    ----------
    leq : array_like of bool, shape (n, n)
        ``leq[x][y]`` is True when x <= y.

    Examples
    --------
    >>> chain = OrderRel([[True, True], [False, True]])
    >>> chain.leq(0, 1), chain.leq(1, 0)
    (True, False)
    >>> chain.inverse().leq(1, 0)
    True
    >>> OrderRel([[True, True], [True, True]])
    Traceback (most recent call last):
        ...
    qmet.exceptions.NotAPartialOrder: Relation is not antisymmetric, witness (0, 1).
    """

    def __init__(self, leq):
        matrix = np.array(leq, dtype=bool)
        if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
            raise ValueError("The order matrix must be square, got shape {}.".format(matrix.shape))
        n = matrix.shape[0]

        for x in range(n):
            if not matrix[x, x]:
                raise NotAPartialOrder("reflexive", (x,))
        both = matrix & matrix.T
        for x, y in zip(*np.nonzero(both)):
            if x != y:
                raise NotAPartialOrder("antisymmetric", (int(x), int(y)))
        composed = (matrix.astype(np.int64) @ matrix.astype(np.int64)) > 0
        broken = composed & ~matrix
        if broken.any():
            x, z = (int(i) for i in np.argwhere(broken)[0])
            y = int(np.nonzero(matrix[x] & matrix[:, z])[0][0])
            raise NotAPartialOrder("transitive", (x, y, z))

        matrix.setflags(write=False)
        self._matrix = matrix

    @classmethod
    def from_pairs(cls, n, pairs):
        """Reflexive-transitive closure of the given pairs ``(x, y)`` meaning x <= y.

        Examples
        --------
        >>> OrderRel.from_pairs(3, [(0, 1), (1, 2)]).leq(0, 2)
        True
        """
        matrix = np.eye(n, dtype=bool)
        for x, y in pairs:
            matrix[x, y] = True
        for k in range(n):
            matrix |= np.outer(matrix[:, k], matrix[k, :])
        return cls(matrix)

    @classmethod
    def equality(cls, n):
        return cls(np.eye(n, dtype=bool))

    @property
    def n(self):
        """int: Carrier size."""
        return self._matrix.shape[0]

    @property
    def matrix(self):
        """numpy.ndarray: Read-only boolean matrix."""
        return self._matrix

    def leq(self, x, y):
        return bool(self._matrix[x, y])

    def lt(self, x, y):
        return x != y and bool(self._matrix[x, y])

    def inverse(self):
        """The opposite order (x <= y becomes y <= x)."""
        return OrderRel(self._matrix.T)

    def down_set(self, x):
        """Points below `x`, as a sorted tuple."""
        return tuple(int(y) for y in np.nonzero(self._matrix[:, x])[0])

    def up_set(self, x):
        """Points above `x`, as a sorted tuple."""
        return tuple(int(y) for y in np.nonzero(self._matrix[x, :])[0])

    def hasse_edges(self):
        """Covering pairs ``(x, y)`` with x < y and nothing strictly between.

        Examples
        --------
        >>> OrderRel.from_pairs(3, [(0, 1), (1, 2)]).hasse_edges()
        [(0, 1), (1, 2)]
        """
        n = self.n
        edges = []
        for x in range(n):
            for y in range(n):
                if self.lt(x, y) and not any(self.lt(x, z) and self.lt(z, y) for z in range(n)):
                    edges.append((x, y))
        return edges

    def is_convex(self, block):
        """Return a :class:`~qmet.utils.Verdict`: x <= y <= z with x, z in `block` forces y in `block`.

        Examples
        --------
        >>> chain = OrderRel.from_pairs(3, [(0, 1), (1, 2)])
        >>> chain.is_convex([0, 2])
        Verdict(holds=False, witness=(0, 1, 2))
        """
        members = set(block)
        for x in block:
            for z in block:
                if not self._matrix[x, z]:
                    continue
                for y in range(self.n):
                    if y not in members and self._matrix[x, y] and self._matrix[y, z]:
                        return Verdict(False, (x, y, z))
        return Verdict(True)

    def __eq__(self, other):
        if not isinstance(other, OrderRel):
            return NotImplemented
        return self._matrix.shape == other._matrix.shape and bool((self._matrix == other._matrix).all())

    def __hash__(self):
        return hash(self._matrix.tobytes())

    def __repr__(self):
        return "OrderRel({})".format(self.hasse_edges())
