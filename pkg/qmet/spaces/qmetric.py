import itertools
import logging

from ..exceptions import QM1Violation, QM2Violation, NegativeEntry, Disagreement
from ..utils import INF, Verdict, to_matrix, matrix_latex, matrix_text, value_text
from .relations import Partition, OrderRel

logger = logging.getLogger(__name__)


def _find_violation(d):
    n = len(d)
    for x in range(n):
        for y in range(n):
            if d[x][y] is not INF and d[x][y] < 0:
                raise NegativeEntry((x, y))
    for x in range(n):
        if d[x][x] != 0:
            raise QM1Violation((x, x))
    for x in range(n):
        for y in range(x + 1, n):
            if d[x][y] == 0 and d[y][x] == 0:
                raise QM1Violation((x, y))
    for x in range(n):
        dx = d[x]
        for y in range(n):
            dxy = dx[y]
            if dxy is INF:
                continue
            dy = d[y]
            for z in range(n):
                if dx[z] > dxy + dy[z]:
                    raise QM2Violation((x, y, z))


class GQSpace:
    """A finite generalised quasi-metric space.

    The carrier is ``{0, ..., n-1}``; ``d[x][y]`` is a nonnegative :class:`sympy.Rational` or
    ``sympy.oo``. The axioms are checked on construction (see :func:`validate_gqm`), so every
    :class:`GQSpace` in circulation is valid.

    Parameters
    ----------
    entries : list of list
        Square matrix of values accepted by :func:`qmet.utils.to_value`.
    labels : list of str, defaults to None
        Display names of the points.

    Examples
    --------
    >>> X = GQSpace([[0, 0], [1, 0]], labels=["0", "1"])
    >>> X.n
    2
    >>> X[1, 0]
    1
    >>> print(X)
       0  1
    0  0  0
    1  1  0
    """

    def __init__(self, entries, labels=None):
        d = to_matrix(entries, allow_negative=True)
        _find_violation(d)
        if labels is not None:
            labels = tuple(str(label) for label in labels)
            if len(labels) != len(d):
                raise ValueError("Got {} labels for {} points.".format(len(labels), len(d)))
        self._d = d
        self._labels = labels

    @property
    def n(self):
        """int: Carrier size."""
        return len(self._d)

    @property
    def d(self):
        """tuple of tuple: The distance matrix."""
        return self._d

    @property
    def labels(self):
        """tuple of str or None: Display names of the points."""
        return self._labels

    def label(self, x):
        return self._labels[x] if self._labels is not None else str(x)

    @property
    def latex_text(self):
        """str: The distance matrix in latex."""
        return matrix_latex(self._d)

    def __getitem__(self, pair):
        x, y = pair
        return self._d[x][y]

    def __len__(self):
        return self.n

    def __eq__(self, other):
        if not isinstance(other, GQSpace):
            return NotImplemented
        return self._d == other._d

    def __hash__(self):
        return hash(self._d)

    def __str__(self):
        return matrix_text(self._d, self._labels)

    def __repr__(self):
        return "GQSpace({})".format([[value_text(v) for v in row] for row in self._d])

    def conjugate(self):
        return conjugate(self)

    def symmetrise(self):
        return symmetrise(self)

    def components(self):
        return components(self)

    def specialisation_order(self):
        return specialisation_order(self)

    def restrict(self, indices):
        """The induced subspace on `indices` (in the given order).

        Examples
        --------
        >>> X = GQSpace([[0, 1, 2], [1, 0, 1], [2, 1, 0]])
        >>> X.restrict([0, 2]).d
        ((0, 2), (2, 0))
        """
        indices = list(indices)
        labels = [self.label(x) for x in indices] if self._labels is not None else None
        return GQSpace([[self._d[x][y] for y in indices] for x in indices], labels)

    def is_metric(self):
        """Whether d is symmetric (QM3)."""
        n = self.n
        return all(self._d[x][y] == self._d[y][x] for x in range(n) for y in range(x + 1, n))

    def is_quasi_metric(self):
        """Whether every entry is finite."""
        return all(v is not INF for row in self._d for v in row)


def validate_gqm(matrix, labels=None):
    """Validate a matrix as a generalised quasi-metric and return the space.

    Parameters
    ----------
    matrix : list of list
        Square matrix; entries are integers, ``"p/q"`` strings, ``"inf"`` or sympy values.
    labels : list of str, defaults to None

    Returns
    -------
    GQSpace

    Raises
    ------
    NegativeEntry, QM1Violation, QM2Violation

    Examples
    --------
    >>> validate_gqm([[0, 0], [1, 0]]).n
    2
    >>> validate_gqm([[0, 0], [0, 0]])
    Traceback (most recent call last):
        ...
    qmet.exceptions.QM1Violation: QM1 is violated: d(x,y)=d(y,x)=0 or d(x,x)!=0 at (x,y)=(0, 1).
    >>> validate_gqm([[0, 1, 5], [1, 0, 1], [5, 1, 0]])
    Traceback (most recent call last):
        ...
    qmet.exceptions.QM2Violation: QM2 is violated: d(x,z) > d(x,y)+d(y,z) at (x,y,z)=(0, 1, 2).
    """
    return GQSpace(matrix, labels)


def conjugate(X):
    """The conjugate space, d^{-1}(x, y) = d(y, x).

    Examples
    --------
    >>> conjugate(GQSpace([[0, 0], [1, 0]])).d
    ((0, 1), (0, 0))
    """
    n = X.n
    return GQSpace([[X.d[y][x] for y in range(n)] for x in range(n)], X.labels)


def symmetrise(X):
    """The symmetrisation d^s(x, y) = max(d(x, y), d(y, x)).

    Examples
    --------
    >>> symmetrise(GQSpace([[0, 0], [1, 0]])).d
    ((0, 1), (1, 0))
    >>> symmetrise(GQSpace([[0, "inf"], [2, 0]])).d
    ((0, oo), (oo, 0))
    """
    n = X.n
    return GQSpace([[max(X.d[x][y], X.d[y][x]) for y in range(n)] for x in range(n)], X.labels)


def components(X):
    """Connected components: x and y are together when d(x, y) and d(y, x) are both finite.

    Parameters
    ----------
    X : GQSpace

    Returns
    -------
    Partition

    Examples
    --------
    >>> components(GQSpace([[0, 1], [1, 0]]))
    Partition([(0, 1)])
    >>> components(GQSpace([[0, "inf"], ["inf", 0]]))
    Partition([(0,), (1,)])
    >>> components(GQSpace([[0, 1], ["inf", 0]]))
    Partition([(0,), (1,)])
    """
    n = X.n
    d = X.d

    def close(x, y):
        return d[x][y] is not INF and d[y][x] is not INF

    label = [-1] * n
    blocks = []
    for x in range(n):
        if label[x] != -1:
            continue
        block = [y for y in range(n) if label[y] == -1 and close(x, y)]
        for y in block:
            label[y] = len(blocks)
        blocks.append(block)

    for block in blocks:
        for x, y in itertools.combinations(block, 2):
            if not close(x, y):
                raise Disagreement("Finite symmetric distance is not transitive.", (block[0], x, y))
    for x, y in itertools.combinations(range(n), 2):
        if label[x] != label[y] and close(x, y):
            raise Disagreement("Finite symmetric distance is not transitive.", (x, y))

    logger.debug("%d components on %d points", len(blocks), n)
    return Partition(blocks, n)


def specialisation_order(X):
    """The specialisation order: x <= y iff d(x, y) = 0.

    Examples
    --------
    >>> order = specialisation_order(GQSpace([[0, 0], [1, 0]]))
    >>> order.leq(0, 1), order.leq(1, 0)
    (True, False)
    """
    n = X.n
    return OrderRel([[X.d[x][y] == 0 for y in range(n)] for x in range(n)])


def _dpc_witness(X, order, points):
    d = X.d
    for x in points:
        for y in points:
            if y == x or not order.leq(y, x):
                continue
            for z in points:
                if z == y or not order.leq(z, y):
                    continue
                if d[x][z] != d[x][y] + d[y][z]:
                    return (x, y, z)
    return None


def check_dpc(X, per_component=False):
    """Check the descending path condition.

    For every x >= y >= z in the specialisation order, d(x, z) = d(x, y) + d(y, z).

    Parameters
    ----------
    X : GQSpace
    per_component : bool, defaults to False
        Check each component separately. The verdict is the same either way.

    Returns
    -------
    Verdict
        On failure the witness is ``(x, y, z)``.

    Examples
    --------
    >>> check_dpc(GQSpace([[0, 0, 0], [1, 0, 0], [2, 1, 0]]))
    Verdict(holds=True, witness=None)
    >>> check_dpc(GQSpace([[0, 0, 0], [1, 0, 0], [1, 1, 0]]))
    Verdict(holds=False, witness=(2, 1, 0))
    """
    order = specialisation_order(X)
    if per_component:
        for block in components(X):
            witness = _dpc_witness(X, order, block)
            if witness is not None:
                return Verdict(False, witness)
        return Verdict(True)
    witness = _dpc_witness(X, order, range(X.n))
    return Verdict(witness is None, witness)


def disjoint_union(spaces):
    """Disjoint union: block-diagonal matrix with infinity between different inputs.

    Parameters
    ----------
    spaces : list of GQSpace

    Returns
    -------
    GQSpace

    Examples
    --------
    >>> point = GQSpace([[0]])
    >>> disjoint_union([point, point]).d
    ((0, oo), (oo, 0))
    """
    spaces = list(spaces)
    if not spaces:
        raise ValueError("Cannot take the union of no spaces.")
    n = sum(X.n for X in spaces)
    rows = [[INF] * n for _ in range(n)]
    labels = []
    offset = 0
    for X in spaces:
        for x in range(X.n):
            for y in range(X.n):
                rows[offset + x][offset + y] = X.d[x][y]
            labels.append(X.label(x))
        offset += X.n
    if all(X.labels is None for X in spaces):
        labels = None
    return GQSpace(rows, labels)


def check_monotonicity(X):
    """Self-test: x1 <= x2 and y2 <= y1 imply d(x1, y1) <= d(x2, y2).

    This holds on every valid space; a failure means a validation bug.

    Returns
    -------
    Verdict
        On failure the witness is ``(x1, x2, y1, y2)``.

    Examples
    --------
    >>> check_monotonicity(GQSpace([[0, 0], [1, 0]]))
    Verdict(holds=True, witness=None)
    """
    order = specialisation_order(X)
    d = X.d
    n = X.n
    for x1 in range(n):
        for x2 in order.up_set(x1):
            for y1 in range(n):
                for y2 in order.down_set(y1):
                    if not d[x1][y1] <= d[x2][y2]:
                        return Verdict(False, (x1, x2, y1, y2))
    return Verdict(True)


def check_convex_components(X):
    """Every component is convex in the specialisation order.

    Examples
    --------
    >>> check_convex_components(GQSpace([[0, 0, 0], [1, 0, 0], [2, 1, 0]]))
    Verdict(holds=True, witness=None)
    """
    order = specialisation_order(X)
    for block in components(X):
        verdict = order.is_convex(block)
        if not verdict:
            return verdict
    return Verdict(True)
