from ..exceptions import PMViolation, NegativeEntry, NotWeaklyWeighted, Disagreement
from ..utils import INF, Verdict, to_matrix, to_value, matrix_latex, matrix_text, value_text
from ..spaces.relations import Partition, OrderRel
from ..spaces.qmetric import GQSpace, components, specialisation_order
from ..weights.weights import CWeakWeight, verify_weight


def _find_violation(p, require_strong):
    n = len(p)
    for x in range(n):
        if p[x][x] is INF:
            raise PMViolation("PM5", (x,))
    for x in range(n):
        for y in range(x + 1, n):
            if p[x][y] != p[y][x]:
                raise PMViolation("PM3", (x, y))
    for x in range(n):
        for y in range(n):
            if p[x][x] > p[x][y]:
                raise PMViolation("PM2", (x, y))
            if require_strong and x != y and not p[x][x] < p[x][y]:
                raise PMViolation("PM2S", (x, y))
    for x in range(n):
        for y in range(x + 1, n):
            if p[x][x] == p[y][y] == p[x][y]:
                raise PMViolation("PM1", (x, y))
    for x in range(n):
        for y in range(n):
            pxy = p[x][y]
            if pxy is INF:
                continue
            pyy = p[y][y]
            for z in range(n):
                if p[x][z] > pxy + p[y][z] - pyy:
                    raise PMViolation("PM4", (x, y, z))


class WPMSpace:
    """A finite generalised weak partial metric space.

    Entries are rationals (negatives allowed) or infinity; the diagonal is finite (PM5).

    Parameters
    ----------
    entries : list of list
    require_nonneg : bool, defaults to False
        Also require every entry to be nonnegative (a partial metric).
    require_strong : bool, defaults to False
        Require p(x, x) < p(x, y) for x != y (PM2S).
    labels : list of str, defaults to None

    Attributes
    ----------
    nonneg : bool
        Whether all entries are nonnegative, required or not.
    strong : bool
        Whether PM2S holds, required or not.

    Examples
    --------
    >>> P = WPMSpace([[1, 1], [1, 0]])
    >>> P.nonneg, P.strong
    (True, False)
    >>> WPMSpace([[1, 2], [1, 0]])
    Traceback (most recent call last):
        ...
    qmet.exceptions.PMViolation: PM3 is violated at (0, 1).
    """

    def __init__(self, entries, require_nonneg=False, require_strong=False, labels=None):
        p = to_matrix(entries, allow_negative=True)
        _find_violation(p, require_strong)
        n = len(p)
        negative = [(x, y) for x in range(n) for y in range(n) if p[x][y] is not INF and p[x][y] < 0]
        if require_nonneg and negative:
            raise NegativeEntry(negative[0])
        if labels is not None:
            labels = tuple(str(label) for label in labels)
            if len(labels) != n:
                raise ValueError("Got {} labels for {} points.".format(len(labels), n))

        self._p = p
        self._labels = labels
        self.nonneg = not negative
        self.strong = all(p[x][x] < p[x][y] for x in range(n) for y in range(n) if x != y)

    @property
    def n(self):
        """int: Carrier size."""
        return len(self._p)

    @property
    def p(self):
        """tuple of tuple: The partial metric matrix."""
        return self._p

    @property
    def labels(self):
        """tuple of str or None: Display names of the points."""
        return self._labels

    @property
    def latex_text(self):
        """str: The matrix in latex."""
        return matrix_latex(self._p)

    def __getitem__(self, pair):
        x, y = pair
        return self._p[x][y]

    def __len__(self):
        return self.n

    def __eq__(self, other):
        if not isinstance(other, WPMSpace):
            return NotImplemented
        return self._p == other._p

    def __hash__(self):
        return hash(self._p)

    def __str__(self):
        return matrix_text(self._p, self._labels)

    def __repr__(self):
        return "WPMSpace({})".format([[value_text(v) for v in row] for row in self._p])

    def shift(self, c):
        """p + c, again a weak partial metric with the same order.

        Examples
        --------
        >>> WPMSpace([[1, 1], [1, 0]]).shift(-1).p
        ((0, 0), (0, -1))
        """
        c = to_value(c, allow_negative=True, allow_inf=False)
        return WPMSpace([[v + c for v in row] for row in self._p], labels=self._labels)

    def p_components(self):
        """Classes of the relation p(x, y) < infinity.

        Examples
        --------
        >>> WPMSpace([[0, "inf"], ["inf", 0]]).p_components()
        Partition([(0,), (1,)])
        """
        n = self.n
        label = [-1] * n
        blocks = []
        for x in range(n):
            if label[x] == -1:
                block = [y for y in range(n) if label[y] == -1 and self._p[x][y] is not INF]
                for y in block:
                    label[y] = len(blocks)
                blocks.append(block)
        return Partition(blocks, n)


def validate_wpm(matrix, require_nonneg=False, require_strong=False, labels=None):
    """Validate a matrix as a (generalised) weak partial metric.

    Parameters
    ----------
    matrix : list of list
    require_nonneg : bool, defaults to False
    require_strong : bool, defaults to False
    labels : list of str, defaults to None

    Returns
    -------
    WPMSpace

    Raises
    ------
    PMViolation
        Its ``axiom`` attribute names the failing axiom.
    NegativeEntry
        When `require_nonneg` is set.

    Examples
    --------
    >>> P = validate_wpm([[0, 1], [1, 0]], require_nonneg=True, require_strong=True)
    >>> P.nonneg, P.strong
    (True, True)
    """
    return WPMSpace(matrix, require_nonneg=require_nonneg, require_strong=require_strong, labels=labels)


def p_from_dw(X, w):
    """The weak partial metric p(x, y) = d(x, y) + w(x) of a weakly weighted space.

    Points in different components are at infinite partial distance.

    Parameters
    ----------
    X : qmet.spaces.GQSpace
    w : qmet.weights.WeakWeight or qmet.weights.CWeakWeight

    Returns
    -------
    WPMSpace

    Raises
    ------
    NotWeaklyWeighted
        When `w` does not certify `X`.

    Examples
    --------
    >>> from qmet.spaces import GQSpace
    >>> from qmet.weights import WeakWeight
    >>> p_from_dw(GQSpace([[0, 0], [1, 0]]), WeakWeight([1, 0])).p
    ((1, 1), (1, 0))
    """
    mode = "componentwise" if isinstance(w, CWeakWeight) else "weak"
    verdict = verify_weight(X, w, mode)
    if not verdict:
        raise NotWeaklyWeighted(verdict.witness)

    partition = components(X)
    n = X.n
    entries = [[X.d[x][y] + w[x] if partition.same(x, y) else INF for y in range(n)] for x in range(n)]
    return WPMSpace(entries, labels=X.labels)


def d_from_p(P):
    """The weakly weighted space of a weak partial metric.

    d_p(x, y) = p(x, y) - p(x, x) and w_p(x) = p(x, x).

    Parameters
    ----------
    P : WPMSpace

    Returns
    -------
    X : qmet.spaces.GQSpace
    w : qmet.weights.CWeakWeight

    Examples
    --------
    >>> X, w = d_from_p(WPMSpace([[1, 1], [1, 0]]))
    >>> X.d, w.values
    (((0, 0), (1, 0)), (1, 0))
    """
    p = P.p
    n = P.n
    X = GQSpace([[p[x][y] - p[x][x] for y in range(n)] for x in range(n)], P.labels)
    w = CWeakWeight([p[x][x] for x in range(n)], components(X))
    if not verify_weight(X, w, "componentwise"):
        raise Disagreement("Self-distances do not weight the induced space.")
    return X, w


def roundtrip_check(X=None, w=None, P=None):
    """Check both round trips between weighted spaces and weak partial metrics.

    d_from_p(p_from_dw(X, w)) must return the matrix of `X`, and p_from_dw(d_from_p(P)) must
    return `P`. Either pair of arguments may be omitted.

    Returns
    -------
    Verdict
        The witness is ``("d", x, y)`` or ``("p", x, y)`` for the first differing entry.

    Examples
    --------
    >>> from qmet.spaces import GQSpace
    >>> from qmet.weights import WeakWeight
    >>> roundtrip_check(GQSpace([[0, 0], [1, 0]]), WeakWeight([1, 0]), WPMSpace([[1, 1], [1, 0]]))
    Verdict(holds=True, witness=None)
    """
    if X is not None and w is not None:
        back, _ = d_from_p(p_from_dw(X, w))
        witness = _first_difference(X.d, back.d)
        if witness is not None:
            return Verdict(False, ("d",) + witness)
    if P is not None:
        back = p_from_dw(*d_from_p(P))
        witness = _first_difference(P.p, back.p)
        if witness is not None:
            return Verdict(False, ("p",) + witness)
    return Verdict(True)


def _first_difference(a, b):
    if len(a) != len(b):
        return (len(a), len(b))
    for x, (row_a, row_b) in enumerate(zip(a, b)):
        for y, (u, v) in enumerate(zip(row_a, row_b)):
            if u != v:
                return (x, y)
    return None


def order_from_p(P):
    """The order x <= y iff p(x, x) = p(x, y).

    It coincides with the specialisation order of the induced quasi-metric; a mismatch raises
    :class:`qmet.exceptions.Disagreement`.

    Examples
    --------
    >>> order = order_from_p(WPMSpace([[1, 1], [1, 0]]))
    >>> order.leq(0, 1), order.leq(1, 0)
    (True, False)
    """
    p = P.p
    n = P.n
    order = OrderRel([[p[x][x] == p[x][y] for y in range(n)] for x in range(n)])
    if order != specialisation_order(d_from_p(P)[0]):
        raise Disagreement("The order of p differs from the order of d_p.")
    return order
