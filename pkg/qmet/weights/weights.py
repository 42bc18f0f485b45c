import logging

from ..exceptions import NotWeaklyWeighted, NotCWW
from ..utils import INF, Verdict, to_value
from ..spaces.qmetric import components, check_dpc

logger = logging.getLogger(__name__)

WEIGHT_MODES = ("weak", "componentwise", "weight", "coweight")


def _as_values(w):
    if isinstance(w, WeakWeight):
        return w.values
    return tuple(to_value(v, allow_negative=True, allow_inf=False) for v in w)


class WeakWeight:
    """A rational vector w on the carrier.

    It certifies a space when d(x, y) + w(x) = d(y, x) + w(y) for all points.

    Parameters
    ----------
    values : list
        Values accepted by :func:`qmet.utils.to_value` (negatives allowed, no infinity).

    Examples
    --------
    >>> w = WeakWeight([1, "1/2", 0])
    >>> w
    WeakWeight([1, 1/2, 0])
    >>> -w
    WeakWeight([-1, -1/2, 0])
    >>> w.is_equivalent(w.shift(3))
    True
    """

    def __init__(self, values):
        self._values = _as_values(values)
        if not self._values:
            raise ValueError("A weight needs at least one value.")

    @property
    def values(self):
        """tuple of sympy.Rational: Weight per point."""
        return self._values

    def __getitem__(self, x):
        return self._values[x]

    def __len__(self):
        return len(self._values)

    def __iter__(self):
        return iter(self._values)

    def __eq__(self, other):
        if not isinstance(other, WeakWeight):
            return NotImplemented
        return self._values == other._values

    def __hash__(self):
        return hash(self._values)

    def __neg__(self):
        return self._rebuild([-v for v in self._values])

    def __repr__(self):
        return "{}({})".format(self.__class__.__name__, list(self._values))

    def _rebuild(self, values):
        return WeakWeight(values)

    def shift(self, c):
        """w + c."""
        c = to_value(c, allow_negative=True, allow_inf=False)
        return self._rebuild([v + c for v in self._values])

    def min(self):
        return min(self._values)

    def max(self):
        return max(self._values)

    def is_equivalent(self, other, partition=None):
        """Whether `self` and `other` differ by one constant on each block of `partition`.

        Without a partition the whole carrier is one block.
        """
        other = _as_values(other)
        if len(other) != len(self._values):
            return False
        blocks = partition if partition is not None else [range(len(self._values))]
        for block in blocks:
            block = list(block)
            gap = self._values[block[0]] - other[block[0]]
            if any(self._values[x] - other[x] != gap for x in block):
                return False
        return True

    def restrict(self, indices):
        """The weight on the induced subspace `indices`."""
        return WeakWeight([self._values[x] for x in indices])


class CWeakWeight(WeakWeight):
    """A componentwise weak weight: the defining equation holds inside each block of `partition`.

    Parameters
    ----------
    values : list
    partition : qmet.spaces.Partition
        The components the weight is relative to.
    """

    def __init__(self, values, partition):
        super().__init__(values)
        if partition.n != len(self._values):
            raise ValueError("Partition of {} points for a weight of length {}."
                             .format(partition.n, len(self._values)))
        self._partition = partition

    @property
    def partition(self):
        """Partition: The components the weight is relative to."""
        return self._partition

    def _rebuild(self, values):
        return CWeakWeight(values, self._partition)

    def is_equivalent(self, other, partition=None):
        return super().is_equivalent(other, partition if partition is not None else self._partition)

    def __eq__(self, other):
        if not isinstance(other, CWeakWeight):
            return NotImplemented
        return self._values == other._values and self._partition == other._partition

    def __hash__(self):
        return hash((self._values, self._partition))


class WeightClassification:
    """Bounds of a weak weight together with its fading representatives.

    Attributes
    ----------
    lower_bound, upper_bound : sympy.Rational
    fading_weight : WeakWeight
        The representative with minimum 0 (minimum 0 on every block for componentwise weights).
    fading_coweight : WeakWeight
        ``max(w) - w``, a co-weight with minimum 0.
    """

    def __init__(self, lower_bound, upper_bound, fading_weight, fading_coweight):
        self.lower_bound = lower_bound
        self.upper_bound = upper_bound
        self.fading_weight = fading_weight
        self.fading_coweight = fading_coweight

    def __repr__(self):
        return ("WeightClassification(lower_bound={}, upper_bound={}, fading_weight={}, fading_coweight={})"
                .format(self.lower_bound, self.upper_bound, self.fading_weight, self.fading_coweight))


def _component_candidate(X, block, base):
    d = X.d
    values = {y: d[base][y] - d[y][base] for y in block}
    for x in block:
        for y in block:
            if d[x][y] + values[x] != d[y][x] + values[y]:
                return values, (x, y)
    return values, None


def _base_of(block, base_points, index):
    if base_points is None:
        return block[0]
    base = base_points[index]
    if base not in block:
        raise ValueError("Base point {} is not in component {}.".format(base, block))
    return base


def synth_weak_weight(X, base_points=None):
    """Find a weak weight for `X`.

    On each component a base point x0 gives the candidate w(y) = d(x0, y) - d(y, x0). The space
    is weakly weighted iff every candidate satisfies the defining equation on its component and
    d(x, y) is infinite exactly when d(y, x) is.

    Parameters
    ----------
    X : qmet.spaces.GQSpace
    base_points : list of int, defaults to None
        One base point per component (in the order of ``components(X)``). The smallest index of
        each component is used when omitted.

    Returns
    -------
    WeakWeight

    Raises
    ------
    NotWeaklyWeighted

    Examples
    --------
    >>> from qmet.spaces import GQSpace
    >>> synth_weak_weight(GQSpace([[0, 0], [1, 0]]))
    WeakWeight([0, -1])
    >>> synth_weak_weight(GQSpace([[0, 0, 0], [1, 0, 0], [1, 1, 0]]))
    Traceback (most recent call last):
        ...
    qmet.exceptions.NotWeaklyWeighted: The space is not weakly weighted, witness pair (1, 2).
    """
    partition = components(X)
    values = [None] * X.n
    for index, block in enumerate(partition):
        candidate, witness = _component_candidate(X, block, _base_of(block, base_points, index))
        if witness is not None:
            raise NotWeaklyWeighted(witness)
        for y, v in candidate.items():
            values[y] = v

    d = X.d
    for x in range(X.n):
        for y in range(x + 1, X.n):
            if (d[x][y] is INF) != (d[y][x] is INF):
                raise NotWeaklyWeighted((x, y), "infinite in one direction only")
    return WeakWeight(values)


def synth_cweak_weight(X, base_points=None):
    """Find a componentwise weak weight for `X`.

    Parameters
    ----------
    X : qmet.spaces.GQSpace
    base_points : list of int, defaults to None

    Returns
    -------
    CWeakWeight

    Raises
    ------
    NotCWW
        Carries the index of the failing component and a witness pair.

    Examples
    --------
    >>> from qmet.spaces import GQSpace
    >>> w = synth_cweak_weight(GQSpace([[0, 1], ["inf", 0]]))
    >>> w.values, w.partition
    ((0, 0), Partition([(0,), (1,)]))
    """
    partition = components(X)
    values = [None] * X.n
    for index, block in enumerate(partition):
        candidate, witness = _component_candidate(X, block, _base_of(block, base_points, index))
        if witness is not None:
            logger.debug("component %d fails at %s", index, witness)
            raise NotCWW(index, witness)
        for y, v in candidate.items():
            values[y] = v
    return CWeakWeight(values, partition)


def verify_weight(X, w, mode="weak"):
    """Check a vector against the weak weight, weight or co-weight identity.

    Parameters
    ----------
    X : qmet.spaces.GQSpace
    w : WeakWeight or list
    mode : {"weak", "componentwise", "weight", "coweight"}
        ``weak`` and ``weight`` use d(x,y) + w(x) = d(y,x) + w(y); ``coweight`` uses
        d(x,y) + w(y) = d(y,x) + w(x); ``componentwise`` only tests pairs inside a component.
        ``weight`` and ``coweight`` also need w >= 0.

    Returns
    -------
    Verdict
        A failing pair, or ``(x,)`` with reason ``"NegativeWeight"``.

    Examples
    --------
    >>> from qmet.spaces import GQSpace
    >>> chain = GQSpace([[0, 0, 0], [1, 0, 0], [2, 1, 0]])
    >>> verify_weight(chain, [0, -1, -2], "weak")
    Verdict(holds=True, witness=None)
    >>> verify_weight(chain, [0, -1, -2], "weight")
    Verdict(holds=False, witness=(1,), reason='NegativeWeight')
    >>> verify_weight(chain, [0, 1, 2], "coweight")
    Verdict(holds=True, witness=None)
    """
    if mode not in WEIGHT_MODES:
        raise ValueError("Unknown mode '{}', expected one of {}.".format(mode, WEIGHT_MODES))
    values = _as_values(w)
    if len(values) != X.n:
        raise ValueError("Weight has {} values for {} points.".format(len(values), X.n))

    if mode in ("weight", "coweight"):
        for x, v in enumerate(values):
            if v < 0:
                return Verdict(False, (x,), "NegativeWeight")

    partition = components(X) if mode == "componentwise" else None
    d = X.d
    for x in range(X.n):
        for y in range(x + 1, X.n):
            if partition is not None and not partition.same(x, y):
                continue
            if mode == "coweight":
                holds = d[x][y] + values[y] == d[y][x] + values[x]
            else:
                holds = d[x][y] + values[x] == d[y][x] + values[y]
            if not holds:
                return Verdict(False, (x, y))
    return Verdict(True)


def classify_bounds(X, w):
    """Bounds and fading representatives of a weak weight.

    Parameters
    ----------
    X : qmet.spaces.GQSpace
    w : WeakWeight or CWeakWeight
        For a :class:`CWeakWeight` the fading vectors are taken block by block.

    Returns
    -------
    WeightClassification

    Examples
    --------
    >>> from qmet.spaces import GQSpace
    >>> c = classify_bounds(GQSpace([[0, 0], [1, 0]]), WeakWeight([1, 0]))
    >>> c.fading_weight, c.fading_coweight
    (WeakWeight([1, 0]), WeakWeight([0, 1]))
    """
    componentwise = isinstance(w, CWeakWeight)
    verdict = verify_weight(X, w, "componentwise" if componentwise else "weak")
    if not verdict:
        raise NotWeaklyWeighted(verdict.witness)

    blocks = w.partition if componentwise else [range(X.n)]
    fading = [None] * X.n
    cofading = [None] * X.n
    for block in blocks:
        low = min(w[x] for x in block)
        high = max(w[x] for x in block)
        for x in block:
            fading[x] = w[x] - low
            cofading[x] = high - w[x]
    if componentwise:
        fading_weight = CWeakWeight(fading, w.partition)
        fading_coweight = CWeakWeight(cofading, w.partition)
    else:
        fading_weight = WeakWeight(fading)
        fading_coweight = WeakWeight(cofading)
    return WeightClassification(w.min(), w.max(), fading_weight, fading_coweight)


def check_ww_implies_dpc(X, w):
    """Consistency alarm: a weakly weighted space satisfies DPC and its reverse-path identity.

    For every triple with d(x, z) = d(x, y) + d(y, z) it also checks d(z, x) = d(z, y) + d(y, x).
    For a :class:`CWeakWeight` only triples inside one component are checked.

    Returns
    -------
    Verdict
        Reason ``"DPC"`` or ``"reverse path"`` on failure.

    Examples
    --------
    >>> from qmet.spaces import GQSpace
    >>> check_ww_implies_dpc(GQSpace([[0, 0], [1, 0]]), WeakWeight([1, 0]))
    Verdict(holds=True, witness=None)
    """
    componentwise = isinstance(w, CWeakWeight)
    verdict = verify_weight(X, w, "componentwise" if componentwise else "weak")
    if not verdict:
        raise NotWeaklyWeighted(verdict.witness)

    dpc = check_dpc(X)
    if not dpc:
        return Verdict(False, dpc.witness, "DPC")

    d = X.d
    blocks = w.partition if componentwise else [range(X.n)]
    for block in blocks:
        for x in block:
            for y in block:
                for z in block:
                    if d[x][z] is INF or d[x][z] != d[x][y] + d[y][z]:
                        continue
                    if d[z][x] != d[z][y] + d[y][x]:
                        return Verdict(False, (x, y, z), "reverse path")
    return Verdict(True)
