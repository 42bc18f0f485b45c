from ..exceptions import Disagreement
from ..utils import Verdict, to_value
from .semilattice import check_congruence

FLAVOURS = ("meet-val", "meet-coval", "join-val", "join-coval")


def as_function(f, n):
    """Exact values of a function on ``{0, ..., n-1}`` (negatives allowed, no infinity)."""
    values = tuple(to_value(v, allow_negative=True, allow_inf=False) for v in f)
    if len(values) != n:
        raise ValueError("Function has {} values for {} points.".format(len(values), n))
    return values


def base_order(S, flavour):
    """The order a flavour refers to.

    Meet flavours use the order of `S`. Join flavours read `S` as a join-semilattice stored over
    the opposite order, so they use ``S.order.inverse()``.
    """
    return S.order if flavour.startswith("meet") else S.order.inverse()


class Monotonicity:
    """How a function behaves along an order, optionally only inside blocks.

    Attributes
    ----------
    non_decreasing, non_increasing, strictly_increasing, strictly_decreasing : bool
    """

    def __init__(self, values, order, partition=None):
        self.non_decreasing = True
        self.non_increasing = True
        self.strictly_increasing = True
        self.strictly_decreasing = True
        for x in range(order.n):
            for y in order.up_set(x):
                if y == x or (partition is not None and not partition.same(x, y)):
                    continue
                if values[x] > values[y]:
                    self.non_decreasing = False
                if values[x] < values[y]:
                    self.non_increasing = False
                if not values[x] < values[y]:
                    self.strictly_increasing = False
                if not values[x] > values[y]:
                    self.strictly_decreasing = False

    def describe(self):
        """Short text such as ``"strictly decreasing"`` or ``"constant"``.

        Examples
        --------
        >>> from qmet.spaces import OrderRel
        >>> chain = OrderRel.from_pairs(3, [(0, 1), (1, 2)])
        >>> Monotonicity([2, 1, 0], chain).describe()
        'strictly decreasing'
        >>> Monotonicity([1, 1, 1], chain).describe()
        'constant'
        """
        if self.non_decreasing and self.non_increasing:
            return "vacuous" if self.strictly_increasing else "constant"
        if self.strictly_increasing:
            return "strictly increasing"
        if self.strictly_decreasing:
            return "strictly decreasing"
        if self.non_decreasing:
            return "non-decreasing"
        if self.non_increasing:
            return "non-increasing"
        return "not monotone"

    def __repr__(self):
        return "Monotonicity('{}')".format(self.describe())


class ValuationVerdict(Verdict):
    """A :class:`~qmet.utils.Verdict` that also carries the :class:`Monotonicity` of the function."""

    def __init__(self, holds, witness=None, monotonicity=None):
        super().__init__(holds, witness)
        self.monotonicity = monotonicity

    def __repr__(self):
        return "ValuationVerdict(holds={}, witness={}, monotonicity={!r})".format(
            self.holds, self.witness, self.monotonicity.describe() if self.monotonicity else None)


def _inequality(flavour, lhs, rhs):
    if flavour in ("meet-val", "join-coval"):
        return lhs >= rhs
    return lhs <= rhs


def check_valuation(S, f, flavour, cong=None):
    """Check the four-point inequality of a (generalised) semivaluation flavour.

    With ``*`` the table operation of `S`, the tested inequality is

    - meet-val, join-coval: f(x) + f(x*y*z) >= f(x*y) + f(x*z)
    - meet-coval, join-val: f(x) + f(x*y*z) <= f(x*y) + f(x*z)

    Join flavours read `S` as a join-semilattice (the result of
    :func:`~qmet.semilattices.join_semilattice_from_order`). With a congruence, only triples
    with x ≅ x*z and y ≅ x*y are tested.

    Parameters
    ----------
    S : MeetSL
    f : list
    flavour : {"meet-val", "meet-coval", "join-val", "join-coval"}
    cong : qmet.spaces.Partition, defaults to None

    Returns
    -------
    ValuationVerdict
        The witness is a failing triple ``(x, y, z)``. Monotonicity is measured along the order
        of the flavour, inside the blocks of `cong` when given.

    Examples
    --------
    >>> from qmet.semilattices import MeetSL
    >>> chain = MeetSL([[0, 0, 0], [0, 1, 1], [0, 1, 2]])
    >>> check_valuation(chain, [2, 1, 0], "meet-coval")
    ValuationVerdict(holds=True, witness=None, monotonicity='strictly decreasing')
    >>> check_valuation(chain, [0, 0, 0], "meet-val")
    ValuationVerdict(holds=True, witness=None, monotonicity='constant')
    """
    if flavour not in FLAVOURS:
        raise ValueError("Unknown flavour '{}', expected one of {}.".format(flavour, FLAVOURS))
    values = as_function(f, S.n)
    if cong is not None:
        verdict = check_congruence(S, cong)
        if not verdict:
            raise ValueError("{} is not a congruence: {} at {}.".format(cong, verdict.reason, verdict.witness))

    op = S.meet
    witness = None
    for x in range(S.n):
        for y in range(S.n):
            xy = op(x, y)
            for z in range(S.n):
                xz = op(x, z)
                xyz = op(xy, z)
                if cong is not None:
                    if not (cong.same(x, xz) and cong.same(y, xy)):
                        continue
                    if not cong.same(xy, xyz):
                        raise Disagreement("y, x*y and x*y*z are not congruent.", (x, y, z))
                if not _inequality(flavour, values[x] + values[xyz], values[xy] + values[xz]):
                    witness = (x, y, z)
                    break
            if witness is not None:
                break
        if witness is not None:
            break

    monotonicity = Monotonicity(values, base_order(S, flavour), cong)
    if witness is None:
        expected = monotonicity.non_decreasing if flavour.endswith("-val") else monotonicity.non_increasing
        if not expected:
            raise Disagreement("A {} has the wrong monotonicity.".format(flavour))
    return ValuationVerdict(witness is None, witness, monotonicity)


def dual_flavour(flavour):
    """The flavour of -f when f has `flavour`.

    Examples
    --------
    >>> dual_flavour("meet-coval")
    'meet-val'
    """
    if flavour.endswith("-coval"):
        return flavour[:-len("-coval")] + "-val"
    return flavour[:-len("-val")] + "-coval"
