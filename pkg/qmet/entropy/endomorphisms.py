import itertools
import logging

from ..exceptions import NotMeetPreserving
from ..utils import Verdict
from ..spaces.relations import Partition
from ..semilattices.semilattice import MeetSL
from .carriers import FiniteCarrier, PowerSetCarrier, SubgroupCarrier, DEFAULT_ELEMENT_BUDGET

logger = logging.getLogger(__name__)


class SLEndo:
    """A meet-preserving self-map of a carrier.

    On finite carriers meet preservation is checked for every pair on construction. On the
    countable carriers it is checked lazily with :meth:`check_pair` on the elements a
    computation visits.

    Parameters
    ----------
    carrier : qmet.entropy.Carrier
    mapping : callable
    name : str, defaults to None

    Examples
    --------
    >>> from qmet.semilattices import MeetSL
    >>> chain = MeetSL([[0, 0, 0], [0, 1, 1], [0, 1, 2]])
    >>> phi = SLEndo.from_table(chain, [0, 0, 1])
    >>> phi(2), phi.power(2, 2)
    (1, 0)
    >>> SLEndo.from_table(MeetSL([[0, 0, 0], [0, 1, 0], [0, 0, 2]]), [1, 1, 2])
    Traceback (most recent call last):
        ...
    qmet.exceptions.NotMeetPreserving: Map does not preserve the meet of (0, 2).
    """

    def __init__(self, carrier, mapping, name=None):
        self._carrier = carrier
        self._mapping = mapping
        self.name = name
        if carrier.finite:
            for a, b in itertools.combinations_with_replacement(carrier.elements(), 2):
                self.check_pair(a, b)

    @classmethod
    def from_table(cls, S, table, X=None):
        """The self-map x -> table[x] of a finite meet-semilattice."""
        table = tuple(int(v) for v in table)
        if len(table) != S.n or any(not 0 <= v < S.n for v in table):
            raise ValueError("A map table needs {} entries in 0..{}.".format(S.n, S.n - 1))
        return cls(FiniteCarrier(S, X), table.__getitem__, "table {}".format(list(table)))

    @property
    def carrier(self):
        return self._carrier

    @property
    def table(self):
        """tuple of int: Values on a finite carrier."""
        return tuple(self(a) for a in self._carrier.elements())

    def __call__(self, a):
        return self._mapping(a)

    def power(self, a, n):
        """phi^n(a)."""
        for _ in range(n):
            a = self(a)
        return a

    def check_pair(self, a, b):
        """Raise :class:`qmet.exceptions.NotMeetPreserving` unless phi(a ∧ b) = phi(a) ∧ phi(b)."""
        meet = self._carrier.meet
        if self(meet(a, b)) != meet(self(a), self(b)):
            raise NotMeetPreserving((self._carrier.format(a), self._carrier.format(b))
                                    if not self._carrier.finite else (a, b))

    def __repr__(self):
        return "SLEndo({})".format(self.name or self._mapping)


def identity(carrier):
    """The identity endomorphism."""
    return SLEndo(carrier, lambda a: a, "identity")


def integer_shift(c=1):
    """The shift n -> n + c of the integers, acting on finite subsets.

    Examples
    --------
    >>> integer_shift(2)(frozenset({0, 1}))
    frozenset({2, 3})
    """
    return SLEndo(PowerSetCarrier(), lambda A: frozenset(a + c for a in A), "integer shift by {}".format(c))


def coordinate_shift(p, k=1, c=1, budget=DEFAULT_ELEMENT_BUDGET):
    """The shift e_i -> e_{i+c} of the direct sum of copies of Z/p^k, acting on finite subgroups.

    With c = 1 this is the right Bernoulli shift.

    Examples
    --------
    >>> beta = coordinate_shift(2)
    >>> H = beta.carrier.subgroup([[(0, 1)]])
    >>> beta(H) == beta.carrier.subgroup([[(1, 1)]])
    True
    """
    if c < 0:
        raise ValueError("Coordinate shifts must be nonnegative, got {}.".format(c))
    return SLEndo(SubgroupCarrier(p, k, budget), lambda H: H.shifted(c),
                  "coordinate shift by {} on Z/{}^{}".format(c, p, k))


def meet_endomorphisms(S):
    """Every meet-preserving self-map of a finite meet-semilattice, as tables.

    Values are assigned point by point; a partial table is abandoned as soon as a pair with
    both points and their meet assigned breaks meet preservation.

    Examples
    --------
    >>> from qmet.semilattices import MeetSL
    >>> len(meet_endomorphisms(MeetSL([[0, 0], [0, 1]])))
    3
    """
    n = S.n
    table = [None] * n
    found = []

    def consistent(x):
        for y in range(x + 1):
            m = S.meet(x, y)
            if m > x:
                continue
            if S.meet(table[x], table[y]) != table[m]:
                return False
        for y in range(x):
            for z in range(x):
                if S.meet(y, z) == x and S.meet(table[y], table[z]) != table[x]:
                    return False
        return True

    def extend(x):
        if x == n:
            found.append(tuple(table))
            return
        for value in range(n):
            table[x] = value
            if consistent(x):
                extend(x + 1)
        table[x] = None

    extend(0)
    logger.debug("%d meet endomorphisms on %d points", len(found), n)
    return found


def respects(e, cong):
    """Whether x ≅ y implies phi(x) ≅ phi(y), on a finite carrier.

    Returns
    -------
    qmet.utils.Verdict
        The witness is a pair of congruent points with non-congruent images.

    Examples
    --------
    >>> from qmet.semilattices import MeetSL
    >>> from qmet.spaces import Partition
    >>> chain = MeetSL([[0, 0, 0], [0, 1, 1], [0, 1, 2]])
    >>> respects(SLEndo.from_table(chain, [0, 0, 1]), Partition([[0], [1, 2]]))
    Verdict(holds=False, witness=(1, 2))
    """
    if not e.carrier.finite:
        raise ValueError("Respect can only be checked on finite carriers.")
    for block in cong:
        for x, y in itertools.combinations(block, 2):
            if not cong.same(e(x), e(y)):
                return Verdict(False, (x, y))
    return Verdict(True)


def diamond_endomorphism():
    """The four-point diamond with a map that passes criterion c at the top without being inert.

    Points are 0 (bottom), 1 and 2 (incomparable) and 3 (top). The map sends the top to 1 and
    everything else to the bottom; the congruence has blocks {1, 3} and {0, 2}, and the map
    does not respect it.

    Returns
    -------
    tuple
        ``(SLEndo, Partition)``

    Examples
    --------
    >>> e, cong = diamond_endomorphism()
    >>> e.table, cong
    ((0, 0, 0, 1), Partition([(0, 2), (1, 3)]))
    >>> respects(e, cong)
    Verdict(holds=False, witness=(1, 3))
    """
    S = MeetSL([[0, 0, 0, 0], [0, 1, 0, 1], [0, 0, 2, 2], [0, 1, 2, 3]], ["bottom", "x", "y", "top"])
    return SLEndo.from_table(S, [0, 0, 0, 1]), Partition([[1, 3], [0, 2]])
