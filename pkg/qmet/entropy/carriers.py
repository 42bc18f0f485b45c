"""Meet-semilattices that entropy computations run on.

A carrier knows how to take meets of its elements. Finite carriers wrap a :class:`MeetSL`
and enumerate their points; the two countable families (finitely supported subsets of the
integers, finite subgroups of a direct sum of cyclic p-groups) build elements on demand.
"""
import abc

import sympy

from ..exceptions import HorizonExceeded
from ..spaces.qmetric import specialisation_order

DEFAULT_ELEMENT_BUDGET = 2 ** 16


class Carrier(metaclass=abc.ABCMeta):
    """Base class of carriers.

    Attributes
    ----------
    finite : bool
        Whether the elements can be enumerated with :meth:`elements`.
    """

    finite = False

    @abc.abstractmethod
    def meet(self, a, b):
        raise NotImplementedError()

    def leq(self, a, b):
        return self.meet(a, b) == a

    def distance(self, a, b):
        """The quasi-metric of the carrier, when it has one."""
        raise NotImplementedError()

    def elements(self):
        raise NotImplementedError()

    def format(self, a):
        return str(a)


class FiniteCarrier(Carrier):
    """The points of a finite meet-semilattice, optionally with an invariant quasi-metric.

    Parameters
    ----------
    S : qmet.semilattices.MeetSL
    X : qmet.spaces.GQSpace, defaults to None
        Its specialisation order must be the order of `S`.

    Examples
    --------
    >>> from qmet.semilattices import MeetSL
    >>> C = FiniteCarrier(MeetSL([[0, 0], [0, 1]]))
    >>> C.meet(0, 1), list(C.elements())
    (0, [0, 1])
    """

    finite = True

    def __init__(self, S, X=None):
        if X is not None and specialisation_order(X) != S.order:
            raise ValueError("The specialisation order of the space differs from the semilattice order.")
        self._S = S
        self._X = X

    @property
    def semilattice(self):
        return self._S

    @property
    def space(self):
        return self._X

    @property
    def n(self):
        return self._S.n

    def meet(self, a, b):
        return self._S.meet(a, b)

    def distance(self, a, b):
        if self._X is None:
            raise ValueError("This carrier has no distance.")
        return self._X.d[a][b]

    def elements(self):
        return range(self._S.n)

    def format(self, a):
        return self._S.label(a)


def format_set(A):
    """Text of a finite set of integers.

    Examples
    --------
    >>> format_set(frozenset({3, -1}))
    '{-1, 3}'
    """
    return "{" + ", ".join(str(a) for a in sorted(A)) + "}"


class PowerSetCarrier(Carrier):
    """Finite subsets of the integers ordered by reverse inclusion.

    The meet is the union and the distance is d(A, B) = |B \\ A|.

    Examples
    --------
    >>> C = PowerSetCarrier()
    >>> C.meet(frozenset({0}), frozenset({2}))
    frozenset({0, 2})
    >>> C.distance(frozenset({0}), frozenset({0, 1, 2}))
    2
    """

    def meet(self, a, b):
        return a | b

    def distance(self, a, b):
        return sympy.Integer(len(b - a))

    def format(self, a):
        return format_set(a)


def _add(u, v, modulus):
    total = dict(u)
    for index, value in v:
        total[index] = (total.get(index, 0) + value) % modulus
    return tuple(sorted((i, a) for i, a in total.items() if a))


def _scale(u, m, modulus):
    return tuple((i, a * m % modulus) for i, a in u if a * m % modulus)


def vector(pairs, modulus):
    """A sparse vector of the direct sum, from ``(index, value)`` pairs.

    Examples
    --------
    >>> vector([(3, 5), (0, 1)], 4)
    ((0, 1), (3, 1))
    """
    result = ()
    for index, value in pairs:
        if index < 0:
            raise ValueError("Coordinate index must be nonnegative, got {}.".format(index))
        result = _add(result, ((int(index), int(value) % modulus),), modulus)
    return result


class Subgroup:
    """A finite subgroup of the direct sum of countably many copies of Z/p^k.

    Elements are sparse vectors: sorted tuples of ``(index, value)`` with nonzero values.

    Parameters
    ----------
    elements : iterable of tuple
    p : int
    k : int

    Examples
    --------
    >>> H = Subgroup.generated([vector([(0, 1)], 2)], 2, 1)
    >>> H.order, H.log_order
    (2, 1)
    >>> (H + H.shifted(1)).order
    4
    """

    def __init__(self, elements, p, k):
        self._elements = frozenset(elements)
        self.p = p
        self.k = k

    @classmethod
    def generated(cls, generators, p, k, budget=DEFAULT_ELEMENT_BUDGET):
        """The subgroup generated by sparse vectors, built by closing under addition."""
        modulus = p ** k
        elements = {()}
        for g in generators:
            cyclic = {_scale(g, m, modulus) for m in range(modulus)}
            elements = {_add(h, c, modulus) for h in elements for c in cyclic}
            if len(elements) > budget:
                raise HorizonExceeded(None, budget)
        return cls(elements, p, k)

    @property
    def elements(self):
        """frozenset of tuple"""
        return self._elements

    @property
    def order(self):
        """int: Number of elements, a power of p."""
        return len(self._elements)

    @property
    def log_order(self):
        """int: log_p of the order."""
        order, exponent = self.order, 0
        while order > 1:
            order //= self.p
            exponent += 1
        return exponent

    def add(self, other, budget=DEFAULT_ELEMENT_BUDGET):
        """The sum H + K, refusing to grow past `budget` elements."""
        if self._elements >= other._elements:
            return self
        if other._elements >= self._elements:
            return other
        modulus = self.p ** self.k
        elements = {_add(h, g, modulus) for h in self._elements for g in other._elements}
        if len(elements) > budget:
            raise HorizonExceeded(None, budget)
        return Subgroup(elements, self.p, self.k)

    def __add__(self, other):
        return self.add(other)

    def shifted(self, c):
        """Image under the coordinate shift e_i -> e_{i+c}."""
        if c < 0:
            raise ValueError("Coordinate shifts must be nonnegative, got {}.".format(c))
        return Subgroup((tuple((i + c, a) for i, a in u) for u in self._elements), self.p, self.k)

    def __eq__(self, other):
        if not isinstance(other, Subgroup):
            return NotImplemented
        return (self.p, self.k, self._elements) == (other.p, other.k, other._elements)

    def __hash__(self):
        return hash((self.p, self.k, self._elements))

    def __repr__(self):
        return "Subgroup(p={}, k={}, order={})".format(self.p, self.k, self.order)


class SubgroupCarrier(Carrier):
    """Finite subgroups of the direct sum of copies of Z/p^k, ordered by reverse inclusion.

    The meet is the sum and the distance is d(H, K) = log_p |H + K : H|.

    Parameters
    ----------
    p : int
        A prime.
    k : int, defaults to 1
    budget : int, defaults to 2**16
        Largest subgroup the carrier agrees to build.

    Examples
    --------
    >>> C = SubgroupCarrier(2)
    >>> H = C.subgroup([[(0, 1)]])
    >>> C.distance(H, C.meet(H, C.subgroup([[(1, 1)]])))
    1
    """

    def __init__(self, p, k=1, budget=DEFAULT_ELEMENT_BUDGET):
        if not sympy.isprime(p):
            raise ValueError("p must be prime, got {}.".format(p))
        if k < 1:
            raise ValueError("k must be positive, got {}.".format(k))
        self.p = p
        self.k = k
        self.budget = budget

    def subgroup(self, generators):
        """The subgroup generated by `generators`, each a list of ``(index, value)`` pairs."""
        modulus = self.p ** self.k
        return Subgroup.generated([vector(g, modulus) for g in generators], self.p, self.k, self.budget)

    def meet(self, a, b):
        return a.add(b, self.budget)

    def distance(self, a, b):
        return sympy.Integer(self.meet(a, b).log_order - a.log_order)

    def format(self, a):
        return "<{} elements>".format(a.order)
