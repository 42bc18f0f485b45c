import itertools
import logging

import numpy as np
import sympy
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import shortest_path, connected_components
from tqdm import tqdm

from ..exceptions import Disagreement, NotCWW, NotWeaklyWeighted
from ..utils import INF, Verdict
from ..spaces.relations import Partition
from ..spaces.qmetric import GQSpace, components
from ..weights.weights import synth_weak_weight, synth_cweak_weight

logger = logging.getLogger(__name__)


class Digraph:
    """A finite directed graph without self-loops.

    Parameters
    ----------
    nv : int
        Number of vertices ``0, ..., nv-1``.
    edges : iterable of (int, int)

    Examples
    --------
    >>> G = Digraph(3, [(0, 1), (1, 2), (2, 0)])
    >>> G.nv, G.edges
    (3, ((0, 1), (1, 2), (2, 0)))
    >>> Digraph(2, [(1, 1)])
    Traceback (most recent call last):
        ...
    ValueError: Self-loop at vertex 1.
    """

    def __init__(self, nv, edges=()):
        if nv < 1:
            raise ValueError("A digraph needs at least one vertex, got {}.".format(nv))
        checked = set()
        for u, v in edges:
            u, v = int(u), int(v)
            if not (0 <= u < nv and 0 <= v < nv):
                raise ValueError("Edge ({}, {}) leaves the vertex range 0..{}.".format(u, v, nv - 1))
            if u == v:
                raise ValueError("Self-loop at vertex {}.".format(u))
            checked.add((u, v))
        self._nv = nv
        self._edges = tuple(sorted(checked))

    @classmethod
    def undirected(cls, nv, edges):
        """The digraph with both orientations of every edge."""
        return cls(nv, [e for u, v in edges for e in ((u, v), (v, u))])

    @property
    def nv(self):
        """int: Number of vertices."""
        return self._nv

    @property
    def edges(self):
        """tuple of (int, int): Sorted edge list."""
        return self._edges

    @property
    def adjacency(self):
        """scipy.sparse.csr_matrix: Unit-weight adjacency matrix."""
        rows = [u for u, _ in self._edges]
        cols = [v for _, v in self._edges]
        return csr_matrix((np.ones(len(self._edges)), (rows, cols)), shape=(self._nv, self._nv))

    def has_edge(self, u, v):
        return (u, v) in self._edges

    def __eq__(self, other):
        if not isinstance(other, Digraph):
            return NotImplemented
        return (self._nv, self._edges) == (other._nv, other._edges)

    def __hash__(self):
        return hash((self._nv, self._edges))

    def __repr__(self):
        return "Digraph({}, {})".format(self._nv, list(self._edges))


def path_qmetric(G):
    """The path generalised quasi-metric: length of a shortest directed path.

    Unreachable pairs are at infinite distance.

    Parameters
    ----------
    G : Digraph

    Returns
    -------
    qmet.spaces.GQSpace

    Examples
    --------
    >>> path_qmetric(Digraph(3, [(0, 1), (1, 2), (2, 0)])).d
    ((0, 1, 2), (2, 0, 1), (1, 2, 0))
    >>> path_qmetric(Digraph(2, [(0, 1)])).d
    ((0, 1), (oo, 0))
    """
    lengths = shortest_path(G.adjacency, method="D", directed=True, unweighted=True)
    rows = [[INF if np.isinf(v) else sympy.Integer(int(v)) for v in row] for row in lengths]
    return GQSpace(rows)


def strongly_connected_components(G):
    """Strongly connected components as a partition.

    Examples
    --------
    >>> strongly_connected_components(Digraph(3, [(0, 1), (1, 0), (1, 2)]))
    Partition([(0, 1), (2,)])
    """
    _, labels = connected_components(G.adjacency, directed=True, connection="strong")
    return Partition.from_labels(labels.tolist())


def is_non_directed(G, block=None):
    """Whether every edge (inside `block`, when given) has its reverse.

    Returns
    -------
    qmet.utils.Verdict
        The witness is a one-way edge.

    Examples
    --------
    >>> is_non_directed(Digraph(2, [(0, 1)]))
    Verdict(holds=False, witness=(0, 1))
    >>> is_non_directed(Digraph(2, [(0, 1)]), block=[0])
    Verdict(holds=True, witness=None)
    """
    members = set(block) if block is not None else None
    for u, v in G.edges:
        if members is not None and (u not in members or v not in members):
            continue
        if not G.has_edge(v, u):
            return Verdict(False, (u, v))
    return Verdict(True)


class GraphWeightReport:
    """Both sides of "componentwise weakly weighted iff strongly connected components are non-directed".

    Attributes
    ----------
    weighted : Verdict
        Whether the path quasi-metric is componentwise weakly weighted; witness ``(component, pair)``.
    non_directed : Verdict
        Whether every strongly connected component is non-directed; witness is a one-way edge.
    globally_weighted : Verdict
        Whether the path quasi-metric is weakly weighted on the whole carrier.
    globally_non_directed : Verdict
        Whether the whole graph is non-directed.
    """

    def __init__(self, weighted, non_directed, globally_weighted, globally_non_directed):
        self.weighted = weighted
        self.non_directed = non_directed
        self.globally_weighted = globally_weighted
        self.globally_non_directed = globally_non_directed

    @property
    def holds(self):
        return self.weighted.holds

    def __bool__(self):
        return self.holds

    def __repr__(self):
        return "GraphWeightReport(weighted={}, non_directed={}, globally_weighted={}, globally_non_directed={})".format(
            self.weighted.holds, self.non_directed.holds, self.globally_weighted.holds,
            self.globally_non_directed.holds)


def ww_iff_undirected(G):
    """Compare weak-weight synthesis on the path quasi-metric with the shape of the graph.

    The path quasi-metric is componentwise weakly weighted exactly when every strongly
    connected component is non-directed, and weakly weighted exactly when the whole graph is.

    Parameters
    ----------
    G : Digraph

    Returns
    -------
    GraphWeightReport

    Raises
    ------
    Disagreement
        When a side of either equivalence disagrees with the other.

    Examples
    --------
    >>> ww_iff_undirected(Digraph(3, [(0, 1), (1, 2), (2, 0)]))
    GraphWeightReport(weighted=False, non_directed=False, globally_weighted=False, globally_non_directed=False)
    >>> ww_iff_undirected(Digraph(4, [(0, 1), (1, 0), (2, 3), (3, 2), (1, 2)]))
    GraphWeightReport(weighted=True, non_directed=True, globally_weighted=False, globally_non_directed=False)
    """
    X = path_qmetric(G)
    scc = strongly_connected_components(G)
    if components(X) != scc:
        raise Disagreement("Components of the path quasi-metric differ from the strong components.")

    try:
        synth_cweak_weight(X)
        weighted = Verdict(True)
    except NotCWW as e:
        weighted = Verdict(False, (e.component, e.witness))
    non_directed = Verdict(True)
    for block in scc:
        verdict = is_non_directed(G, block)
        if not verdict:
            non_directed = verdict
            break

    try:
        synth_weak_weight(X)
        globally_weighted = Verdict(True)
    except NotWeaklyWeighted as e:
        globally_weighted = Verdict(False, e.witness)
    globally_non_directed = is_non_directed(G)

    if weighted.holds != non_directed.holds or globally_weighted.holds != globally_non_directed.holds:
        raise Disagreement("Weak weights and non-directedness disagree on {!r}.".format(G))
    return GraphWeightReport(weighted, non_directed, globally_weighted, globally_non_directed)


def all_digraphs(nv):
    """Every digraph on `nv` labelled vertices, one per edge subset."""
    pairs = list(itertools.permutations(range(nv), 2))
    for mask in range(2 ** len(pairs)):
        yield Digraph(nv, [pair for bit, pair in enumerate(pairs) if mask >> bit & 1])


def exhaustive_graph_check(nv=4, verbose=False):
    """Run :func:`ww_iff_undirected` on every digraph with `nv` vertices.

    Returns
    -------
    dict
        ``{"graphs": ..., "weighted": ..., "globally_weighted": ...}``.

    Examples
    --------
    >>> exhaustive_graph_check(2)
    {'graphs': 4, 'weighted': 4, 'globally_weighted': 2}
    """
    counts = {"graphs": 0, "weighted": 0, "globally_weighted": 0}
    total = 2 ** (nv * (nv - 1))
    for G in tqdm(all_digraphs(nv), total=total, desc="digraphs", disable=not verbose):
        report = ww_iff_undirected(G)
        counts["graphs"] += 1
        counts["weighted"] += report.weighted.holds
        counts["globally_weighted"] += report.globally_weighted.holds
    logger.debug("graph check on %d vertices: %s", nv, counts)
    return counts
