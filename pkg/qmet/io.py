"""Reading and writing structure files.

Structures are JSON objects with a ``kind`` field:

- ``{"kind": "qmetric", "size": n, "labels": [...], "entries": [[...]]}``
- ``{"kind": "wpm", "size": n, "labels": [...], "entries": [[...]]}``
- ``{"kind": "weight", "values": [...]}``
- ``{"kind": "meetsl", "size": n, "labels": [...], "meet": [[...]]}``
- ``{"kind": "valuation", "flavour": "meet-coval", "values": [...], "congruence": [[...]]}``
- ``{"kind": "digraph", "nv": n, "edges": [[u, v], ...]}``

``labels`` and ``congruence`` are optional. A value is a JSON integer, a string ``"p"`` or
``"p/q"`` with q > 0, or ``"inf"``; negative values are accepted for the kinds ``wpm``,
``weight`` and ``valuation`` only. Written files use integers where possible, reduced
``"p/q"`` strings otherwise, two-space indentation and a trailing newline.
"""
import json
import re

from .exceptions import ParseError
from .utils import to_value, value_json
from .spaces.relations import Partition
from .spaces.qmetric import GQSpace
from .partial_metrics.partial_metric import WPMSpace
from .weights.weights import WeakWeight
from .semilattices.semilattice import MeetSL
from .semilattices.valuations import FLAVOURS
from .graphs.digraph import Digraph
from .strings.strings import StringSet

KINDS = ("qmetric", "wpm", "weight", "meetsl", "valuation", "digraph")
SIGNED_KINDS = ("wpm", "weight", "valuation")

_SUBSET_RE = re.compile(r"^\{\s*(-?[0-9]+(\s*,\s*-?[0-9]+)*)?\s*\}$")
_GENERATOR_RE = re.compile(r"^([0-9]+):(-?[0-9]+)$")


def parse_json(text):
    """Parse a structure document.

    Examples
    --------
    >>> parse_json('{"kind": "weight", "values": [1, 0]}')["kind"]
    'weight'
    >>> try:
    ...     parse_json('{"kind": "weight",\\n "values": [1, 0')
    ... except ParseError as error:
    ...     print(error.line)
    2
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as error:
        raise ParseError(error.msg, error.lineno, error.colno)
    if not isinstance(doc, dict):
        raise ParseError("The document must be a JSON object.")
    if doc.get("kind") not in KINDS:
        raise ParseError("Unknown kind {!r}, expected one of {}.".format(doc.get("kind"), ", ".join(KINDS)))
    return doc


def _field(doc, name, types):
    if name not in doc:
        raise ParseError("Missing field '{}' in a {} document.".format(name, doc["kind"]))
    value = doc[name]
    if not isinstance(value, types) or isinstance(value, bool):
        raise ParseError("Field '{}' has the wrong type.".format(name))
    return value


def _value(raw, where, signed):
    if isinstance(raw, bool) or not isinstance(raw, (int, str)):
        raise ParseError("{}: {!r} is not a value.".format(where, raw))
    try:
        return to_value(raw, allow_negative=signed)
    except ValueError as error:
        raise ParseError("{}: {}".format(where, error))


def _values(doc, name, signed):
    raw = _field(doc, name, list)
    return [_value(v, "{}[{}]".format(name, i), signed) for i, v in enumerate(raw)]


def _square(doc, name, signed, integer=False):
    rows = _field(doc, name, list)
    size = _field(doc, "size", int)
    if size < 1:
        raise ParseError("Field 'size' must be at least 1, got {}.".format(size))
    if len(rows) != size:
        raise ParseError("Field 'size' is {} but '{}' has {} rows.".format(size, name, len(rows)))
    matrix = []
    for i, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != size:
            raise ParseError("Row {} of '{}' must be a list of {} values.".format(i, name, size))
        if integer:
            if any(isinstance(v, bool) or not isinstance(v, int) for v in row):
                raise ParseError("Row {} of '{}' must hold integers.".format(i, name))
            if any(not 0 <= v < size for v in row):
                raise ParseError("Row {} of '{}' must hold point indices in 0..{}.".format(i, name, size - 1))
            matrix.append(list(row))
        else:
            matrix.append([_value(v, "{}[{}][{}]".format(name, i, j), signed) for j, v in enumerate(row)])
    return matrix


def _labels(doc, size):
    if "labels" not in doc:
        return None
    labels = _field(doc, "labels", list)
    if not all(isinstance(label, str) for label in labels):
        raise ParseError("Labels must be strings.")
    if len(labels) != size:
        raise ParseError("Got {} labels for {} points.".format(len(labels), size))
    return labels


def _blocks(doc, name):
    raw = _field(doc, name, list)
    if not all(isinstance(block, list) and all(isinstance(x, int) and not isinstance(x, bool) for x in block)
               for block in raw):
        raise ParseError("Field '{}' must be a list of lists of point indices.".format(name))
    return raw


def structure_from_document(doc):
    """Build the structure a parsed document describes.

    Semantic failures (axiom violations) raise the corresponding :class:`qmet.exceptions.QmetError`;
    grammar failures raise :class:`qmet.exceptions.ParseError`.

    Returns
    -------
    GQSpace, WPMSpace, WeakWeight, MeetSL, dict or Digraph
        A valuation is returned as a dict with keys ``flavour``, ``values`` and ``congruence``.

    Examples
    --------
    >>> structure_from_document(parse_json('{"kind": "qmetric", "size": 2, "entries": [[0, 0], [1, 0]]}'))
    GQSpace([['0', '0'], ['1', '0']])
    >>> structure_from_document(parse_json('{"kind": "qmetric", "size": 1, "entries": [["1/0"]]}'))
    Traceback (most recent call last):
        ...
    qmet.exceptions.ParseError: entries[0][0]: Malformed rational '1/0'.
    """
    kind = doc["kind"]
    signed = kind in SIGNED_KINDS
    if kind == "qmetric":
        entries = _square(doc, "entries", signed)
        return GQSpace(entries, _labels(doc, len(entries)))
    if kind == "wpm":
        entries = _square(doc, "entries", signed)
        return WPMSpace(entries, labels=_labels(doc, len(entries)))
    if kind == "weight":
        values = _values(doc, "values", signed)
        if not values:
            raise ParseError("A weight needs at least one value.")
        return WeakWeight(values)
    if kind == "meetsl":
        table = _square(doc, "meet", signed, integer=True)
        return MeetSL(table, _labels(doc, len(table)))
    if kind == "valuation":
        flavour = _field(doc, "flavour", str)
        if flavour not in FLAVOURS:
            raise ParseError("Unknown flavour '{}', expected one of {}.".format(flavour, ", ".join(FLAVOURS)))
        values = _values(doc, "values", signed)
        if not values:
            raise ParseError("A valuation needs at least one value.")
        cong = None
        if "congruence" in doc:
            try:
                cong = Partition(_blocks(doc, "congruence"), len(values))
            except ValueError as error:
                raise ParseError("Field 'congruence': {}".format(error))
        return {"flavour": flavour, "values": values, "congruence": cong}
    edges = _blocks(doc, "edges")
    if any(len(edge) != 2 for edge in edges):
        raise ParseError("Every edge must be a pair [u, v].")
    nv = _field(doc, "nv", int)
    if nv < 1:
        raise ParseError("Field 'nv' must be at least 1, got {}.".format(nv))
    for u, v in edges:
        if not (0 <= u < nv and 0 <= v < nv):
            raise ParseError("Edge [{}, {}] leaves the vertex range 0..{}.".format(u, v, nv - 1))
        if u == v:
            raise ParseError("Self-loop at vertex {}.".format(u))
    return Digraph(nv, [tuple(edge) for edge in edges])


def load(path):
    """Read a structure file.

    Returns
    -------
    tuple
        ``(kind, structure)``

    Raises
    ------
    ParseError
        Also for files that cannot be read.
    """
    try:
        with open(path, "r") as f:
            text = f.read()
    except OSError as error:
        raise ParseError("Cannot read {}: {}.".format(path, error.strerror))
    doc = parse_json(text)
    return doc["kind"], structure_from_document(doc)


def _matrix_json(matrix):
    return [[value_json(v) for v in row] for row in matrix]


def document_from_structure(obj):
    """The JSON document of a structure.

    Examples
    --------
    >>> document_from_structure(WPMSpace([["1/2", "1/2"], ["1/2", 0]]))
    {'kind': 'wpm', 'size': 2, 'entries': [['1/2', '1/2'], ['1/2', 0]]}
    """
    if isinstance(obj, (GQSpace, WPMSpace)):
        kind, matrix = ("qmetric", obj.d) if isinstance(obj, GQSpace) else ("wpm", obj.p)
        doc = {"kind": kind, "size": obj.n}
        if obj.labels is not None:
            doc["labels"] = list(obj.labels)
        doc["entries"] = _matrix_json(matrix)
        return doc
    if isinstance(obj, WeakWeight):
        return {"kind": "weight", "values": [value_json(v) for v in obj.values]}
    if isinstance(obj, MeetSL):
        doc = {"kind": "meetsl", "size": obj.n}
        if obj.labels is not None:
            doc["labels"] = list(obj.labels)
        doc["meet"] = obj.table.tolist()
        return doc
    if isinstance(obj, Digraph):
        return {"kind": "digraph", "nv": obj.nv, "edges": [list(edge) for edge in obj.edges]}
    raise TypeError("Cannot serialise {!r}.".format(obj))


def dumps(obj):
    """Deterministic text of a structure, ending with a newline."""
    return json.dumps(document_from_structure(obj), indent=2) + "\n"


def dump(obj, path):
    with open(path, "w") as f:
        f.write(dumps(obj))


def parse_strings(text):
    """Parse a strings file: an ``alphabet: ...`` header, then one string per line.

    Blank lines are skipped; so is everything after ``%`` on a line.

    Examples
    --------
    >>> parse_strings("alphabet: GATC\\nGATTACA\\n\\nGCATCACGA\\n").strings
    ('GATTACA', 'GCATCACGA')
    """
    lines = [(number, line.split("%")[0].strip()) for number, line in enumerate(text.splitlines(), 1)]
    lines = [(number, line) for number, line in lines if line]
    if not lines:
        raise ParseError("The strings file is empty.")
    number, header = lines[0]
    if not header.startswith("alphabet:"):
        raise ParseError("Expected an 'alphabet:' header.", number, 1)
    alphabet = header[len("alphabet:"):].strip()
    strings = []
    for number, line in lines[1:]:
        for column, char in enumerate(line, 1):
            if char not in alphabet:
                raise ParseError("Character '{}' is not in the alphabet '{}'.".format(char, alphabet),
                                 number, column)
        strings.append(line)
    try:
        return StringSet(strings, alphabet)
    except ValueError as error:
        raise ParseError(str(error))


def parse_subsets(text):
    """Parse one ``{i, j, ...}`` subset of the integers per line.

    Examples
    --------
    >>> [sorted(A) for A in parse_subsets("{0}\\n{-3, 3}\\n")]
    [[0], [-3, 3]]
    """
    seeds = []
    for number, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line:
            continue
        if not _SUBSET_RE.match(line):
            raise ParseError("Expected a subset like {{0, 5}}, got '{}'.".format(line), number, 1)
        inner = line[1:-1].strip()
        seeds.append(frozenset(int(v) for v in inner.split(",")) if inner else frozenset())
    return seeds


def parse_generators(text):
    """Parse one subgroup per line: generators separated by ``;``, each a list of ``index:value``.

    Examples
    --------
    >>> parse_generators("0:1\\n0:1 1:1; 2:1\\n")
    [[[(0, 1)]], [[(0, 1), (1, 1)], [(2, 1)]]]
    """
    seeds = []
    for number, line in enumerate(text.splitlines(), 1):
        if not line.strip():
            continue
        generators = []
        column = 1
        for part in line.split(";"):
            generator = []
            for token in part.split():
                match = _GENERATOR_RE.match(token)
                if match is None:
                    raise ParseError("Expected index:value, got '{}'.".format(token), number,
                                     line.index(token, column - 1) + 1)
                generator.append((int(match.group(1)), int(match.group(2))))
            column += len(part) + 1
            if generator:
                generators.append(generator)
        seeds.append(generators)
    return seeds
