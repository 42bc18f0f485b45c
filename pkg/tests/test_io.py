import json

import pytest

from qmet.exceptions import ParseError, PMViolation, QM2Violation
from qmet.utils import INF
from qmet.spaces import GQSpace, Partition
from qmet.partial_metrics import WPMSpace
from qmet.weights import WeakWeight
from qmet.graphs import Digraph
from qmet.families import power_set_space
from qmet.io import (parse_json, structure_from_document, load, dumps, dump, parse_strings, parse_subsets,
                     parse_generators)


def _structure(text):
    return structure_from_document(parse_json(text))


def test_every_kind_is_read():
    X = _structure('{"kind": "qmetric", "size": 2, "labels": ["a", "b"], "entries": [[0, "1/2"], ["inf", 0]]}')
    assert X.labels == ("a", "b")
    assert X[1, 0] is INF
    assert _structure('{"kind": "wpm", "size": 1, "entries": [["-3"]]}').p == ((-3,),)
    assert _structure('{"kind": "weight", "values": [1, "-1/3"]}') == WeakWeight([1, "-1/3"])
    assert _structure('{"kind": "meetsl", "size": 2, "meet": [[0, 0], [0, 1]]}').bottom() == 0
    assert _structure('{"kind": "digraph", "nv": 2, "edges": [[0, 1]]}') == Digraph(2, [(0, 1)])

    valuation = _structure('{"kind": "valuation", "flavour": "meet-val", "values": [0, -1], '
                           '"congruence": [[0], [1]]}')
    assert valuation["flavour"] == "meet-val"
    assert valuation["congruence"] == Partition.discrete(2)


@pytest.mark.parametrize("text", [
    '{"kind": "qmetric", "size": 1, "entries": [["1/0"]]}',
    '{"kind": "qmetric", "size": 2, "entries": [[0, -1], [1, 0]]}',
    '{"kind": "qmetric", "size": 2, "entries": [[0, 1]]}',
    '{"kind": "qmetric", "size": 1, "entries": [[true]]}',
    '{"kind": "weight", "values": []}',
    '{"kind": "meetsl", "size": 1, "meet": [["0"]]}',
    '{"kind": "valuation", "flavour": "meet", "values": [0]}',
    '{"kind": "digraph", "nv": 2, "edges": [[0, 1, 1]]}',
    '{"kind": "tree"}',
    '[1, 2]',
    '{"kind": "wpm", "size": 1}',
    '{"kind": "wpm", "size": 1, "labels": ["a", "b"], "entries": [[0]]}',
    '{"kind": "meetsl", "size": 2, "meet": [[0, 0], [0, -1]]}',
    '{"kind": "meetsl", "size": 0, "meet": []}',
    '{"kind": "valuation", "flavour": "meet-val", "values": []}',
    '{"kind": "valuation", "flavour": "meet-val", "values": [0, 1], "congruence": [[1]]}',
    '{"kind": "digraph", "nv": 3, "edges": [[1, 1]]}',
    '{"kind": "digraph", "nv": 3, "edges": [[-1, 2]]}',
])
def test_grammar_errors(text):
    with pytest.raises(ParseError):
        _structure(text)


def test_json_errors_have_positions():
    with pytest.raises(ParseError) as info:
        parse_json('{"kind": "weight",\n "values": [1, 0')
    assert info.value.line == 2
    assert info.value.column is not None


def test_axiom_errors_are_not_parse_errors():
    with pytest.raises(QM2Violation):
        _structure('{"kind": "qmetric", "size": 3, "entries": [[0, 1, 5], [1, 0, 1], [5, 1, 0]]}')
    with pytest.raises(PMViolation) as info:
        _structure('{"kind": "wpm", "size": 2, "entries": [[0, 1], [2, 0]]}')
    assert info.value.axiom == "PM3"


def test_written_files_read_back(tmp_path):
    X, S = power_set_space(2)
    for obj in (X, S, WPMSpace([["1/2", "1/2"], ["1/2", 0]]), WeakWeight(["-1/3", 2]), Digraph(3, [(0, 2)])):
        path = tmp_path / "structure.json"
        dump(obj, str(path))
        _, back = load(str(path))
        assert back == obj
        assert dumps(back) == path.read_text()


def test_written_values():
    text = dumps(GQSpace([[0, "2/4"], ["inf", 0]]))
    assert text.endswith("}\n")
    assert json.loads(text)["entries"] == [[0, "1/2"], ["inf", 0]]


def test_missing_file():
    with pytest.raises(ParseError):
        load("/nonexistent/structure.json")


def test_strings_file():
    strs = parse_strings("% sequences\nalphabet: GATC\nGATTACA\n\nGCATCACGA % second\n")
    assert strs.strings == ("GATTACA", "GCATCACGA")
    with pytest.raises(ParseError) as info:
        parse_strings("alphabet: GATC\nGATXACA\n")
    assert (info.value.line, info.value.column) == (2, 4)
    with pytest.raises(ParseError):
        parse_strings("GATTACA\n")
    with pytest.raises(ParseError):
        parse_strings("alphabet: GA\nGA\nGA\n")


def test_seed_files():
    assert parse_subsets("{}\n{ 1 , -2 }\n") == [frozenset(), frozenset({1, -2})]
    with pytest.raises(ParseError):
        parse_subsets("{1, 2\n")
    assert parse_generators("1:1\n") == [[[(1, 1)]]]
    with pytest.raises(ParseError) as info:
        parse_generators("0:1 x\n")
    assert info.value.column == 5


def test_shape_errors_name_the_problem():
    with pytest.raises(ParseError, match="Self-loop at vertex 1"):
        _structure('{"kind": "digraph", "nv": 2, "edges": [[1, 1]]}')
    with pytest.raises(ParseError, match="vertex range"):
        _structure('{"kind": "digraph", "nv": 2, "edges": [[0, 2]]}')
    with pytest.raises(ParseError, match="2 labels for 1 points"):
        _structure('{"kind": "qmetric", "size": 1, "labels": ["a", "b"], "entries": [[0]]}')
    # a table that is in range but not a semilattice is an axiom failure, not a grammar one
    with pytest.raises(ValueError) as info:
        _structure('{"kind": "meetsl", "size": 2, "meet": [[0, 1], [0, 1]]}')
    assert not isinstance(info.value, ParseError)
