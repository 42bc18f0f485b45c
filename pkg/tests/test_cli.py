import json

import pytest

from qmet import __version__
from qmet.cli import main, default_horizon, EXIT_OK, EXIT_FAILED, EXIT_BAD_INPUT
from qmet.spaces import GQSpace
from qmet.graphs import Digraph
from qmet.io import dump, dumps
from qmet.families import sierpinski, chain_space, truncated_chain, cycle_space


def _write(tmp_path, name, obj):
    path = tmp_path / name
    if isinstance(obj, str):
        path.write_text(obj)
    else:
        dump(obj, str(path))
    return str(path)


def _run_json(capsys, argv):
    code = main(["--json"] + argv)
    return code, json.loads(capsys.readouterr().out)


def _verdicts(report):
    return {v["check"]: v for v in report["verdicts"]}


def test_validate_exit_codes(tmp_path, capsys):
    assert main(["validate", _write(tmp_path, "sierpinski.json", sierpinski()[0])]) == EXIT_OK

    pm3 = _write(tmp_path, "pm3.json", '{"kind": "wpm", "size": 2, "entries": [[0, 1], [2, 0]]}')
    assert main(["validate", pm3]) == EXIT_FAILED
    assert "PM3" in capsys.readouterr().out

    malformed = _write(tmp_path, "bad.json", '{"kind": "qmetric", "size": 1, "entries": [["1/0"]]}')
    assert main(["validate", malformed]) == EXIT_BAD_INPUT
    assert main(["validate", str(tmp_path / "missing.json")]) == EXIT_BAD_INPUT


def test_validate_json_carries_the_witness(tmp_path, capsys):
    path = _write(tmp_path, "qm2.json", '{"kind": "qmetric", "size": 3, "entries": [[0, 1, 5], [1, 0, 1], [5, 1, 0]]}')
    code, report = _run_json(capsys, ["validate", path])
    assert code == EXIT_FAILED
    assert report["command"] == "validate"
    assert _verdicts(report)["QM2Violation"]["witness"] == [0, 1, 2]


def test_validate_valuation(tmp_path):
    semilattice = _write(tmp_path, "chain.json", chain_space(3)[1])
    good = _write(tmp_path, "f.json", '{"kind": "valuation", "flavour": "meet-coval", "values": [2, 1, 0]}')
    bad = _write(tmp_path, "g.json", '{"kind": "valuation", "flavour": "meet-coval", "values": [0, 1, 2]}')
    assert main(["validate", good, "--semilattice", semilattice]) == EXIT_OK
    assert main(["validate", bad, "--semilattice", semilattice]) == EXIT_FAILED
    assert main(["validate", good, "--semilattice", good]) == EXIT_BAD_INPUT


def test_analyze_the_truncated_chain(tmp_path, capsys):
    code, report = _run_json(capsys, ["analyze", _write(tmp_path, "t.json", truncated_chain()[0])])
    assert code == EXIT_OK
    verdicts = _verdicts(report)
    assert verdicts["invariant"]["holds"]
    assert not verdicts["DPC"]["holds"]
    assert verdicts["DPC"]["witness"] == [2, 1, 0]
    assert not verdicts["weakly weighted"]["holds"]
    assert "partial metric" not in report["derived"]


def test_analyze_the_chain(tmp_path, capsys):
    code, report = _run_json(capsys, ["analyze", _write(tmp_path, "c.json", chain_space(3)[0])])
    assert code == EXIT_OK
    assert all(v["holds"] for v in report["verdicts"])
    assert report["derived"]["fading weight"] == [2, 1, 0]
    assert report["derived"]["partial metric"][0][0] == 0


def test_analyze_a_graph(tmp_path, capsys):
    path = _write(tmp_path, "g.json", Digraph.undirected(3, [(0, 1), (1, 2)]))
    code, report = _run_json(capsys, ["analyze", "--graph", path])
    assert code == EXIT_OK
    assert report["derived"]["path quasi-metric"][0][2] == 2
    assert _verdicts(report)["non-directed"]["holds"]


def test_convert_round_trip_is_byte_identical(tmp_path):
    source = _write(tmp_path, "d.json", sierpinski()[0])
    partial = str(tmp_path / "p.json")
    back = str(tmp_path / "d2.json")
    assert main(["convert", source, "--direction", "d2p", "-o", partial]) == EXIT_OK
    assert main(["convert", partial, "--direction", "p2d", "-o", back]) == EXIT_OK
    with open(source) as f, open(back) as g:
        assert f.read() == g.read()


def test_convert_a_metric(tmp_path, capsys):
    path = _write(tmp_path, "m.json", GQSpace([[0, 1], [1, 0]]))
    code, report = _run_json(capsys, ["convert", path, "--direction", "d2p"])
    assert code == EXIT_OK
    assert report["derived"]["result"]["entries"] == [[0, 1], [1, 0]]


def test_convert_needs_a_weight(tmp_path, capsys):
    path = _write(tmp_path, "cycle.json", cycle_space(3)[0])
    assert main(["convert", path, "--direction", "d2p"]) == EXIT_FAILED
    assert "NotWeaklyWeighted" in capsys.readouterr().out
    assert main(["convert", path, "--direction", "p2d"]) == EXIT_BAD_INPUT


def test_graph_command(tmp_path, capsys):
    path = _write(tmp_path, "cycle.json", Digraph(3, [(0, 1), (1, 2), (2, 0)]))
    code, report = _run_json(capsys, ["graph", path])
    assert code == EXIT_OK
    verdicts = _verdicts(report)
    assert not verdicts["componentwise weakly weighted"]["holds"]
    assert not verdicts["strong components non-directed"]["holds"]


def test_align_command(tmp_path, capsys):
    path = _write(tmp_path, "dna.txt", "alphabet: GATC\nGATTACA\nGCATCACGA\n")
    code, report = _run_json(capsys, ["align", path])
    assert code == EXIT_OK
    assert report["derived"]["scores"][0][0] == 7
    assert _verdicts(report)["strong"]["holds"]
    assert main(["align", path, "--gamma", "0"]) == EXIT_FAILED
    bad = _write(tmp_path, "bad.txt", "alphabet: GATC\nGAXTACA\n")
    assert main(["align", bad]) == EXIT_BAD_INPUT


def test_entropy_of_the_set_shift(tmp_path, capsys):
    seeds = _write(tmp_path, "seeds.txt", "{0}\n{0, 5}\n{-3, 3}\n")
    code, report = _run_json(capsys, ["entropy", "--family", "pset-shift", "--seeds", seeds, "--horizon", "32"])
    assert code == EXIT_OK
    assert report["derived"]["entropy"] == 1
    assert report["derived"]["flag"] == "lower bound"
    assert [row["seed"] for row in report["derived"]["seeds"]] == ["{0}", "{0, 5}", "{-3, 3}"]


def test_entropy_of_the_bernoulli_shift(tmp_path, capsys):
    seeds = _write(tmp_path, "gens.txt", "0:1\n")
    code, report = _run_json(capsys, ["entropy", "--family", "bernoulli", "--seeds", seeds,
                                      "--horizon", "12", "--window", "8"])
    assert code == EXIT_OK
    assert report["derived"]["entropy"] == 1
    code, report = _run_json(capsys, ["entropy", "--family", "bernoulli", "--seeds", seeds])
    assert code == EXIT_OK
    assert report["derived"]["entropy"] == 1
    assert main(["entropy", "--family", "bernoulli", "--seeds", seeds, "--horizon", "40"]) == EXIT_FAILED
    assert "at step 17" in capsys.readouterr().out


def test_experiment_command(tmp_path, capsys):
    path = _write(tmp_path, "t.json", truncated_chain()[0])
    code, report = _run_json(capsys, ["experiment", path, "--map", "0,0,1", "--point", "2"])
    assert code == EXIT_OK
    assert report["derived"]["distinct values"] == [0]


def test_check_command(monkeypatch, capsys):
    monkeypatch.setenv("QMET_SEED", "3")
    code, report = _run_json(capsys, ["check", "roundtrip", "--trials", "10"])
    assert code == EXIT_OK
    assert report["derived"]["trials"] == 10
    code, report = _run_json(capsys, ["check", "graphs", "--max-size", "3"])
    assert report["derived"]["graphs"] == 64
    monkeypatch.setenv("QMET_SEED", "x")
    assert main(["check", "dpc", "--max-size", "3"]) == EXIT_BAD_INPUT


def test_version(capsys):
    with pytest.raises(SystemExit) as info:
        main(["--version"])
    assert info.value.code == 0
    assert __version__ in capsys.readouterr().out


def test_same_input_same_output(tmp_path, capsys):
    path = _write(tmp_path, "c.json", chain_space(4)[0])
    main(["--json", "analyze", path])
    first = capsys.readouterr().out
    main(["--json", "analyze", path])
    assert capsys.readouterr().out == first
    assert dumps(chain_space(4)[0]) == open(path).read()


def test_convert_rejects_one_way_infinity(tmp_path, capsys):
    path = _write(tmp_path, "d.json", '{"kind": "qmetric", "size": 2, "entries": [[0, 1], ["inf", 0]]}')
    output = tmp_path / "p.json"
    code, report = _run_json(capsys, ["convert", path, "--direction", "d2p", "-o", str(output)])
    assert code == EXIT_FAILED
    assert _verdicts(report)["NotWeaklyWeighted"]["witness"] == [0, 1]
    assert not output.exists()

    code, report = _run_json(capsys, ["analyze", path])
    assert code == EXIT_OK
    verdicts = _verdicts(report)
    assert verdicts["componentwise weakly weighted"]["holds"]
    assert not verdicts["weakly weighted"]["holds"]
    assert report["derived"]["componentwise weight"] == [0, 0]
    assert "partial metric" not in report["derived"]


@pytest.mark.parametrize("text", [
    '{"kind": "digraph", "nv": 2, "edges": [[0, 0]]}',
    '{"kind": "digraph", "nv": 2, "edges": [[0, 5]]}',
    '{"kind": "digraph", "nv": 0, "edges": []}',
    '{"kind": "qmetric", "size": 2, "labels": ["a"], "entries": [[0, 1], [1, 0]]}',
    '{"kind": "qmetric", "size": 0, "entries": []}',
])
def test_malformed_structures_are_bad_input(tmp_path, text):
    path = _write(tmp_path, "bad.json", text)
    assert main(["analyze", path]) == EXIT_BAD_INPUT


@pytest.mark.parametrize("text", [
    '{"kind": "meetsl", "size": 2, "meet": [[0, 2], [2, 1]]}',
    '{"kind": "valuation", "flavour": "meet-val", "values": [0, 1], "congruence": [[0], [0, 1]]}',
    '{"kind": "valuation", "flavour": "meet-val", "values": [0, 1], "congruence": [[0, 7]]}',
])
def test_malformed_semilattice_files_are_bad_input(tmp_path, text):
    assert main(["validate", _write(tmp_path, "bad.json", text)]) == EXIT_BAD_INPUT


def test_default_entropy_horizon():
    assert default_horizon("pset-shift") == 128
    assert default_horizon("bernoulli", 2) == 16
    assert default_horizon("bernoulli", 2, 2) == 8
    assert default_horizon("bernoulli", 2, budget=16) == 4
