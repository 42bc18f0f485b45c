"""The ``qmet`` command.

Exit codes: 0 when every gating check passes, 1 on a failed axiom or theorem precondition, 2 on
unreadable or malformed input.
"""
import argparse
import json
import logging
import os
import sys

import numpy as np
import sympy

from . import __version__
from .exceptions import NotASemilattice, NotCWW, NotWeaklyWeighted, ParseError, QmetError
from .utils import INF, Verdict, matrix_text, value_json
from .io import load, dumps, parse_strings, parse_subsets, parse_generators
from .spaces.relations import Partition
from .spaces.qmetric import GQSpace, components, specialisation_order, check_dpc
from .partial_metrics.partial_metric import WPMSpace, p_from_dw, d_from_p
from .weights.weights import synth_weak_weight, synth_cweak_weight, classify_bounds
from .semilattices.semilattice import semilattice_from_order
from .semilattices.valuations import check_valuation
from .semilattices.correspondence import (check_invariant, exhaustive_dpc_ww_check,
                                          random_correspondence_check)
from .graphs.digraph import Digraph, path_qmetric, ww_iff_undirected, exhaustive_graph_check
from .strings.alignment import ScoreScheme, align_score, dna_pm
from .entropy.carriers import DEFAULT_ELEMENT_BUDGET
from .entropy.endomorphisms import SLEndo, integer_shift, coordinate_shift
from .entropy.entropy import (DEFAULT_HORIZON, DEFAULT_WINDOW, cardinality_norm, log_order_norm, gennorm_entropy,
                              representative_dependence, exhaustive_inertness_check)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_BAD_INPUT = 2


def _jsonable(obj):
    if obj is None or isinstance(obj, (bool, int, str)):
        return obj
    if isinstance(obj, (np.integer,)):
        return int(obj)
    if obj is INF or isinstance(obj, sympy.Rational):
        return value_json(obj)
    if isinstance(obj, Partition):
        return [list(block) for block in obj]
    if isinstance(obj, frozenset):
        return sorted(_jsonable(a) for a in obj)
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(a) for a in obj]
    return str(obj)


def _text(obj):
    if obj is INF:
        return "inf"
    if isinstance(obj, frozenset):
        return "{" + ", ".join(str(a) for a in sorted(obj)) + "}"
    return str(obj)


class Report:
    """Verdicts and derived structures of one command.

    A verdict added with ``gate=True`` decides the exit code.

    Examples
    --------
    >>> report = Report("validate")
    >>> report.check("valid", Verdict(False, (0, 1)), gate=True)
    >>> report.failed, report.text()
    (True, 'valid: no, witness (0, 1)')
    """

    def __init__(self, command):
        self.command = command
        self.verdicts = []
        self.derived = {}
        self._lines = []
        self.failed = False

    def check(self, name, verdict, gate=False):
        holds = bool(verdict)
        witness = verdict.witness if isinstance(verdict, Verdict) else None
        self.verdicts.append((name, holds, witness))
        line = "{}: {}".format(name, "yes" if holds else "no")
        if witness is not None:
            line += ", witness {}".format(witness)
        self._lines.append(line)
        if gate and not holds:
            self.failed = True

    def show(self, name, value, text=None):
        self.derived[name] = value
        text = _text(value) if text is None else text
        if "\n" in text:
            self._lines.append("{}:\n{}".format(name, text))
        else:
            self._lines.append("{}: {}".format(name, text))

    def note(self, text):
        self._lines.append(text)

    def text(self):
        return "\n".join(self._lines)

    def to_json(self):
        return json.dumps({
            "command": self.command,
            "verdicts": [{"check": name, "holds": holds, "witness": _jsonable(witness)}
                         for name, holds, witness in self.verdicts],
            "derived": _jsonable(self.derived),
        }, indent=2)


def _error_report(command, error):
    report = Report(command)
    report.check(type(error).__name__, Verdict(False, getattr(error, "witness", None)), gate=True)
    report.show("message", str(error))
    return report


def _describe(obj):
    if isinstance(obj, GQSpace):
        return matrix_text(obj.d, obj.labels)
    if isinstance(obj, WPMSpace):
        return matrix_text(obj.p, obj.labels)
    return str(obj)


def cmd_validate(args):
    kind, obj = load(args.path)
    report = Report("validate")
    report.show("kind", kind)
    if kind == "valuation":
        if args.semilattice is None:
            report.check("grammar", Verdict(True))
            return report
        semilattice_kind, S = load(args.semilattice)
        if semilattice_kind != "meetsl":
            raise ParseError("Expected a meetsl file, got a {} file.".format(semilattice_kind))
        verdict = check_valuation(S, obj["values"], obj["flavour"], obj["congruence"])
        report.check(obj["flavour"], verdict, gate=True)
        report.show("monotonicity", verdict.monotonicity.describe())
        return report
    report.check("valid", Verdict(True), gate=True)
    if isinstance(obj, WPMSpace):
        report.check("nonnegative", Verdict(obj.nonneg))
        report.check("strong", Verdict(obj.strong))
    if isinstance(obj, (GQSpace, WPMSpace)):
        report.show("structure", obj.d if isinstance(obj, GQSpace) else obj.p, _describe(obj))
    return report


def _analyze_space(X, report):
    partition = components(X)
    report.show("components", partition, " ".join(str(list(block)) for block in partition))
    order = specialisation_order(X)
    report.show("hasse edges", order.hasse_edges())

    try:
        S = semilattice_from_order(order, X.labels)
        report.check("meet-semilattice", Verdict(True))
    except NotASemilattice as error:
        S = None
        report.check("meet-semilattice", Verdict(False, error.witness))
    if S is not None:
        report.check("invariant", check_invariant(X, S))
    report.check("DPC", check_dpc(X))

    try:
        cw = synth_cweak_weight(X)
        report.check("componentwise weakly weighted", Verdict(True))
    except NotCWW as error:
        report.check("componentwise weakly weighted", Verdict(False, (error.component, error.witness)))
        cw = None
    try:
        w = synth_weak_weight(X)
    except NotWeaklyWeighted as error:
        report.check("weakly weighted", Verdict(False, error.witness, error.reason or None))
        if cw is not None:
            report.show("componentwise weight", cw.values, " ".join(_text(v) for v in cw.values))
        return
    report.check("weakly weighted", Verdict(True))
    report.show("weight", w.values, " ".join(_text(v) for v in w.values))
    classification = classify_bounds(X, w)
    report.show("fading weight", classification.fading_weight.values,
                " ".join(_text(v) for v in classification.fading_weight.values))
    report.show("fading co-weight", classification.fading_coweight.values,
                " ".join(_text(v) for v in classification.fading_coweight.values))
    P = p_from_dw(X, w)
    report.show("partial metric", P.p, _describe(P))


def cmd_analyze(args):
    kind, obj = load(args.path)
    report = Report("analyze")
    if args.graph or kind == "digraph":
        if kind != "digraph":
            raise ParseError("--graph needs a digraph file, got a {} file.".format(kind))
        _graph_report(obj, report)
        X = path_qmetric(obj)
    elif kind == "qmetric":
        X = obj
        report.show("distance", X.d, _describe(X))
    else:
        raise ParseError("analyze needs a qmetric or digraph file, got a {} file.".format(kind))
    _analyze_space(X, report)
    return report


def cmd_convert(args):
    kind, obj = load(args.path)
    report = Report("convert")
    if args.direction == "d2p":
        if kind != "qmetric":
            raise ParseError("d2p needs a qmetric file, got a {} file.".format(kind))
        result = p_from_dw(obj, synth_weak_weight(obj))
    else:
        if kind != "wpm":
            raise ParseError("p2d needs a wpm file, got a {} file.".format(kind))
        result, _ = d_from_p(obj)
    text = dumps(result)
    if args.output:
        with open(args.output, "w") as f:
            f.write(text)
        report.show("written", args.output)
    else:
        report.show("result", json.loads(text), text.rstrip("\n"))
    return report


def _graph_report(G, report):
    X = path_qmetric(G)
    report.show("path quasi-metric", X.d, _describe(X))
    result = ww_iff_undirected(G)
    report.check("componentwise weakly weighted", result.weighted)
    report.check("strong components non-directed", result.non_directed)
    report.check("weakly weighted", result.globally_weighted)
    report.check("non-directed", result.globally_non_directed)


def cmd_graph(args):
    kind, obj = load(args.path)
    if not isinstance(obj, Digraph):
        raise ParseError("graph needs a digraph file, got a {} file.".format(kind))
    report = Report("graph")
    _graph_report(obj, report)
    return report


def cmd_align(args):
    try:
        with open(args.path, "r") as f:
            strs = parse_strings(f.read())
    except OSError as error:
        raise ParseError("Cannot read {}: {}.".format(args.path, error.strerror))
    sch = ScoreScheme(args.alpha, args.beta, args.gamma)
    report = Report("align")
    report.check("valid scheme", Verdict(sch.valid), gate=True)
    scores = tuple(tuple(align_score(x, y, sch) for y in strs) for x in strs)
    report.show("scores", scores, matrix_text(scores, strs.strings))
    P = dna_pm(strs, sch)
    report.check("weak partial metric", Verdict(True), gate=True)
    report.check("strong", Verdict(P.strong))
    report.check("nonnegative", Verdict(P.nonneg))
    report.show("partial metric", P.p, _describe(P))
    X, _ = d_from_p(P)
    report.show("quasi-metric", X.d, _describe(X))
    return report


def default_horizon(family, p=2, k=1, budget=DEFAULT_ELEMENT_BUDGET):
    """Horizon of the entropy command when none is given.

    For the Bernoulli shift it is the longest horizon whose trajectory of a cyclic seed of order
    p^k stays within the element budget.

    Examples
    --------
    >>> default_horizon("pset-shift"), default_horizon("bernoulli", 2), default_horizon("bernoulli", 3, 2)
    (128, 16, 5)
    """
    if family != "bernoulli":
        return DEFAULT_HORIZON
    n = 1
    while p ** (k * (n + 1)) <= budget:
        n += 1
    return n


def cmd_entropy(args):
    try:
        with open(args.seeds, "r") as f:
            text = f.read()
    except OSError as error:
        raise ParseError("Cannot read {}: {}.".format(args.seeds, error.strerror))
    if args.family == "pset-shift":
        e = integer_shift(args.shift)
        seeds = parse_subsets(text)
        v, log_base = cardinality_norm(), None
    else:
        e = coordinate_shift(args.p, args.k, args.shift)
        seeds = [e.carrier.subgroup(generators) for generators in parse_generators(text)]
        v, log_base = log_order_norm(), args.p
    if not seeds:
        raise ParseError("The seed file is empty.")
    horizon = args.horizon if args.horizon is not None else default_horizon(args.family, args.p, args.k)
    window = args.window if args.window is not None else min(DEFAULT_WINDOW, max(1, horizon // 2))
    logger.info("entropy horizon %d, window %d", horizon, window)
    result = gennorm_entropy(e, v, seeds, horizon, window, log_base)

    report = Report("entropy")
    rows = []
    for seed, estimate in result.table:
        rows.append({"seed": e.carrier.format(seed), "value": estimate.value, "converged": estimate.converged})
        report.note("{}: {} ({})".format(e.carrier.format(seed), estimate.value,
                                         "converged" if estimate.converged else "not converged"))
    report.derived["seeds"] = rows
    unit = " log_{} units, {:.6f} nats".format(args.p, float(result.value * sympy.log(args.p))) if log_base else ""
    report.show("entropy", result.value, "{}{} ({})".format(result.value, unit, result.flag))
    report.derived["flag"] = result.flag
    report.check("converged", Verdict(result.converged))
    return report


def _table(text):
    try:
        return [int(v) for v in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError("Expected comma-separated point indices, got '{}'.".format(text))


def cmd_experiment(args):
    kind, X = load(args.path)
    if kind != "qmetric":
        raise ParseError("experiment needs a qmetric file, got a {} file.".format(kind))
    S = semilattice_from_order(specialisation_order(X))
    table = args.map if args.map is not None else list(range(X.n))
    e = SLEndo.from_table(S, table)
    result = representative_dependence(X, S, e, args.point, args.horizon, args.window)
    report = Report("experiment")
    for representatives, estimate in result.rows:
        report.show("representatives {}".format(list(representatives)), estimate.value)
    report.show("distinct values", result.values, " ".join(str(v) for v in result.values))
    return report


def _seed():
    text = os.environ.get("QMET_SEED", "0")
    try:
        return int(text)
    except ValueError:
        raise ParseError("QMET_SEED must be an integer, got '{}'.".format(text))


def cmd_check(args):
    rng = np.random.default_rng(_seed())
    report = Report("check")
    if args.theorem == "roundtrip":
        counts = {"trials": random_correspondence_check(rng, args.trials, verbose=args.verbose > 0)}
    elif args.theorem == "dpc":
        counts = exhaustive_dpc_ww_check(args.max_size, rng=rng, verbose=args.verbose > 0)
    elif args.theorem == "graphs":
        counts = exhaustive_graph_check(args.max_size, verbose=args.verbose > 0)
    else:
        counts = exhaustive_inertness_check(args.max_size, verbose=args.verbose > 0)
    report.check(args.theorem, Verdict(True), gate=True)
    for name, count in counts.items():
        report.show(name, count)
    return report


def build_parser():
    parser = argparse.ArgumentParser(prog="qmet", description="Quasi-metrics, weights, partial metrics and entropy.")
    parser.add_argument("--version", action="version", version="%(prog)s {}".format(__version__))
    parser.add_argument("--json", action="store_true", help="Print the machine-readable report.")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v for info, -vv for debug logs.")
    commands = parser.add_subparsers(dest="command", metavar="command")
    commands.required = True

    validate = commands.add_parser("validate", help="Check a structure file against its axioms.")
    validate.add_argument("path")
    validate.add_argument("--semilattice", metavar="FILE", help="meetsl file a valuation refers to.")
    validate.set_defaults(handler=cmd_validate)

    analyze = commands.add_parser("analyze", help="Run every check on a quasi-metric.")
    analyze.add_argument("path")
    analyze.add_argument("--graph", action="store_true", help="Read a digraph and analyse its path quasi-metric.")
    analyze.set_defaults(handler=cmd_analyze)

    convert = commands.add_parser("convert", help="Weighted quasi-metric to weak partial metric and back.")
    convert.add_argument("path")
    convert.add_argument("--direction", choices=("d2p", "p2d"), required=True)
    convert.add_argument("-o", "--output", metavar="FILE")
    convert.set_defaults(handler=cmd_convert)

    graph = commands.add_parser("graph", help="Path quasi-metric of a digraph and its weight verdict.")
    graph.add_argument("path")
    graph.set_defaults(handler=cmd_graph)

    align = commands.add_parser("align", help="Alignment partial metric of a strings file.")
    align.add_argument("path")
    align.add_argument("--alpha", default="1", help="Score of a match [default: 1].")
    align.add_argument("--beta", default="-1", help="Score of a mismatch [default: -1].")
    align.add_argument("--gamma", default="-2", help="Score of a gap [default: -2].")
    align.set_defaults(handler=cmd_align)

    entropy = commands.add_parser("entropy", help="Entropy of a shift over a list of seeds.")
    entropy.add_argument("--family", choices=("pset-shift", "bernoulli"), required=True)
    entropy.add_argument("--p", type=int, default=2)
    entropy.add_argument("--k", type=int, default=1)
    entropy.add_argument("--shift", type=int, default=1)
    entropy.add_argument("--seeds", metavar="FILE", required=True)
    entropy.add_argument("--horizon", type=int,
                         help="Trajectory length [default: 128, or the longest within the element budget for bernoulli].")
    entropy.add_argument("--window", type=int, help="Increments that must agree [default: 8, at most half the horizon].")
    entropy.set_defaults(handler=cmd_entropy)

    experiment = commands.add_parser("experiment", help="Entropy of w_X for every choice of representatives.")
    experiment.add_argument("path")
    experiment.add_argument("--map", type=_table, help="Endomorphism table, e.g. 0,0,1 [default: identity].")
    experiment.add_argument("--point", type=int, default=0)
    experiment.add_argument("--horizon", type=int, default=32)
    experiment.add_argument("--window", type=int, default=DEFAULT_WINDOW)
    experiment.set_defaults(handler=cmd_experiment)

    check = commands.add_parser("check", help="Run a randomised or exhaustive theorem check (seed: QMET_SEED).")
    check.add_argument("theorem", choices=("roundtrip", "dpc", "graphs", "inertness"))
    check.add_argument("--max-size", type=int, default=4)
    check.add_argument("--trials", type=int, default=200)
    check.set_defaults(handler=cmd_check)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    level = logging.WARNING if args.verbose == 0 else logging.INFO if args.verbose == 1 else logging.DEBUG
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")

    try:
        report = args.handler(args)
        code = EXIT_FAILED if report.failed else EXIT_OK
    except ParseError as error:
        logger.info("bad input: %s", error)
        report, code = _error_report(args.command, error), EXIT_BAD_INPUT
    except QmetError as error:
        report, code = _error_report(args.command, error), EXIT_FAILED
    except ValueError as error:
        report, code = _error_report(args.command, error), EXIT_FAILED

    print(report.to_json() if args.json else report.text())
    return code


if __name__ == "__main__":
    sys.exit(main())
