import logging

import numpy as np
import sympy

from ..exceptions import InvalidScheme
from ..utils import to_value
from ..partial_metrics.partial_metric import WPMSpace
from .strings import BLANK

logger = logging.getLogger(__name__)

_traceback_encoding = {"match": 1, "vertical-gap": 2, "horizontal-gap": 3, "alignment-end": 0}


class ScoreScheme:
    """Column scores of a global alignment.

    A column of two equal characters scores `alpha`, two different characters `beta`, a
    character against the blank `gamma`, and two blanks 0.

    Parameters
    ----------
    alpha, beta, gamma : int, str or sympy.Rational
        Negative values are allowed.

    Examples
    --------
    >>> sch = ScoreScheme(1, -1, -2)
    >>> sch.valid
    True
    >>> sch.column("G", "G"), sch.column("G", "A"), sch.column("G", "#"), sch.column("#", "#")
    (1, -1, -2, 0)
    >>> ScoreScheme(1, -5, -2).valid
    False
    """

    def __init__(self, alpha, beta, gamma):
        self.alpha = to_value(alpha, allow_negative=True, allow_inf=False)
        self.beta = to_value(beta, allow_negative=True, allow_inf=False)
        self.gamma = to_value(gamma, allow_negative=True, allow_inf=False)

    @property
    def valid(self):
        """bool: alpha > beta, alpha > gamma, beta >= 2 gamma and gamma < 0."""
        return (self.alpha > self.beta and self.alpha > self.gamma and self.beta >= 2 * self.gamma
                and self.gamma < 0)

    def check(self):
        """Raise :class:`qmet.exceptions.InvalidScheme` unless the scheme is valid."""
        if not self.valid:
            raise InvalidScheme(self)

    def column(self, a, b):
        if a == BLANK and b == BLANK:
            return sympy.Integer(0)
        if a == BLANK or b == BLANK:
            return self.gamma
        return self.alpha if a == b else self.beta

    def __eq__(self, other):
        if not isinstance(other, ScoreScheme):
            return NotImplemented
        return (self.alpha, self.beta, self.gamma) == (other.alpha, other.beta, other.gamma)

    def __hash__(self):
        return hash((self.alpha, self.beta, self.gamma))

    def __repr__(self):
        return "ScoreScheme(alpha={}, beta={}, gamma={})".format(self.alpha, self.beta, self.gamma)


def _check_strings(*strings):
    for s in strings:
        if BLANK in s:
            raise ValueError("String '{}' contains the blank character '{}'.".format(s, BLANK))


def _score_and_traceback_matrices(x, y, sch):
    # rows follow x, columns follow y; #-# columns never raise a maximum and are left out
    match = _traceback_encoding["match"]
    vgap = _traceback_encoding["vertical-gap"]
    hgap = _traceback_encoding["horizontal-gap"]

    score = np.empty((len(x) + 1, len(y) + 1), dtype=object)
    traceback = np.zeros((len(x) + 1, len(y) + 1), dtype=np.int64)
    score[0, 0] = sympy.Integer(0)
    for i in range(1, len(x) + 1):
        score[i, 0] = i * sch.gamma
        traceback[i, 0] = vgap
    for j in range(1, len(y) + 1):
        score[0, j] = j * sch.gamma
        traceback[0, j] = hgap

    for i in range(1, len(x) + 1):
        for j in range(1, len(y) + 1):
            candidates = [
                (score[i - 1, j - 1] + sch.column(x[i - 1], y[j - 1]), match),
                (score[i - 1, j] + sch.gamma, vgap),
                (score[i, j - 1] + sch.gamma, hgap),
            ]
            best = max(value for value, _ in candidates)
            score[i, j], traceback[i, j] = next(c for c in candidates if c[0] == best)
    return score, traceback


def align_score(x, y, sch, strict=False):
    """The maximal score of a global alignment of `x` and `y`.

    Parameters
    ----------
    x, y : str
    sch : ScoreScheme
    strict : bool, defaults to False
        Raise :class:`qmet.exceptions.InvalidScheme` for an invalid scheme.

    Returns
    -------
    sympy.Rational

    Examples
    --------
    >>> sch = ScoreScheme(1, -1, -2)
    >>> align_score("GATTACA", "GATTACA", sch)
    7
    >>> align_score("AB", "BA", sch)
    -2
    >>> align_score("", "GA", sch)
    -4
    """
    if strict:
        sch.check()
    _check_strings(x, y)
    score, _ = _score_and_traceback_matrices(x, y, sch)
    return score[len(x), len(y)]


def alignment(x, y, sch):
    """One optimal alignment, as two padded strings of equal length.

    Examples
    --------
    >>> alignment("GAT", "GT", ScoreScheme(1, -1, -2))
    ('GAT', 'G#T')
    """
    _check_strings(x, y)
    _, traceback = _score_and_traceback_matrices(x, y, sch)
    match = _traceback_encoding["match"]
    vgap = _traceback_encoding["vertical-gap"]

    padded_x = []
    padded_y = []
    i, j = len(x), len(y)
    while i > 0 or j > 0:
        step = traceback[i, j]
        if step == match:
            padded_x.append(x[i - 1])
            padded_y.append(y[j - 1])
            i, j = i - 1, j - 1
        elif step == vgap:
            padded_x.append(x[i - 1])
            padded_y.append(BLANK)
            i -= 1
        else:
            padded_x.append(BLANK)
            padded_y.append(y[j - 1])
            j -= 1
    return "".join(reversed(padded_x)), "".join(reversed(padded_y))


def alignment_score(padded_x, padded_y, sch):
    """The score of a given alignment: the sum of its column scores.

    Examples
    --------
    >>> alignment_score("GA#T", "G#CT", ScoreScheme(1, -1, -2))
    -2
    >>> alignment_score("GA", "G", ScoreScheme(1, -1, -2))
    Traceback (most recent call last):
        ...
    ValueError: Aligned strings have lengths 2 and 1.
    """
    if len(padded_x) != len(padded_y):
        raise ValueError("Aligned strings have lengths {} and {}.".format(len(padded_x), len(padded_y)))
    return sum((sch.column(a, b) for a, b in zip(padded_x, padded_y)), sympy.Integer(0))


def _alignments(x, y):
    if not x and not y:
        yield "", ""
        return
    if x and y:
        for ax, ay in _alignments(x[1:], y[1:]):
            yield x[0] + ax, y[0] + ay
    if x:
        for ax, ay in _alignments(x[1:], y):
            yield x[0] + ax, BLANK + ay
    if y:
        for ax, ay in _alignments(x, y[1:]):
            yield BLANK + ax, y[0] + ay


def brute_force_score(x, y, sch):
    """The maximal score over every alignment without blank-blank columns.

    Exponential in ``len(x) + len(y)``; meant as a check on :func:`align_score`.

    Examples
    --------
    >>> brute_force_score("AB", "BA", ScoreScheme(1, -1, -2))
    -2
    """
    _check_strings(x, y)
    return max(alignment_score(ax, ay, sch) for ax, ay in _alignments(x, y))


def dna_pm(strs, sch):
    """The strong weak partial metric p(x, y) = -s(x, y) of the alignment score.

    The induced quasi-metric is d_p(x, y) = alpha |x| - s(x, y).

    Parameters
    ----------
    strs : qmet.strings.StringSet
    sch : ScoreScheme
        Must be valid.

    Returns
    -------
    qmet.partial_metrics.WPMSpace

    Raises
    ------
    InvalidScheme

    Examples
    --------
    >>> from qmet.strings import StringSet
    >>> P = dna_pm(StringSet(["GATTACA", "GCATCACGA"]), ScoreScheme(1, -1, -2))
    >>> P.strong, P[0, 0]
    (True, -7)
    """
    sch.check()
    entries = [[-align_score(x, y, sch) for y in strs] for x in strs]
    logger.debug("alignment scores of %d strings", len(strs))
    return WPMSpace(entries, require_strong=True, labels=strs.strings)
