import os

import sympy

from ..partial_metrics.partial_metric import WPMSpace

DEFAULT_ALPHABET = "GATC"
BLANK = "#"


class StringSet:
    """A finite list of distinct strings over a declared alphabet.

    Parameters
    ----------
    strings : iterable of str
    alphabet : str, defaults to "GATC"
        The blank character ``#`` may not belong to it.

    Examples
    --------
    >>> S = StringSet(["GAT", "TAC"])
    >>> len(S), S[1]
    (2, 'TAC')
    >>> StringSet(["GAX"])
    Traceback (most recent call last):
        ...
    ValueError: Character 'X' of string 0 at position 2 is not in the alphabet 'GATC'.
    >>> StringSet(["GA", "GA"])
    Traceback (most recent call last):
        ...
    ValueError: String 'GA' occurs more than once.
    """

    def __init__(self, strings, alphabet=DEFAULT_ALPHABET):
        if BLANK in alphabet:
            raise ValueError("The blank character '{}' cannot be part of the alphabet.".format(BLANK))
        if len(set(alphabet)) != len(alphabet):
            raise ValueError("Alphabet '{}' repeats a character.".format(alphabet))
        strings = [str(s) for s in strings]
        seen = set()
        for index, s in enumerate(strings):
            for position, char in enumerate(s):
                if char not in alphabet:
                    raise ValueError("Character '{}' of string {} at position {} is not in the alphabet '{}'."
                                     .format(char, index, position, alphabet))
            if s in seen:
                raise ValueError("String '{}' occurs more than once.".format(s))
            seen.add(s)
        self._strings = tuple(strings)
        self._alphabet = alphabet

    @property
    def strings(self):
        """tuple of str"""
        return self._strings

    @property
    def alphabet(self):
        """str"""
        return self._alphabet

    def __getitem__(self, index):
        return self._strings[index]

    def __len__(self):
        return len(self._strings)

    def __iter__(self):
        return iter(self._strings)

    def __repr__(self):
        return "StringSet({}, alphabet='{}')".format(list(self._strings), self._alphabet)


def common_prefix_length(s, t):
    """Length of the longest common prefix.

    Examples
    --------
    >>> common_prefix_length("abc", "abd")
    2
    """
    return len(os.path.commonprefix([s, t]))


def prefix_pm(strs):
    """The partial metric p(s, t) = 2^(-l) with l the length of the longest common prefix.

    The induced quasi-metric is d_p(s, t) = 2^(-l) - 2^(-|s|), weighted by w_p(s) = 2^(-|s|).

    Parameters
    ----------
    strs : StringSet

    Returns
    -------
    qmet.partial_metrics.WPMSpace
        Nonnegative, labelled by the strings.

    Examples
    --------
    >>> P = prefix_pm(StringSet(["ab", "abc"], alphabet="abc"))
    >>> P.p
    ((1/4, 1/4), (1/4, 1/8))
    >>> P.nonneg, P.labels
    (True, ('ab', 'abc'))
    """
    entries = [[sympy.Rational(1, 2 ** common_prefix_length(s, t)) for t in strs] for s in strs]
    return WPMSpace(entries, require_nonneg=True, labels=strs.strings)
