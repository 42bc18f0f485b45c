import re
import numbers
from fractions import Fraction

import sympy
from IPython.display import Math

INF = sympy.oo

_RATIONAL_RE = re.compile(r"^(-?[0-9]+)(?:/([0-9]+))?$")


def to_value(value, allow_negative=False, allow_inf=True):
    """Convert `value` to an exact distance value.

    Accepted inputs are integers, :class:`fractions.Fraction`, sympy rationals, ``sympy.oo``
    and strings of the form ``"p"``, ``"p/q"`` or ``"inf"``.

    Parameters
    ----------
    value : int, Fraction, str or sympy.Rational
    allow_negative : bool, defaults to False
    allow_inf : bool, defaults to True

    Returns
    -------
    sympy.Rational or sympy.oo

    Examples
    --------
    >>> to_value("3/6")
    1/2
    >>> to_value("inf")
    oo
    >>> to_value(Fraction(4, 2))
    2
    >>> to_value("1/0")
    Traceback (most recent call last):
        ...
    ValueError: Malformed rational '1/0'.
    >>> to_value(-1)
    Traceback (most recent call last):
        ...
    ValueError: Negative value -1 is not allowed here.
    """
    if isinstance(value, str):
        text = value.strip()
        if text == "inf":
            result = INF
        else:
            match = _RATIONAL_RE.match(text)
            if match is None or (match.group(2) is not None and int(match.group(2)) == 0):
                raise ValueError("Malformed rational '{}'.".format(value))
            denominator = int(match.group(2)) if match.group(2) is not None else 1
            result = sympy.Rational(int(match.group(1)), denominator)
    elif isinstance(value, bool):
        raise ValueError("Boolean {} is not a distance value.".format(value))
    elif value is INF:
        result = INF
    elif isinstance(value, sympy.Rational):
        result = value
    elif isinstance(value, Fraction):
        result = sympy.Rational(value.numerator, value.denominator)
    elif isinstance(value, numbers.Integral):
        result = sympy.Integer(int(value))
    else:
        raise ValueError("{!r} is not an exact rational.".format(value))

    if result is INF and not allow_inf:
        raise ValueError("Infinity is not allowed here.")
    if result is not INF and result < 0 and not allow_negative:
        raise ValueError("Negative value {} is not allowed here.".format(result))
    return result


def is_finite(value):
    """Return whether `value` is not infinity.

    Examples
    --------
    >>> is_finite(sympy.Rational(1, 2)), is_finite(INF)
    (True, False)
    """
    return value is not INF


def value_text(value):
    """Text form of a value in the file grammar.

    Examples
    --------
    >>> value_text(sympy.Rational(-3, 4)), value_text(INF), value_text(sympy.Integer(2))
    ('-3/4', 'inf', '2')
    """
    if value is INF:
        return "inf"
    return str(value)


def value_json(value):
    """JSON form of a value: integers stay integers, everything else becomes text.

    Examples
    --------
    >>> value_json(sympy.Integer(2)), value_json(sympy.Rational(1, 2))
    (2, '1/2')
    """
    if value is not INF and value.is_Integer:
        return int(value)
    return value_text(value)


def to_matrix(entries, allow_negative=False, allow_inf=True):
    """Convert a nested list to a square tuple matrix of exact values.

    Examples
    --------
    >>> to_matrix([[0, "1/2"], ["inf", 0]])
    ((0, 1/2), (oo, 0))
    """
    rows = [tuple(to_value(v, allow_negative=allow_negative, allow_inf=allow_inf) for v in row)
            for row in entries]
    n = len(rows)
    if n == 0:
        raise ValueError("The matrix is empty.")
    for i, row in enumerate(rows):
        if len(row) != n:
            raise ValueError("Row {} has {} entries, expected {}.".format(i, len(row), n))
    return tuple(rows)


class Verdict:
    """Result of a check: a truth value plus an optional witness.

    Parameters
    ----------
    holds : bool
    witness : tuple, defaults to None
        Points exhibiting a failure (or a success, for existential checks).
    reason : str, defaults to None

    Examples
    --------
    >>> ok, witness = Verdict(False, (2, 1, 0))
    >>> ok, witness
    (False, (2, 1, 0))
    >>> bool(Verdict(True))
    True
    >>> Verdict(False, (0,), "negative")
    Verdict(holds=False, witness=(0,), reason='negative')
    """

    def __init__(self, holds, witness=None, reason=None):
        self.holds = bool(holds)
        self.witness = witness
        self.reason = reason

    def __bool__(self):
        return self.holds

    def __iter__(self):
        return iter((self.holds, self.witness))

    def __eq__(self, other):
        if isinstance(other, Verdict):
            return (self.holds, self.witness, self.reason) == (other.holds, other.witness, other.reason)
        return NotImplemented

    def __repr__(self):
        text = "Verdict(holds={}, witness={}".format(self.holds, self.witness)
        if self.reason is not None:
            text += ", reason={!r}".format(self.reason)
        return text + ")"


def tolist(a):
    """Convert a given input to the list format.

    Parameters
    ----------
    a : list or other

    Returns
    -------
    list

    Examples
    --------
    >>> tolist(2)
    [2]
    >>> tolist([1, 2])
    [1, 2]
    >>> tolist((1, 2))
    [1, 2]
    """
    if type(a) is list:
        return a
    if type(a) is tuple:
        return list(a)
    return [a]


def matrix_latex(entries):
    """Latex text of a matrix of values.

    Examples
    --------
    >>> print(matrix_latex(((0, 1), (INF, 0))))
    \\left[\\begin{matrix}0 & 1\\\\\\infty & 0\\end{matrix}\\right]
    """
    return sympy.latex(sympy.Matrix([list(row) for row in entries]))


def print_latex(obj):
    """Print a structure in latex format.

    Parameters
    ----------
    obj : any qmet structure with a ``latex_text`` property
        For example :class:`qmet.spaces.GQSpace` or :class:`qmet.spaces.WPMSpace`.

    """
    return Math(obj.latex_text)


def matrix_text(entries, labels=None):
    """Plain-text table of a matrix of values, with row and column names.

    Examples
    --------
    >>> print(matrix_text(((0, INF), (1, 0)), ["a", "b"]))
         a    b
    a    0  inf
    b    1    0
    """
    n = len(entries)
    names = list(labels) if labels is not None else [str(x) for x in range(n)]
    cells = [[value_text(v) for v in row] for row in entries]
    name_width = max(len(name) for name in names)
    width = max(len(text) for text in names + [c for row in cells for c in row])
    lines = [" " * name_width + "".join("  " + name.rjust(width) for name in names)]
    for name, row in zip(names, cells):
        lines.append(name.ljust(name_width) + "".join("  " + c.rjust(width) for c in row))
    return "\n".join(line.rstrip() for line in lines)
