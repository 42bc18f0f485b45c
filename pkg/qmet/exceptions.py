"""Errors raised by qmet.

Every error raised because of bad input derives from :class:`QmetError`, which is a
:class:`ValueError`. :class:`Disagreement` is the exception: it means two checks that a
theorem ties together returned different verdicts, which is a bug in qmet itself.
"""


class QmetError(ValueError):
    """Base class of qmet errors.

    Parameters
    ----------
    message : str
    witness : tuple, defaults to None
        Points (indices or elements) that exhibit the failure.

    Examples
    --------
    >>> err = QM2Violation((0, 1, 2))
    >>> isinstance(err, ValueError)
    True
    >>> err.witness
    (0, 1, 2)
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class NegativeEntry(QmetError):
    def __init__(self, witness):
        super().__init__("Entry at {} is negative.".format(witness), witness)


class QM1Violation(QmetError):
    def __init__(self, witness):
        super().__init__("QM1 is violated: d(x,y)=d(y,x)=0 or d(x,x)!=0 at (x,y)={}.".format(witness), witness)


class QM2Violation(QmetError):
    def __init__(self, witness):
        super().__init__("QM2 is violated: d(x,z) > d(x,y)+d(y,z) at (x,y,z)={}.".format(witness), witness)


class PMViolation(QmetError):
    """A weak partial metric axiom fails.

    Attributes
    ----------
    axiom : str
        One of ``"PM1"``, ``"PM2"``, ``"PM2S"``, ``"PM3"``, ``"PM4"``, ``"PM5"``.
    """

    def __init__(self, axiom, witness):
        super().__init__("{} is violated at {}.".format(axiom, witness), witness)
        self.axiom = axiom


class NotWeaklyWeighted(QmetError):
    def __init__(self, witness, reason=""):
        message = "The space is not weakly weighted, witness pair {}".format(witness)
        if reason:
            message += " ({})".format(reason)
        super().__init__(message + ".", witness)
        self.reason = reason


class NotCWW(QmetError):
    """The space is not componentwise weakly weighted.

    Attributes
    ----------
    component : int
        Index of the failing block in ``components(X)``.
    """

    def __init__(self, component, witness):
        super().__init__("Component {} is not weakly weighted, witness pair {}.".format(component, witness),
                         witness)
        self.component = component


class NegativeWeight(QmetError):
    def __init__(self, witness):
        super().__init__("Weight is negative at {}.".format(witness), witness)


class NotAPartialOrder(QmetError):
    def __init__(self, property_, witness):
        super().__init__("Relation is not {}, witness {}.".format(property_, witness), witness)
        self.property = property_


class NotASemilattice(QmetError):
    def __init__(self, witness):
        super().__init__("Points {} have no infimum.".format(witness), witness)


class NotMeetPreserving(QmetError):
    def __init__(self, witness):
        super().__init__("Map does not preserve the meet of {}.".format(witness), witness)


class NotStrictlyDecreasing(QmetError):
    def __init__(self, witness):
        super().__init__("Function is not strictly decreasing on {}.".format(witness), witness)


class PreconditionFailed(QmetError):
    """A hypothesis of a construction does not hold.

    Attributes
    ----------
    hypothesis : str
        For example ``"invariance"`` or ``"DPC"``.
    """

    def __init__(self, hypothesis, witness=None):
        super().__init__("Precondition '{}' fails, witness {}.".format(hypothesis, witness), witness)
        self.hypothesis = hypothesis


class InvalidScheme(QmetError):
    def __init__(self, scheme):
        super().__init__("Score scheme {} needs alpha>beta, alpha>gamma, beta>=2*gamma and gamma<0."
                         .format(scheme))


class RespectCheckFailed(QmetError):
    def __init__(self, witness):
        super().__init__("Map does not respect the congruence at {}.".format(witness), witness)


class HorizonExceeded(QmetError):
    """An element grew past the element budget before the horizon was reached.

    Attributes
    ----------
    step : int or None
        Trajectory index at which the budget was exceeded; None outside a trajectory.
    budget : int

    Examples
    --------
    >>> str(HorizonExceeded(5, 16))
    'Element at step 5 exceeds the budget of 16 elements.'
    >>> str(HorizonExceeded(None, 16))
    'Element exceeds the budget of 16 elements.'
    """

    def __init__(self, step, budget):
        where = "Element" if step is None else "Element at step {}".format(step)
        super().__init__("{} exceeds the budget of {} elements.".format(where, budget))
        self.step = step
        self.budget = budget


class MonotonicityViolated(QmetError):
    def __init__(self, witness):
        super().__init__("v(phi(y)) > v(y) at y={}.".format(witness), witness)


class ParseError(QmetError):
    """Malformed input file.

    Attributes
    ----------
    line : int or None
    column : int or None
    """

    def __init__(self, message, line=None, column=None):
        if line is not None:
            message = "line {}, column {}: {}".format(line, column, message)
        super().__init__(message)
        self.line = line
        self.column = column


class Disagreement(AssertionError):
    """Two checks tied together by a theorem disagree."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness
