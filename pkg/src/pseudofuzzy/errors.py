"""Exception hierarchy for the pseudofuzzy package.

Every error raised by the library derives from PseudoFuzzyError, which in
turn derives from ValueError so callers that only care about "bad input"
can catch the builtin.
"""


class PseudoFuzzyError(ValueError):
    """Base class for all domain errors raised by this package."""


class NonFinite(PseudoFuzzyError):
    """A NaN or infinite value was passed where a finite real is required."""


class MuOutOfRange(PseudoFuzzyError):
    """Positive membership outside [0, 1]."""


class LambdaOutOfRange(PseudoFuzzyError):
    """Negative membership outside [-1, 0]."""


class BadTolerance(PseudoFuzzyError):
    """Comparison tolerance must be a finite positive real."""


class UnsortedSupport(PseudoFuzzyError):
    """Support points of a discrete set are not strictly increasing."""


class DuplicateSupportPoint(PseudoFuzzyError):
    """Two elements of a discrete set share the same support point."""


class InvalidShape(PseudoFuzzyError):
    """Triangle parameters violate a <= b <= c with a < c."""


class InvalidInterval(PseudoFuzzyError):
    """Interval endpoints violate lo <= hi."""


class AlphaOutOfRange(PseudoFuzzyError):
    """Cut level for the positive membership outside [0, 1]."""


class BetaOutOfRange(PseudoFuzzyError):
    """Cut level for the negative membership outside [-1, 0]."""


class ParamOutOfRange(PseudoFuzzyError):
    """Parametric coordinates r, s must lie in [0, 1]."""


class BadRange(PseudoFuzzyError):
    """Discretization window must satisfy xmin < xmax."""


class BadCount(PseudoFuzzyError):
    """A sample/level count is below the minimum for the operation."""


class KindMismatch(PseudoFuzzyError):
    """Arithmetic between a dependent and an independent number is undefined."""


class ZeroScale(PseudoFuzzyError):
    """Scaling by zero would collapse the triangle to a point."""


class DivisorStraddlesZero(PseudoFuzzyError):
    """Division requires the divisor support to exclude zero."""


class InvalidCutTable(PseudoFuzzyError):
    """Cut table rows violate the level ordering or nesting invariants."""


class DocumentError(PseudoFuzzyError):
    """Malformed JSON/CSV input: bad syntax, missing or unknown fields."""
