"""Exception hierarchy for agcode.

Every error raised on purpose by the library derives from :class:`AGCodeError`,
so callers (and the CLI) can catch one type.  Where a builtin exception has
the right meaning, the subclass inherits from it as well.
"""


class AGCodeError(Exception):
    """Base class for all library errors."""


# finite fields
class NonPrime(AGCodeError, ValueError):
    pass


class SizeCap(AGCodeError, ValueError):
    pass


class DivisionByZero(AGCodeError, ZeroDivisionError):
    pass


class SpecMismatch(AGCodeError, ValueError):
    """Operands live in different fields."""


# curves
class CurveError(AGCodeError, ValueError):
    """Base class for curve validation failures."""


class MuZero(CurveError):
    pass


class QNotPowerOfP(CurveError):
    pass


class RootsNotSplit(CurveError):
    pass


class MDivisibleByP(CurveError):
    pass


class AlphasNotDistinct(CurveError):
    pass


class MTooLarge(CurveError):
    pass


class Degenerate(CurveError):
    pass


# semigroups
class NotCoprime(AGCodeError, ValueError):
    pass


class NotMember(AGCodeError, ValueError):
    pass


class OutOfRange(AGCodeError, ValueError):
    pass


# codes and oracles
class SingularEval(AGCodeError, ArithmeticError):
    pass


class ConsistencyError(AGCodeError, ArithmeticError):
    """A self-check between two independent computations failed."""


class DualityViolation(ConsistencyError):
    """A code and its claimed dual are not orthogonal complements."""


class TooLarge(AGCodeError):
    """An exhaustive search would exceed its enumeration cap."""


class ZeroCode(AGCodeError, ValueError):
    pass


class FullSpace(AGCodeError, ValueError):
    pass


# derived codes
class RangeViolation(AGCodeError, ValueError):
    pass


class NotNested(ConsistencyError):
    pass


class NoStarProperty(AGCodeError, ValueError):
    pass


class AbundanceTooLarge(AGCodeError, ValueError):
    pass


class DistanceBoundNonpositive(AGCodeError, ValueError):
    pass


class DegenerateLocality(AGCodeError, ValueError):
    pass


class NotACodeword(AGCodeError, ValueError):
    pass


class InconsistentBounds(ConsistencyError):
    """Two applicable theorems produced a lower bound above an upper bound."""
