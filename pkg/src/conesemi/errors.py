"""Exception hierarchy for conesemi.

Every error raised deliberately by the library derives from
:class:`ConeSemiError`, so callers (and the CLI) can catch the whole family
in one place. Validation-style failures also subclass :class:`ValueError`.
"""

from __future__ import annotations


class ConeSemiError(Exception):
    """Base class for all library errors."""


# -- cone construction / geometry ------------------------------------------

class EmptyGeneratorsError(ConeSemiError, ValueError):
    pass


class ZeroGeneratorError(ConeSemiError, ValueError):
    pass


class DimensionMismatchError(ConeSemiError, ValueError):
    pass


class UnsupportedDimensionError(ConeSemiError, ValueError):
    pass


class NotInConeError(ConeSemiError, ValueError):
    pass


class EmptySetError(ConeSemiError, ValueError):
    pass


# -- semigroup validation --------------------------------------------------

class GapNotInConeError(ConeSemiError, ValueError):
    def __init__(self, gap):
        super().__init__(f"gap {gap} is not an element of the cone")
        self.gap = gap


class ZeroGapError(ConeSemiError, ValueError):
    def __init__(self):
        super().__init__("0 cannot be a gap")


class NotClosedError(ConeSemiError, ValueError):
    """A gap ``h`` splits as ``x + (h - x)`` with both summands in S."""

    def __init__(self, h, x, y):
        super().__init__(f"not closed: {x} + {y} = {h} but {h} is a gap")
        self.h, self.x, self.y = h, x, y


class NotSpecialGapError(ConeSemiError, ValueError):
    pass


class NotMinimalGeneratorError(ConeSemiError, ValueError):
    pass


class NotInSemigroupError(ConeSemiError, ValueError):
    pass


class NoGapsError(ConeSemiError, ValueError):
    pass


class BoundUncertainError(ConeSemiError):
    """The search box for the minimal elements of X_S was not provably large enough."""


# -- positioned / forest ----------------------------------------------------

class PreconditionViolatedError(ConeSemiError, ValueError):
    pass


class InternalInconsistencyError(ConeSemiError, AssertionError):
    """Two routes that must agree (by a proven equivalence) disagreed."""


class EmptyBSetError(ConeSemiError, ValueError):
    pass


class NotARootError(ConeSemiError, ValueError):
    pass


class ParityMismatchError(ConeSemiError, ValueError):
    pass


class KZeroError(ConeSemiError, ValueError):
    pass


class NoPrimaryExistsError(ConeSemiError, ValueError):
    pass


class OddCaseUnsupportedConeError(ConeSemiError, ValueError):
    pass


class UnknownFormatError(ConeSemiError, ValueError):
    pass


class CapExceededError(ConeSemiError):
    def __init__(self, size: int, cap: int):
        super().__init__(f"|I_C(k)| = {size} exceeds the interval cap {cap}")
        self.size, self.cap = size, cap


class ParseError(ConeSemiError, ValueError):
    pass
