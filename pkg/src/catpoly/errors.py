"""Exception hierarchy shared by all catpoly modules."""


class CatpolyError(Exception):
    """Base class for all catpoly errors."""


class NotCatalan(CatpolyError):
    """Sequence violates the Catalan word invariants.

    ``position`` is the first offending 0-based index.
    """

    def __init__(self, position, message=None):
        self.position = position
        super().__init__(message or f"not a Catalan word (violation at index {position})")


class EmptyWord(CatpolyError):
    """Statistic requested on the empty word."""


class ResourceLimit(CatpolyError):
    """Requested size exceeds the configured enumeration/table limit."""


class NotInDomain(CatpolyError):
    """Bijection applied to a word outside its domain."""


class OrderMismatch(CatpolyError):
    """Series operands disagree on truncation order or variable caps."""


class NonUnitDivisor(CatpolyError):
    """Series division by a series whose constant term is not invertible."""


class BadSqrtConstantTerm(CatpolyError):
    """Series square root requires constant term exactly 1."""


class InternalInconsistency(CatpolyError):
    """An exactness guard failed (inexact monomial division, nonvanishing
    low-order coefficients, ...).  Signals a transcription error rather
    than silently corrupting output."""


class NoConvergence(CatpolyError):
    """Fixed-point iteration failed to stabilize within the order bound."""

    def __init__(self, order):
        self.order = order
        super().__init__(f"fixed point not stable after {order} iterations")


class DepthTooShallow(CatpolyError):
    """Continued fraction evaluated with depth below the truncation order."""
