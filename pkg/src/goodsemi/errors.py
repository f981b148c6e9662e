"""Exception types shared across the package."""


class GoodSemiError(Exception):
    """Base class for all package errors."""


class LengthMismatch(GoodSemiError, ValueError):
    """Two lattice points of different branch counts were combined."""


class NonUniqueMinimum(GoodSemiError, ValueError):
    """A member set has no unique minimal element (closure under meets
    fails at the bottom), so it cannot be stored as an ideal."""


class InconsistentTruncation(GoodSemiError, ValueError):
    """Membership data near the upper boundary contradicts the cone
    behaviour implied by the claimed conductor."""


class NotGoodSemigroup(GoodSemiError, ValueError):
    """An ideal was required to be a good semigroup but fails an axiom."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class NotLocal(GoodSemiError, ValueError):
    """Operation requires a local semigroup (unique maximal ideal)."""


class NotMaximalIdeal(GoodSemiError, ValueError):
    """Localization was requested at an ideal that is not maximal."""


class KNotCanonical(GoodSemiError, ValueError):
    """A dualizing operation received a non-canonical ideal."""


class BudgetExceeded(GoodSemiError, RuntimeError):
    """An enumeration exceeded its configured search budget."""


class NonLocalPresentation(GoodSemiError, ValueError):
    """A curve generator has a unit component, so the presented ring is
    not local (or the generator does not lie in the maximal ideal)."""


class TruncationTooSmall(GoodSemiError, ValueError):
    """The series truncation bound is too small to pin down the result
    (no stable conductor with the required safety margin)."""


class WindowExceedsTruncation(GoodSemiError, ValueError):
    """A value window reaches past the trusted truncation bound."""


class NoStabilization(GoodSemiError, RuntimeError):
    """An endomorphism-ring chain did not stabilize within the budget."""
