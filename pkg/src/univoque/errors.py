"""Exception types shared across the package."""


class UnivoqueError(Exception):
    """Base class for all package-specific errors."""


class PreconditionViolated(UnivoqueError):
    """An operation was called outside its stated domain."""


class UndecidableDigitError(UnivoqueError):
    """A float orbit point landed within tolerance of a branch point.

    The caller should switch to an algebraic base (exact sign decisions)
    or accept that the digit stream cannot be certified past this point.
    """


class UndecidedError(UnivoqueError):
    """A lexicographic decision could not be made within the digit budget."""

    def __init__(self, message: str, budget: int):
        super().__init__(message)
        self.budget = budget


class NotParryError(UnivoqueError):
    """The expansion of 1 is not known to be finite, so no quasi-greedy form exists."""


class MiddleGapError(UnivoqueError):
    """The point lies in the middle gap [1/b, 1/(b(b-1))] where the shift map is undefined."""


class OutOfDomainError(UnivoqueError):
    """The point lies outside the map's domain interval."""


class BoundaryAmbiguityError(UnivoqueError):
    """An orbit point is within tolerance of a branch boundary; its symbol is ambiguous."""


class NotInImageError(UnivoqueError):
    """The itinerary is not in the image of the block encoding."""


class TooLargeError(UnivoqueError):
    """A combinatorial enumeration guard was exceeded."""
