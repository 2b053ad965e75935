"""Exception taxonomy shared by all ucf modules."""


class UcfError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(UcfError):
    """Family text input is malformed; carries a 1-based line number."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


class EmptyFamily(UcfError):
    """An operation that needs at least one member set got an empty family."""


class NotAMember(UcfError):
    """The given set does not belong to the context family."""


class NotUnionClosed(UcfError):
    """Precondition failure: the family is not union-closed."""


class NotSeparating(UcfError):
    """Precondition failure: the family is not separating."""


class BaseNotFull(UcfError):
    """Precondition failure: the family's base is not the declared {1..n}."""


class DegenerateHeight(UcfError):
    """Height 1 with more than one member set; no bound is defined there."""


class TooSmall(UcfError):
    """The family has too few members for the requested analysis."""


class BadN(UcfError):
    """Ground-set size outside the supported range for an operation."""


class BadK(UcfError):
    """Index parameter k outside the valid range for an operation."""


class BadM(UcfError):
    """Member-count selector outside the valid set for an operation."""


class ZeroDenominator(UcfError):
    """A bound function was evaluated where its denominator vanishes."""


class EmptyRegion(UcfError):
    """A constrained minimization was asked over an empty feasible region."""


class NTooLarge(UcfError):
    """Exhaustive enumeration requested beyond the hard size cap."""


class BranchGap(UcfError):
    """The chain-growth recurrence branches fail to cover some step exactly once."""


class InternalError(UcfError):
    """An internal consistency assertion failed; indicates a bug, not bad input."""
