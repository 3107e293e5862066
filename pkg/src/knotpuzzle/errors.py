"""Exception hierarchy shared by every module of the package."""


class KnotPuzzleError(Exception):
    """Base class for all errors raised by knotpuzzle."""


class ParseError(KnotPuzzleError, ValueError):
    """Malformed input text (word, PD code, polynomial, puzzle file)."""


class ValidationError(KnotPuzzleError, ValueError):
    """Well-formed input that violates a structural invariant."""


class LimitExceeded(KnotPuzzleError):
    """A computation was refused because its input exceeds a configured cap."""


class NotAKnot(KnotPuzzleError, ValueError):
    """An operation defined only for one-component diagrams got a link."""


class ZeroPolynomial(KnotPuzzleError, ValueError):
    """The zero polynomial was passed where a nonzero one is required."""


class InconsistentInput(KnotPuzzleError, ValueError):
    """Puzzle data whose parts contradict each other."""


class InternalInvariantViolation(KnotPuzzleError, AssertionError):
    """A mathematical guarantee failed; indicates a bug, not bad input."""
