"""Exception types shared across the package."""


class PuzzleError(Exception):
    """Base class for all package-specific errors."""


class GraphParseError(PuzzleError):
    """A graph file violated the wire format.  Carries the offending line."""

    def __init__(self, message, line_no=None):
        self.line_no = line_no
        if line_no is not None:
            message = f"line {line_no}: {message}"
        super().__init__(message)


class CapExceededError(PuzzleError):
    """A search hit its configured state cap.  Distinct from a negative
    verdict: the question was not answered."""


class IllegalMoveError(PuzzleError):
    """A move failed one of its two adjacency requirements."""


class FlipError(PuzzleError):
    """Base class for path-flip applicability failures."""


class BoardPathError(FlipError):
    """The flip's vertex list is not a path in the board graph."""


class PebblePathError(FlipError):
    """The pebble image of the flip's path is not a path in the pebble graph."""


class RealizationError(PuzzleError):
    """The flip-realization engine hit an internal contradiction.  The engine
    fails loudly rather than returning an unvalidated sequence."""


class SynthesisError(PuzzleError):
    """A move-sequence synthesis step failed validation.  Names the step."""
