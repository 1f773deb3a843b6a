"""Exception types shared across the package."""


class BetaSkelError(Exception):
    """Base class for all package-specific errors."""


class DomainError(BetaSkelError, ValueError):
    """A parameter lies outside its documented domain."""


class DegeneratePair(BetaSkelError, ValueError):
    """Two points that must be distinct coincide."""


class DuplicatePoints(BetaSkelError, ValueError):
    """A point set contains coincident points."""

    def __init__(self, message: str, indices=()):
        super().__init__(message)
        self.indices = tuple(indices)


class PackingFailure(BetaSkelError, RuntimeError):
    """Rejection sampling could not place all points at the required separation."""


class ParseError(BetaSkelError, ValueError):
    """A file could not be parsed; carries the 1-based offending line number."""

    def __init__(self, message: str, line: int | None = None):
        super().__init__(message if line is None else f"line {line}: {message}")
        self.line = line


class EmptyGrid(BetaSkelError, ValueError):
    """A beta grid with no values was supplied."""


class GridMismatch(BetaSkelError, ValueError):
    """Two curves were combined but their beta grids differ."""


class InsufficientData(BetaSkelError, ValueError):
    """Too few usable samples for a fit."""


class InsufficientBaseline(BetaSkelError, ValueError):
    """Too few baseline seeds for feature extraction."""


class IoError(BetaSkelError, OSError):
    """An output file could not be written."""
