"""
--- Friedberg ---
Errors raised by the Friedberg Python package.
"""


class FriedbergError(Exception):
    """Base class for all package errors."""


class ConflictingWrite(FriedbergError):
    """A write would change a cell that already holds another value."""
    def __init__(self, table, row, col, old, new):
        self.table, self.row, self.col, self.old, self.new = table, row, col, old, new
        super().__init__('%s(%i, %i) holds %i, refusing to write %i' % (table, row, col, old, new))


class OutOfTurn(FriedbergError):
    """A player moved when it was not its turn."""


class ShapeMismatch(FriedbergError):
    """A move addresses a table the game does not have at this stage."""


class BadParameters(FriedbergError):
    """Game kind parameters are missing, superfluous or invalid."""


class ExcludedSummand(FriedbergError):
    """A direct-sum index was requested for the excluded summand."""


class InconsistentScript(FriedbergError):
    """A scripted adversary contradicts itself or its declared limits."""


class TraceFormatError(FriedbergError):
    """A trace, script or program pool file could not be parsed."""


class StrategyError(FriedbergError):
    """A strategy cannot perform a required action."""
