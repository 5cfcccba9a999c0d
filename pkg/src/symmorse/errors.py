"""Exception hierarchy shared across the package.

The CLI maps these onto distinct exit codes, so keep the split between
parse, validation and numerical failures.
"""


class SymmorseError(Exception):
    """Base class for all package errors."""


class FrameError(SymmorseError):
    """A matrix does not represent a valid Lagrangian frame."""


class TransversalityError(SymmorseError):
    """A required transversality precondition fails."""


class DecompositionError(SymmorseError):
    """A vector could not be split across the requested pair of subspaces."""


class NumericalError(SymmorseError):
    """An iterative or discretized computation failed or degenerated."""


class ValidationError(SymmorseError):
    """Declared invariants of user input do not hold on the validation grid."""


class ProblemParseError(SymmorseError):
    """Problem file or coefficient expression failed to parse."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        loc = ""
        if line is not None:
            loc = f" (line {line}" + (f", column {column}" if column is not None else "") + ")"
        super().__init__(message + loc)
