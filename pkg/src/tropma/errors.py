"""Exception hierarchy shared by all tropma modules."""


class TropmaError(Exception):
    """Base class for all errors raised by this package."""


class AmbientMismatchError(TropmaError):
    """Operands live in incompatible ambient spaces."""


class EmptyPolytopeError(TropmaError):
    """Operation requires a nonempty polytope."""


class InvalidCycleError(TropmaError):
    """Structural defect: not pure-dimensional or cells do not meet in faces.

    Distinct from an unbalanced cycle, which is a negative verdict rather
    than a malformed input.
    """


class UnbalancedCycleError(TropmaError):
    """A balanced cycle was required but the input fails the balancing test."""


class InternalInvariantError(TropmaError):
    """Two independent computation routes disagreed.  Never silent."""


class DocumentError(TropmaError):
    """Syntax or schema error in a serialized document."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"line {line}, column {column}: {message}"
        super().__init__(message)


class SemanticError(DocumentError):
    """Well-formed document whose payload violates a model invariant."""
