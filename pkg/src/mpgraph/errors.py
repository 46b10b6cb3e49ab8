"""Exception hierarchy shared by all mpgraph modules.

Domain errors describe mathematically impossible requests (inverting a
singular matrix, signing an unsignable matrix, ...). Input errors describe
malformed or ill-shaped user input. The service layer maps the former to
HTTP 409 and the latter to HTTP 400; the CLI maps them to exit codes 1 and 2.
"""


class MPGraphError(Exception):
    """Base class for all errors raised by mpgraph."""


class InputError(MPGraphError):
    """Malformed or ill-shaped input."""


class ShapeError(InputError):
    """Operand dimensions do not fit the requested operation."""


class ParseError(InputError):
    """Malformed graph6 line or matrix text.

    ``offset`` is a 0-based byte offset within the offending line when known;
    ``line`` is a 1-based line number within a stream when known.
    """

    def __init__(self, message, offset=None, line=None):
        super().__init__(message)
        self.offset = offset
        self.line = line

    def __str__(self):
        parts = [super().__str__()]
        if self.line is not None:
            parts.append(f"line {self.line}")
        if self.offset is not None:
            parts.append(f"byte {self.offset}")
        return " at ".join([parts[0], ", ".join(parts[1:])]) if len(parts) > 1 else parts[0]


class NotAGraph(InputError):
    """Matrix is not a 0/1 symmetric matrix with zero diagonal."""


class DomainError(MPGraphError):
    """Request is well-formed but mathematically not satisfiable."""


class DivisionByZero(DomainError, ZeroDivisionError):
    """Exact division by the rational zero."""


class SingularMatrix(DomainError):
    """Matrix has determinant zero and no inverse."""


class NotSignable(DomainError):
    """Pseudo-inverse is neither positively nor negatively signable."""


class IncompatibleBlocks(DomainError):
    """Block system violates the compatibility conditions required here."""


class NoPositiveEigenvalue(DomainError):
    """Matrix has no positive eigenvalue."""


class NoNegativeEigenvalue(DomainError):
    """Matrix has no negative eigenvalue."""


class PreconditionFailed(DomainError):
    """Explicit operation precondition does not hold for the given input."""
