"""
Exception hierarchy shared by the library and the command-line front end.

Every error carries a machine-readable ``code`` and the process exit code the
CLI uses when the error escapes a script.
"""
from typing import Optional


class MonoidealError(Exception):
    """Base class for all library errors."""

    code = "error"
    exit_code = 2

    def __init__(self, message: str, expression: Optional[str] = None):
        super().__init__(message)
        self.message = message
        self.expression = expression

    def __str__(self) -> str:
        if self.expression:
            return f"{self.message} (in {self.expression})"
        return self.message


class AmbientMismatchError(MonoidealError, ValueError):
    """Operands live in polynomial rings of different sizes."""

    code = "ambient-mismatch"


class VariableIndexError(MonoidealError, IndexError):
    """A variable index lies outside 1..n."""

    code = "index-out-of-range"


class PreconditionError(MonoidealError, ValueError):
    """An operation was called outside its domain."""

    code = "precondition-violation"


class InvalidCharacteristicError(PreconditionError):
    code = "invalid-characteristic"


class NonSquarefreeError(PreconditionError):
    code = "non-squarefree"


class UnsupportedShapeError(PreconditionError):
    code = "unsupported-shape"


class ZeroIdealError(PreconditionError):
    code = "zero-ideal"


class UnitIdealError(PreconditionError):
    code = "unit-ideal"


class ZeroDivisorError(MonoidealError):
    """Colon or saturation by the zero ideal."""

    code = "zero-divisor"


class ResourceLimitError(MonoidealError):
    """An intermediate result exceeded the configured term budget."""

    code = "resource-limit"
    exit_code = 3


class DslSyntaxError(MonoidealError):
    """Malformed script text."""

    code = "syntax-error"
    exit_code = 1

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{message} at line {line}, column {column}")
        self.line = line
        self.column = column


class UnknownNameError(MonoidealError):
    code = "unknown-name"
    exit_code = 1


class ArityError(MonoidealError):
    code = "arity-error"
    exit_code = 1


class UnboundNameError(MonoidealError):
    code = "unbound-name"


class DslTypeError(MonoidealError):
    code = "type-error"


class InputFormatError(MonoidealError):
    """A JSON payload does not match any wire format."""

    code = "invalid-input"
