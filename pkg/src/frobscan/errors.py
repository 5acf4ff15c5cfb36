"""Exception hierarchy shared by all frobscan modules.

The CLI maps these onto exit codes: parse/validation problems exit 2,
resource caps exit 3, and a violated theorem implication exits 4 (that one
always indicates an implementation bug, never bad input).
"""


class FrobscanError(Exception):
    """Base class for all frobscan errors."""


class ParseError(FrobscanError):
    """Malformed polynomial or model-file text."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ValidationError(FrobscanError):
    """Input violates a documented precondition."""


class MixedDomainError(ValidationError):
    """Operands live over different coefficient domains."""


class DimensionMismatchError(ValidationError):
    """Operands have different variable counts."""


class ResourceLimitError(FrobscanError):
    """A configured term/degree/size cap would be exceeded."""


class InconclusiveWindowError(FrobscanError):
    """Hilbert-function differences did not stabilize over the window."""


class BadPrimeError(FrobscanError):
    """A reduction mod p degenerated (zero polynomial or degree drop)."""


class GenericityError(FrobscanError):
    """General linear combinations failed the codimension check after retries."""


class StabilityViolationError(FrobscanError):
    """Twisted Frobenius image left the annihilator subspace."""


class TheoremViolationError(FrobscanError):
    """An implication that must hold unconditionally failed; forensic data attached."""

    def __init__(self, message, dump=None):
        self.dump = dump or {}
        super().__init__(message)
