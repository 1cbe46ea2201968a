"""Exception hierarchy shared across the workbench."""


class QECError(Exception):
    """Base class for all workbench errors."""


class PauliParseError(QECError, ValueError):
    """Raised when a Pauli string cannot be parsed."""

    def __init__(self, message: str, position: int | None = None):
        self.position = position
        if position is not None:
            message = f"{message} (position {position})"
        super().__init__(message)


class DimensionError(QECError, ValueError):
    """Raised when operand sizes do not match."""


class ValidationError(QECError, ValueError):
    """Raised when a generator set does not define a stabilizer group."""


class ConstructionError(QECError, ValueError):
    """Raised when a CSS code cannot be built from the given parity checks."""


class CapacityError(QECError, ValueError):
    """Raised when an enumeration or dense computation exceeds its size guard."""


class DomainError(QECError, ValueError):
    """Raised for arguments outside an operation's domain."""


class UnknownCodeError(QECError, KeyError):
    """Raised when a catalog name is not recognized."""

    def __str__(self) -> str:
        return str(self.args[0]) if self.args else ""
