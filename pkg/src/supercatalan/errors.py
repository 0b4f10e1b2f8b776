"""Exception types shared across the package."""

from __future__ import annotations


class SuperCatalanError(Exception):
    """Base class for every error raised by this package."""


class DomainError(SuperCatalanError, ValueError):
    """Parameters or inputs fall outside an operation's domain."""


class NotDivisible(SuperCatalanError, ArithmeticError):
    """Polynomial division left a nonzero remainder.

    ``remainder`` holds what was left over when the long division stopped.
    """

    def __init__(self, message: str, remainder=None):
        super().__init__(message)
        self.remainder = remainder


class InvariantViolation(SuperCatalanError, AssertionError):
    """An internal consistency check failed; this signals a bug."""


class ParseError(SuperCatalanError, ValueError):
    """Malformed path text or family descriptor."""

    def __init__(self, message: str, position: int | None = None, char: str | None = None):
        super().__init__(message)
        self.position = position
        self.char = char
