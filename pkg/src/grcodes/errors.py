"""Exception hierarchy shared by the library and the CLI.

The CLI maps these onto exit codes: parse problems exit 1, algebraic
precondition failures exit 2, resource caps exit 3.
"""

from __future__ import annotations

from typing import Any


class GrCodesError(Exception):
    """Base class for all library errors."""

    exit_code = 2


class ParseError(GrCodesError, ValueError):
    """Malformed group, ring, element or file text."""

    exit_code = 1

    def __init__(self, message: str, text: str | None = None, position: int | None = None):
        self.text = text
        self.position = position
        if text is not None and position is not None:
            message = f"{message} at position {position}: {text!r}"
        super().__init__(message)


class AlgebraError(GrCodesError):
    """An algebraic precondition does not hold.

    ``certificate`` carries the object that proves it (a gcd, a kernel
    vector, an independent subset, ...) when one is available.
    """

    exit_code = 2

    def __init__(self, message: str, certificate: Any = None):
        self.certificate = certificate
        super().__init__(message)


class NotAUnitError(AlgebraError):
    pass


class DependentBasisError(AlgebraError):
    """The submodule basis S gives a linearly dependent set S*u."""

    @property
    def independent_subset(self) -> tuple[int, ...]:
        return self.certificate


class NoRightInverseError(AlgebraError):
    pass


class UnsupportedRingError(AlgebraError):
    pass


class ResourceCapError(GrCodesError):
    """A computation would exceed a configured size limit."""

    exit_code = 3


class NoCheckElementsError(AlgebraError):
    """A unit has no annihilator, so no check element exists."""
