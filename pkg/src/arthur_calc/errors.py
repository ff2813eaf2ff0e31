"""Exception hierarchy.

Domain errors (violated preconditions) derive from :class:`DomainError`;
malformed text input raises :class:`ParseError`.  The CLI maps the two
families to exit codes 2 and 1 respectively.
"""

from __future__ import annotations


class ArthurCalcError(ValueError):
    """Base class for all errors raised by this package."""


class DomainError(ArthurCalcError):
    """An operation was called outside its domain."""


class TypeMismatchError(DomainError):
    """A partition is not of the classical type an operation requires."""


class ParityError(DomainError):
    """The size of a partition has the wrong parity for a classical type."""


class InvalidMoveError(DomainError):
    """A move sequence violates one of the conditions (a), (b), (c) or overlaps."""

    def __init__(self, condition: str, message: str):
        self.condition = condition
        super().__init__(f"condition ({condition}) violated: {message}")


class InvalidOrbitError(DomainError):
    """Label data inconsistent with the partition (very even rule)."""


class AmbiguousLabelError(DomainError):
    """Duality produced a very even partition from an unlabeled orbit."""


class InvalidParameterError(DomainError):
    """A parameter is not self-dual, has the wrong dimension, or is otherwise unusable."""


class EmptyParameterSetError(DomainError):
    """No L-parameter has the requested infinitesimal parameter."""


class NonUniqueExtremumError(DomainError):
    """The dominance maximum or minimum over a parameter set is not unique."""


class OracleMismatchError(DomainError):
    """A computed result disagrees with its brute-force oracle."""


class ParseError(ArthurCalcError):
    """Malformed text input.  ``position`` is a 0-based character offset."""

    def __init__(self, message: str, text: str = "", position: int | None = None):
        self.text = text
        self.position = position
        where = f" at position {position}" if position is not None else ""
        super().__init__(f"{message}{where}" + (f" in {text!r}" if text else ""))
