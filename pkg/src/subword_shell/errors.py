"""Exception types raised across the package."""

from __future__ import annotations


class SubwordShellError(Exception):
    """Base class for every error raised by this package."""


# input validation

class InvalidGenerator(SubwordShellError, ValueError):
    pass


class NotReduced(SubwordShellError, ValueError):
    pass


class IndexOutOfRange(SubwordShellError, IndexError):
    pass


class NotContained(SubwordShellError, ValueError):
    pass


class DegeneratePi(SubwordShellError, ValueError):
    pass


class NotAPermutation(SubwordShellError, ValueError):
    pass


class MixedDegrees(SubwordShellError, ValueError):
    pass


class ZeroIdeal(SubwordShellError, ValueError):
    pass


class UnitIdeal(SubwordShellError, ValueError):
    pass


class NotSpecial(SubwordShellError, ValueError):
    pass


# size guards

class TooLarge(SubwordShellError):
    pass


class WordTooLarge(TooLarge):
    pass


class TooManyVertices(TooLarge):
    pass


# algebraic outcomes

class NoLinearQuotients(SubwordShellError):
    """A colon ideal in the given order is not generated by variables.

    ``index`` is the 1-based position of the offending generator and
    ``colon`` the colon ideal found there.
    """

    def __init__(self, index: int, colon):
        self.index = index
        self.colon = colon
        super().__init__(f"linear quotients fail at generator {index}: colon {colon}")


# falsifications: raised when a structural identity that should hold does not

class PropertyViolation(SubwordShellError):
    pass


class FactorizationMismatch(PropertyViolation):
    pass


class CIGeneratorMismatch(PropertyViolation):
    pass


class ShellingMismatch(PropertyViolation):
    pass
