"""Exception types shared across the package."""


class DancountError(Exception):
    """Base class for all dancount errors."""


class NotPrime(DancountError):
    def __init__(self, p: int):
        self.p = p
        super().__init__(f"{p} is not prime")


class SizeCapExceeded(DancountError):
    pass


class ZeroHasNoLog(DancountError):
    pass


class ParseError(DancountError):
    """Syntax error in a polynomial expression; carries the 0-based position."""

    def __init__(self, message: str, position: int):
        self.position = position
        super().__init__(f"{message} (at position {position})")


class UnknownVariable(DancountError):
    def __init__(self, name: str, position: int = -1):
        self.name = name
        self.position = position
        super().__init__(f"unknown variable {name!r}")


class DegenerateDegree(DancountError):
    pass


class WrongLength(DancountError):
    pass


class DegreeTooHigh(DancountError):
    pass


class FieldTooSmall(DancountError):
    pass


class EvenCharacteristic(DancountError):
    pass


class NonIntegerResult(DancountError):
    """A character-sum count failed to reduce to a rational integer.

    This is an internal-consistency signal: the formulas guarantee integer
    results, so seeing this means a bug, never bad input.
    """


class ZeroPolynomial(DancountError):
    pass


class FamilyMismatch(DancountError):
    """Input does not have the structured shape a formula requires."""
