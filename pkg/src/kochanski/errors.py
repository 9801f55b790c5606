"""Exception and warning types raised across the package."""

from __future__ import annotations


class KochanskiError(Exception):
    """Base class for every error raised by this package."""


class ParseError(KochanskiError, ValueError):
    """Malformed constant specification or fraction text."""


class PerfectSquare(ParseError):
    """``sqrt:k`` was requested for a perfect square, which is rational."""


class PrecisionExhausted(KochanskiError):
    """A certified result could not be obtained within the digit cap."""


class DenominatorVanishes(KochanskiError, ZeroDivisionError):
    """The denominator of a Moebius form could not be bounded away from zero."""


class EqualToConstant(KochanskiError):
    """A rational compared against an exactly rational constant is equal to it."""


class SeedNotAbove(KochanskiError, ValueError):
    """An upper approximant ``R/S`` does not lie strictly above alpha."""


class GenitorNotPositive(KochanskiError):
    """The genitor of the current upper approximant is zero."""


class CapTooSmall(KochanskiError):
    """The brute-force scan hit its cap while the inequality still held."""


class ExpansionTerminates(KochanskiError):
    """The continued fraction of a rational constant ran out of terms.

    ``convergents`` holds every state produced before the expansion ended.
    """

    def __init__(self, message: str, convergents: list | None = None) -> None:
        super().__init__(message)
        self.convergents = list(convergents or [])


class PropertyViolation(KochanskiError, AssertionError):
    """A checked property of a Kochanski sequence failed at index ``n``."""

    def __init__(self, n: int, prop: str, detail: str = "") -> None:
        msg = f"property {prop!r} violated at n={n}"
        if detail:
            msg += f": {detail}"
        super().__init__(msg)
        self.n = n
        self.prop = prop


class NotIrrationalWarning(UserWarning):
    """A ``dec:``/``rat:`` constant was parsed; the approximant theory assumes irrational alpha."""
