"""Exact integer/rational arithmetic and certified floors of Moebius forms.

Integers are plain Python ``int`` (unbounded).  Rationals come in two flavours:

* :class:`Rational` keeps the numerator and denominator exactly as produced,
  without reducing them, so that tabulated fractions such as 1667438/530762
  survive bit-for-bit.  Reduction is explicit via :func:`reduce`.
* :class:`fractions.Fraction` is used internally wherever only the value
  matters (interval endpoints, comparisons).

Anything that depends on an irrational constant is decided by interval
refinement: an enclosure of the constant is requested at 32 decimal digits,
then 64, 128, ... until the answer is certified or the digit cap is reached.
The cap defaults to 10 000 digits and can be changed for a block of code with
:func:`precision_cap`.
"""

from __future__ import annotations

import enum
import math
from contextlib import contextmanager
from contextvars import ContextVar
from dataclasses import dataclass
from fractions import Fraction
from typing import TYPE_CHECKING, Iterator, Union

from .errors import DenominatorVanishes, EqualToConstant, ParseError, PrecisionExhausted

if TYPE_CHECKING:
    from .constants import RealConstant

__all__ = [
    "DEFAULT_MAX_DIGITS",
    "START_DIGITS",
    "Rational",
    "MoebiusForm",
    "Interval",
    "Ordering",
    "Comparator",
    "precision_cap",
    "current_max_digits",
    "refinement_schedule",
    "reduce",
    "floor_on_interval",
    "moebius_floor",
    "compare_to_constant",
    "scaled_enclosure",
]

DEFAULT_MAX_DIGITS = 10_000
START_DIGITS = 32

_max_digits: ContextVar[int] = ContextVar("kochanski_max_digits", default=DEFAULT_MAX_DIGITS)


@contextmanager
def precision_cap(max_digits: int) -> Iterator[int]:
    """Temporarily change the refinement cap (in decimal digits).

    >>> with precision_cap(64):
    ...     current_max_digits()
    64
    """
    if max_digits < 1:
        raise ValueError("max_digits must be >= 1")
    token = _max_digits.set(max_digits)
    try:
        yield max_digits
    finally:
        _max_digits.reset(token)


def current_max_digits() -> int:
    return _max_digits.get()


def refinement_schedule(max_digits: int | None = None) -> Iterator[int]:
    """Digit counts 32, 64, 128, ... ending exactly at the cap."""
    cap = current_max_digits() if max_digits is None else max_digits
    digits = min(START_DIGITS, cap)
    while True:
        yield digits
        if digits >= cap:
            return
        digits = min(2 * digits, cap)


@dataclass(frozen=True)
class Rational:
    """A fraction stored exactly as given (not auto-reduced).

    Equality is representational: ``Rational(2, 4) != Rational(1, 2)``.
    Compare ``.value`` for numeric equality.
    """

    num: int
    den: int
    reduced: bool = False

    def __post_init__(self) -> None:
        if self.den <= 0:
            raise ValueError(f"denominator must be positive, got {self.den}")
        if self.reduced and math.gcd(self.num, self.den) != 1:
            raise ValueError(f"{self.num}/{self.den} is flagged reduced but is not in lowest terms")

    @classmethod
    def parse(cls, text: str) -> "Rational":
        """Parse ``"p/q"`` (or a bare integer) without reducing."""
        parts = text.strip().split("/")
        try:
            if len(parts) == 1:
                return cls(int(parts[0]), 1)
            if len(parts) == 2:
                return cls(int(parts[0]), int(parts[1]))
        except ValueError as exc:
            raise ParseError(f"not a fraction: {text!r}") from exc
        raise ParseError(f"not a fraction: {text!r}")

    @property
    def value(self) -> Fraction:
        return Fraction(self.num, self.den)

    def is_lowest_terms(self) -> bool:
        return math.gcd(self.num, self.den) == 1

    def __str__(self) -> str:
        return f"{self.num}/{self.den}"


def reduce(r: Rational) -> Rational:
    """Return ``r`` in lowest terms with the reduced flag set.

    >>> reduce(Rational(1667438, 530762))
    Rational(num=833719, den=265381, reduced=True)
    """
    g = math.gcd(r.num, r.den)
    return Rational(r.num // g, r.den // g, reduced=True)


@dataclass(frozen=True)
class MoebiusForm:
    """The real number ``(a + b*alpha) / (c + d*alpha)``."""

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self) -> None:
        if self.c == 0 and self.d == 0:
            raise ValueError("MoebiusForm denominator (c, d) must not be (0, 0)")

    def evaluate(self, x: Fraction) -> Fraction:
        den = self.c + self.d * x
        if den == 0:
            raise DenominatorVanishes(f"{self} has a pole at {x}")
        return (self.a + self.b * x) / den


@dataclass(frozen=True)
class Interval:
    lo: Fraction
    hi: Fraction

    def __post_init__(self) -> None:
        if self.lo > self.hi:
            raise ValueError(f"empty interval [{self.lo}, {self.hi}]")

    @classmethod
    def point(cls, x: Fraction | int) -> "Interval":
        x = Fraction(x)
        return cls(x, x)

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def __contains__(self, x: object) -> bool:
        if isinstance(x, Rational):
            x = x.value
        return self.lo <= x <= self.hi  # type: ignore[operator]

    def intersects(self, other: "Interval") -> bool:
        return self.lo <= other.hi and other.lo <= self.hi


class Ordering(enum.Enum):
    LESS = "less"
    GREATER = "greater"


RationalLike = Union[Rational, Fraction, int]


def _as_fraction(r: RationalLike) -> Fraction:
    if isinstance(r, Rational):
        return r.value
    return Fraction(r)


def floor_on_interval(m: MoebiusForm, iv: Interval) -> int | None:
    """Floor of ``m`` valid for every alpha in ``iv``, or None if not certified.

    A Moebius form is monotone on any interval free of its pole, so the image
    of ``iv`` is spanned by the images of its endpoints.
    """
    den_lo = m.c + m.d * iv.lo
    den_hi = m.c + m.d * iv.hi
    if den_lo == 0 or den_hi == 0 or (den_lo > 0) != (den_hi > 0):
        return None
    f_lo = math.floor((m.a + m.b * iv.lo) / den_lo)
    f_hi = math.floor((m.a + m.b * iv.hi) / den_hi)
    return f_lo if f_lo == f_hi else None


def moebius_floor(m: MoebiusForm, alpha: "RealConstant", max_digits: int | None = None) -> int:
    """Exact ``floor((a + b*alpha) / (c + d*alpha))``.

    Rational constants are handled in exact arithmetic.  Otherwise the
    enclosure of alpha is refined until both endpoints share a floor.
    """
    if m.b == 0 and m.d == 0:
        return math.floor(Fraction(m.a, m.c))
    if alpha.exact is not None:
        return math.floor(m.evaluate(alpha.exact))

    straddles = False
    for digits in refinement_schedule(max_digits):
        iv = alpha.enclose(digits)
        f = floor_on_interval(m, iv)
        if f is not None:
            return f
        den_lo, den_hi = m.c + m.d * iv.lo, m.c + m.d * iv.hi
        straddles = min(den_lo, den_hi) <= 0 <= max(den_lo, den_hi)
    if straddles:
        raise DenominatorVanishes(f"cannot separate the denominator of {m} from zero at {digits} digits")
    raise PrecisionExhausted(f"floor of {m} still ambiguous at {digits} digits")


def compare_to_constant(
    r: RationalLike, alpha: "RealConstant", max_digits: int | None = None
) -> Ordering:
    """Certified strict ordering of ``r`` against alpha."""
    x = _as_fraction(r)
    if alpha.exact is not None:
        if x == alpha.exact:
            raise EqualToConstant(f"{x} equals {alpha}")
        return Ordering.LESS if x < alpha.exact else Ordering.GREATER
    for digits in refinement_schedule(max_digits):
        iv = alpha.enclose(digits)
        if x < iv.lo:
            return Ordering.LESS
        if x > iv.hi:
            return Ordering.GREATER
    raise PrecisionExhausted(f"cannot order {x} against {alpha} at {digits} digits")


def scaled_enclosure(alpha: "RealConstant", digits: int) -> tuple[int, int, int]:
    """Enclosure of alpha as ``(lo_num, hi_num, den)`` over one common denominator."""
    if alpha.exact is not None:
        e = alpha.exact
        return e.numerator, e.numerator, e.denominator
    iv = alpha.enclose(digits)
    den = math.lcm(iv.lo.denominator, iv.hi.denominator)
    return (
        iv.lo.numerator * (den // iv.lo.denominator),
        iv.hi.numerator * (den // iv.hi.denominator),
        den,
    )


class Comparator:
    """Fast repeated ``p/q < alpha`` tests for scanning loops.

    Holds one enclosure in integer form and decides most queries with two
    multiplications; anything the enclosure cannot settle is passed to
    :func:`compare_to_constant`, which refines as far as needed.
    """

    def __init__(self, alpha: "RealConstant", digits: int = START_DIGITS) -> None:
        self.alpha = alpha
        self.lo, self.hi, self.den = scaled_enclosure(alpha, digits)

    def less(self, p: int, q: int) -> bool:
        """True iff ``p/q < alpha`` (``q > 0``).  Equality counts as not less."""
        lhs = p * self.den
        if lhs < self.lo * q:
            return True
        if lhs > self.hi * q:
            return False
        try:
            return compare_to_constant(Fraction(p, q), self.alpha) is Ordering.LESS
        except EqualToConstant:
            return False
