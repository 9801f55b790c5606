"""Computable real constants with certified rational enclosures.

Supported kinds and their spec strings::

    pi            Machin's formula, fixed-point arctangent series
    phi           (1 + sqrt 5) / 2
    sqrt:<k>      k >= 2, not a perfect square
    dec:<d>       exact decimal, e.g. dec:3.14 == 314/100
    rat:<p>/<q>   exact ratio, q > 0

``enclose(digits)`` always returns an :class:`~kochanski.exact.Interval` of
width at most ``10**-digits`` that contains the true value.
"""

from __future__ import annotations

import enum
import math
import re
import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .errors import NotIrrationalWarning, ParseError, PerfectSquare, PrecisionExhausted
from .exact import Interval, refinement_schedule

__all__ = [
    "Kind",
    "RealConstant",
    "PI",
    "PHI",
    "SQRT2",
    "eval_interval",
    "parse_constant",
    "floor_of",
    "sqrt_interval",
]


class Kind(enum.Enum):
    PI = "pi"
    SQRT = "sqrt"
    PHI = "phi"
    DECIMAL = "dec"
    RATIO = "rat"


def _arctan_inv_scaled(k: int, scale: int) -> tuple[int, int]:
    """``scale * arctan(1/k)`` by the alternating series.

    Each term ``floor(scale / ((2j+1) k**(2j+1)))`` is exact up to truncation
    (nested floors of integer divisions collapse), so every term is low by
    less than one unit.  Summation stops once the next power is below one
    unit, which also bounds the tail.  Returns ``(approx, error_bound)``.
    """
    power = scale // k
    k2 = k * k
    total = 0
    j = 0
    while power:
        term = power // (2 * j + 1)
        total += -term if j & 1 else term
        power //= k2
        j += 1
    # j truncated terms plus a tail smaller than one unit
    return total, j + 1


@lru_cache(maxsize=128)
def _pi_bounds(digits: int) -> tuple[int, int, int]:
    guard = len(str(digits)) + 4
    while True:
        scale = 10 ** (digits + guard)
        a5, e5 = _arctan_inv_scaled(5, scale)
        a239, e239 = _arctan_inv_scaled(239, scale)
        approx = 16 * a5 - 4 * a239
        err = 16 * e5 + 4 * e239
        if 2 * err <= 10**guard:
            return approx - err, approx + err, scale
        guard += 2


def _pi_interval(digits: int) -> Interval:
    lo, hi, scale = _pi_bounds(digits)
    return Interval(Fraction(lo, scale), Fraction(hi, scale))


@lru_cache(maxsize=256)
def _sqrt_interval_int(k: int, digits: int) -> Interval:
    s = math.isqrt(k * 10 ** (2 * digits))
    scale = 10**digits
    if s * s == k * 10 ** (2 * digits):
        return Interval.point(Fraction(s, scale))
    return Interval(Fraction(s, scale), Fraction(s + 1, scale))


def sqrt_interval(iv: Interval, digits: int) -> Interval:
    """Enclosure of ``[sqrt(lo), sqrt(hi)]`` with outward rounding at ``10**-digits``.

    Width grows by at most ``2 * 10**-digits`` over the exact image.
    """
    if iv.lo < 0:
        raise ValueError("square root of an interval reaching below zero")
    scale = 10**digits
    lo_sq = iv.lo * scale * scale
    hi_sq = iv.hi * scale * scale
    lo = math.isqrt(math.floor(lo_sq))
    hi = math.isqrt(math.ceil(hi_sq))
    if hi * hi < hi_sq:
        hi += 1
    return Interval(Fraction(lo, scale), Fraction(hi, scale))


@dataclass(frozen=True)
class RealConstant:
    """A positive computable real.  Build with the classmethods or :func:`parse_constant`."""

    kind: Kind
    radicand: int | None = None
    exact: Fraction | None = None
    text: str = ""
    floor_part: int = field(init=False, compare=False, repr=False)

    def __post_init__(self) -> None:
        if self.kind is Kind.SQRT:
            k = self.radicand
            if k is None or k < 0:
                raise ValueError("sqrt requires a non-negative radicand")
            if math.isqrt(k) ** 2 == k:
                raise PerfectSquare(f"sqrt:{k} is rational ({math.isqrt(k)})")
        if self.kind in (Kind.DECIMAL, Kind.RATIO) and self.exact is None:
            raise ValueError(f"{self.kind.value} constants need an exact value")
        object.__setattr__(self, "floor_part", self._certified_floor())

    @classmethod
    def pi(cls) -> "RealConstant":
        return cls(Kind.PI, text="pi")

    @classmethod
    def phi(cls) -> "RealConstant":
        return cls(Kind.PHI, text="phi")

    @classmethod
    def sqrt(cls, k: int) -> "RealConstant":
        return cls(Kind.SQRT, radicand=k, text=f"sqrt:{k}")

    @classmethod
    def decimal(cls, literal: str) -> "RealConstant":
        return cls(Kind.DECIMAL, exact=Fraction(literal), text=f"dec:{literal}")

    @classmethod
    def ratio(cls, p: int, q: int) -> "RealConstant":
        if q <= 0:
            raise ParseError(f"rat:{p}/{q} needs a positive denominator")
        return cls(Kind.RATIO, exact=Fraction(p, q), text=f"rat:{p}/{q}")

    @property
    def is_rational(self) -> bool:
        return self.exact is not None

    def enclose(self, digits: int) -> Interval:
        if digits < 1:
            raise ValueError("digits must be >= 1")
        if self.exact is not None:
            return Interval.point(self.exact)
        if self.kind is Kind.PI:
            return _pi_interval(digits)
        if self.kind is Kind.SQRT:
            return _sqrt_interval_int(self.radicand, digits)  # type: ignore[arg-type]
        # phi; sqrt 5 one digit finer, then halved
        s5 = _sqrt_interval_int(5, digits + 1)
        return Interval((1 + s5.lo) / 2, (1 + s5.hi) / 2)

    def _certified_floor(self) -> int:
        if self.exact is not None:
            return math.floor(self.exact)
        if self.kind is Kind.SQRT:
            return math.isqrt(self.radicand)  # type: ignore[arg-type]
        for digits in refinement_schedule():
            iv = self.enclose(digits)
            if math.floor(iv.lo) == math.floor(iv.hi):
                return math.floor(iv.lo)
        raise PrecisionExhausted(f"floor of {self.text} not certified")

    def __str__(self) -> str:
        return self.text


PI = RealConstant.pi()
PHI = RealConstant.phi()
SQRT2 = RealConstant.sqrt(2)


def eval_interval(c: RealConstant, digits: int) -> Interval:
    """Interval containing ``c`` of width at most ``10**-digits``."""
    return c.enclose(digits)


def floor_of(c: RealConstant) -> int:
    return c.floor_part


_SQRT_RE = re.compile(r"sqrt:(\d+)")
_DEC_RE = re.compile(r"dec:([+-]?(?:\d+(?:\.\d*)?|\.\d+))")
_RAT_RE = re.compile(r"rat:([+-]?\d+)/(\d+)")


def parse_constant(spec: str) -> RealConstant:
    """Parse ``pi | phi | sqrt:<k> | dec:<decimal> | rat:<p>/<q>``.

    ``dec:`` and ``rat:`` are accepted but emit :class:`NotIrrationalWarning`.

    >>> parse_constant("sqrt:2").floor_part
    1
    """
    if spec == "pi":
        return PI
    if spec == "phi":
        return PHI
    if m := _SQRT_RE.fullmatch(spec):
        return RealConstant.sqrt(int(m.group(1)))
    if m := _DEC_RE.fullmatch(spec):
        warnings.warn(f"{spec} is rational", NotIrrationalWarning, stacklevel=2)
        return RealConstant.decimal(m.group(1))
    if m := _RAT_RE.fullmatch(spec):
        q = int(m.group(2))
        if q == 0:
            raise ParseError(f"zero denominator in {spec!r}")
        warnings.warn(f"{spec} is rational", NotIrrationalWarning, stacklevel=2)
        return RealConstant.ratio(int(m.group(1)), q)
    raise ParseError(f"unrecognised constant {spec!r}; expected pi, phi, sqrt:<k>, dec:<decimal> or rat:<p>/<q>")
