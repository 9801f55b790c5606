"""Independent reference computations used only by the tests.

Nothing here imports the package's arithmetic; each routine takes a
different route to the same numbers so that agreement means something.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache


def _arctan_bracket(x: Fraction, terms: int) -> tuple[Fraction, Fraction]:
    """Consecutive partial sums of the arctan series bracket arctan(x) for 0 < x < 1."""
    s = Fraction(0)
    prev = s
    for j in range(terms + 1):
        prev = s
        s += (-1) ** j * x ** (2 * j + 1) / (2 * j + 1)
    return min(prev, s), max(prev, s)


@lru_cache(maxsize=None)
def pi_bracket(digits: int) -> tuple[Fraction, Fraction]:
    """pi in exact rationals via Stormer: pi/4 = 44 atan(1/57) + 7 atan(1/239) - 12 atan(1/682) + 24 atan(1/12943)."""
    terms = digits // 3 + 5
    parts = [(44, 57), (7, 239), (-12, 682), (24, 12943)]
    lo = hi = Fraction(0)
    for coef, k in parts:
        a, b = _arctan_bracket(Fraction(1, k), terms)
        if coef > 0:
            lo += coef * a
            hi += coef * b
        else:
            lo += coef * b
            hi += coef * a
    lo, hi = 4 * lo, 4 * hi
    assert hi - lo < Fraction(1, 10 ** (digits + 2))
    return lo, hi


def pi_truncated(digits: int) -> int:
    """floor(pi * 10**digits)."""
    lo, hi = pi_bracket(digits + 10)
    t = math.floor(lo * 10**digits)
    assert t == math.floor(hi * 10**digits)
    return t


def sqrt_cf(k: int, count: int) -> list[int]:
    """Partial quotients of sqrt(k) by the exact (m, d, a) surd recurrence."""
    a0 = math.isqrt(k)
    out = [a0]
    m, d, a = 0, 1, a0
    while len(out) < count:
        m = d * a - m
        d = (k - m * m) // d
        a = (a0 + m) // d
        out.append(a)
    return out


def convergents_from_quotients(qs: list[int]) -> list[tuple[int, int]]:
    """Evaluate each truncation of [a0; a1, ...] directly as a nested fraction."""
    out = []
    for n in range(1, len(qs) + 1):
        x = Fraction(qs[n - 1])
        for a in reversed(qs[: n - 1]):
            x = a + 1 / x
        out.append((x.numerator, x.denominator))
    return out


def below_pi(p: int, q: int, digits: int = 60) -> bool:
    lo, hi = pi_bracket(digits)
    r = Fraction(p, q)
    assert not (lo <= r <= hi), "bracket too coarse"
    return r < lo


def below_sqrt(p: int, q: int, k: int) -> bool:
    """p/q < sqrt(k) exactly, for p, q > 0."""
    return p * p < k * q * q


def brute_genitor(R: int, S: int, fl: int, below, cap: int) -> int:
    """Largest x <= cap with (R x + fl)/(S x + 1) below alpha, by direct scan."""
    best = 0
    for x in range(1, cap + 1):
        if below(R * x + fl, S * x + 1):
            best = x
    return best
