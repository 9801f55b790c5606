"""Reproduction of the numbers in Kochanski's 1685 table and its commentary.

Everything here is recomputed from the core algorithm except two entries that
have no derivation: the opening bounds 3 < pi < 4 and the lower fraction
25/8 next to 22/7.  Those are stored literals and flagged as such.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .approximants import generate_sequence
from .constants import PI, RealConstant, sqrt_interval
from .contfrac import partial_quotients
from .exact import Interval, MoebiusForm, Rational, floor_on_interval, moebius_floor, reduce

__all__ = [
    "TableRow",
    "PrecisionLedgerRow",
    "MissedConvergentReport",
    "KOCHANSKI_SEED",
    "construction_value",
    "binary_sum_value",
    "decimal_expansion",
    "reproduce_table",
    "kochanski_oeis_sequence",
    "precision_ledger",
    "digit_enclosure",
    "genitor_certified_at",
    "missed_convergent_demo",
]

KOCHANSKI_SEED = (22, 7)
# rows n = 1..4 are printed in 1685; row 5 extends the table
PRINTED_ROWS = 4


def construction_value(digits: int) -> Interval:
    """Enclosure of ``sqrt(120 - 18*sqrt(3)) / 3`` of width at most ``10**-digits``."""
    if digits < 1:
        raise ValueError("digits must be >= 1")
    target = Fraction(1, 10**digits)
    work = digits + 2
    while True:
        root3 = sqrt_interval(Interval.point(3), work)
        inner = Interval(120 - 18 * root3.hi, 120 - 18 * root3.lo)
        outer = sqrt_interval(inner, work)
        iv = Interval(outer.lo / 3, outer.hi / 3)
        if iv.width <= target:
            return iv
        work += 2


def binary_sum_value() -> Rational:
    """96/32 + 4/32 + (1/2)(1/32) + 1/(32*32), as an exact fraction."""
    total = Fraction(96, 32) + Fraction(4, 32) + Fraction(1, 2) * Fraction(1, 32) + Fraction(1, 32 * 32)
    return Rational(total.numerator, total.denominator, reduced=True)


def decimal_expansion(r: Rational | Fraction) -> str:
    """Exact decimal string of a fraction whose denominator has only factors 2 and 5."""
    x = r.value if isinstance(r, Rational) else Fraction(r)
    den = x.denominator
    twos = fives = 0
    while den % 2 == 0:
        den //= 2
        twos += 1
    while den % 5 == 0:
        den //= 5
        fives += 1
    if den != 1:
        raise ValueError(f"{x} has no terminating decimal expansion")
    places = max(twos, fives)
    scaled = abs(x) * 10**places
    whole, frac = divmod(int(scaled), 10**places)
    sign = "-" if x < 0 else ""
    if places == 0:
        return f"{sign}{whole}"
    return f"{sign}{whole}.{frac:0{places}d}"


@dataclass(frozen=True)
class TableRow:
    label: str
    lower: Rational
    upper: Rational
    lower_reduced: Rational | None = None
    upper_reduced: Rational | None = None
    literal: bool = False
    in_paper: bool = True
    note: str = ""


def _reduced_or_none(r: Rational) -> Rational | None:
    red = reduce(r)
    return None if (red.num, red.den) == (r.num, r.den) else red


def reproduce_table(count: int = 5) -> list[TableRow]:
    """Kochanski's table: literal rows, then ``count`` computed pairs, unreduced."""
    R0, S0 = KOCHANSKI_SEED
    states = generate_sequence(R0, S0, PI, count)
    rows = [
        TableRow("bounds", Rational(3, 1), Rational(4, 1), literal=True, note="literal: 3 < pi < 4"),
        TableRow(
            "0",
            Rational(25, 8),
            states[0].upper,
            literal=True,
            note="25/8 is a literal; the recursion has no lower approximant at n=0",
        ),
    ]
    for st in states[1:]:
        lower = st.lower
        assert lower is not None
        rows.append(
            TableRow(
                str(st.n),
                lower,
                st.upper,
                lower_reduced=_reduced_or_none(lower),
                upper_reduced=_reduced_or_none(st.upper),
                in_paper=st.n <= PRINTED_ROWS,
            )
        )
    return rows


def kochanski_oeis_sequence(count: int) -> list[int]:
    """Genitores of pi from 22/7: 15, 4697, 5548, 14774, ... (OEIS A191642)."""
    if count < 1:
        raise ValueError("count must be >= 1")
    states = generate_sequence(*KOCHANSKI_SEED, PI, count)
    return [s.x for s in states[:count]]  # type: ignore[misc]


@dataclass(frozen=True)
class PrecisionLedgerRow:
    n: int
    genitor: int
    digits_required: int


def digit_enclosure(alpha: RealConstant, digits: int, mode: str = "truncate") -> Interval:
    """The interval known to someone holding ``digits`` decimals of alpha.

    ``truncate``: ``[t, t + 10**-d]`` with ``t`` alpha cut after ``d`` decimals.
    ``round``: ``[r - 10**-d/2, r + 10**-d/2]`` with ``r`` alpha rounded to ``d`` decimals.
    """
    scale = 10**digits
    ulp = Fraction(1, scale)
    if mode == "truncate":
        t = moebius_floor(MoebiusForm(0, scale, 1, 0), alpha)
        return Interval(Fraction(t, scale), Fraction(t, scale) + ulp)
    if mode == "round":
        # round half up: floor(alpha*scale + 1/2)
        r = moebius_floor(MoebiusForm(1, 2 * scale, 2, 0), alpha)
        return Interval(Fraction(r, scale) - ulp / 2, Fraction(r, scale) + ulp / 2)
    raise ValueError(f"unknown rounding mode {mode!r}")


def genitor_certified_at(R: int, S: int, alpha: RealConstant, digits: int, mode: str = "truncate") -> int | None:
    """Genitor of ``R/S`` if ``digits`` decimals of alpha pin it down, else None."""
    form = MoebiusForm(-alpha.floor_part, 1, R, -S)
    return floor_on_interval(form, digit_enclosure(alpha, digits, mode))


def precision_ledger(count: int, mode: str = "truncate", max_scan: int = 1000) -> list[PrecisionLedgerRow]:
    """Least number of decimals of pi that certifies each genitor x_0..x_{count-1}."""
    if count < 1:
        raise ValueError("count must be >= 1")
    states = generate_sequence(*KOCHANSKI_SEED, PI, count)
    rows = []
    for st in states[:count]:
        for d in range(1, max_scan + 1):
            g = genitor_certified_at(st.R, st.S, PI, d, mode)
            if g is not None:
                if g != st.x:
                    raise AssertionError(f"certified floor {g} disagrees with genitor {st.x} at n={st.n}")
                rows.append(PrecisionLedgerRow(st.n, st.x, d))  # type: ignore[arg-type]
                break
        else:
            raise RuntimeError(f"x_{st.n} not certified within {max_scan} digits")
    return rows


@dataclass(frozen=True)
class MissedConvergentReport:
    mediant: Rational
    identity_holds: bool
    genitores: list[int]
    partial_quotients: list[int]

    @property
    def distinct(self) -> bool:
        return self.genitores != self.partial_quotients


def missed_convergent_demo(count: int = 11) -> MissedConvergentReport:
    """(333*1 + 22)/(106*1 + 7) is 355/113; genitores vs partial quotients of pi."""
    mediant = Rational(333 * 1 + 22, 106 * 1 + 7)
    return MissedConvergentReport(
        mediant=mediant,
        identity_holds=(mediant.num, mediant.den) == (355, 113) and math.gcd(355, 113) == 1,
        genitores=kochanski_oeis_sequence(count),
        partial_quotients=partial_quotients(PI, count),
    )
