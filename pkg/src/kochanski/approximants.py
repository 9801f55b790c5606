"""Kochanski's genitores and the lower/upper approximant recursion.

Given an upper approximant ``R/S > alpha``, the genitor is

    g = floor((alpha - floor(alpha)) / (R - alpha*S))

which, when positive, is the largest integer ``x`` with
``(R*x + floor(alpha)) / (S*x + 1) < alpha``.  One step of the recursion
turns ``(R, S)`` and ``x = g`` into

    P' = R*x + fl          Q' = S*x + 1
    R' = R*(x + 1) + fl    S' = S*(x + 1) + 1

with ``fl = floor(alpha)``, so that ``P'/Q' < alpha < R'/S' < R/S``.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction

from .constants import RealConstant
from .errors import (
    CapTooSmall,
    DenominatorVanishes,
    EqualToConstant,
    GenitorNotPositive,
    PropertyViolation,
    SeedNotAbove,
)
from .exact import Comparator, MoebiusForm, Ordering, Rational, compare_to_constant, moebius_floor

__all__ = [
    "ApproximantState",
    "GenitorResult",
    "StepRecord",
    "PropertyReport",
    "OracleCheck",
    "genitor",
    "brute_force_genitor",
    "step",
    "generate_sequence",
    "search_seeds",
    "verify_properties",
    "oracle_crosscheck",
    "altdef_bracket",
]

ORACLE_LIMIT = 10**6


@dataclass(frozen=True)
class ApproximantState:
    """Row ``n`` of the recursion.  ``P``/``Q`` are absent at ``n == 0``;
    ``x`` is the genitor used to leave this row, once known."""

    n: int
    R: int
    S: int
    P: int | None = None
    Q: int | None = None
    x: int | None = None

    def __post_init__(self) -> None:
        if self.S <= 0:
            raise ValueError("S must be positive")
        if (self.P is None) != (self.Q is None):
            raise ValueError("P and Q must be given together")
        if self.Q is not None and self.Q <= 0:
            raise ValueError("Q must be positive")

    @property
    def upper(self) -> Rational:
        return Rational(self.R, self.S)

    @property
    def lower(self) -> Rational | None:
        if self.P is None:
            return None
        return Rational(self.P, self.Q)  # type: ignore[arg-type]


@dataclass(frozen=True)
class GenitorResult:
    value: int
    positive: bool


def _require_above(R: int, S: int, alpha: RealConstant) -> None:
    if S <= 0:
        raise SeedNotAbove(f"denominator S={S} is not positive")
    try:
        order = compare_to_constant(Fraction(R, S), alpha)
    except EqualToConstant as exc:
        raise DenominatorVanishes(f"{R}/{S} equals {alpha}; R - alpha*S is zero") from exc
    if order is not Ordering.GREATER:
        raise SeedNotAbove(f"{R}/{S} is not above {alpha}")


def genitor(R: int, S: int, alpha: RealConstant) -> GenitorResult:
    """Genitor of ``R/S`` with respect to ``alpha``.

    For rational alpha the floor can land exactly on an integer ``k``; then
    ``x = k`` gives equality rather than strict inequality, so ``k - 1`` is
    returned to keep the "largest x with strict <" meaning.
    """
    _require_above(R, S, alpha)
    fl = alpha.floor_part
    form = MoebiusForm(-fl, 1, R, -S)
    value = moebius_floor(form, alpha)
    if alpha.exact is not None and form.evaluate(alpha.exact) == value:
        value -= 1
    value = max(value, 0)
    return GenitorResult(value, value >= 1)


def brute_force_genitor(R: int, S: int, alpha: RealConstant, cap: int) -> int:
    """Largest ``x`` in ``1..cap`` with ``(R*x + fl)/(S*x + 1) < alpha``, else 0.

    Every ``x`` in range is tested; nothing about monotonicity in ``x`` is
    assumed.  Raises :class:`CapTooSmall` if ``x == cap`` still qualifies.
    """
    if cap < 1:
        raise ValueError("cap must be >= 1")
    _require_above(R, S, alpha)
    fl = alpha.floor_part
    # enough digits that only x next to the boundary needs refinement
    cmp = Comparator(alpha, digits=16 + 2 * len(str(S)) + len(str(cap)))
    lo, hi, den = cmp.lo, cmp.hi, cmp.den
    best = 0
    # running (R*x + fl)*den, lo*(S*x + 1), hi*(S*x + 1)
    num, below, above = (R + fl) * den, lo * (S + 1), hi * (S + 1)
    d_num, d_below, d_above = R * den, lo * S, hi * S
    for x in range(1, cap + 1):
        if num < below:
            best = x
        elif num <= above and cmp.less(R * x + fl, S * x + 1):
            best = x
        num += d_num
        below += d_below
        above += d_above
    if best == cap:
        raise CapTooSmall(f"x={cap} still satisfies the inequality for {R}/{S}")
    return best


def _advance(state: ApproximantState, x: int, fl: int) -> ApproximantState:
    return ApproximantState(
        n=state.n + 1,
        R=state.R * (x + 1) + fl,
        S=state.S * (x + 1) + 1,
        P=state.R * x + fl,
        Q=state.S * x + 1,
    )


def step(state: ApproximantState, alpha: RealConstant) -> ApproximantState:
    """Next row of the recursion; raises GenitorNotPositive if it cannot continue."""
    g = genitor(state.R, state.S, alpha)
    if not g.positive:
        raise GenitorNotPositive(f"g({state.R}, {state.S}) = {g.value} at n={state.n}")
    return _advance(state, g.value, alpha.floor_part)


def generate_sequence(R0: int, S0: int, alpha: RealConstant, count: int) -> list[ApproximantState]:
    """Rows ``n = 0..count``; every row but the last carries its genitor."""
    if count < 1:
        raise ValueError("count must be >= 1")
    fl = alpha.floor_part
    states = [ApproximantState(0, R0, S0)]
    for _ in range(count):
        cur = states[-1]
        g = genitor(cur.R, cur.S, alpha)
        if not g.positive:
            raise GenitorNotPositive(f"g({cur.R}, {cur.S}) = {g.value} at n={cur.n}")
        states[-1] = replace(cur, x=g.value)
        states.append(_advance(cur, g.value, fl))
    return states


def search_seeds(alpha: RealConstant, max_S: int) -> list[tuple[int, int]]:
    """All seeds ``(R0, S0)`` with ``S0 <= max_S``, ``R0/S0 > alpha`` and positive genitor.

    A positive genitor needs ``R0 - alpha*S0 <= alpha - fl``, i.e.
    ``R0 <= alpha*(S0 + 1) - fl``, so for each ``S0`` only the integers
    from ``floor(alpha*S0) + 1`` to that bound are candidates.
    """
    if max_S < 1:
        raise ValueError("max_S must be >= 1")
    fl = alpha.floor_part
    seeds = []
    for S0 in range(1, max_S + 1):
        r_min = moebius_floor(MoebiusForm(0, S0, 1, 0), alpha) + 1
        r_max = moebius_floor(MoebiusForm(-fl, S0 + 1, 1, 0), alpha)
        for R0 in range(r_min, r_max + 1):
            try:
                g = genitor(R0, S0, alpha)
            except (SeedNotAbove, DenominatorVanishes):
                continue
            if g.positive:
                seeds.append((R0, S0))
    return seeds


@dataclass(frozen=True)
class StepRecord:
    n: int
    x: int | None
    gap: Fraction | None
    lower_increased: bool
    upper_decreased: bool
    bounds_ok: bool
    x_nondecreasing: bool
    identities_ok: bool = True
    gap_ok: bool = True

    def failures(self) -> list[str]:
        names = (
            "lower_increased",
            "upper_decreased",
            "bounds_ok",
            "x_nondecreasing",
            "identities_ok",
            "gap_ok",
        )
        return [name for name in names if not getattr(self, name)]


@dataclass
class PropertyReport:
    alpha: str
    records: list[StepRecord] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(not r.failures() for r in self.records)

    def violations(self) -> list[tuple[int, str]]:
        return [(r.n, name) for r in self.records for name in r.failures()]

    def repeated_genitores(self) -> list[int]:
        """Indices ``n >= 1`` where ``x_n == x_{n-1}``."""
        xs = [r.x for r in self.records]
        return [i for i in range(1, len(xs)) if xs[i] is not None and xs[i] == xs[i - 1]]


def _below(r: Fraction, alpha: RealConstant) -> bool:
    try:
        return compare_to_constant(r, alpha) is Ordering.LESS
    except EqualToConstant:
        return False


def _above(r: Fraction, alpha: RealConstant) -> bool:
    try:
        return compare_to_constant(r, alpha) is Ordering.GREATER
    except EqualToConstant:
        return False


def verify_properties(
    states: list[ApproximantState], alpha: RealConstant, strict: bool = False
) -> PropertyReport:
    """Check monotonicity, the sandwich around alpha and the shrinking gap.

    Every comparison against alpha is certified.  With ``strict=True`` the
    first failure raises :class:`PropertyViolation`.
    """
    report = PropertyReport(str(alpha))
    if not states:
        return report
    fl = alpha.floor_part
    seed = Fraction(states[0].R, states[0].S)

    x0 = states[0].x
    report.records.append(
        StepRecord(
            n=0,
            x=x0,
            gap=None,
            lower_increased=True,
            upper_decreased=True,
            bounds_ok=True,
            x_nondecreasing=x0 is None or x0 >= 1,
        )
    )
    if strict and not report.records[0].x_nondecreasing:
        raise PropertyViolation(0, "x_nondecreasing", "x_0 is not positive")
    prev_gap: Fraction | None = None
    for i in range(1, len(states)):
        prev, cur = states[i - 1], states[i]
        n = cur.n
        upper = Fraction(cur.R, cur.S)
        prev_upper = Fraction(prev.R, prev.S)
        identities = (
            cur.P is not None
            and cur.P == cur.R - prev.R
            and cur.Q == cur.S - prev.S
            and n == prev.n + 1
        )
        if cur.P is None:
            lower = None
            bounds = False
            lower_up = False
            gap = None
            gap_ok = False
        else:
            lower = Fraction(cur.P, cur.Q)
            bounds = fl < lower and _below(lower, alpha) and _above(upper, alpha) and upper < seed
            if prev.P is None:
                lower_up = True
            else:
                # equal genitores x_{n-2} == x_{n-1} scale P and Q by x + 1: same value
                prev_lower = Fraction(prev.P, prev.Q)
                repeat = states[i - 2].x == prev.x
                lower_up = lower == prev_lower if repeat else lower > prev_lower
            gap = upper - lower
            gap_ok = gap > 0 and (prev_gap is None or gap < prev_gap)
            if prev.x is not None:
                bound = (seed - fl) / (cur.S * (prev.x + Fraction(1, prev.S)))
                # at n == 1 the previous upper approximant is the seed itself: equality
                gap_ok = gap_ok and (gap < bound if i > 1 else gap <= bound)
        x_ok = cur.x is None or (cur.x >= 1 and prev.x is not None and cur.x >= prev.x)
        record = StepRecord(
            n=n,
            x=cur.x,
            gap=gap,
            lower_increased=lower_up,
            upper_decreased=upper < prev_upper,
            bounds_ok=bounds,
            x_nondecreasing=x_ok,
            identities_ok=identities,
            gap_ok=gap_ok,
        )
        report.records.append(record)
        prev_gap = gap
        if strict and record.failures():
            raise PropertyViolation(n, record.failures()[0])
    return report


@dataclass(frozen=True)
class OracleCheck:
    n: int
    genitor: int
    brute_force: int | None

    @property
    def agrees(self) -> bool:
        return self.brute_force is None or self.brute_force == self.genitor


def oracle_crosscheck(
    states: list[ApproximantState], alpha: RealConstant, limit: int = ORACLE_LIMIT
) -> list[OracleCheck]:
    """Recompute each recorded genitor ``<= limit`` by brute force.

    The scan runs to ``2*x + 2`` so that an understated genitor is caught by
    :class:`CapTooSmall` and an overstated one by a smaller scan result.
    Larger genitores are listed with ``brute_force=None``.
    """
    checks = []
    for s in states:
        if s.x is None:
            continue
        if s.x > limit:
            checks.append(OracleCheck(s.n, s.x, None))
            continue
        try:
            bf = brute_force_genitor(s.R, s.S, alpha, cap=2 * s.x + 2)
        except CapTooSmall:
            bf = -1
        checks.append(OracleCheck(s.n, s.x, bf))
    return checks


def altdef_bracket(state: ApproximantState, alpha: RealConstant) -> tuple[bool, bool]:
    """Certify ``(R x + fl)/(S x + 1) < alpha < (R (x+1) + fl)/(S (x+1) + 1)`` for the row's ``x``."""
    if state.x is None:
        raise ValueError("state has no recorded genitor")
    fl = alpha.floor_part
    x = state.x
    low = Fraction(state.R * x + fl, state.S * x + 1)
    high = Fraction(state.R * (x + 1) + fl, state.S * (x + 1) + 1)
    return _below(low, alpha), _above(high, alpha)

