"""Continued-fraction convergents of a constant and the best-approximation check.

Partial quotients come from the same certified Moebius floor as genitores:

    a[n+1] = floor((alpha*q[n-1] - p[n-1]) / (p[n] - alpha*q[n]))

with ``p[-1], q[-1] = 1, 0``, which reproduces ``a0 = floor(alpha)`` and
``a1 = floor(1 / (alpha - a0))``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .constants import RealConstant
from .errors import DenominatorVanishes, ExpansionTerminates, PrecisionExhausted
from .exact import MoebiusForm, current_max_digits, moebius_floor, refinement_schedule, scaled_enclosure

__all__ = [
    "ConvergentState",
    "convergents",
    "partial_quotients",
    "check_best_approximation",
    "compare_residuals",
    "odd_convergent_seed",
    "BRUTE_FORCE_LIMIT",
]

BRUTE_FORCE_LIMIT = 10**6


@dataclass(frozen=True)
class ConvergentState:
    n: int
    a: int
    p: int
    q: int
    p_prev: int
    q_prev: int

    @property
    def determinant(self) -> int:
        return self.p * self.q_prev - self.p_prev * self.q


def convergents(alpha: RealConstant, count: int) -> list[ConvergentState]:
    """The first ``count`` convergents ``p_0/q_0 .. p_{count-1}/q_{count-1}``.

    For a rational constant the expansion ends; :class:`ExpansionTerminates`
    then carries the convergents produced so far.
    """
    if count < 1:
        raise ValueError("count must be >= 1")
    a0 = alpha.floor_part
    states = [ConvergentState(0, a0, a0, 1, 1, 0)]
    while len(states) < count:
        cur = states[-1]
        if alpha.exact is not None and cur.p == alpha.exact * cur.q:
            raise ExpansionTerminates(f"{alpha} = {cur.p}/{cur.q} after {len(states)} terms", states)
        form = MoebiusForm(-cur.p_prev, cur.q_prev, cur.p, -cur.q)
        try:
            a = moebius_floor(form, alpha)
        except DenominatorVanishes as exc:
            raise ExpansionTerminates(str(exc), states) from exc
        states.append(ConvergentState(cur.n + 1, a, cur.p * a + cur.p_prev, cur.q * a + cur.q_prev, cur.p, cur.q))
    return states


def partial_quotients(alpha: RealConstant, count: int) -> list[int]:
    return [s.a for s in convergents(alpha, count)]


def _abs_residual(p: int, q: int, lo: int, hi: int, den: int) -> tuple[int, int]:
    """``|q*alpha - p| * den`` bounds for alpha in ``[lo, hi] / den``."""
    r_lo = q * lo - p * den
    r_hi = q * hi - p * den
    if r_lo >= 0:
        return r_lo, r_hi
    if r_hi <= 0:
        return -r_hi, -r_lo
    return 0, max(-r_lo, r_hi)


def compare_residuals(p1: int, q1: int, p2: int, q2: int, alpha: RealConstant) -> int:
    """Sign of ``|q1*alpha - p1| - |q2*alpha - p2|``, certified."""
    for digits in refinement_schedule():
        lo, hi, den = scaled_enclosure(alpha, digits)
        a_lo, a_hi = _abs_residual(p1, q1, lo, hi, den)
        b_lo, b_hi = _abs_residual(p2, q2, lo, hi, den)
        if a_hi < b_lo:
            return -1
        if a_lo > b_hi:
            return 1
        if alpha.exact is not None:
            return 0
    raise PrecisionExhausted(f"residuals of {p1}/{q1} and {p2}/{q2} not separated at {digits} digits")


def check_best_approximation(
    state: ConvergentState, next_q: int, alpha: RealConstant, allow_large: bool = False
) -> bool:
    """True iff no ``p/q`` with ``q < next_q`` beats ``state`` in ``|q*alpha - p|``.

    Only ``p = floor(q*alpha)`` and ``p = floor(q*alpha) + 1`` are tried for
    each ``q``; any other ``p`` is further from ``q*alpha``.
    """
    if next_q > BRUTE_FORCE_LIMIT and not allow_large:
        raise ValueError(f"next_q={next_q} exceeds {BRUTE_FORCE_LIMIT}; pass allow_large=True")
    pn, qn = state.p, state.q
    digits = 16 + 2 * len(str(next_q)) + len(str(qn))
    lo, hi, den = scaled_enclosure(alpha, min(digits, current_max_digits()))
    _, t_hi = _abs_residual(pn, qn, lo, hi, den)
    for q in range(1, next_q):
        base = (q * lo) // den
        # floor(q*alpha) is base, or base + 1 when the enclosure straddles an integer
        candidates = {base, base + 1}
        if (q * hi) // den != base:
            candidates.add(base + 2)
        for p in candidates:
            if (p, q) == (pn, qn):
                continue
            r_lo, r_hi = _abs_residual(p, q, lo, hi, den)
            if t_hi < r_lo:
                continue
            if compare_residuals(pn, qn, p, q, alpha) >= 0:
                return False
    return True


def odd_convergent_seed(alpha: RealConstant, k: int) -> tuple[int, int]:
    """``(p_{2k+1}, q_{2k+1})``, a valid seed for Kochanski approximants."""
    if k < 0:
        raise ValueError("k must be >= 0")
    st = convergents(alpha, 2 * k + 2)[2 * k + 1]
    return st.p, st.q
