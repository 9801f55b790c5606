"""Acceptance criteria, one test each.

Every test appends a ``ACCEPTANCE n: PASS|FAIL ...`` line that is echoed in
the terminal summary.  All comparisons are exact (zero tolerance) except the
runtime limits, which are stated per criterion.
"""

import json
import time
from contextlib import contextmanager
from fractions import Fraction

import pytest

from conftest import ACCEPTANCE_LINES, run_cli
from kochanski import (
    PHI,
    PI,
    SQRT2,
    Ordering,
    Rational,
    check_best_approximation,
    compare_to_constant,
    convergents,
    generate_sequence,
    genitor,
    odd_convergent_seed,
    oracle_crosscheck,
    reduce,
    search_seeds,
    verify_properties,
)
from kochanski.replica import (
    binary_sum_value,
    construction_value,
    decimal_expansion,
    genitor_certified_at,
    precision_ledger,
)

TABLE = [
    ("333/106", "355/113"),
    ("1667438/530762", "1667793/530875"),
    ("9252915567/2945294501", "9254583360/2945825376"),
    ("136727214560643/43521624105025", "136736469144003/43524569930401"),
]
PI_GENITORES = [15, 4697, 5548, 14774, 33696, 61072, 111231, 115985, 173819, 563316, 606004]
PI_CONVERGENTS = [
    (3, 1), (22, 7), (333, 106), (355, 113), (103993, 33102), (104348, 33215),
    (208341, 66317), (312689, 99532), (833719, 265381), (1146408, 364913), (4272943, 1360120),
]
RUNTIME_LIMIT_S = 10.0


@contextmanager
def criterion(n: int, title: str):
    t0 = time.perf_counter()
    try:
        yield
    except BaseException as exc:
        ACCEPTANCE_LINES.append(f"ACCEPTANCE {n}: FAIL {title} ({type(exc).__name__}: {exc})")
        raise
    ACCEPTANCE_LINES.append(f"ACCEPTANCE {n}: PASS {title} [{time.perf_counter() - t0:.2f}s]")


def frac(r) -> str:
    return f"{r.num}/{r.den}"


def test_criterion_01_approximant_table():
    with criterion(1, "approximant table from 22/7, unreduced"):
        states = generate_sequence(22, 7, PI, 5)
        got = [(frac(s.lower), frac(s.upper)) for s in states[1:5]]
        assert got == TABLE
        assert states[0].P is None and frac(states[0].upper) == "22/7"
        assert states[5].lower.num == states[5].R - states[4].R


def test_criterion_02_genitor_sequence():
    with criterion(2, "first 11 genitores of pi from 22/7"):
        states = generate_sequence(22, 7, PI, 11)
        assert [s.x for s in states[:11]] == PI_GENITORES


def test_criterion_03_reductions():
    with criterion(3, "reductions of P_2/Q_2 and R_3/S_3"):
        assert frac(reduce(Rational(1667438, 530762))) == "833719/265381"
        assert frac(reduce(Rational(9254583360, 2945825376))) == "96401910/30685681"


def test_criterion_04_sqrt2_run():
    with criterion(4, "sqrt(2) genitores from 3/2"):
        states = generate_sequence(3, 2, SQRT2, 8)
        assert [s.x for s in states[:8]] == [2, 4, 4, 15, 17, 77, 101, 119]


def test_criterion_05_convergents():
    with criterion(5, "11 convergents of pi, determinant +-1"):
        cs = convergents(PI, 11)
        assert [(c.p, c.q) for c in cs] == PI_CONVERGENTS
        assert all(c.determinant == (-1) ** (c.n + 1) for c in cs)


def test_criterion_06_cross_links():
    with criterion(6, "approximants coincide with convergents"):
        states = generate_sequence(22, 7, PI, 2)
        cs = convergents(PI, 9)
        assert frac(states[1].lower) == "333/106" == f"{cs[2].p}/{cs[2].q}"
        assert frac(states[1].upper) == "355/113" == f"{cs[3].p}/{cs[3].q}"
        assert frac(reduce(states[2].lower)) == "833719/265381" == f"{cs[8].p}/{cs[8].q}"


def test_criterion_07_seed_search():
    with criterion(7, f"seed search for pi with S_0 <= 105, runtime < {RUNTIME_LIMIT_S:g}s"):
        t0 = time.perf_counter()
        seeds = search_seeds(PI, 105)
        elapsed = time.perf_counter() - t0
        assert set(seeds) == {(22 * k, 7 * k) for k in range(1, 16)}
        assert len(seeds) == 15
        assert elapsed < RUNTIME_LIMIT_S


def test_criterion_08_precision_ledger():
    with criterion(8, "x_0..x_3 need <= 20 digits; x_4 uncertified at d=25, certified at d=26 (truncation)"):
        ledger = precision_ledger(5, mode="truncate")
        assert all(row.digits_required <= 20 for row in ledger[:4])
        st = generate_sequence(22, 7, PI, 5)[4]
        at25 = genitor_certified_at(st.R, st.S, PI, 25, "truncate")
        at26 = genitor_certified_at(st.R, st.S, PI, 26, "truncate")
        assert at26 == st.x
        assert at25 is None, (
            f"x_4 = {st.x} is already certified at d=25 (least d = {ledger[4].digits_required})"
        )


def test_criterion_09_construction_value():
    with criterion(9, "construction value near 3.1415333, distance to pi in (1e-5, 1e-4)"):
        iv = construction_value(10)
        assert Fraction(31415333, 10**7) <= iv.lo and iv.hi < Fraction(31415334, 10**7)
        pi_iv = PI.enclose(12)
        dist_lo, dist_hi = pi_iv.lo - iv.hi, pi_iv.hi - iv.lo
        assert Fraction(1, 10**5) < dist_lo and dist_hi < Fraction(1, 10**4)


def test_criterion_10_binary_sum():
    with criterion(10, "binary sum 3217/1024 = 3.1416015625"):
        v = binary_sum_value()
        assert (v.num, v.den) == (3217, 1024)
        assert decimal_expansion(v) == "3.1416015625"


def _four_way(state, alpha) -> bool:
    """floor(alpha) < lower < alpha < upper-with-x+1 < R/S, all certified."""
    fl, x, R, S = alpha.floor_part, state.x, state.R, state.S
    low = Fraction(R * x + fl, S * x + 1)
    high = Fraction(R * (x + 1) + fl, S * (x + 1) + 1)
    return (
        fl < low
        and compare_to_constant(low, alpha) is Ordering.LESS
        and compare_to_constant(high, alpha) is Ordering.GREATER
        and high < Fraction(R, S)
    )


@pytest.mark.parametrize("name,alpha", [("pi", PI), ("sqrt2", SQRT2), ("phi", PHI)])
def test_criterion_11_property_suite(name, alpha):
    with criterion(11, f"property suite for {name}, 20 steps from first odd convergent"):
        R0, S0 = odd_convergent_seed(alpha, 0)
        states = generate_sequence(R0, S0, alpha, 20)
        report = verify_properties(states, alpha)
        assert report.ok, report.violations()
        gaps = [s.upper.value - s.lower.value for s in states[1:]]
        assert all(g > 0 for g in gaps) and all(b < a for a, b in zip(gaps, gaps[1:]))
        checks = oracle_crosscheck(states, alpha, limit=10**6)
        assert all(c.agrees for c in checks), [c for c in checks if not c.agrees]
        assert any(c.brute_force is not None for c in checks)
        assert all(_four_way(s, alpha) for s in states[:20])
        for k in range(5):
            p, q = odd_convergent_seed(alpha, k)
            assert genitor(p, q, alpha).positive


def test_criterion_12_best_approximation():
    with criterion(12, f"best approximation through q_5 = 33215, runtime < {RUNTIME_LIMIT_S:g}s"):
        t0 = time.perf_counter()
        cs = convergents(PI, 7)
        assert cs[5].q == 33215
        for c, nxt in zip(cs[:6], cs[1:7]):
            assert check_best_approximation(c, nxt.q, PI)
        assert time.perf_counter() - t0 < RUNTIME_LIMIT_S


CLI_CASES = [
    (("approximants", "--alpha", "pi", "--seed", "22/7", "--count", "5"), 0, "136736469144003/43524569930401"),
    (("approximants", "--alpha", "sqrt:2", "--seed", "3/2", "--count", "8"), 0, "119"),
    (("approximants", "--alpha", "pi", "--seed", "7/3"), 3, None),
    (("convergents", "--alpha", "pi", "--count", "11"), 0, "4272943/1360120"),
    (("convergents", "--alpha", "phi", "--count", "6"), 0, "13/8"),
    (("convergents", "--alpha", "sqrt:9"), 2, None),
    (("verify", "--alpha", "pi", "--seed", "22/7", "--count", "8"), 0, "all checks passed"),
    (("verify", "--alpha", "sqrt:2", "--seed", "3/2", "--count", "8"), 0, "x_1 = x_2 = 4"),
    (("verify", "--alpha", "pi", "--seed", "4/1", "--count", "1"), 3, None),
    (("seeds", "--alpha", "pi", "--max-denominator", "105"), 0, "330  105"),
    (("seeds", "--alpha", "pi", "--max-denominator", "6"), 0, None),
    (("seeds", "--alpha", "pi", "--max-denominator", "0"), 2, None),
    (("paper",), 0, "1667438/530762"),
    (("paper", "--format", "json"), 0, "3217/1024"),
    (("paper", "--format", "csv"), 0, "section,n,field,value"),
]


def test_criterion_13_cli_contract():
    with criterion(13, "CLI example invocations, exit codes, lossless json"):
        for args, code, needle in CLI_CASES:
            cp = run_cli(*args)
            assert cp.returncode == code, (args, cp.returncode, cp.stderr)
            if needle is not None:
                assert needle in cp.stdout, (args, needle)
        cp = run_cli("approximants", "--alpha", "pi", "--seed", "22/7", "--count", "10", "--format", "json")
        rows = json.loads(cp.stdout)["rows"]
        states = generate_sequence(22, 7, PI, 10)
        for row, st in zip(rows, states):
            for key in ("P", "Q", "R", "S", "x"):
                v = row[key]
                assert (None if v is None else int(v)) == getattr(st, key)
