"""Command-line interface.

Usage:
    kochanski approximants --alpha pi --seed 22/7 --count 5
    kochanski genitores --alpha sqrt:2 --seed 3/2 --count 8
    kochanski convergents --alpha pi --count 11 --format csv
    kochanski verify --alpha pi --seed 22/7 --count 8
    kochanski seeds --alpha pi --max-denominator 105
    kochanski precision --count 5 --rounding truncate
    kochanski paper --format json

Exit codes: 0 success, 2 bad arguments, 3 the computation cannot proceed
(seed not above alpha, zero genitor, vanishing denominator, precision cap),
4 a property check failed.

JSON output writes every integer as a decimal string so that nothing is
lost in consumers limited to 53-bit numbers.
"""

from __future__ import annotations

import csv
import functools
import io
import json
import sys
import warnings
from fractions import Fraction
from typing import Any, Callable, Sequence

import click

from . import __version__
from .approximants import ApproximantState, generate_sequence, genitor, oracle_crosscheck, search_seeds, verify_properties
from .constants import PI, RealConstant, parse_constant
from .contfrac import convergents
from .errors import ExpansionTerminates, KochanskiError, NotIrrationalWarning, ParseError
from .exact import DEFAULT_MAX_DIGITS, Rational, precision_cap, reduce
from .replica import (
    binary_sum_value,
    construction_value,
    decimal_expansion,
    kochanski_oeis_sequence,
    missed_convergent_demo,
    precision_ledger,
    reproduce_table,
)

__all__ = ["cli", "main"]

EXIT_UNSOLVABLE = 3
EXIT_VIOLATION = 4


class AlphaType(click.ParamType):
    name = "alpha-spec"

    def convert(self, value: Any, param: Any, ctx: Any) -> RealConstant:
        if isinstance(value, RealConstant):
            return value
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            try:
                alpha = parse_constant(value)
            except ParseError as exc:
                self.fail(str(exc), param, ctx)
        for w in caught:
            if issubclass(w.category, NotIrrationalWarning):
                click.echo(f"note: {value} is rational; approximant theory assumes irrational alpha", err=True)
        return alpha


class SeedType(click.ParamType):
    name = "R/S"

    def convert(self, value: Any, param: Any, ctx: Any) -> tuple[int, int]:
        if isinstance(value, tuple):
            return value
        parts = str(value).split("/")
        try:
            R, S = (int(p) for p in parts)
        except ValueError:
            self.fail(f"seed must look like R/S, got {value!r}", param, ctx)
        if R <= 0 or S <= 0:
            self.fail(f"seed needs positive integers, got {value!r}", param, ctx)
        return R, S


ALPHA = AlphaType()
SEED = SeedType()


def common_options(func: Callable) -> Callable:
    """--format, --max-digits and --reduced, plus error-to-exit-code mapping."""

    @click.option("--format", "fmt", type=click.Choice(["table", "csv", "json"]), default="table", show_default=True)
    @click.option("--max-digits", type=click.IntRange(min=1), default=DEFAULT_MAX_DIGITS, show_default=True,
                  help="Cap on decimal digits used when certifying floors.")
    @click.option("--reduced", is_flag=True, help="Show fractions in lowest terms.")
    @functools.wraps(func)
    def wrapper(*args: Any, max_digits: int, **kwargs: Any) -> None:
        try:
            with precision_cap(max_digits):
                func(*args, **kwargs)
        except KochanskiError as exc:
            click.echo(f"error: {type(exc).__name__}: {exc}", err=True)
            sys.exit(EXIT_UNSOLVABLE)

    return wrapper


# rendering helpers

def _s(v: int | None) -> str | None:
    return None if v is None else str(v)


def _frac(num: int | None, den: int | None, reduced: bool) -> tuple[int | None, int | None]:
    if num is None or den is None:
        return num, den
    if reduced:
        r = reduce(Rational(num, den))
        return r.num, r.den
    return num, den


def _table(headers: Sequence[str], rows: Sequence[Sequence[Any]]) -> str:
    cells = [[("-" if c is None else str(c)) for c in row] for row in rows]
    widths = [len(h) for h in headers]
    for row in cells:
        widths = [max(w, len(c)) for w, c in zip(widths, row)]
    lines = ["  ".join(h.rjust(w) for h, w in zip(headers, widths))]
    lines.extend("  ".join(c.rjust(w) for c, w in zip(row, widths)) for row in cells)
    return "\n".join(lines)


def _csv(headers: Sequence[str], rows: Sequence[Sequence[Any]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(headers)
    for row in rows:
        writer.writerow(["" if c is None else c for c in row])
    return buf.getvalue().rstrip("\n")


def _json(obj: Any) -> str:
    return json.dumps(obj, indent=2)


def _header(command: str, **fields: Any) -> str:
    extra = " ".join(f"{k}={v}" for k, v in fields.items())
    return f"# kochanski {__version__} {command} {extra}".rstrip()


def _sci(x: Fraction, digits: int = 4) -> str:
    """Exact decimal scientific notation, truncated to ``digits`` significant figures."""
    if x == 0:
        return "0"
    sign = "-" if x < 0 else ""
    x = abs(x)
    exp = len(str(x.numerator)) - len(str(x.denominator))
    if x < Fraction(10) ** exp:
        exp -= 1
    mant = int(x * Fraction(10) ** (digits - 1 - exp))
    m = str(mant)
    return f"{sign}{m[0]}.{m[1:]}e{exp}"


def _approximant_rows(states: list[ApproximantState], reduced: bool) -> list[tuple]:
    rows = []
    for st in states:
        P, Q = _frac(st.P, st.Q, reduced)
        R, S = _frac(st.R, st.S, reduced)
        rows.append((st.n, P, Q, R, S, st.x))
    return rows


def _fraction_text(num: int | None, den: int | None) -> str | None:
    return None if num is None else f"{num}/{den}"


@click.group()
@click.version_option(__version__, prog_name="kochanski")
def cli() -> None:
    """Kochanski approximants, continued fractions and the 1685 table."""


@cli.command()
@click.option("--alpha", type=ALPHA, required=True, help="pi | phi | sqrt:<k> | dec:<d> | rat:<p>/<q>")
@click.option("--seed", type=SEED, required=True, help="Upper approximant R0/S0 above alpha.")
@click.option("--count", type=click.IntRange(min=1), default=5, show_default=True)
@common_options
def approximants(alpha: RealConstant, seed: tuple[int, int], count: int, fmt: str, reduced: bool) -> None:
    """Lower/upper approximant pairs P_n/Q_n, R_n/S_n and genitores x_n."""
    states = generate_sequence(seed[0], seed[1], alpha, count)
    rows = _approximant_rows(states, reduced)
    if fmt == "json":
        click.echo(_json({
            "command": "approximants",
            "version": __version__,
            "alpha": str(alpha),
            "seed": [str(seed[0]), str(seed[1])],
            "reduced": reduced,
            "rows": [dict(zip(("n", "P", "Q", "R", "S", "x"), (n, *map(_s, rest)))) for n, *rest in rows],
        }))
    elif fmt == "csv":
        click.echo(_csv(("n", "P", "Q", "R", "S", "x"), rows))
    else:
        click.echo(_header("approximants", alpha=alpha, seed=f"{seed[0]}/{seed[1]}", count=count))
        click.echo(_table(
            ("n", "P/Q", "R/S", "x"),
            [(n, _fraction_text(P, Q), _fraction_text(R, S), x) for n, P, Q, R, S, x in rows],
        ))


@cli.command()
@click.option("--alpha", type=ALPHA, required=True)
@click.option("--seed", type=SEED, required=True)
@click.option("--count", type=click.IntRange(min=1), default=5, show_default=True)
@common_options
def genitores(alpha: RealConstant, seed: tuple[int, int], count: int, fmt: str, reduced: bool) -> None:
    """Only the genitor column x_0..x_{count-1}."""
    states = generate_sequence(seed[0], seed[1], alpha, count)
    xs = [(st.n, st.x) for st in states[:count]]
    if fmt == "json":
        click.echo(_json({
            "command": "genitores",
            "version": __version__,
            "alpha": str(alpha),
            "seed": [str(seed[0]), str(seed[1])],
            "genitores": [str(x) for _, x in xs],
        }))
    elif fmt == "csv":
        click.echo(_csv(("n", "x"), xs))
    else:
        click.echo(_header("genitores", alpha=alpha, seed=f"{seed[0]}/{seed[1]}", count=count))
        click.echo(_table(("n", "x"), xs))


@cli.command("convergents")
@click.option("--alpha", type=ALPHA, required=True)
@click.option("--count", type=click.IntRange(min=1), default=11, show_default=True)
@common_options
def convergents_cmd(alpha: RealConstant, count: int, fmt: str, reduced: bool) -> None:
    """Continued-fraction partial quotients a_n and convergents p_n/q_n."""
    try:
        states = convergents(alpha, count)
    except ExpansionTerminates as exc:
        states = exc.convergents
        click.echo(f"note: ExpansionTerminates: {exc}", err=True)
    rows = [(s.n, s.a, s.p, s.q) for s in states]
    if fmt == "json":
        click.echo(_json({
            "command": "convergents",
            "version": __version__,
            "alpha": str(alpha),
            "terminated": len(states) < count,
            "rows": [{"n": n, "a": str(a), "p": str(p), "q": str(q)} for n, a, p, q in rows],
        }))
    elif fmt == "csv":
        click.echo(_csv(("n", "a", "p", "q"), rows))
    else:
        click.echo(_header("convergents", alpha=alpha, count=count))
        click.echo(_table(("n", "a", "p/q"), [(n, a, f"{p}/{q}") for n, a, p, q in rows]))


_CHECKS = ("bounds_ok", "upper_decreased", "lower_increased", "x_nondecreasing", "gap_ok", "identities_ok")


@cli.command()
@click.option("--alpha", type=ALPHA, required=True)
@click.option("--seed", type=SEED, required=True)
@click.option("--count", type=click.IntRange(min=1), default=8, show_default=True)
@common_options
def verify(alpha: RealConstant, seed: tuple[int, int], count: int, fmt: str, reduced: bool) -> None:
    """Check the approximant properties and cross-check genitores by brute force."""
    states = generate_sequence(seed[0], seed[1], alpha, count)
    report = verify_properties(states, alpha)
    oracle = {c.n: c for c in oracle_crosscheck(states, alpha)}
    failures = report.violations() + [(n, "oracle") for n, c in oracle.items() if not c.agrees]
    repeats = report.repeated_genitores()

    def oracle_text(n: int) -> str:
        c = oracle.get(n)
        if c is None:
            return "n/a"
        if c.brute_force is None:
            return "skipped"
        return "ok" if c.agrees else f"mismatch({c.brute_force})"

    if fmt == "json":
        click.echo(_json({
            "command": "verify",
            "version": __version__,
            "alpha": str(alpha),
            "seed": [str(seed[0]), str(seed[1])],
            "ok": not failures,
            "repeated_genitores": repeats,
            "violations": [{"n": n, "property": p} for n, p in failures],
            "records": [
                {
                    "n": r.n,
                    "x": _s(r.x),
                    "gap": None if r.gap is None else [str(r.gap.numerator), str(r.gap.denominator)],
                    **{k: getattr(r, k) for k in _CHECKS},
                    "oracle": oracle_text(r.n),
                }
                for r in report.records
            ],
        }))
    elif fmt == "csv":
        click.echo(_csv(
            ("n", "x", "gap_num", "gap_den", *_CHECKS, "oracle"),
            [
                (
                    r.n, r.x,
                    None if r.gap is None else r.gap.numerator,
                    None if r.gap is None else r.gap.denominator,
                    *(str(getattr(r, k)).lower() for k in _CHECKS),
                    oracle_text(r.n),
                )
                for r in report.records
            ],
        ))
    else:
        click.echo(_header("verify", alpha=alpha, seed=f"{seed[0]}/{seed[1]}", count=count))
        click.echo(_table(
            ("n", "x", "gap", "bounds", "upper", "lower", "x_mono", "gap_ok", "ident", "oracle"),
            [
                (
                    r.n, r.x, None if r.gap is None else _sci(r.gap),
                    *("ok" if getattr(r, k) else "FAIL" for k in _CHECKS),
                    oracle_text(r.n),
                )
                for r in report.records
            ],
        ))
        for n in repeats:
            click.echo(f"note: x_{n - 1} = x_{n} = {report.records[n].x} (genitores are only non-decreasing)")
        if not failures:
            click.echo("all checks passed")
    if failures:
        for n, prop in failures:
            click.echo(f"error: PropertyViolation at n={n}: {prop}", err=True)
        sys.exit(EXIT_VIOLATION)


@cli.command()
@click.option("--alpha", type=ALPHA, required=True)
@click.option("--max-denominator", "max_den", type=click.IntRange(min=1), required=True)
@common_options
def seeds(alpha: RealConstant, max_den: int, fmt: str, reduced: bool) -> None:
    """Every seed R0/S0 with S0 <= max-denominator whose genitor is positive."""
    found = [(R, S, genitor(R, S, alpha).value) for R, S in search_seeds(alpha, max_den)]
    if fmt == "json":
        click.echo(_json({
            "command": "seeds",
            "version": __version__,
            "alpha": str(alpha),
            "max_denominator": str(max_den),
            "seeds": [{"R0": str(R), "S0": str(S), "genitor": str(g)} for R, S, g in found],
        }))
    elif fmt == "csv":
        click.echo(_csv(("R0", "S0", "genitor"), found))
    else:
        click.echo(_header("seeds", alpha=alpha, max_denominator=max_den))
        click.echo(_table(("R0", "S0", "genitor"), found))


def _ledger_payload(count: int, rounding: str) -> list[tuple[int, int, int]]:
    return [(r.n, r.genitor, r.digits_required) for r in precision_ledger(count, rounding)]


@cli.command()
@click.option("--count", type=click.IntRange(min=1), default=5, show_default=True)
@click.option("--rounding", type=click.Choice(["truncate", "round"]), default="truncate", show_default=True)
@common_options
def precision(count: int, rounding: str, fmt: str, reduced: bool) -> None:
    """Decimals of pi needed to certify each genitor of the 22/7 run."""
    rows = _ledger_payload(count, rounding)
    if fmt == "json":
        click.echo(_json({
            "command": "precision",
            "version": __version__,
            "rounding": rounding,
            "rows": [{"n": n, "x": str(x), "digits_required": d} for n, x, d in rows],
        }))
    elif fmt == "csv":
        click.echo(_csv(("n", "x", "digits_required"), rows))
    else:
        click.echo(_header("precision", rounding=rounding, count=count))
        click.echo(_table(("n", "x", "digits"), rows))


def _paper_bundle(reduced: bool) -> dict[str, Any]:
    table = reproduce_table()
    genitors = kochanski_oeis_sequence(11)
    ledger = precision_ledger(5, "truncate")
    cv = construction_value(10)
    pi10 = PI.enclose(10)
    bsum = binary_sum_value()
    demo = missed_convergent_demo()
    return {
        "table": table,
        "genitores": genitors,
        "ledger": ledger,
        "construction": cv,
        "pi10": pi10,
        "binary_sum": bsum,
        "demo": demo,
        "reduced": reduced,
    }


def _table_fraction(r: Rational | None, reduced: bool) -> str | None:
    if r is None:
        return None
    return str(reduce(r)) if reduced else str(r)


@cli.command()
@common_options
def paper(fmt: str, reduced: bool) -> None:
    """Everything reproducible from the 1685 paper in one run."""
    b = _paper_bundle(reduced)
    cv, bsum, demo = b["construction"], b["binary_sum"], b["demo"]
    dist_lo, dist_hi = b["pi10"].lo - cv.hi, b["pi10"].hi - cv.lo

    if fmt == "json":
        click.echo(_json({
            "command": "paper",
            "version": __version__,
            "table": [
                {
                    "row": r.label,
                    "lower": _table_fraction(r.lower, reduced),
                    "upper": _table_fraction(r.upper, reduced),
                    "lower_reduced": _table_fraction(r.lower_reduced, False),
                    "upper_reduced": _table_fraction(r.upper_reduced, False),
                    "literal": r.literal,
                    "in_paper": r.in_paper,
                }
                for r in b["table"]
            ],
            "genitores": [str(x) for x in b["genitores"]],
            "precision": {
                "rounding": "truncate",
                "rows": [{"n": r.n, "x": str(r.genitor), "digits_required": r.digits_required} for r in b["ledger"]],
            },
            "construction_value": {
                "digits": 10,
                "lo": [str(cv.lo.numerator), str(cv.lo.denominator)],
                "hi": [str(cv.hi.numerator), str(cv.hi.denominator)],
                "distance_to_pi": [_sci(dist_lo), _sci(dist_hi)],
            },
            "binary_sum": {"value": str(bsum), "decimal": decimal_expansion(bsum)},
            "missed_convergent": {
                "mediant": str(demo.mediant),
                "identity_holds": demo.identity_holds,
                "genitores": [str(x) for x in demo.genitores],
                "partial_quotients": [str(a) for a in demo.partial_quotients],
            },
        }))
        return

    if fmt == "csv":
        # long format: one value per record
        records: list[tuple[Any, ...]] = []
        for r in b["table"]:
            records.append(("table", r.label, "lower", _table_fraction(r.lower, reduced)))
            records.append(("table", r.label, "upper", _table_fraction(r.upper, reduced)))
            if r.lower_reduced is not None:
                records.append(("table", r.label, "lower_reduced", str(r.lower_reduced)))
            if r.upper_reduced is not None:
                records.append(("table", r.label, "upper_reduced", str(r.upper_reduced)))
            if r.literal:
                records.append(("table", r.label, "literal", "true"))
        for n, x in enumerate(b["genitores"]):
            records.append(("genitores", n, "x", x))
        for r in b["ledger"]:
            records.append(("precision", r.n, "digits_required", r.digits_required))
        records.append(("construction_value", "", "lo", str(cv.lo)))
        records.append(("construction_value", "", "hi", str(cv.hi)))
        records.append(("binary_sum", "", "value", str(bsum)))
        records.append(("binary_sum", "", "decimal", decimal_expansion(bsum)))
        records.append(("missed_convergent", "", "mediant", str(demo.mediant)))
        for n, (x, a) in enumerate(zip(demo.genitores, demo.partial_quotients)):
            records.append(("missed_convergent", n, "x_vs_a", f"{x}:{a}"))
        click.echo(_csv(("section", "n", "field", "value"), records))
        return

    click.echo(_header("paper"))
    click.echo("\n[approximant table: fractions as printed, unreduced]")
    click.echo(_table(
        ("n", "lower", "upper", "reduced", "note"),
        [
            (
                r.label,
                _table_fraction(r.lower, reduced),
                _table_fraction(r.upper, reduced),
                " ".join(str(x) for x in (r.lower_reduced, r.upper_reduced) if x is not None) or None,
                r.note or (None if r.in_paper else "beyond the printed table"),
            )
            for r in b["table"]
        ],
    ))
    click.echo("\n[genitores, pi from 22/7]")
    click.echo(", ".join(str(x) for x in b["genitores"]))
    click.echo("\n[precision ledger: decimals of pi, truncated]")
    click.echo(_table(("n", "x", "digits"), [(r.n, r.genitor, r.digits_required) for r in b["ledger"]]))
    click.echo("\n[construction value sqrt(120 - 18 sqrt 3)/3, 10 digits]")
    click.echo(f"enclosure: [{decimal_expansion(_trunc(cv.lo, 12))}..., {decimal_expansion(_trunc(cv.hi, 12))}...]")
    click.echo(f"pi - value in [{_sci(dist_lo)}, {_sci(dist_hi)}]")
    click.echo("\n[binary sum 96/32 + 4/32 + 1/64 + 1/1024]")
    click.echo(f"{bsum} = {decimal_expansion(bsum)}")
    click.echo("\n[missed convergent]")
    click.echo(f"(333*1 + 22)/(106*1 + 7) = {demo.mediant}")
    click.echo(_table(
        ("n", "genitor", "a_n"),
        [(n, x, a) for n, (x, a) in enumerate(zip(demo.genitores, demo.partial_quotients))],
    ))


def _trunc(x: Fraction, places: int) -> Fraction:
    scale = 10**places
    return Fraction(int(x * scale), scale)


def main(argv: Sequence[str] | None = None) -> None:
    cli.main(args=argv, prog_name="kochanski")


if __name__ == "__main__":
    main()
