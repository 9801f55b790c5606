"""Kochanski's 1685 rational approximations of pi, in exact arithmetic.

Genitores and lower/upper approximants for any supported constant,
continued-fraction convergents, and a reproduction of the numbers in
Kochanski's table.
"""

from .approximants import (
    ApproximantState,
    GenitorResult,
    PropertyReport,
    brute_force_genitor,
    altdef_bracket,
    generate_sequence,
    genitor,
    oracle_crosscheck,
    search_seeds,
    step,
    verify_properties,
)
from .constants import PHI, PI, SQRT2, RealConstant, eval_interval, floor_of, parse_constant
from .contfrac import ConvergentState, check_best_approximation, convergents, odd_convergent_seed
from .replica import (
    binary_sum_value,
    construction_value,
    decimal_expansion,
    kochanski_oeis_sequence,
    missed_convergent_demo,
    precision_ledger,
    reproduce_table,
)
from .contfrac import partial_quotients
from .errors import *  # noqa: F401,F403
from .exact import Interval, MoebiusForm, Ordering, Rational, compare_to_constant, moebius_floor, precision_cap, reduce

__version__ = "0.1.0"
