"""Exact divisors, Weil symbols and the Weil pairing on tropical curves."""

from .curve import CurvePoint, Direction, TropicalCurve, new_curve, segment, smooth_vertices, subdivide
from .exactnum import Rat, RatMatrix, format_rat, parse_rat, rat_arith, solve_linear
from .p1oracle import (
    INFINITY,
    SplitRationalFunction,
    leading_coeff,
    ord_at,
    parse_split,
    weil_product,
    weil_symbol_p1,
)
from .pairing import effective_resistance, tw_pairing
from .plfun import Divisor, PLFunction, combine, divisor, divisor_arith, evaluate, order, outgoing_slope
from .potential import is_principal, solve_divisor
from .weil import reciprocity_sides, symbol_sum, weil_symbol

__version__ = "0.1.0"
