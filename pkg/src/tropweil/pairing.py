"""The tropical Weil pairing on degree-zero divisors.

``TW(D1, D2)`` pairs the charges of ``D1`` against the electric
potential of ``D2``.  Both defining sums are evaluated and must agree
(this is tropical Weil reciprocity applied to the two potentials).  With
the potential oriented so current flows away from positive charge,
``TW(D, D)`` is the energy of the flow and ``TW((p)-(q), (p)-(q))`` is
the effective resistance between ``p`` and ``q``.
"""

from __future__ import annotations

from fractions import Fraction

from .curve import CurvePoint, TropicalCurve
from .errors import ConsistencyError, InvalidPointError
from .exactnum import format_rat
from .plfun import Divisor, PLFunction, evaluate
from .potential import _check_divisor, electric_potential


def _pair(D: Divisor, u: PLFunction) -> Fraction:
    return sum((c * evaluate(u, p) for p, c in D), Fraction(0))


def tw_witnesses(curve: TropicalCurve, D1: Divisor, D2: Divisor) -> tuple[PLFunction, PLFunction]:
    """Electric potentials of ``D1`` and ``D2`` (both pinned at the first vertex)."""
    _check_divisor(curve, D1)
    _check_divisor(curve, D2)
    return electric_potential(curve, D1), electric_potential(curve, D2)


def tw_pairing(curve: TropicalCurve, D1: Divisor, D2: Divisor) -> Fraction:
    u1, u2 = tw_witnesses(curve, D1, D2)
    first = _pair(D1, u2)
    second = _pair(D2, u1)
    if first != second:
        raise ConsistencyError(
            f"pairing sums disagree: {format_rat(first)} != {format_rat(second)}"
        )
    return first


def effective_resistance(curve: TropicalCurve, p: CurvePoint, q: CurvePoint) -> Fraction:
    p, q = curve.canonicalize(p), curve.canonicalize(q)
    if p == q:
        raise InvalidPointError("effective resistance needs two distinct points")
    D = Divisor(curve, {p: 1, q: -1})
    return tw_pairing(curve, D, D)
