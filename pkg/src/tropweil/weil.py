"""Tropical Weil symbols and the reciprocity sums."""

from __future__ import annotations

from fractions import Fraction

from .curve import CurvePoint
from .errors import CurveMismatchError
from .plfun import PLFunction, divisor, evaluate, order


def _same_curve(f: PLFunction, g: PLFunction) -> None:
    if f.curve != g.curve:
        raise CurveMismatchError("f and g live on different curves")


def weil_symbol(f: PLFunction, g: PLFunction, p: CurvePoint) -> Fraction:
    """``ord_p(g) * f(p) - ord_p(f) * g(p)``."""
    _same_curve(f, g)
    return order(g, p) * evaluate(f, p) - order(f, p) * evaluate(g, p)


def reciprocity_sides(f: PLFunction, g: PLFunction) -> tuple[Fraction, Fraction]:
    """Return ``(sum f(x) ord_x g, sum g(x) ord_x f)``.

    Both sums run over the finite support of the relevant divisor; the
    reciprocity law says they are equal for any two continuous
    piecewise-linear functions, integer slopes or not.
    """
    _same_curve(f, g)
    lhs = sum((evaluate(f, p) * c for p, c in divisor(g)), Fraction(0))
    rhs = sum((evaluate(g, p) * c for p, c in divisor(f)), Fraction(0))
    return lhs, rhs


def symbol_sum(f: PLFunction, g: PLFunction) -> Fraction:
    """Sum of Weil symbols over the union of both supports (always 0)."""
    _same_curve(f, g)
    support = set(divisor(f).support) | set(divisor(g).support)
    return sum((weil_symbol(f, g, p) for p in support), Fraction(0))


def edge_terms(f: PLFunction, g: PLFunction, eid: str) -> tuple[Fraction, Fraction]:
    """Per-edge reciprocity sums, written with segment slopes.

    On the common refinement ``x_1 < ... < x_n`` of both breakpoint sets,
    with slopes ``k_i`` of f and ``l_i`` of g on ``[x_i, x_{i+1}]``, returns
    ``(sum l_i (f(x_i) - f(x_{i+1})), sum k_i (g(x_i) - g(x_{i+1})))``.
    Each side equals the restriction of the matching reciprocity sum to
    the edge, so summing over edges reproduces :func:`reciprocity_sides`.
    """
    _same_curve(f, g)
    xs = sorted({t for t, _ in f.knots(eid)} | {t for t, _ in g.knots(eid)})
    fv = [evaluate(f, _at(f, eid, t)) for t in xs]
    gv = [evaluate(g, _at(g, eid, t)) for t in xs]
    lhs = rhs = Fraction(0)
    for i in range(len(xs) - 1):
        dx = xs[i + 1] - xs[i]
        k = (fv[i + 1] - fv[i]) / dx
        ell = (gv[i + 1] - gv[i]) / dx
        lhs += ell * (fv[i] - fv[i + 1])
        rhs += k * (gv[i] - gv[i + 1])
    return lhs, rhs


def _at(f: PLFunction, eid: str, t: Fraction) -> CurvePoint:
    return f.curve.point(edge=eid, offset=t)
