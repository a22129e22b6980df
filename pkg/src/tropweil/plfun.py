"""Continuous piecewise-linear functions on a tropical curve, and divisors.

A function is stored by its values: one value per vertex plus, for each
edge, the interior breakpoints ``(offset, value)``.  Slopes are derived.
Collinear breakpoints are dropped on construction, so two functions are
equal iff they have the same representation.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from .curve import CurvePoint, Direction, TropicalCurve
from .errors import CurveMismatchError, FunctionError
from .exactnum import as_rat, format_rat, is_integer


def _prune(knots: list) -> list:
    """Drop interior knots where the slope does not change."""
    out = [knots[0]]
    for k in range(1, len(knots) - 1):
        (x0, y0), (x1, y1), (x2, y2) = out[-1], knots[k], knots[k + 1]
        if (y1 - y0) * (x2 - x1) != (y2 - y1) * (x1 - x0):
            out.append(knots[k])
    out.append(knots[-1])
    return out


@dataclass(frozen=True, eq=False)
class PLFunction:
    curve: TropicalCurve
    vertex_values: Mapping
    edge_profiles: Mapping

    def __init__(self, curve: TropicalCurve, vertex_values: Mapping, edge_profiles: Mapping | None = None):
        edge_profiles = edge_profiles or {}
        vals = {}
        for v in curve.vertices:
            if v not in vertex_values:
                raise FunctionError(f"no value for vertex {v!r}")
            vals[v] = as_rat(vertex_values[v])
        extra = set(vertex_values) - set(curve.vertices)
        if extra:
            raise FunctionError(f"values given for unknown vertices {sorted(extra)}")
        unknown = set(edge_profiles) - {e.id for e in curve.edges}
        if unknown:
            raise FunctionError(f"profiles given for unknown edges {sorted(unknown)}")
        profiles = {}
        for e in curve.edges:
            bps = [(as_rat(t), as_rat(y)) for t, y in edge_profiles.get(e.id, ())]
            prev = Fraction(0)
            for t, _ in bps:
                if not prev < t < e.length:
                    raise FunctionError(
                        f"breakpoint offsets on {e.id!r} must increase strictly inside (0, {format_rat(e.length)})"
                    )
                prev = t
            knots = [(Fraction(0), vals[e.first])] + bps + [(e.length, vals[e.second])]
            profiles[e.id] = tuple(_prune(knots)[1:-1])
        object.__setattr__(self, "curve", curve)
        object.__setattr__(self, "vertex_values", vals)
        object.__setattr__(self, "edge_profiles", profiles)

    @classmethod
    def constant(cls, curve: TropicalCurve, c=0) -> "PLFunction":
        return cls(curve, {v: c for v in curve.vertices})

    def __eq__(self, other):
        if not isinstance(other, PLFunction):
            return NotImplemented
        return (self.curve == other.curve and self.vertex_values == other.vertex_values
                and self.edge_profiles == other.edge_profiles)

    def __hash__(self):
        return hash((tuple(sorted(self.vertex_values.items())),
                     tuple(sorted(self.edge_profiles.items()))))

    def knots(self, eid: str) -> list:
        """``[(0, f(first)), *breakpoints, (length, f(second))]`` on edge ``eid``."""
        e = self.curve.edge(eid)
        return ([(Fraction(0), self.vertex_values[e.first])] + list(self.edge_profiles[eid])
                + [(e.length, self.vertex_values[e.second])])

    def slopes(self, eid: str) -> list:
        ks = self.knots(eid)
        return [(y1 - y0) / (x1 - x0) for (x0, y0), (x1, y1) in zip(ks, ks[1:])]

    def all_slopes(self) -> Iterable[Fraction]:
        for e in self.curve.edges:
            yield from self.slopes(e.id)

    @property
    def is_meromorphic(self) -> bool:
        """True when every slope is an integer."""
        return all(is_integer(s) for s in self.all_slopes())

    def __call__(self, p: CurvePoint) -> Fraction:
        return evaluate(self, p)

    def breakpoints(self) -> list[CurvePoint]:
        return [CurvePoint(edge=eid, offset=t)
                for eid, bps in self.edge_profiles.items() for t, _ in bps]

    def reversed(self) -> "PLFunction":
        """The same function on ``curve.reversed()``."""
        rc = self.curve.reversed()
        profiles = {}
        for e in self.curve.edges:
            profiles[e.id] = [(e.length - t, y) for t, y in reversed(self.edge_profiles[e.id])]
        return PLFunction(rc, self.vertex_values, profiles)

    def shifted(self, c) -> "PLFunction":
        c = as_rat(c)
        return PLFunction(
            self.curve,
            {v: y + c for v, y in self.vertex_values.items()},
            {eid: [(t, y + c) for t, y in bps] for eid, bps in self.edge_profiles.items()},
        )

    def __add__(self, other):
        return combine(self, other, 1, 1)

    def __sub__(self, other):
        return combine(self, other, 1, -1)

    def __neg__(self):
        return combine(self, self, -1, 0)

    def __rmul__(self, c):
        return combine(self, self, c, 0)


def _check_point(f: PLFunction, p: CurvePoint) -> CurvePoint:
    return f.curve.canonicalize(p)


def evaluate(f: PLFunction, p: CurvePoint) -> Fraction:
    p = _check_point(f, p)
    if p.is_vertex:
        return f.vertex_values[p.vertex]
    ks = f.knots(p.edge)
    xs = [x for x, _ in ks]
    i = bisect_left(xs, p.offset)
    if xs[i] == p.offset:
        return ks[i][1]
    (x0, y0), (x1, y1) = ks[i - 1], ks[i]
    return y0 + (y1 - y0) * (p.offset - x0) / (x1 - x0)


def _slope_from(f: PLFunction, eid: str, t: Fraction, sense: int) -> Fraction:
    ks = f.knots(eid)
    xs = [x for x, _ in ks]
    slopes = f.slopes(eid)
    if sense > 0:
        return slopes[bisect_right(xs, t) - 1]
    return -slopes[bisect_left(xs, t) - 1]


def outgoing_slope(f: PLFunction, p: CurvePoint, direction: Direction) -> Fraction:
    """One-sided derivative of ``f`` at ``p`` leaving along ``direction``."""
    p = _check_point(f, p)
    direction = Direction(*direction)
    f.curve.check_direction(p, direction)
    e = f.curve.edge(direction.edge)
    if p.is_vertex:
        t = Fraction(0) if direction.sense > 0 else e.length
    else:
        t = p.offset
    return _slope_from(f, e.id, t, direction.sense)


def order(f: PLFunction, p: CurvePoint) -> Fraction:
    """Sum of outgoing slopes over every direction leaving ``p``."""
    p = _check_point(f, p)
    return sum((outgoing_slope(f, p, d) for d in f.curve.directions(p)), Fraction(0))


@dataclass(frozen=True, eq=False)
class Divisor:
    """Finite formal sum of points with rational coefficients."""

    curve: TropicalCurve
    entries: Mapping

    def __init__(self, curve: TropicalCurve, entries: Mapping | Iterable = ()):
        acc = defaultdict(Fraction)
        items = entries.items() if isinstance(entries, Mapping) else entries
        for p, c in items:
            acc[curve.canonicalize(p)] += as_rat(c)
        clean = {p: c for p, c in sorted(acc.items(), key=lambda pc: pc[0].sort_key()) if c != 0}
        object.__setattr__(self, "curve", curve)
        object.__setattr__(self, "entries", clean)

    @classmethod
    def at_vertices(cls, curve: TropicalCurve, coeffs: Mapping) -> "Divisor":
        return cls(curve, {CurvePoint(vertex=v): c for v, c in coeffs.items()})

    def __eq__(self, other):
        if not isinstance(other, Divisor):
            return NotImplemented
        return self.curve == other.curve and self.entries == other.entries

    def __hash__(self):
        return hash(tuple(self.entries.items()))

    def __getitem__(self, p: CurvePoint) -> Fraction:
        return self.entries.get(self.curve.canonicalize(p), Fraction(0))

    def __iter__(self):
        return iter(self.entries.items())

    def __len__(self):
        return len(self.entries)

    @property
    def support(self) -> list[CurvePoint]:
        return list(self.entries)

    @property
    def degree(self) -> Fraction:
        return sum(self.entries.values(), Fraction(0))

    @property
    def is_integral(self) -> bool:
        return all(is_integer(c) for c in self.entries.values())

    def __add__(self, other):
        return divisor_arith(self, other, 1, 1)

    def __sub__(self, other):
        return divisor_arith(self, other, 1, -1)

    def __neg__(self):
        return divisor_arith(self, self, -1, 0)

    def __rmul__(self, c):
        return divisor_arith(self, self, c, 0)

    def __str__(self):
        if not self.entries:
            return "0"
        return " + ".join(f"{format_rat(c)}*({p})" for p, c in self.entries.items())


def _same_curve(a, b):
    if a.curve != b.curve:
        raise CurveMismatchError("operands live on different curves")


def divisor_arith(D1: Divisor, D2: Divisor, c1, c2) -> Divisor:
    _same_curve(D1, D2)
    c1, c2 = as_rat(c1), as_rat(c2)
    acc = defaultdict(Fraction)
    for p, c in D1:
        acc[p] += c1 * c
    for p, c in D2:
        acc[p] += c2 * c
    return Divisor(D1.curve, acc)


def degree(D: Divisor) -> Fraction:
    return D.degree


def is_integral(D: Divisor) -> bool:
    return D.is_integral


def divisor(f: PLFunction) -> Divisor:
    """The divisor of ``f``: every vertex and breakpoint with nonzero order."""
    candidates = [CurvePoint(vertex=v) for v in f.curve.vertices] + f.breakpoints()
    return Divisor(f.curve, {p: order(f, p) for p in candidates})


def combine(f: PLFunction, g: PLFunction, cf, cg) -> PLFunction:
    """Pointwise ``cf*f + cg*g``."""
    _same_curve(f, g)
    cf, cg = as_rat(cf), as_rat(cg)
    vals = {v: cf * f.vertex_values[v] + cg * g.vertex_values[v] for v in f.curve.vertices}
    profiles = {}
    for e in f.curve.edges:
        offs = sorted({t for t, _ in f.edge_profiles[e.id]} | {t for t, _ in g.edge_profiles[e.id]})
        profiles[e.id] = [
            (t, cf * evaluate(f, CurvePoint(edge=e.id, offset=t)) + cg * evaluate(g, CurvePoint(edge=e.id, offset=t)))
            for t in offs
        ]
    return PLFunction(f.curve, vals, profiles)
