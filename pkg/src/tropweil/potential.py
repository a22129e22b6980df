"""Functions with a prescribed divisor, built as electrical potentials.

The curve is read as a resistor network (resistance = edge length) with
charge ``D[p]`` injected at each support point.  Solving Kirchhoff's
current law on the weighted Laplacian gives vertex values of a function
``f`` that is affine on every edge of the subdivided curve and satisfies
``divisor(f) == D``.

Sign convention: ``ord_p f`` is the sum of *outgoing* slopes, so a
positive charge sits at a local minimum of ``f``.  The physical electric
potential (current flowing downhill, away from positive charge) is
``-f``; see :func:`electric_potential`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .curve import TropicalCurve, subdivide
from .errors import CurveMismatchError, DegreeError, InvalidPointError, NotIntegralError
from .exactnum import RatMatrix, format_rat, solve_linear
from .plfun import Divisor, PLFunction, divisor


@dataclass(frozen=True)
class CircuitSystem:
    """Weighted Laplacian system for a curve whose charges sit on vertices.

    ``laplacian`` is the unpinned matrix; :meth:`pinned_system` replaces the
    basepoint row by a unit row so the system becomes nonsingular.
    """

    nodes: tuple
    laplacian: RatMatrix
    charges: tuple
    pinned: str

    def pinned_system(self) -> tuple[RatMatrix, list]:
        k = self.nodes.index(self.pinned)
        unit = [int(i == k) for i in range(len(self.nodes))]
        rhs = [-q for q in self.charges]
        rhs[k] = Fraction(0)
        return self.laplacian.with_row(k, unit), rhs

    def solve(self) -> dict:
        A, rhs = self.pinned_system()
        return dict(zip(self.nodes, solve_linear(A, rhs)))


def assemble_circuit(curve: TropicalCurve, charges: dict, pinned: str) -> CircuitSystem:
    """Build the conductance matrix (1/length per edge, loops ignored)."""
    nodes = tuple(curve.vertices)
    index = {v: i for i, v in enumerate(nodes)}
    n = len(nodes)
    L = [[Fraction(0)] * n for _ in range(n)]
    for e in curve.edges:
        if e.is_loop:
            continue
        i, j = index[e.first], index[e.second]
        c = 1 / e.length
        L[i][i] += c
        L[j][j] += c
        L[i][j] -= c
        L[j][i] -= c
    q = tuple(Fraction(charges.get(v, 0)) for v in nodes)
    return CircuitSystem(nodes, RatMatrix.from_rows(L), q, pinned)


def _check_divisor(curve: TropicalCurve, D: Divisor) -> None:
    if D.curve != curve:
        raise CurveMismatchError("divisor lives on a different curve")
    if D.degree != 0:
        raise DegreeError(f"divisor has degree {format_rat(D.degree)}; total charge must be zero")


def solve_divisor(curve: TropicalCurve, D: Divisor, basepoint: str | None = None) -> PLFunction:
    """The function ``f`` with ``divisor(f) == D`` and ``f(basepoint) == 0``.

    Unique up to an additive constant; the basepoint defaults to the
    first vertex.  Breakpoints of the result lie only at interior
    support points of ``D``.
    """
    _check_divisor(curve, D)
    if basepoint is None:
        basepoint = curve.vertices[0]
    elif not curve.has_vertex(basepoint):
        raise InvalidPointError(f"unknown basepoint vertex {basepoint!r}")
    sub = subdivide(curve, D.support)
    charges = {sub.relabel[p]: c for p, c in D}
    potentials = assemble_circuit(sub.curve, charges, basepoint).solve()
    return push_forward(sub, potentials)


def push_forward(sub, potentials: dict) -> PLFunction:
    """Assemble the original-curve function from subdivided vertex values."""
    curve = sub.original
    values = {v: potentials[v] for v in curve.vertices}
    profiles = {}
    for e in curve.edges:
        bps = []
        for cid in sub.children(e.id)[:-1]:
            _, _, end = sub.provenance[cid]
            node = sub.curve.edge(cid).second
            bps.append((end, potentials[node]))
        profiles[e.id] = bps
    return PLFunction(curve, values, profiles)


def electric_potential(curve: TropicalCurve, D: Divisor, basepoint: str | None = None) -> PLFunction:
    """Potential of the charge distribution ``D``: equal to ``-solve_divisor(D)``."""
    return -solve_divisor(curve, D, basepoint)


def is_principal(curve: TropicalCurve, D: Divisor) -> bool:
    """Whether ``D`` is the divisor of an integer-slope function."""
    _check_divisor(curve, D)
    if not D.is_integral:
        raise NotIntegralError("principality is only defined for integral divisors")
    return solve_divisor(curve, D).is_meromorphic


def edge_currents(f: PLFunction) -> dict:
    """Slope sequence per edge, read in the edge's own coordinate."""
    return {e.id: f.slopes(e.id) for e in f.curve.edges}


def harmonic_defect(f: PLFunction, D: Divisor) -> dict:
    """Points where ``ord f`` differs from ``D``, with the difference.

    Empty for any output of :func:`solve_divisor`.
    """
    diff = divisor(f) - D
    return dict(diff.entries)

