"""Tropical curves: connected metric multigraphs with rational edge lengths.

Each edge carries a coordinate running from its first endpoint (offset 0)
to its second endpoint (offset ``length``).  The orientation is only a
coordinate convention; nothing downstream depends on it.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, NamedTuple

from .errors import (
    DanglingEndpointError,
    DisconnectedCurveError,
    DuplicateIdError,
    InvalidDirectionError,
    InvalidPointError,
    NonPositiveLengthError,
)
from .exactnum import as_rat, format_rat


class Edge(NamedTuple):
    id: str
    first: str
    second: str
    length: Fraction

    @property
    def is_loop(self) -> bool:
        return self.first == self.second


@dataclass(frozen=True, order=True)
class CurvePoint:
    """A vertex (``vertex`` set) or an interior point ``(edge, offset)``.

    Build points through :meth:`TropicalCurve.point` so offsets 0 and
    ``length`` are folded into vertex form; equality is then structural.
    """

    vertex: str | None = None
    edge: str | None = None
    offset: Fraction | None = None

    @property
    def is_vertex(self) -> bool:
        return self.vertex is not None

    def sort_key(self):
        if self.is_vertex:
            return (0, self.vertex, "", Fraction(0))
        return (1, "", self.edge, self.offset)

    def __str__(self):
        if self.is_vertex:
            return self.vertex
        return f"{self.edge}@{format_rat(self.offset)}"


class Direction(NamedTuple):
    """A germ of path leaving a point along ``edge``.

    ``sense`` is +1 when moving toward larger offsets, -1 toward smaller.
    """

    edge: str
    sense: int


@dataclass(frozen=True)
class TropicalCurve:
    vertices: tuple
    edges: tuple
    _edge_index: Mapping = field(default=None, compare=False, repr=False, hash=False)

    def __init__(self, vertices: Iterable[str], edges: Iterable):
        vertices = tuple(vertices)
        edge_list = []
        for e in edges:
            eid, a, b, length = e
            edge_list.append(Edge(str(eid), a, b, as_rat(length)))
        _validate(vertices, edge_list)
        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(self, "edges", tuple(edge_list))
        object.__setattr__(self, "_edge_index", {e.id: e for e in edge_list})

    def __hash__(self):
        return hash((self.vertices, self.edges))

    def edge(self, eid: str) -> Edge:
        try:
            return self._edge_index[eid]
        except KeyError:
            raise InvalidPointError(f"unknown edge {eid!r}") from None

    def has_vertex(self, v: str) -> bool:
        return v in self._vertex_set

    @property
    def _vertex_set(self):
        return frozenset(self.vertices)

    def total_length(self) -> Fraction:
        return sum((e.length for e in self.edges), Fraction(0))

    def point(self, vertex=None, edge=None, offset=None) -> CurvePoint:
        """Canonical point from a vertex id or an (edge, offset) pair."""
        if vertex is not None:
            if edge is not None or offset is not None:
                raise InvalidPointError("give either a vertex or an edge offset")
            if vertex not in self.vertices:
                raise InvalidPointError(f"unknown vertex {vertex!r}")
            return CurvePoint(vertex=vertex)
        if edge is None or offset is None:
            raise InvalidPointError("edge points need both an edge id and an offset")
        e = self.edge(edge)
        t = as_rat(offset)
        if t < 0 or t > e.length:
            raise InvalidPointError(
                f"offset {format_rat(t)} outside [0, {format_rat(e.length)}] on {edge!r}"
            )
        if t == 0:
            return CurvePoint(vertex=e.first)
        if t == e.length:
            return CurvePoint(vertex=e.second)
        return CurvePoint(edge=edge, offset=t)

    def canonicalize(self, p: CurvePoint) -> CurvePoint:
        if p.is_vertex:
            return self.point(vertex=p.vertex)
        return self.point(edge=p.edge, offset=p.offset)

    def directions(self, p: CurvePoint) -> list[Direction]:
        """All directions leaving ``p``; a loop at a vertex contributes two."""
        p = self.canonicalize(p)
        if not p.is_vertex:
            return [Direction(p.edge, +1), Direction(p.edge, -1)]
        out = []
        for e in self.edges:
            if e.first == p.vertex:
                out.append(Direction(e.id, +1))
            if e.second == p.vertex:
                out.append(Direction(e.id, -1))
        return out

    def check_direction(self, p: CurvePoint, d: Direction) -> None:
        if d not in self.directions(p):
            raise InvalidDirectionError(f"direction {tuple(d)} does not leave {p}")

    def valence(self, v: str) -> int:
        return len(self.directions(CurvePoint(vertex=v)))

    def reversed(self) -> "TropicalCurve":
        """Same curve with every edge coordinate flipped."""
        return TropicalCurve(self.vertices, [(e.id, e.second, e.first, e.length) for e in self.edges])

    def reverse_point(self, p: CurvePoint) -> CurvePoint:
        """Image of ``p`` under the coordinate flip of :meth:`reversed`."""
        if p.is_vertex:
            return p
        return CurvePoint(edge=p.edge, offset=self.edge(p.edge).length - p.offset)

    def adjacency(self) -> dict:
        adj = defaultdict(set)
        for e in self.edges:
            adj[e.first].add(e.second)
            adj[e.second].add(e.first)
        return adj


def _validate(vertices: tuple, edges: list) -> None:
    if not vertices:
        raise DanglingEndpointError("a curve needs at least one vertex")
    if len(set(vertices)) != len(vertices):
        raise DuplicateIdError("duplicate vertex id")
    seen = set()
    vset = set(vertices)
    for e in edges:
        if e.id in seen:
            raise DuplicateIdError(f"duplicate edge id {e.id!r}")
        seen.add(e.id)
        if e.length <= 0:
            raise NonPositiveLengthError(f"edge {e.id!r} has length {format_rat(e.length)}")
        for end in (e.first, e.second):
            if end not in vset:
                raise DanglingEndpointError(f"edge {e.id!r} ends at unknown vertex {end!r}")
    adj = defaultdict(list)
    for e in edges:
        adj[e.first].append(e.second)
        adj[e.second].append(e.first)
    reached = {vertices[0]}
    stack = [vertices[0]]
    while stack:
        for w in adj[stack.pop()]:
            if w not in reached:
                reached.add(w)
                stack.append(w)
    if len(reached) != len(vertices):
        missing = sorted(vset - reached)
        raise DisconnectedCurveError(f"vertices {missing} are not reachable from {vertices[0]!r}")


def new_curve(vertices, edges) -> TropicalCurve:
    return TropicalCurve(vertices, edges)


def segment(length, first="a", second="b", edge="e1") -> TropicalCurve:
    """The single-edge curve ``[0, length]``."""
    return TropicalCurve([first, second], [(edge, first, second, length)])


def _fresh(prefix: str, taken: set) -> str:
    i = 1
    while f"{prefix}{i}" in taken:
        i += 1
    name = f"{prefix}{i}"
    taken.add(name)
    return name


@dataclass(frozen=True)
class Subdivision:
    """Result of :func:`subdivide`.

    ``relabel`` sends each requested point to its vertex on the new
    curve; ``provenance`` sends each new edge id to
    ``(parent edge id, start offset, end offset)`` in parent coordinates.
    """

    original: TropicalCurve
    curve: TropicalCurve
    relabel: Mapping
    provenance: Mapping

    def __iter__(self):
        return iter((self.curve, self.relabel, self.provenance))

    def children(self, parent: str) -> list:
        kids = [(start, eid) for eid, (par, start, _) in self.provenance.items() if par == parent]
        return [eid for _, eid in sorted(kids)]

    def map_point(self, p: CurvePoint) -> CurvePoint:
        """Where a point of the original curve lives on the subdivided one."""
        p = self.original.canonicalize(p)
        if p.is_vertex:
            return p
        for eid in self.children(p.edge):
            _, start, end = self.provenance[eid]
            if start <= p.offset <= end:
                return self.curve.point(edge=eid, offset=p.offset - start)
        raise InvalidPointError(f"{p} not covered by the subdivision")  # pragma: no cover

    def unmap_point(self, p: CurvePoint) -> CurvePoint:
        """Inverse of :meth:`map_point`."""
        p = self.curve.canonicalize(p)
        if p.is_vertex:
            if self.original.has_vertex(p.vertex):
                return p
            for pt, v in self.relabel.items():
                if v == p.vertex:
                    return pt
            raise InvalidPointError(f"vertex {p.vertex!r} has no preimage")  # pragma: no cover
        parent, start, _ = self.provenance[p.edge]
        return self.original.point(edge=parent, offset=start + p.offset)


def subdivide(curve: TropicalCurve, points: Iterable[CurvePoint]) -> Subdivision:
    """Insert a vertex at every interior point in ``points``."""
    cuts = defaultdict(set)
    for p in points:
        p = curve.canonicalize(p)
        if not p.is_vertex:
            cuts[p.edge].add(p.offset)
    taken_v = set(curve.vertices)
    taken_e = {e.id for e in curve.edges}
    vertices = list(curve.vertices)
    edges = []
    relabel = {}
    provenance = {}
    for e in curve.edges:
        offs = sorted(cuts.get(e.id, ()))
        if not offs:
            edges.append(tuple(e))
            provenance[e.id] = (e.id, Fraction(0), e.length)
            continue
        names = []
        for t in offs:
            v = _fresh("n", taken_v)
            vertices.append(v)
            names.append(v)
            relabel[CurvePoint(edge=e.id, offset=t)] = v
        stops = [Fraction(0)] + offs + [e.length]
        ends = [e.first] + names + [e.second]
        for k in range(len(stops) - 1):
            cid = _fresh(f"{e.id}.", taken_e)
            edges.append((cid, ends[k], ends[k + 1], stops[k + 1] - stops[k]))
            provenance[cid] = (e.id, stops[k], stops[k + 1])
    for p in points:
        p = curve.canonicalize(p)
        if p.is_vertex:
            relabel[p] = p.vertex
    return Subdivision(curve, TropicalCurve(vertices, edges), relabel, provenance)


def smooth_vertices(curve: TropicalCurve, removable: Iterable[str]) -> TropicalCurve:
    """Erase 2-valent vertices from ``removable`` by merging their two edges.

    A vertex whose two directions belong to one loop edge is kept.
    """
    vertices = list(curve.vertices)
    edges = {e.id: e for e in curve.edges}
    order = [e.id for e in curve.edges]
    for v in removable:
        inc = [(eid, e) for eid, e in edges.items() if v in (e.first, e.second)]
        if len(inc) != 2 or any(e.is_loop for _, e in inc):
            continue
        (i1, e1), (i2, e2) = inc
        a = e1.first if e1.second == v else e1.second
        b = e2.second if e2.first == v else e2.first
        merged = Edge(i1, a, b, e1.length + e2.length)
        edges[i1] = merged
        del edges[i2]
        order.remove(i2)
        vertices.remove(v)
    return TropicalCurve(vertices, [edges[i] for i in order])
