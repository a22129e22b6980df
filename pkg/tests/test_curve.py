from collections import Counter
from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from generators import random_curve, random_point
from tropweil import CurvePoint, Direction, TropicalCurve, segment, smooth_vertices, subdivide
from tropweil.errors import (
    DanglingEndpointError,
    DisconnectedCurveError,
    DuplicateIdError,
    InvalidDirectionError,
    InvalidPointError,
    NonPositiveLengthError,
)


def test_one_point_curve():
    c = TropicalCurve(["a"], [])
    assert c.vertices == ("a",)
    assert c.total_length() == 0


def test_maxplus_segment():
    c = TropicalCurve(["a", "b"], [("e1", "a", "b", 7)])
    assert c.edge("e1").length == 7
    assert c == segment(7)


def test_two_loops_are_valid():
    c = TropicalCurve(["a"], [("e1", "a", "a", 1), ("e2", "a", "a", 1)])
    assert c.valence("a") == 4


@pytest.mark.parametrize(
    "vertices, edges, error",
    [
        (["a", "b"], [("e1", "a", "b", 0)], NonPositiveLengthError),
        (["a", "b"], [("e1", "a", "b", F(-1, 2))], NonPositiveLengthError),
        (["a"], [("e1", "a", "z", 1)], DanglingEndpointError),
        ([], [], DanglingEndpointError),
        (["a", "a"], [], DuplicateIdError),
        (["a", "b"], [("e1", "a", "b", 1), ("e1", "b", "a", 1)], DuplicateIdError),
        (["a", "b"], [], DisconnectedCurveError),
        (["a", "b", "c"], [("e1", "a", "b", 1), ("e2", "c", "c", 1)], DisconnectedCurveError),
    ],
)
def test_invalid_curves(vertices, edges, error):
    with pytest.raises(error):
        TropicalCurve(vertices, edges)


def test_canonicalize_boundaries():
    c = segment(7)
    assert c.point(edge="e1", offset=0) == CurvePoint(vertex="a")
    assert c.point(edge="e1", offset=7) == CurvePoint(vertex="b")
    assert c.point(edge="e1", offset=F(7, 2)) == CurvePoint(edge="e1", offset=F(7, 2))


@pytest.mark.parametrize("offset", [F(-1), F(15, 2)])
def test_canonicalize_out_of_range(offset):
    with pytest.raises(InvalidPointError):
        segment(7).point(edge="e1", offset=offset)


def test_unknown_vertex_and_edge():
    c = segment(1)
    with pytest.raises(InvalidPointError):
        c.point(vertex="zz")
    with pytest.raises(InvalidPointError):
        c.point(edge="zz", offset=0)


@given(st.integers(0, 2**32), st.integers(0, 70))
def test_canonicalize_idempotent(seed, k):
    c = segment(7)
    p = c.point(edge="e1", offset=F(k, 10))
    assert c.canonicalize(c.canonicalize(p)) == c.canonicalize(p)


def test_directions():
    c = TropicalCurve(["a", "b"], [("l", "a", "a", 1), ("e", "a", "b", 2)])
    assert Counter(c.directions(CurvePoint(vertex="a"))) == Counter(
        [Direction("l", 1), Direction("l", -1), Direction("e", 1)]
    )
    assert c.directions(CurvePoint(vertex="b")) == [Direction("e", -1)]
    inner = c.point(edge="e", offset=1)
    assert set(c.directions(inner)) == {Direction("e", 1), Direction("e", -1)}
    with pytest.raises(InvalidDirectionError):
        c.check_direction(CurvePoint(vertex="b"), Direction("e", 1))


def test_subdivide_segment():
    c = segment(7)
    sub = subdivide(c, [c.point(edge="e1", offset=2)])
    assert set(sub.curve.vertices) == {"a", "b", "n1"}
    assert sorted(e.length for e in sub.curve.edges) == [2, 5]
    assert sub.relabel[CurvePoint(edge="e1", offset=F(2))] == "n1"


def test_subdivide_nothing_is_identity():
    c = segment(7)
    sub = subdivide(c, [])
    assert sub.curve == c
    assert sub.relabel == {}
    assert sub.provenance == {"e1": ("e1", 0, 7)}


def test_subdivide_loop_gives_bigon():
    c = TropicalCurve(["a"], [("e1", "a", "a", 1)])
    sub = subdivide(c, [c.point(edge="e1", offset=F(1, 2))])
    new, relabel, prov = sub
    n1 = relabel[CurvePoint(edge="e1", offset=F(1, 2))]
    assert sorted(new.vertices) == ["a", n1]
    assert all({e.first, e.second} == {"a", n1} for e in new.edges)
    assert [e.length for e in new.edges] == [F(1, 2), F(1, 2)]
    assert new.total_length() == 1


def test_subdivide_avoids_name_clash():
    c = TropicalCurve(["n1", "b"], [("e1", "n1", "b", 3), ("e1.1", "b", "b", 1)])
    sub = subdivide(c, [c.point(edge="e1", offset=1)])
    assert len(set(sub.curve.vertices)) == 3
    assert len({e.id for e in sub.curve.edges}) == 3


def test_subdivision_point_maps_roundtrip(rng):
    for _ in range(50):
        c = random_curve(rng)
        pts = [random_point(rng, c) for _ in range(4)]
        sub = subdivide(c, pts)
        for p in pts + [random_point(rng, c) for _ in range(4)]:
            q = sub.map_point(p)
            assert sub.unmap_point(q) == c.canonicalize(p)
        for p in pts:
            assert sub.map_point(p) == CurvePoint(vertex=sub.relabel[c.canonicalize(p)])


def _edge_multiset(curve):
    return Counter((frozenset((e.first, e.second)), e.length) for e in curve.edges)


def test_subdivision_properties(rng):
    for _ in range(100):
        c = random_curve(rng)
        pts = [random_point(rng, c, vertex_bias=0.2) for _ in range(rng.randint(0, 6))]
        sub = subdivide(c, pts)
        assert sub.curve.total_length() == c.total_length()
        for parent in c.edges:
            kids = sub.children(parent.id)
            assert sum(sub.curve.edge(k).length for k in kids) == parent.length
        new_vertices = [v for v in sub.curve.vertices if v not in c.vertices]
        smoothed = smooth_vertices(sub.curve, new_vertices)
        assert _edge_multiset(smoothed) == _edge_multiset(c)
        assert set(smoothed.vertices) == set(c.vertices)


def test_reversed_curve_point_map():
    c = segment(7)
    r = c.reversed()
    assert r.edge("e1").first == "b"
    assert c.reverse_point(c.point(edge="e1", offset=2)) == CurvePoint(edge="e1", offset=F(5))
