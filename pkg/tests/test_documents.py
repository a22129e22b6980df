import json

import pytest

from generators import random_curve, random_divisor, random_function
from tropweil import CurvePoint, segment
from tropweil.documents import (
    curve_from_doc,
    curve_to_doc,
    divisor_from_doc,
    divisor_to_doc,
    function_from_doc,
    function_to_doc,
    point_from_doc,
    point_to_doc,
)
from tropweil.errors import DocumentError, InvalidPointError


def through_json(doc):
    return json.loads(json.dumps(doc))


def test_spec_curve_document():
    c = curve_from_doc({"vertices": ["a", "b"], "edges": [{"id": "e1", "ends": ["a", "b"], "length": "7"}]})
    assert c == segment(7)


def test_point_literals():
    c = segment(7)
    assert point_from_doc({"at": "a"}, c) == CurvePoint(vertex="a")
    assert point_from_doc({"edge": "e1", "offset": "7/2"}, c) == c.point(edge="e1", offset="7/2")
    assert point_from_doc("e1@7", c) == CurvePoint(vertex="b")
    assert point_from_doc({"edge": "e1", "offset": "0"}, c) == CurvePoint(vertex="a")
    with pytest.raises(InvalidPointError):
        point_from_doc({"edge": "e1", "offset": "8"}, c)
    with pytest.raises(DocumentError):
        point_from_doc({"where": "a"}, c)


def test_spec_function_document(maxplus_f):
    doc = {"vertex_values": {"a": "4", "b": "7"}, "edges": {"e1": {"breakpoints": [["1", "4"], ["2", "3"], ["3", "3"]]}}}
    assert function_from_doc(doc, segment(7)) == maxplus_f


@pytest.mark.parametrize(
    "doc",
    [
        {"vertices": "a", "edges": []},
        {"vertices": ["a"]},
        {"vertices": ["a", "b"], "edges": [{"id": "e1", "ends": ["a", "b"], "length": 7.5}]},
        {"vertices": ["a", "b"], "edges": [{"id": "e1", "ends": ["a", "b"], "length": "1/0"}]},
        {"vertices": ["a", "b"], "edges": [{"ends": ["a", "b"], "length": "1"}]},
    ],
)
def test_bad_curve_documents(doc):
    with pytest.raises(DocumentError):
        curve_from_doc(doc)


def test_bad_function_documents():
    c = segment(7)
    with pytest.raises(DocumentError):
        function_from_doc({"vertex_values": {"a": "0", "b": "1"}, "edges": {"e1": {"breakpoints": [["1"]]}}}, c)
    with pytest.raises(DocumentError):
        function_from_doc({"vertex_values": {"a": "0", "b": "1"}})
    with pytest.raises(DocumentError):
        divisor_from_doc({"points": [{"coeff": "1"}]}, c)


def test_roundtrip_random(rng):
    for _ in range(100):
        c = random_curve(rng)
        f = random_function(rng, c, integer=rng.random() < 0.5)
        D = random_divisor(rng, c)
        c2 = curve_from_doc(through_json(curve_to_doc(c)))
        assert c2 == c
        assert function_from_doc(through_json(function_to_doc(f)), c2) == f
        assert function_from_doc(through_json(function_to_doc(f, with_curve=True))) == f
        assert divisor_from_doc(through_json(divisor_to_doc(D)), c2) == D
        assert divisor_from_doc(through_json(divisor_to_doc(D, with_curve=True))) == D
        for p in D.support:
            assert point_from_doc(through_json(point_to_doc(p)), c) == p
