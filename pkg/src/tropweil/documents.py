"""JSON documents for curves, points, functions and divisors.

Every number is written as a rational string (``"7"``, ``"7/2"``), so a
document round-trips without any floating-point step.
"""

from __future__ import annotations

import json
import re

from .curve import CurvePoint, TropicalCurve
from .errors import DocumentError, RationalParseError
from .exactnum import format_rat, parse_rat
from .plfun import Divisor, PLFunction


def _rat(value, what):
    if isinstance(value, int) and not isinstance(value, bool):
        return parse_rat(str(value))
    if not isinstance(value, str):
        raise DocumentError(f"{what}: expected a rational string, got {value!r}")
    try:
        return parse_rat(value)
    except RationalParseError as exc:
        raise DocumentError(f"{what}: {exc}") from None


def _need(doc, key, kind, what):
    if not isinstance(doc, dict) or key not in doc:
        raise DocumentError(f"{what}: missing {key!r}")
    if not isinstance(doc[key], kind):
        raise DocumentError(f"{what}: {key!r} has the wrong type")
    return doc[key]


def curve_to_doc(curve: TropicalCurve) -> dict:
    return {
        "vertices": list(curve.vertices),
        "edges": [
            {"id": e.id, "ends": [e.first, e.second], "length": format_rat(e.length)}
            for e in curve.edges
        ],
    }


def curve_from_doc(doc) -> TropicalCurve:
    vertices = _need(doc, "vertices", list, "curve")
    edges = []
    for k, e in enumerate(_need(doc, "edges", list, "curve")):
        what = f"curve edge #{k}"
        ends = _need(e, "ends", list, what)
        if len(ends) != 2:
            raise DocumentError(f"{what}: 'ends' must list two vertices")
        edges.append((_need(e, "id", str, what), ends[0], ends[1], _rat(e.get("length"), what)))
    return TropicalCurve(vertices, edges)


def point_to_doc(p: CurvePoint) -> dict:
    if p.is_vertex:
        return {"at": p.vertex}
    return {"edge": p.edge, "offset": format_rat(p.offset)}


_SHORT_EDGE = re.compile(r"^([^@]+)@(.+)$")


def point_from_doc(doc, curve: TropicalCurve) -> CurvePoint:
    """Accept ``{"at": v}``, ``{"edge": e, "offset": t}``, ``"v"`` or ``"e@t"``."""
    if isinstance(doc, str):
        m = _SHORT_EDGE.match(doc)
        if m:
            return curve.point(edge=m.group(1), offset=_rat(m.group(2), "point"))
        return curve.point(vertex=doc)
    if isinstance(doc, dict) and "at" in doc:
        return point_from_doc(doc["at"], curve)
    if isinstance(doc, dict) and "edge" in doc:
        return curve.point(edge=doc["edge"], offset=_rat(doc.get("offset"), "point"))
    raise DocumentError(f"not a point literal: {doc!r}")


def function_to_doc(f: PLFunction, with_curve=False) -> dict:
    doc = {
        "vertex_values": {v: format_rat(y) for v, y in f.vertex_values.items()},
        "edges": {
            eid: {"breakpoints": [[format_rat(t), format_rat(y)] for t, y in bps]}
            for eid, bps in f.edge_profiles.items()
        },
    }
    if with_curve:
        doc["curve"] = curve_to_doc(f.curve)
    return doc


def function_from_doc(doc, curve: TropicalCurve | None = None) -> PLFunction:
    if curve is None:
        if not isinstance(doc, dict) or "curve" not in doc:
            raise DocumentError("function document has no curve and none was supplied")
        curve = curve_from_doc(doc["curve"])
    raw_vals = _need(doc, "vertex_values", dict, "function")
    values = {v: _rat(y, f"value of {v!r}") for v, y in raw_vals.items()}
    profiles = {}
    for eid, body in doc.get("edges", {}).items():
        bps = body.get("breakpoints", []) if isinstance(body, dict) else None
        if not isinstance(bps, list):
            raise DocumentError(f"edge {eid!r}: 'breakpoints' must be a list")
        pairs = []
        for bp in bps:
            if not isinstance(bp, list) or len(bp) != 2:
                raise DocumentError(f"edge {eid!r}: breakpoints are [offset, value] pairs")
            pairs.append((_rat(bp[0], eid), _rat(bp[1], eid)))
        profiles[eid] = pairs
    return PLFunction(curve, values, profiles)


def divisor_to_doc(D: Divisor, with_curve=False) -> dict:
    doc = {"points": [{"at": point_to_doc(p), "coeff": format_rat(c)} for p, c in D]}
    if with_curve:
        doc["curve"] = curve_to_doc(D.curve)
    return doc


def divisor_from_doc(doc, curve: TropicalCurve | None = None) -> Divisor:
    if curve is None:
        if not isinstance(doc, dict) or "curve" not in doc:
            raise DocumentError("divisor document has no curve and none was supplied")
        curve = curve_from_doc(doc["curve"])
    entries = []
    for k, item in enumerate(_need(doc, "points", list, "divisor")):
        if not isinstance(item, dict) or "at" not in item:
            raise DocumentError(f"divisor entry #{k}: missing 'at'")
        entries.append((point_from_doc(item["at"], curve), _rat(item.get("coeff"), f"divisor entry #{k}")))
    return Divisor(curve, entries)


def dumps(doc) -> str:
    return json.dumps(doc, indent=2)


def load_json(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"{path}: invalid JSON ({exc})") from None
    except OSError as exc:
        raise DocumentError(f"{path}: {exc.strerror}") from None


def _dot_id(name: str) -> str:
    return '"' + name.replace('\\', '\\\\').replace('"', '\\"') + '"'


def curve_to_dot(curve: TropicalCurve, f: PLFunction | None = None) -> str:
    """Graphviz description; with ``f``, vertices show values and edges slopes."""
    lines = ["graph tropical_curve {"]
    for v in curve.vertices:
        label = v if f is None else f"{v} = {format_rat(f.vertex_values[v])}"
        lines.append(f"  {_dot_id(v)} [label={_dot_id(label)}];")
    for e in curve.edges:
        label = f"{e.id} ({format_rat(e.length)})"
        if f is not None:
            label += " slopes " + ",".join(format_rat(s) for s in f.slopes(e.id))
        lines.append(f"  {_dot_id(e.first)} -- {_dot_id(e.second)} [label={_dot_id(label)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
