"""Command-line interface: ``tropweil <command> ...``.

Exit codes: 0 success, 1 usage or parse error, 2 precondition violation,
3 internal-consistency failure (two routes a theorem says must agree).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import documents as docs
from .curve import segment
from .errors import (
    ConsistencyError,
    CurveMismatchError,
    DegreeError,
    NotIntegralError,
    TropWeilError,
)
from .exactnum import format_rat, parse_rat
from .expr import compile_on_segment, parse_expression
from .p1oracle import parse_split, weil_product, weil_symbols
from .pairing import tw_pairing, tw_witnesses
from .plfun import divisor, order
from .potential import edge_currents, is_principal, solve_divisor
from .weil import reciprocity_sides, weil_symbol

EXIT_OK, EXIT_USAGE, EXIT_PRECONDITION, EXIT_INCONSISTENT = 0, 1, 2, 3


class UsageError(TropWeilError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="tropweil", description="Exact tropical Weil reciprocity toolkit.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def cmd(name, help, curve=False, functions=False, divisors=False, point=False):
        p = sub.add_parser(name, help=help)
        if curve or functions or divisors:
            p.add_argument("--curve", metavar="FILE")
        if functions:
            p.add_argument("--function", metavar="FILE", action="append", default=[])
            p.add_argument("--expr", metavar="TEXT", action="append", default=[])
            p.add_argument("--length", metavar="RAT")
        if divisors:
            p.add_argument("--divisor", metavar="FILE", action="append", default=[])
        if point:
            p.add_argument("--point", metavar="LITERAL", required=True)
        p.add_argument("--output", metavar="FILE")
        return p

    cmd("order", "order of a function at a point", functions=True, point=True)
    cmd("divisor", "divisor of a function", functions=True)
    cmd("symbol", "tropical Weil symbol [f,g]_p", functions=True, point=True)
    cmd("reciprocity", "both reciprocity sums of f and g", functions=True)
    solve = cmd("solve", "function with a given degree-zero divisor", curve=True, divisors=True)
    solve.add_argument("--basepoint", metavar="VERTEX")
    pair = cmd("pair", "tropical Weil pairing of two divisors", curve=True, divisors=True)
    pair.add_argument("--report", action="store_true", help="also print both witness potentials")
    classical = sub.add_parser("classical", help="classical Weil symbols on the projective line")
    classical.add_argument("f")
    classical.add_argument("g")
    classical.add_argument("--output", metavar="FILE")
    cmd("export-dot", "Graphviz description of a curve (and function)", functions=True)
    return parser


def _curve(args):
    if getattr(args, "curve", None):
        return docs.curve_from_doc(docs.load_json(args.curve))
    if getattr(args, "expr", None):
        return segment(_length(args))
    raise UsageError("--curve is required")


def _length(args):
    if args.length is None:
        raise UsageError("--expr needs --length")
    return parse_rat(args.length)


def _functions(args, count=None):
    fns = []
    curve = None
    if args.function:
        curve = _curve(args) if args.curve else None
        for path in args.function:
            fns.append(docs.function_from_doc(docs.load_json(path), curve))
    for text in args.expr:
        f = compile_on_segment(parse_expression(text), _length(args))
        if fns and fns[0].curve != f.curve:
            raise CurveMismatchError("--expr functions live on the segment, not on --curve")
        fns.append(f)
    if count is not None and len(fns) != count:
        raise UsageError(f"expected {count} function(s), got {len(fns)}")
    return fns


def _point(args, curve):
    text = args.point.strip()
    if text.startswith("{"):
        try:
            lit = json.loads(text)
        except json.JSONDecodeError as exc:
            raise UsageError(f"bad point literal: {exc}") from None
        return docs.point_from_doc(lit, curve)
    if len(curve.edges) == 1 and text[:1].isdigit():
        # bare coordinate on a single-edge curve
        return curve.point(edge=curve.edges[0].id, offset=parse_rat(text))
    return docs.point_from_doc(text, curve)


def _divisors(args, curve, count):
    if len(args.divisor) != count:
        raise UsageError(f"expected {count} --divisor file(s), got {len(args.divisor)}")
    return [docs.divisor_from_doc(docs.load_json(p), curve) for p in args.divisor]


def _rats(xs):
    return [format_rat(x) for x in xs]


def _run(args) -> tuple[int, str]:
    c = args.command
    if c == "order":
        (f,) = _functions(args, 1)
        return EXIT_OK, format_rat(order(f, _point(args, f.curve)))
    if c == "divisor":
        (f,) = _functions(args, 1)
        return EXIT_OK, docs.dumps(docs.divisor_to_doc(divisor(f)))
    if c == "symbol":
        f, g = _functions(args, 2)
        return EXIT_OK, format_rat(weil_symbol(f, g, _point(args, f.curve)))
    if c == "reciprocity":
        f, g = _functions(args, 2)
        lhs, rhs = reciprocity_sides(f, g)
        verdict = "equal" if lhs == rhs else "NOT equal"
        text = f"lhs = {format_rat(lhs)}, rhs = {format_rat(rhs)}, verdict: {verdict}"
        return (EXIT_OK if lhs == rhs else EXIT_INCONSISTENT), text
    if c == "solve":
        curve = _curve(args)
        (D,) = _divisors(args, curve, 1)
        f = solve_divisor(curve, D, args.basepoint)
        if divisor(f) != D:
            raise ConsistencyError("solution does not reproduce the divisor")
        report = {
            "slopes": {eid: _rats(s) for eid, s in edge_currents(f).items()},
            "meromorphic": f.is_meromorphic,
            "principal": is_principal(curve, D) if D.is_integral else None,
        }
        return EXIT_OK, docs.dumps({"function": docs.function_to_doc(f), "report": report})
    if c == "pair":
        curve = _curve(args)
        D1, D2 = _divisors(args, curve, 2)
        value = format_rat(tw_pairing(curve, D1, D2))
        if not args.report:
            return EXIT_OK, value
        u1, u2 = tw_witnesses(curve, D1, D2)
        return EXIT_OK, docs.dumps({
            "pairing": value,
            "potentials": [docs.function_to_doc(u1), docs.function_to_doc(u2)],
        })
    if c == "classical":
        f, g = parse_split(args.f), parse_split(args.g)
        lines = [f"[f,g]_{p} = {format_rat(s)}" for p, s in weil_symbols(f, g)]
        lines.append(f"product = {format_rat(weil_product(f, g))}")
        return EXIT_OK, "\n".join(lines)
    if c == "export-dot":
        if args.function or args.expr:
            (f,) = _functions(args, 1)
            return EXIT_OK, docs.curve_to_dot(f.curve, f).rstrip("\n")
        return EXIT_OK, docs.curve_to_dot(_curve(args)).rstrip("\n")
    raise UsageError(f"unknown command {c!r}")  # pragma: no cover


def run_command(argv) -> tuple[int, str]:
    """Run one command; return ``(exit status, report text)``."""
    try:
        args = _build_parser().parse_args(argv)
        status, text = _run(args)
    except ConsistencyError as exc:
        return EXIT_INCONSISTENT, f"error: internal consistency failure: {exc}"
    except (DegreeError, NotIntegralError, CurveMismatchError) as exc:
        return EXIT_PRECONDITION, f"error: {type(exc).__name__}: {exc}"
    except (TropWeilError, ValueError) as exc:
        return EXIT_USAGE, f"error: {type(exc).__name__}: {exc}"
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text + "\n")
    return status, text


def main(argv=None) -> int:
    status, text = run_command(sys.argv[1:] if argv is None else argv)
    stream = sys.stdout if status == EXIT_OK else sys.stderr
    print(text, file=stream)
    return status


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
