"""A tiny language for one-variable piecewise-linear functions.

Grammar::

    expr := term (('+' | '-') term)*
    term := ['-'] [rat '*'] atom
    atom := rat | 'x' | 'max' '(' expr ',' expr ')' | '(' expr ')'

``rat`` is an integer or ``p/q``.  For example the max-plus function
``max(x,3)+max(x,2)-max(x,1)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .curve import segment
from .errors import ExpressionSyntaxError
from .exactnum import as_rat, is_integer
from .plfun import PLFunction, _prune


@dataclass(frozen=True)
class Num:
    value: Fraction


@dataclass(frozen=True)
class Var:
    pass


@dataclass(frozen=True)
class Max:
    left: object
    right: object


@dataclass(frozen=True)
class Neg:
    arg: object


@dataclass(frozen=True)
class Add:
    left: object
    right: object


@dataclass(frozen=True)
class Sub:
    left: object
    right: object


@dataclass(frozen=True)
class Scale:
    factor: Fraction
    arg: object


_TOKEN = re.compile(r"\s*(?:(\d+(?:/\d+)?)|([A-Za-z_]\w*)|(\S))")


def _tokenize(text):
    toks = []
    pos = 0
    while True:
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        kind = "num" if m.group(1) else "name" if m.group(2) else "op"
        val = m.group(1) or m.group(2) or m.group(3)
        toks.append((kind, val, m.start(m.lastindex)))
        pos = m.end()
    toks.append(("end", "", len(text)))
    return toks


class _Parser:
    def __init__(self, text):
        self.toks = _tokenize(text)
        self.i = 0

    @property
    def tok(self):
        return self.toks[self.i]

    def fail(self, msg):
        raise ExpressionSyntaxError(msg, self.tok[2])

    def expect(self, val):
        if self.tok[1] != val or self.tok[0] == "end":
            found = "end of input" if self.tok[0] == "end" else repr(self.tok[1])
            self.fail(f"expected {val!r}, found {found}")
        self.i += 1

    def expr(self):
        node = self.term()
        while self.tok[0] == "op" and self.tok[1] in "+-":
            op = self.tok[1]
            self.i += 1
            rhs = self.term()
            node = Add(node, rhs) if op == "+" else Sub(node, rhs)
        return node

    def term(self):
        negate = False
        if self.tok[:2] == ("op", "-"):
            self.i += 1
            negate = True
        if self.tok[0] == "num" and self.toks[self.i + 1][1] == "*":
            c = as_rat(self.tok[1])
            self.i += 2
            node = Scale(c, self.atom())
        else:
            node = self.atom()
        return Neg(node) if negate else node

    def atom(self):
        kind, val, _ = self.tok
        if kind == "num":
            self.i += 1
            return Num(as_rat(val))
        if kind == "name":
            if val == "x":
                self.i += 1
                return Var()
            if val == "max":
                self.i += 1
                self.expect("(")
                a = self.expr()
                self.expect(",")
                b = self.expr()
                self.expect(")")
                return Max(a, b)
            self.fail(f"unknown identifier {val!r}")
        if kind == "op" and val == "(":
            self.i += 1
            node = self.expr()
            self.expect(")")
            return node
        if kind == "end":
            self.fail("unexpected end of input")
        self.fail(f"unexpected {val!r}")


def parse_expression(text: str):
    p = _Parser(text)
    node = p.expr()
    if p.tok[0] != "end":
        p.fail(f"unexpected {p.tok[1]!r}")
    return node


def depends_on_x(node) -> bool:
    if isinstance(node, Var):
        return True
    if isinstance(node, Num):
        return False
    if isinstance(node, (Neg, Scale)):
        return depends_on_x(node.arg)
    return depends_on_x(node.left) or depends_on_x(node.right)


def has_integer_multipliers(node) -> bool:
    """True when no x-dependent subterm is scaled by a non-integer."""
    if isinstance(node, (Num, Var)):
        return True
    if isinstance(node, Scale):
        if depends_on_x(node.arg) and not is_integer(node.factor):
            return False
        return has_integer_multipliers(node.arg)
    if isinstance(node, Neg):
        return has_integer_multipliers(node.arg)
    return has_integer_multipliers(node.left) and has_integer_multipliers(node.right)


def _value_at(knots, x):
    for (x0, y0), (x1, y1) in zip(knots, knots[1:]):
        if x0 <= x <= x1:
            return y0 + (y1 - y0) * (x - x0) / (x1 - x0)
    raise ValueError(x)  # pragma: no cover


def _merge(a, b, fn):
    xs = sorted({x for x, _ in a} | {x for x, _ in b})
    return [(x, fn(_value_at(a, x), _value_at(b, x))) for x in xs]


def _max(a, b):
    xs = sorted({x for x, _ in a} | {x for x, _ in b})
    d = [_value_at(a, x) - _value_at(b, x) for x in xs]
    extra = []
    for i in range(len(xs) - 1):
        if d[i] * d[i + 1] < 0:
            extra.append(xs[i] + (xs[i + 1] - xs[i]) * d[i] / (d[i] - d[i + 1]))
    xs = sorted(set(xs) | set(extra))
    return [(x, max(_value_at(a, x), _value_at(b, x))) for x in xs]


def knots_on(node, length: Fraction) -> list:
    """Exact graph of ``node`` on ``[0, length]`` as knots ``(x, y)``."""
    if isinstance(node, Num):
        return [(Fraction(0), node.value), (length, node.value)]
    if isinstance(node, Var):
        return [(Fraction(0), Fraction(0)), (length, length)]
    if isinstance(node, Neg):
        return [(x, -y) for x, y in knots_on(node.arg, length)]
    if isinstance(node, Scale):
        return [(x, node.factor * y) for x, y in knots_on(node.arg, length)]
    a, b = knots_on(node.left, length), knots_on(node.right, length)
    if isinstance(node, Add):
        return _merge(a, b, lambda u, v: u + v)
    if isinstance(node, Sub):
        return _merge(a, b, lambda u, v: u - v)
    return _max(a, b)


def compile_on_segment(node, length) -> PLFunction:
    """The expression as a function on the segment curve ``a --e1-- b``."""
    length = as_rat(length)
    if isinstance(node, str):
        node = parse_expression(node)
    knots = _prune(knots_on(node, length))
    curve = segment(length)
    return PLFunction(curve, {"a": knots[0][1], "b": knots[-1][1]}, {"e1": knots[1:-1]})
