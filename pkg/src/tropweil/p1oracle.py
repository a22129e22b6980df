"""Classical Weil symbols for split rational functions on the projective line.

A split rational function is ``c * prod(z - r_i) / prod(z - s_j)`` with
every root rational, so orders, leading local coefficients and symbols
are all exact.  The product of the symbols over all points, infinity
included, is 1.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

from .errors import ExpressionSyntaxError
from .exactnum import as_rat, format_rat


class _Infinity:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INFINITY"

    def __str__(self):
        return "oo"

    def __reduce__(self):
        return (_Infinity, ())


INFINITY = _Infinity()

P1Point = Union[Fraction, _Infinity]


def p1_point(value) -> P1Point:
    if value is INFINITY or value in ("oo", "inf", "infinity"):
        return INFINITY
    return as_rat(value)


@dataclass(frozen=True)
class SplitRationalFunction:
    """``scalar * prod(z - r for r in zeros) / prod(z - s for s in poles)``.

    Zeros and poles are sorted multisets; common factors cancel on
    construction.
    """

    scalar: Fraction
    zeros: tuple = ()
    poles: tuple = ()

    def __post_init__(self):
        c = as_rat(self.scalar)
        if c == 0:
            raise ValueError("the zero function has no divisor")
        z = Counter(as_rat(r) for r in self.zeros)
        p = Counter(as_rat(s) for s in self.poles)
        common = z & p
        z -= common
        p -= common
        object.__setattr__(self, "scalar", c)
        object.__setattr__(self, "zeros", tuple(sorted(z.elements())))
        object.__setattr__(self, "poles", tuple(sorted(p.elements())))

    @classmethod
    def z(cls) -> "SplitRationalFunction":
        return cls(1, (0,))

    def __mul__(self, other: "SplitRationalFunction") -> "SplitRationalFunction":
        return SplitRationalFunction(
            self.scalar * other.scalar, self.zeros + other.zeros, self.poles + other.poles
        )

    def __truediv__(self, other: "SplitRationalFunction") -> "SplitRationalFunction":
        return SplitRationalFunction(
            self.scalar / other.scalar, self.zeros + other.poles, self.poles + other.zeros
        )

    def __call__(self, x) -> Fraction:
        x = as_rat(x)
        num = self.scalar
        for r in self.zeros:
            num *= x - r
        den = Fraction(1)
        for s in self.poles:
            den *= x - s
        if den == 0:
            raise ZeroDivisionError(f"pole at {format_rat(x)}")
        return num / den

    def support(self) -> set:
        return set(self.zeros) | set(self.poles)

    def __str__(self):
        return format_split(self)


def ord_at(f: SplitRationalFunction, p: P1Point) -> int:
    if p is INFINITY:
        return len(f.poles) - len(f.zeros)
    p = as_rat(p)
    return f.zeros.count(p) - f.poles.count(p)


def leading_coeff(f: SplitRationalFunction, p: P1Point, scale=1) -> Fraction:
    """First nonzero coefficient of ``f`` in the local parameter at ``p``.

    The parameter is ``scale * (z - p)`` at a finite point and
    ``scale / z`` at infinity.
    """
    scale = as_rat(scale)
    n = ord_at(f, p)
    if p is INFINITY:
        a = f.scalar
    else:
        p = as_rat(p)
        a = f.scalar
        for r in f.zeros:
            if r != p:
                a *= p - r
        for s in f.poles:
            if s != p:
                a /= p - s
    return a / scale ** n


def weil_symbol_p1(f: SplitRationalFunction, g: SplitRationalFunction, p: P1Point, scale=1) -> Fraction:
    """``(-1)^(n m) * a^m / b^n`` from orders n, m and leading coefficients a, b."""
    n, m = ord_at(f, p), ord_at(g, p)
    a, b = leading_coeff(f, p, scale), leading_coeff(g, p, scale)
    sign = -1 if (n * m) % 2 else 1
    return sign * a ** m / b ** n


def symbol_support(f: SplitRationalFunction, g: SplitRationalFunction) -> list:
    return sorted(f.support() | g.support()) + [INFINITY]


def weil_symbols(f, g, scale=1) -> list:
    """``[(point, symbol)]`` over the joint support plus infinity."""
    return [(p, weil_symbol_p1(f, g, p, scale)) for p in symbol_support(f, g)]


def weil_product(f: SplitRationalFunction, g: SplitRationalFunction, scale=1) -> Fraction:
    out = Fraction(1)
    for _, s in weil_symbols(f, g, scale):
        out *= s
    return out


def finite_weil_product(f: SplitRationalFunction, g: SplitRationalFunction) -> Fraction:
    """``prod f(p)^ord_p(g)`` over finite p; needs f regular and nonzero on supp(g)."""
    out = Fraction(1)
    for p in sorted(g.support()):
        out *= f(p) ** ord_at(g, p)
    return out


def polynomial_coefficients(roots: Iterable, lead=1) -> list[Fraction]:
    """Coefficients ``[a_0, ..., a_n]`` of ``lead * prod(z - r)``."""
    coeffs = [as_rat(lead)]
    for r in roots:
        r = as_rat(r)
        nxt = [Fraction(0)] * (len(coeffs) + 1)
        for k, a in enumerate(coeffs):
            nxt[k + 1] += a
            nxt[k] -= r * a
        coeffs = nxt
    return coeffs


# --- literal syntax: 3*(z-1)(z-2)/(z-5)^2 ---------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+(?:/\d+)?)|(.))")


def _tokenize(text: str) -> list:
    toks = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m.group(0).strip() == "":
            break
        start = m.start(1) if m.group(1) else m.start(2)
        toks.append((m.group(1) or m.group(2), start))
        pos = m.end()
    toks.append(("", len(text)))
    return toks


class _Parser:
    def __init__(self, text):
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self, k=0):
        return self.toks[min(self.i + k, len(self.toks) - 1)][0]

    def pos(self):
        return self.toks[self.i][1]

    def take(self, expected=None):
        tok = self.peek()
        if expected is not None and tok != expected:
            what = repr(tok) if tok else "end of input"
            raise ExpressionSyntaxError(f"expected {expected!r}, found {what}", self.pos())
        self.i += 1
        return tok

    def is_number(self, k=0):
        t = self.peek(k)
        return bool(t) and t[0].isdigit()

    def parse(self):
        sign = 1
        while self.peek() in ("+", "-"):
            if self.take() == "-":
                sign = -sign
        scalar = Fraction(1)
        if self.is_number():
            scalar = as_rat(self.take())
            if self.peek() == "*":
                self.take()
        zeros, poles = self.factors()
        if self.peek() == "/":
            self.take()
            if self.is_number():
                scalar /= as_rat(self.take())
                if self.peek() == "*":
                    self.take()
            if self.peek() == "(" and self.peek(1) == "(":
                self.take("(")
                dz, dp = self.factors()
                self.take(")")
            else:
                dz, dp = self.factors()
            zeros, poles = zeros + dp, poles + dz
        if self.peek() != "":
            raise ExpressionSyntaxError(f"unexpected {self.peek()!r}", self.pos())
        return SplitRationalFunction(sign * scalar, zeros, poles)

    def factors(self):
        zeros = []
        while self.peek() in ("z", "("):
            if self.peek() == "(" and self.peek(1) != "z":
                break
            root = self.factor()
            k = self.exponent()
            zeros.extend([root] * k)
        return zeros, []

    def factor(self):
        if self.peek() == "z":
            self.take()
            return Fraction(0)
        self.take("(")
        self.take("z")
        root = Fraction(0)
        if self.peek() in ("+", "-"):
            op = self.take()
            if not self.is_number():
                raise ExpressionSyntaxError("expected a rational root", self.pos())
            r = as_rat(self.take())
            root = r if op == "-" else -r
        self.take(")")
        return root

    def exponent(self):
        if self.peek() != "^":
            return 1
        self.take()
        if not self.is_number() or "/" in self.peek():
            raise ExpressionSyntaxError("expected a nonnegative integer exponent", self.pos())
        return int(self.take())


def parse_split(text: str) -> SplitRationalFunction:
    """Parse literals such as ``"3*(z-1)(z-2)/(z-5)^2"`` or ``"-z^2/(z+1/2)"``."""
    return _Parser(text).parse()


def _factor_text(root: Fraction, k: int) -> str:
    if root == 0:
        base = "z"
    elif root > 0:
        base = f"(z-{format_rat(root)})"
    else:
        base = f"(z+{format_rat(-root)})"
    return base if k == 1 else f"{base}^{k}"


def _factors_text(roots: tuple) -> str:
    counts = Counter(roots)
    return "".join(_factor_text(r, counts[r]) for r in sorted(counts))


def format_split(f: SplitRationalFunction) -> str:
    num = _factors_text(f.zeros)
    den = _factors_text(f.poles)
    c = format_rat(f.scalar)
    if not num:
        text = c
    elif f.scalar == 1:
        text = num
    elif f.scalar == -1:
        text = "-" + num
    else:
        text = f"{c}*{num}"
    if den:
        text += "/" + den
    return text
