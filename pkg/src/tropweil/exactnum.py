"""Exact rational scalars and an exact dense linear solver.

Every length, value, slope and coefficient in tropweil is a
:class:`fractions.Fraction`; ``Rat`` is just an alias for it.
"""

from __future__ import annotations

import operator
import re
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

from .errors import RationalParseError, SingularSystemError

Rat = Fraction

_RAT_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$")

_OPS = {
    "add": operator.add,
    "sub": operator.sub,
    "mul": operator.mul,
    "div": operator.truediv,
}


def as_rat(value) -> Fraction:
    """Coerce ints, Fractions and rational strings to a Fraction.

    Floats are refused: they would smuggle binary rounding into exact data.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a rational")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rat(value)
    raise TypeError(f"cannot use {type(value).__name__} as an exact rational")


def parse_rat(text: str) -> Fraction:
    m = _RAT_RE.match(text)
    if m is None:
        raise RationalParseError(f"not a rational literal: {text!r}")
    num, den = m.group(1), m.group(2)
    if den is None:
        return Fraction(int(num))
    if int(den) == 0:
        raise RationalParseError(f"zero denominator in {text!r}")
    return Fraction(int(num), int(den))


def format_rat(x: Fraction) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def rat_arith(a, b, op: str) -> Fraction:
    """Apply ``op`` in {"add", "sub", "mul", "div"}; division by zero raises."""
    try:
        fn = _OPS[op]
    except KeyError:
        raise ValueError(f"unknown operation {op!r}") from None
    a, b = as_rat(a), as_rat(b)
    if op == "div" and b == 0:
        raise ZeroDivisionError(f"{format_rat(a)} / 0")
    return fn(a, b)


def is_integer(x: Fraction) -> bool:
    return x.denominator == 1


@dataclass(frozen=True)
class RatMatrix:
    """Dense immutable matrix of Fractions."""

    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise ValueError("entry grid does not match the declared shape")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable]) -> "RatMatrix":
        grid = tuple(tuple(as_rat(v) for v in row) for row in rows)
        ncols = len(grid[0]) if grid else 0
        return cls(len(grid), ncols, grid)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RatMatrix":
        return cls(rows, cols, tuple((Fraction(0),) * cols for _ in range(rows)))

    @classmethod
    def identity(cls, n: int) -> "RatMatrix":
        return cls.from_rows([[int(i == j) for j in range(n)] for i in range(n)])

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def row(self, i: int) -> tuple:
        return self.entries[i]

    def apply(self, x: Sequence) -> list:
        if len(x) != self.cols:
            raise ValueError("vector length does not match column count")
        return [sum((a * b for a, b in zip(row, x)), Fraction(0)) for row in self.entries]

    def is_symmetric(self) -> bool:
        return self.rows == self.cols and all(
            self.entries[i][j] == self.entries[j][i]
            for i in range(self.rows) for j in range(i)
        )

    def with_row(self, i: int, new_row: Sequence) -> "RatMatrix":
        rows = list(self.entries)
        rows[i] = tuple(as_rat(v) for v in new_row)
        return RatMatrix(self.rows, self.cols, tuple(rows))


def _integer_rows(A: RatMatrix, b: Sequence[Fraction]) -> list[list[int]]:
    # scale each augmented row by the lcm of its denominators
    out = []
    for row, rhs in zip(A.entries, b):
        full = list(row) + [rhs]
        scale = lcm(*(v.denominator for v in full))
        out.append([int(v * scale) for v in full])
    return out


def solve_linear(A: RatMatrix, b: Sequence) -> list[Fraction]:
    """Solve ``A x = b`` exactly by fraction-free (Bareiss) elimination.

    Rows are first cleared of denominators so the elimination runs on
    Python ints; every intermediate entry is then a minor of the
    augmented matrix, which keeps growth polynomial.  Raises
    :class:`SingularSystemError` when ``A`` is singular.
    """
    if A.rows != A.cols:
        raise ValueError(f"matrix must be square, got {A.rows}x{A.cols}")
    b = [as_rat(v) for v in b]
    if len(b) != A.rows:
        raise ValueError("right-hand side length does not match matrix")
    n = A.rows
    if n == 0:
        return []
    M = _integer_rows(A, b)
    prev = 1
    for k in range(n):
        piv = next((i for i in range(k, n) if M[i][k] != 0), None)
        if piv is None:
            raise SingularSystemError(f"no pivot in column {k}")
        if piv != k:
            M[k], M[piv] = M[piv], M[k]
        pk = M[k][k]
        rk = M[k]
        for i in range(k + 1, n):
            ri = M[i]
            f = ri[k]
            for j in range(k + 1, n + 1):
                # exact by Sylvester's identity
                ri[j] = (ri[j] * pk - f * rk[j]) // prev
            ri[k] = 0
        prev = pk
    x = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        s = Fraction(M[i][n])
        for j in range(i + 1, n):
            if M[i][j]:
                s -= M[i][j] * x[j]
        x[i] = s / M[i][i]
    if A.apply(x) != b:
        raise SingularSystemError("substitution check failed")
    return x
