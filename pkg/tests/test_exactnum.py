from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from tropweil.errors import RationalParseError, SingularSystemError
from tropweil.exactnum import RatMatrix, format_rat, parse_rat, rat_arith, solve_linear

rats = st.fractions(max_denominator=50).filter(lambda x: abs(x.numerator) < 10**6)


@pytest.mark.parametrize(
    "a, b, op, expected",
    [
        (F(1, 2), F(1, 3), "add", F(5, 6)),
        (F(3, 4), F(3, 4), "sub", F(0)),
        (F(7, 10), F(5, 7), "mul", F(1, 2)),
        (F(1, 2), F(1, 4), "div", F(2)),
    ],
)
def test_rat_arith(a, b, op, expected):
    assert rat_arith(a, b, op) == expected


def test_zero_result_is_canonical():
    r = rat_arith(F(3, 4), F(3, 4), "sub")
    assert (r.numerator, r.denominator) == (0, 1)


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        rat_arith(1, 0, "div")


def test_unknown_op():
    with pytest.raises(ValueError):
        rat_arith(1, 2, "pow")


def test_floats_refused():
    with pytest.raises(TypeError):
        rat_arith(0.5, 1, "add")


@pytest.mark.parametrize("text, value", [("7", F(7)), ("-7/2", F(-7, 2)), ("+3/6", F(1, 2)), (" 0 ", F(0))])
def test_parse_rat(text, value):
    assert parse_rat(text) == value


@pytest.mark.parametrize("text", ["1/0", "", "1.5", "a", "1/-2", "1//2"])
def test_parse_rat_rejects(text):
    with pytest.raises(RationalParseError):
        parse_rat(text)


@given(rats)
def test_format_parse_roundtrip(x):
    assert parse_rat(format_rat(x)) == x


@given(rats, rats, rats)
def test_field_axioms(a, b, c):
    add = lambda x, y: rat_arith(x, y, "add")
    mul = lambda x, y: rat_arith(x, y, "mul")
    assert add(add(a, b), c) == add(a, add(b, c))
    assert mul(mul(a, b), c) == mul(a, mul(b, c))
    assert mul(a, add(b, c)) == add(mul(a, b), mul(a, c))
    if b != 0:
        assert rat_arith(rat_arith(a, b, "div"), b, "mul") == a


@pytest.mark.parametrize(
    "rows, b, x",
    [
        ([[1, 0], [0, 1]], [3, F(1, 2)], [3, F(1, 2)]),
        ([[2, 0], [0, 4]], [1, 1], [F(1, 2), F(1, 4)]),
        ([[2, -1], [-1, 2]], [1, 0], [F(2, 3), F(1, 3)]),
    ],
)
def test_solve_linear_examples(rows, b, x):
    assert solve_linear(RatMatrix.from_rows(rows), b) == x


def test_solve_needs_pivoting():
    A = RatMatrix.from_rows([[0, 1], [1, 0]])
    assert solve_linear(A, [2, 3]) == [3, 2]


def test_singular_system():
    with pytest.raises(SingularSystemError):
        solve_linear(RatMatrix.from_rows([[1, 2], [2, 4]]), [1, 2])


def test_laplacian_without_pin_is_singular():
    L = RatMatrix.from_rows([[1, -1], [-1, 1]])
    with pytest.raises(SingularSystemError):
        solve_linear(L, [1, -1])


def test_non_square():
    with pytest.raises(ValueError):
        solve_linear(RatMatrix.from_rows([[1, 2]]), [1])


@given(st.integers(1, 6).flatmap(
    lambda n: st.tuples(
        st.lists(st.lists(rats, min_size=n, max_size=n), min_size=n, max_size=n),
        st.lists(rats, min_size=n, max_size=n),
    )
))
def test_solution_substitutes_exactly(system):
    rows, b = system
    A = RatMatrix.from_rows(rows)
    try:
        x = solve_linear(A, b)
    except SingularSystemError:
        return
    assert A.apply(x) == b


def test_large_rational_system(rng):
    n = 12
    rows = [[F(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(n)] for _ in range(n)]
    for i in range(n):
        rows[i][i] += 50
    A = RatMatrix.from_rows(rows)
    b = [F(rng.randint(-9, 9), rng.randint(1, 7)) for _ in range(n)]
    assert A.apply(solve_linear(A, b)) == b


def test_matrix_shape_checked():
    with pytest.raises(ValueError):
        RatMatrix(2, 2, ((F(1), F(0)),))
    assert RatMatrix.identity(3).is_symmetric()
