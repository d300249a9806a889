import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st
from pydantic import ValidationError

from integra.linalg import Matrix, adjugate, charpoly, charpoly_coefficients, det, mat_arith, mat_poly_eval
from integra.linalg.determinant_strategies import BerkowitzStrategy, CofactorStrategy
from integra.rings import IntegerRing, ModularRing
from integra.utils.types import DimensionMismatch


def square_rows(max_size: int = 5):
    return st.integers(min_value=1, max_value=max_size).flatmap(
        lambda n: st.lists(
            st.lists(st.integers(min_value=-9, max_value=9), min_size=n, max_size=n), min_size=n, max_size=n
        )
    )


def test_determinant_of_two_by_two(Z):
    assert det(Matrix.from_rows(Z, [[1, 2], [3, 4]])).value == -2


def test_shape_is_validated(Z):
    with pytest.raises(ValidationError):
        Matrix(ring=Z, rows=2, cols=2, data=[[1, 2]])


def test_non_square_determinant_fails(Z):
    with pytest.raises(DimensionMismatch):
        det(Matrix.from_rows(Z, [[1, 2, 3], [4, 5, 6]]))


def test_multiplication_shapes(Z):
    a = Matrix.from_rows(Z, [[1, 2, 3]])
    with pytest.raises(DimensionMismatch):
        mat_arith("mul", a, a)


def test_charpoly_is_monic_in_fresh_variable(Z):
    p = charpoly(Matrix.from_rows(Z, [[0, 1], [2, 0]]))
    assert p.ring.var == "X"
    assert p.value == (-2, 0, 1)


def test_strategies_agree_on_seven_by_seven(Z):
    rows = [[(3 * i + 5 * j) % 7 - 3 for j in range(7)] for i in range(7)]
    assert BerkowitzStrategy().determinant(Z, rows) == CofactorStrategy().determinant(Z, rows)
    assert det(Matrix.from_rows(Z, rows)).value == int(sympy.Matrix(rows).det())


@settings(max_examples=200, deadline=None)
@given(square_rows())
def test_adjugate_identity_over_integers(rows):
    ring = IntegerRing()
    m = Matrix.from_rows(ring, rows)
    lhs = mat_arith("mul", adjugate(m), m)
    rhs = mat_arith("scalar_mul", det(m).value, Matrix.identity(ring, m.rows))
    assert lhs.data == rhs.data


@settings(max_examples=200, deadline=None)
@given(square_rows())
def test_adjugate_identity_modulo_twelve(rows):
    ring = ModularRing(m=12)
    m = Matrix.from_rows(ring, rows)
    lhs = mat_arith("mul", adjugate(m), m)
    rhs = mat_arith("scalar_mul", det(m).value, Matrix.identity(ring, m.rows))
    assert lhs.data == rhs.data


@settings(max_examples=100, deadline=None)
@given(square_rows())
def test_cayley_hamilton(rows):
    ring = IntegerRing()
    m = Matrix.from_rows(ring, rows)
    coeffs = charpoly_coefficients(ring, m.data)
    assert len(coeffs) == m.rows + 1
    assert coeffs[-1] == 1
    assert mat_poly_eval(coeffs, m).data == Matrix.zero(ring, m.rows, m.rows).data


@settings(max_examples=100, deadline=None)
@given(square_rows(4))
def test_charpoly_matches_sympy(rows):
    x = sympy.Symbol("x")
    expected = [int(c) for c in reversed(sympy.Matrix(rows).charpoly(x).all_coeffs())]
    assert list(charpoly_coefficients(IntegerRing(), rows)) == expected


@settings(max_examples=100, deadline=None)
@given(square_rows(4))
def test_cofactor_and_berkowitz_charpolys_agree(rows):
    ring = ModularRing(m=12)
    rows = [[ring.coerce(x) for x in row] for row in rows]
    assert CofactorStrategy().characteristic_polynomial(ring, rows) == BerkowitzStrategy().characteristic_polynomial(
        ring, rows
    )


def square_pairs(max_size: int = 5):
    entries = st.integers(min_value=-9, max_value=9)
    return st.integers(min_value=1, max_value=max_size).flatmap(
        lambda n: st.tuples(
            st.lists(st.lists(entries, min_size=n, max_size=n), min_size=n, max_size=n),
            st.lists(st.lists(entries, min_size=n, max_size=n), min_size=n, max_size=n),
        )
    )


@pytest.mark.parametrize("ring", [IntegerRing(), ModularRing(m=12)], ids=["Z", "Z/12"])
@settings(max_examples=200, deadline=None)
@given(square_pairs())
def test_determinant_is_multiplicative(ring, pair):
    a, b = (Matrix.from_rows(ring, rows) for rows in pair)
    assert det(mat_arith("mul", a, b)).value == ring.mul(det(a).value, det(b).value)


@settings(max_examples=100, deadline=None)
@given(square_rows(6))
def test_berkowitz_matches_cofactor_expansion_over_integers(rows):
    ring = IntegerRing()
    expected = CofactorStrategy().characteristic_polynomial(ring, rows)
    assert BerkowitzStrategy().characteristic_polynomial(ring, rows) == expected
    assert charpoly_coefficients(ring, rows) == expected


def test_charpoly_examples(Z):
    assert charpoly(Matrix.from_rows(Z, [[-3, 1], [-1, 0]])).value == (1, 3, 1)
    assert charpoly(Matrix.zero(Z, 3, 3)).value == (0, 0, 0, 1)
    assert charpoly(Matrix.from_rows(Z, [[2, 0], [0, 5]])).value == (10, -7, 1)
