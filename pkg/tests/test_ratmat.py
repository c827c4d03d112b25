from fractions import Fraction

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from semipos.ratmat import (
    DimensionError,
    Matrix,
    MatrixParseError,
    SingularMatrixError,
    Vector,
    basis_vector,
    hstack,
    ones_vector,
    outer,
    parse_matrix_text,
    parse_rational,
    parse_vector_text,
    permutation_matrix,
    permutation_sign,
    rat,
    sign_profile,
    vstack,
)

EXAMPLE_B = Matrix([[3, 0, 0, 0], [2, 1, 0, 0], [0, 0, 1, 5], [1, 0, 0, 1]])


def test_det_identity():
    assert Matrix.identity(3).det() == 1


def test_det_diagonal():
    assert Matrix([[-1, 0], [0, 1]]).det() == -1


def test_det_example_matrix():
    # cofactor expansion down the zero-heavy columns gives 3
    assert EXAMPLE_B.det() == 3


def test_det_rejects_rectangular():
    with pytest.raises(DimensionError):
        Matrix([[1, 2, 3], [4, 5, 6]]).det()


def test_det_fractional_entries():
    assert Matrix([["1/2", "1/3"], ["1/4", "1/5"]]).det() == Fraction(1, 60)


def test_inverse_identity():
    assert Matrix.identity(4).inverse() == Matrix.identity(4)


def test_inverse_2x2():
    inv = Matrix([[2, -1], [-1, 2]]).inverse()
    assert inv == Matrix([["2/3", "1/3"], ["1/3", "2/3"]])


def test_inverse_singular():
    with pytest.raises(SingularMatrixError):
        Matrix([[1, 1], [1, 1]]).inverse()


def test_rank_zero_matrix():
    assert Matrix.zeros(2, 3).rank() == 0


def test_rank_equal_rows():
    assert Matrix([[1, 1], [1, 1]]).rank() == 1


def test_rank_full():
    assert EXAMPLE_B.rank() == 4


def test_sign_profile_examples():
    p = sign_profile(Vector([1, 0, -5, -1]))
    assert (p.has_positive, p.has_negative, p.has_zero) == (True, True, True)
    assert p.mixed
    z = sign_profile(Vector([0, 0]))
    assert (z.has_positive, z.has_negative, z.has_zero) == (False, False, True)
    q = sign_profile(Vector([3, 2, -10, 0]))
    assert (q.has_positive, q.has_negative, q.has_zero) == (True, True, True)


def test_vector_requires_entries():
    with pytest.raises(DimensionError):
        Vector([])


def test_floats_are_rejected():
    with pytest.raises(TypeError):
        rat(0.5)
    with pytest.raises(TypeError):
        Vector([0.5])


def test_parse_rational():
    assert parse_rational("0.5") == Fraction(1, 2)
    assert parse_rational("-7/4") == Fraction(-7, 4)
    assert parse_rational(" 12 ") == 12
    with pytest.raises(MatrixParseError):
        parse_rational("seven")
    with pytest.raises(MatrixParseError):
        parse_rational("1/0")


def test_parse_matrix_text():
    text = """
    # comment
    1 2   # trailing comment
    3/2 0.5
    """
    assert parse_matrix_text(text) == Matrix([[1, 2], ["3/2", "1/2"]])


def test_parse_matrix_text_names_bad_line():
    with pytest.raises(MatrixParseError, match="line 2"):
        parse_matrix_text("1 2\n3 oops\n", source="bad.mat")
    with pytest.raises(MatrixParseError, match="line 2"):
        parse_matrix_text("1 2\n3\n", source="ragged.mat")


def test_parse_vector_text():
    assert parse_vector_text("1 0 -5 -1") == Vector([1, 0, -5, -1])
    with pytest.raises(MatrixParseError):
        parse_vector_text("   ")


def test_matmul_shapes():
    a = Matrix([[1, 2], [3, 4], [5, 6]])
    assert a @ Vector([1, 1]) == Vector([3, 7, 11])
    assert a.transpose() @ a == Matrix([[35, 44], [44, 56]])
    with pytest.raises(DimensionError):
        a @ Vector([1, 1, 1])


def test_stacking_and_deletion():
    a = Matrix([[1, 2], [3, 4]])
    assert vstack(a, Matrix([[5, 6]])) == Matrix([[1, 2], [3, 4], [5, 6]])
    assert hstack(a, Matrix([[0], [0]])) == Matrix([[1, 2, 0], [3, 4, 0]])
    assert a.delete_col(0) == Matrix([[2], [4]])
    with pytest.raises(DimensionError):
        Matrix([[1], [2]]).delete_col(0)


def test_outer_and_basis():
    assert outer(Vector([1, 2]), Vector([3, 4])) == Matrix([[3, 4], [6, 8]])
    assert basis_vector(3, 1) == Vector([0, 1, 0])
    assert ones_vector(2) == Vector([1, 1])


def test_permutation_matrix_moves_entries():
    p = permutation_matrix([2, 0, 1])
    assert p @ Vector([10, 20, 30]) == Vector([30, 10, 20])
    assert permutation_sign([2, 0, 1]) == 1
    assert permutation_sign([1, 0]) == -1


def test_kernel_vector():
    a = Matrix([[1, 1], [1, 1]])
    k = a.kernel_vector()
    assert k is not None and not k.is_zero()
    assert (a @ k).is_zero()
    assert Matrix.identity(3).kernel_vector() is None


rationals = st.builds(Fraction, st.integers(-6, 6), st.integers(1, 4))


@st.composite
def square_matrices(draw, max_dim=4):
    n = draw(st.integers(1, max_dim))
    return Matrix([[draw(rationals) for _ in range(n)] for _ in range(n)])


@st.composite
def any_matrices(draw, max_dim=5):
    m = draw(st.integers(1, max_dim))
    n = draw(st.integers(1, max_dim))
    return Matrix([[draw(rationals) for _ in range(n)] for _ in range(m)])


@settings(max_examples=60, deadline=None)
@given(square_matrices())
def test_inverse_round_trip(a):
    assume(a.det() != 0)
    inv = a.inverse()
    assert a @ inv == Matrix.identity(a.rows)
    assert inv.inverse() == a


@settings(max_examples=60, deadline=None)
@given(any_matrices())
def test_rank_transpose_invariant(a):
    assert a.rank() == a.transpose().rank()


@st.composite
def perm_with_matrix(draw, max_dim=5):
    n = draw(st.integers(2, max_dim))
    perm = draw(st.permutations(range(n)))
    a = Matrix([[draw(rationals) for _ in range(n)] for _ in range(n)])
    return perm, a


@settings(max_examples=60, deadline=None)
@given(perm_with_matrix())
def test_det_permutation_sign(case):
    perm, a = case
    p = permutation_matrix(perm)
    assert (p @ a).det() == permutation_sign(perm) * a.det()


@settings(max_examples=60, deadline=None)
@given(
    st.lists(rationals, min_size=1, max_size=6),
    st.builds(Fraction, st.integers(1, 9), st.integers(1, 4)),
)
def test_sign_profile_scale_invariant(entries, c):
    v = Vector(entries)
    assert sign_profile(v) == sign_profile(c * v)
