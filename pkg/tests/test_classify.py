import random

import pytest

from semipos import classify
from semipos.ratmat import DimensionError, Matrix

EXAMPLE_B = Matrix([[3, 0, 0, 0], [2, 1, 0, 0], [0, 0, 1, 5], [1, 0, 0, 1]])
ONES_2 = Matrix([[1, 1], [1, 1]])


def test_semipositive_identity():
    ok, witness = classify.is_semipositive(Matrix.identity(3))
    assert ok and witness.is_positive()
    assert (Matrix.identity(3) @ witness).is_positive()


def test_semipositive_negated_identity():
    assert classify.is_semipositive(-Matrix.identity(2)) == (False, None)


def test_semipositive_opposing_rows():
    assert classify.is_semipositive(Matrix([[1, -1], [-1, 1]]))[0] is False


def test_semipositive_example_matrix():
    ok, witness = classify.is_semipositive(EXAMPLE_B)
    assert ok
    assert witness.is_positive() and (EXAMPLE_B @ witness).is_positive()


def test_left_inverse_identity():
    ok, n = classify.has_nonneg_left_inverse(Matrix.identity(3))
    assert ok and n == Matrix.identity(3)


def test_left_inverse_tall():
    a = Matrix([[1, 0], [0, 1], [1, 1]])
    ok, n = classify.has_nonneg_left_inverse(a)
    assert ok and n == Matrix([[1, 0, 0], [0, 1, 0]])
    assert n @ a == Matrix.identity(2)


def test_left_inverse_singular():
    assert classify.has_nonneg_left_inverse(ONES_2) == (False, None)


def test_left_inverse_needs_tall():
    with pytest.raises(DimensionError):
        classify.has_nonneg_left_inverse(Matrix([[1, 2, 3]]))


def test_msp_examples():
    assert classify.is_minimally_semipositive(Matrix.identity(2))
    assert classify.is_minimally_semipositive(Matrix([[2, -1], [-1, 2]]))
    assert not classify.is_minimally_semipositive(ONES_2)
    assert classify.is_minimally_semipositive(Matrix([[1], [2]]))
    assert not classify.is_minimally_semipositive(Matrix([[1], [0]]))


def test_msp_by_deletion_examples():
    assert classify.msp_by_deletion(Matrix.identity(2))
    assert not classify.msp_by_deletion(ONES_2)
    assert classify.msp_by_deletion(Matrix([[1, 0], [0, 1], [1, 1]]))


def test_row_positive():
    assert classify.is_row_positive(Matrix.identity(3))
    assert not classify.is_row_positive(Matrix([[1, 0, 0], [0, -1, 0], [1, 1, 1]]))
    assert not classify.is_row_positive(Matrix([[1, 1], [0, 0]]))


def test_monomial():
    assert classify.is_monomial(Matrix([[0, 1, 0], [0, 0, 1], [1, 0, 0]]))
    assert not classify.is_monomial(ONES_2)
    assert classify.is_monomial(Matrix([[0, 2], [3, 0]]))
    with pytest.raises(DimensionError):
        classify.is_monomial(Matrix([[1, 0]]))


def test_inverse_nonnegative():
    ok, inv = classify.is_inverse_nonnegative(Matrix.identity(2))
    assert ok and inv == Matrix.identity(2)
    ok, inv = classify.is_inverse_nonnegative(Matrix([[2, -1], [-1, 2]]))
    assert ok and inv == Matrix([["2/3", "1/3"], ["1/3", "2/3"]])
    assert classify.is_inverse_nonnegative(Matrix([[1, 0], [1, 1]])) == (False, None)
    assert classify.is_inverse_nonnegative(ONES_2) == (False, None)


def test_classify_all_identity():
    report = classify.classify_all(Matrix.identity(3))
    assert report.semipositive and report.minimally_semipositive
    assert report.monomial and report.row_positive and report.inverse_nonnegative
    assert report.left_inv == Matrix.identity(3)


def test_classify_all_example_matrix():
    # nonnegative and invertible, but its inverse has negative entries
    report = classify.classify_all(EXAMPLE_B)
    assert report.semipositive and report.row_positive
    assert report.nonnegative and not report.positive
    assert not report.monomial and not report.inverse_nonnegative
    assert not report.minimally_semipositive and report.left_inv is None


def test_classify_all_ones():
    report = classify.classify_all(ONES_2)
    assert report.semipositive and not report.minimally_semipositive
    assert not report.monomial and not report.inverse_nonnegative
    assert report.inv is None and report.left_inv is None


def test_classify_all_rectangular_skips_square_fields():
    report = classify.classify_all(Matrix([[1, 0], [0, 1], [1, 1]]))
    assert report.monomial is None and report.inverse_nonnegative is None
    assert report.minimally_semipositive


def _random_matrix(rng, m, n, bound=3):
    return Matrix([[rng.randint(-bound, bound) for _ in range(n)] for _ in range(m)])


def test_msp_routes_agree():
    rng = random.Random("classify-msp")
    shapes = [(2, 2), (3, 2), (3, 3), (4, 3), (5, 4), (4, 2)]
    checked_square = 0
    for t in range(150):
        m, n = shapes[t % len(shapes)]
        a = _random_matrix(rng, m, n)
        fast = classify.is_minimally_semipositive(a)
        assert fast == classify.msp_by_deletion(a)
        if m == n:
            checked_square += 1
            assert fast == classify.is_inverse_nonnegative(a)[0]
    assert checked_square > 0


def test_wide_matrices_use_definition():
    rng = random.Random("classify-wide")
    for _ in range(40):
        a = _random_matrix(rng, 2, rng.randint(3, 4))
        assert classify.is_minimally_semipositive(a) == classify.msp_by_deletion(a)


def test_monomial_characterization():
    rng = random.Random("classify-monomial")
    for t in range(150):
        n = rng.randint(1, 6)
        if t % 3 == 0:
            perm = list(range(n))
            rng.shuffle(perm)
            a = Matrix(
                [
                    [rng.randint(1, 3) if j == perm[i] else 0 for j in range(n)]
                    for i in range(n)
                ]
            )
        else:
            a = _random_matrix(rng, n, n)
        expected = classify.is_row_positive(a) and classify.is_inverse_nonnegative(a)[0]
        assert classify.is_monomial(a) == expected


def test_row_positive_implies_semipositive():
    rng = random.Random("classify-rowpos")
    for _ in range(40):
        m, n = rng.randint(1, 4), rng.randint(1, 4)
        rows = []
        for _ in range(m):
            while True:
                row = [rng.randint(0, 3) for _ in range(n)]
                if any(v > 0 for v in row):
                    rows.append(row)
                    break
        a = Matrix(rows)
        ok, witness = classify.is_semipositive(a)
        assert ok and witness.is_positive() and (a @ witness).is_positive()


def test_report_internal_consistency():
    rng = random.Random("classify-report")
    for _ in range(60):
        n = rng.randint(1, 4)
        report = classify.classify_all(_random_matrix(rng, n, n))
        if report.monomial:
            assert report.row_positive and report.inverse_nonnegative
        if report.row_positive and report.inverse_nonnegative:
            assert report.monomial
        if report.minimally_semipositive:
            assert report.semipositive
        if report.sp_witness is not None:
            assert report.sp_witness.is_positive()
