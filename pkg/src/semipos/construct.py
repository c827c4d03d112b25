"""Constructions of nonnegative matrices with prescribed images.

* ``build_np``:  v has entries of both signs, w is any nonzero vector;
  produces nonnegative invertible B with B v = w.
* ``build_pos``: v >= 0 nonzero, w > 0; same conclusion, and B is lower
  triangular after the positive entries of v are permuted to the front.
* ``build_rect``: rectangular variant, nonnegative full-row-rank B with
  B v = w for a longer v.
* ``mixed_sign_vector``: for invertible X with neither X nor -X inverse
  nonnegative, a vector v with entries of both signs and X v >= 0.

Each construction re-verifies its postconditions before returning, so a
returned matrix is a checked certificate, not a trusted formula.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .ratmat import (
    DimensionError,
    InvalidInputError,
    Matrix,
    SingularMatrixError,
    Vector,
    basis_vector,
    permutation_matrix,
    sign_profile,
)

_ZERO = Fraction(0)
_ONE = Fraction(1)


@dataclass(frozen=True)
class NpCaseTrace:
    """Which construction case produced each row of a build_np matrix.

    Rows are taken in the normalized order: the first row comes from the
    head-row table (cases "a"/"b" keyed on the sign of the first target
    entry), interior rows from the nine-way sign table on (target, source)
    pairs (cases "a".."i"), and the last row from the tail-row table
    (cases "a".."e").  The permutations that normalized v and w are recorded
    so the construction is fully replayable.
    """

    step1_case: str
    step2_cases: tuple[str, ...]
    step3_case: str
    v_permutation: tuple[int, ...]
    w_permutation: tuple[int, ...]

    def case_for_row(self, i: int) -> tuple[int, str]:
        n = len(self.step2_cases) + 2
        if i == 0:
            return (1, self.step1_case)
        if i == n - 1:
            return (3, self.step3_case)
        return (2, self.step2_cases[i - 1])


def _np_permutations(v: Vector, w: Vector) -> tuple[list[int], list[int]]:
    """Coordinate orders putting a positive entry of v first, a negative one
    last, and a nonzero entry of w first.  Inputs already in that shape are
    left alone (the orders reduce to the identity)."""
    n = v.dim
    i_pos = next(i for i in range(n) if v[i] > 0)
    i_neg = max(i for i in range(n) if v[i] < 0)
    sigma = [i_pos] + [i for i in range(n) if i not in (i_pos, i_neg)] + [i_neg]
    j_nonzero = next(j for j in range(n) if w[j] != 0)
    tau = [j_nonzero] + [j for j in range(n) if j != j_nonzero]
    return sigma, tau


def _np_head_row(vp: Vector, wp: Vector) -> tuple[list[Fraction], str]:
    n = vp.dim
    row = [_ZERO] * n
    if wp[0] > 0:
        row[0] = wp[0] / vp[0]
        return row, "a"
    row[n - 1] = wp[0] / vp[n - 1]
    return row, "b"


def _np_interior_row(i: int, vp: Vector, wp: Vector) -> tuple[list[Fraction], str]:
    n = vp.dim
    v1, vn = vp[0], vp[n - 1]
    vi, wi = vp[i], wp[i]
    row = [_ZERO] * n
    if wi > 0 and vi > 0:
        row[0] = wi / (2 * v1)
        row[i] = wi / (2 * vi)
        return row, "a"
    if wi > 0 and vi < 0:
        row[0] = (wi + 1) / v1
        row[i] = -1 / vi
        return row, "b"
    if wi > 0:
        row[0] = wi / v1
        row[i] = _ONE
        return row, "c"
    if wi < 0 and vi > 0:
        row[i] = 1 / vi
        row[n - 1] = (wi - 1) / vn
        return row, "d"
    if wi < 0 and vi < 0:
        row[i] = wi / (2 * vi)
        row[n - 1] = wi / (2 * vn)
        return row, "e"
    if wi < 0:
        row[i] = _ONE
        row[n - 1] = wi / vn
        return row, "f"
    if vi > 0:
        row[i] = 1 / vi
        row[n - 1] = -1 / vn
        return row, "g"
    if vi < 0:
        row[0] = 1 / v1
        row[i] = -1 / vi
        return row, "h"
    row[i] = _ONE
    return row, "i"


def _np_tail_row(vp: Vector, wp: Vector) -> tuple[list[Fraction], str]:
    n = vp.dim
    v1, vn = vp[0], vp[n - 1]
    w1, wn = wp[0], wp[n - 1]
    row = [_ZERO] * n
    if wn > 0 and w1 < 0:
        row[0] = wn / v1
        return row, "a"
    if wn > 0:
        row[0] = (wn + 1) / v1
        row[n - 1] = -1 / vn
        return row, "b"
    if wn < 0 and w1 < 0:
        row[0] = 1 / v1
        row[n - 1] = (wn - 1) / vn
        return row, "c"
    if wn < 0:
        row[n - 1] = wn / vn
        return row, "d"
    row[0] = 1 / v1
    row[n - 1] = -1 / vn
    return row, "e"


def build_np(v: Vector, w: Vector) -> tuple[Matrix, NpCaseTrace]:
    """Nonnegative invertible B with B v = w, for mixed-sign v and nonzero w.

    The construction works on reordered copies of v and w and is undone by
    conjugating with the recorded permutations, so the returned B acts on the
    original coordinates.
    """
    if v.dim != w.dim:
        raise InvalidInputError("v and w must have the same dimension")
    n = v.dim
    if n < 2:
        raise InvalidInputError("mixed signs need dimension at least 2")
    if not sign_profile(v).mixed:
        raise InvalidInputError("v must contain both positive and negative entries")
    if w.is_zero():
        raise InvalidInputError("w must be nonzero")

    sigma, tau = _np_permutations(v, w)
    p = permutation_matrix(sigma)
    q = permutation_matrix(tau)
    vp = p @ v
    wp = q @ w

    rows: list[list[Fraction]] = []
    head, case1 = _np_head_row(vp, wp)
    rows.append(head)
    cases2: list[str] = []
    for i in range(1, n - 1):
        row, case = _np_interior_row(i, vp, wp)
        rows.append(row)
        cases2.append(case)
    tail, case3 = _np_tail_row(vp, wp)
    rows.append(tail)

    b = q.transpose() @ Matrix(rows) @ p
    if not b.is_nonneg() or b.det() == 0 or b @ v != w:
        raise ArithmeticError("build_np postcondition check failed")
    trace = NpCaseTrace(case1, tuple(cases2), case3, tuple(sigma), tuple(tau))
    return b, trace


def positive_first_permutation(v: Vector) -> tuple[int, ...]:
    """Coordinate order listing the positive entries of v first, stable."""
    positive = [i for i in range(v.dim) if v[i] > 0]
    rest = [i for i in range(v.dim) if v[i] <= 0]
    return tuple(positive + rest)


def build_pos(v: Vector, w: Vector) -> Matrix:
    """Nonnegative invertible B with B v = w, for v >= 0 nonzero and w > 0.

    After the permutation from ``positive_first_permutation(v)`` the matrix is
    lower triangular with nonzero diagonal: the first column carries all of w
    scaled by the leading entry of v (halved on the other positive positions),
    the remaining positive positions get diagonal entries, and the zero
    positions get identity columns.
    """
    if v.dim != w.dim:
        raise InvalidInputError("v and w must have the same dimension")
    if not v.is_nonneg() or v.is_zero():
        raise InvalidInputError("v must be nonnegative and nonzero")
    if not w.is_positive():
        raise InvalidInputError("w must be strictly positive")

    sigma = positive_first_permutation(v)
    r = permutation_matrix(sigma)
    vp = r @ v
    n = v.dim
    k = sum(1 for x in vp.entries if x > 0)

    cols: list[Vector] = []
    first = [w[0] / vp[0]]
    for i in range(1, n):
        first.append(w[i] / (2 * vp[0]) if i < k else w[i] / vp[0])
    cols.append(Vector(first))
    for j in range(1, n):
        if j < k:
            cols.append((w[j] / (2 * vp[j])) * basis_vector(n, j))
        else:
            cols.append(basis_vector(n, j))

    b = Matrix.from_cols(cols) @ r
    if not b.is_nonneg() or b.det() == 0 or b @ v != w:
        raise ArithmeticError("build_pos postcondition check failed")
    return b


def build_rect(v: Vector, w: Vector) -> Matrix:
    """Nonnegative full-row-rank B with B v = w, for v longer than w.

    The target is padded with ones to the length of v, the square construction
    matching v's sign pattern is applied, and the top rows are kept.
    """
    n, m = v.dim, w.dim
    if n <= m:
        raise InvalidInputError("v must be strictly longer than w")
    padded = Vector(w.entries + (_ONE,) * (n - m))
    profile = sign_profile(v)
    if profile.mixed:
        full, _ = build_np(v, padded)
    elif v.is_nonneg() and not v.is_zero() and w.is_positive():
        full = build_pos(v, padded)
    else:
        raise InvalidInputError(
            "need v with both signs, or v >= 0 nonzero together with w > 0"
        )
    b = full.take_rows(m)
    if not b.is_nonneg() or b.rank() != m or b @ v != w:
        raise ArithmeticError("build_rect postcondition check failed")
    return b


def mixed_sign_vector(x: Matrix) -> Vector:
    """Vector v with entries of both signs and X v >= 0; see the detailed variant."""
    v, _ = mixed_sign_vector_with_path(x)
    return v


def mixed_sign_vector_with_path(x: Matrix) -> tuple[Vector, str]:
    """As ``mixed_sign_vector``, also reporting which route produced v.

    Candidate vectors are the inverse's columns: the column holding the first
    negative entry (scanning row-major) maps to a nonnegative basis vector and
    is not itself nonnegative; symmetrically for the first positive entry.  If
    either candidate already has both signs it is returned directly (paths
    "column-u" / "column-w").  Otherwise one candidate is <= 0 and the other
    >= 0; they are independent, so some 2x2 coordinate minor D is invertible.
    Ordering that coordinate pair to make det(D) positive and solving
    D (alpha, beta)^T = (1, -1)^T yields nonnegative weights whose combination
    v = alpha*u + beta*w has entries of both signs while X v stays a
    nonnegative combination of basis vectors (path "combination").
    """
    if not x.is_square:
        raise DimensionError("need a square matrix")
    try:
        inv = x.inverse()
    except SingularMatrixError:
        raise InvalidInputError("matrix must be invertible") from None
    if inv.is_nonneg() or (-inv).is_nonneg():
        raise InvalidInputError("neither the matrix nor its negation may be inverse nonnegative")

    n = x.rows
    j_neg = next(j for i in range(n) for j in range(n) if inv.entries[i][j] < 0)
    j_pos = next(j for i in range(n) for j in range(n) if inv.entries[i][j] > 0)
    u = inv.col(j_neg)
    w = inv.col(j_pos)
    if u.has_mixed_signs():
        return _checked_mixed(x, u), "column-u"
    if w.has_mixed_signs():
        return _checked_mixed(x, w), "column-w"

    # here u <= 0 and w >= 0, from distinct columns of an invertible matrix
    pair = next(
        (i, l)
        for i in range(n)
        for l in range(i + 1, n)
        if u[i] * w[l] - w[i] * u[l] != 0
    )
    i, l = pair
    det_d = u[i] * w[l] - w[i] * u[l]
    if det_d < 0:
        i, l = l, i
        det_d = -det_d
    alpha = (w[i] + w[l]) / det_d
    beta = -(u[i] + u[l]) / det_d
    v = alpha * u + beta * w
    return _checked_mixed(x, v), "combination"


def _checked_mixed(x: Matrix, v: Vector) -> Vector:
    if not v.has_mixed_signs() or not (x @ v).is_nonneg():
        raise ArithmeticError("mixed-sign vector postcondition check failed")
    return v
