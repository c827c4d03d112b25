"""Decide whether A -> X A Y preserves (minimally) semipositive matrices.

Verdicts are three-valued.  A "no" always carries a certificate: a concrete
matrix inside the preserved class whose image verifiably leaves it (or, for
onto questions with a singular X, a class member with no preimage at all).
Certificates are re-verified with the classify deciders before any verdict is
returned, so the falsifiers are checked constructions rather than trusted
formulas.

The only undecided regimes are the rectangular into-preserver questions for
minimal semipositivity: for more rows than columns (width at least 2) the
known condition is sufficient but not necessary, so failing it yields either
a randomized counterexample or "unknown"; for more columns than rows the
question is outside the decided territory entirely and "unknown" is returned.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from . import classify, genfuzz
from .construct import build_np, build_pos, mixed_sign_vector
from .ratmat import (
    DimensionError,
    InvalidInputError,
    Matrix,
    Vector,
    basis_vector,
    column_matrix,
    ones_vector,
    outer,
    vstack,
)


class Verdict(enum.Enum):
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"


CLASS_SP = "semipositive"
CLASS_MSP = "minimally-semipositive"

REASON_SP_PAIR = "x-row-positive-y-inverse-nonnegative"
REASON_MSP_PAIR = "x-y-inverse-nonnegative"
REASON_TALL_PAIR = "x-monomial-y-inverse-nonnegative"
REASON_COLUMN_PAIR = "y-positive-x-row-positive"
REASON_MONOMIAL_PAIR = "monomial-pair"
REASON_NEGATED_PAIR = "negated-pair"
REASON_FALSIFIED = "falsified"
REASON_X_SINGULAR = "x-singular"
REASON_Y_SINGULAR = "y-singular"
REASON_INVERSE_NOT_INTO = "inverse-not-into"
REASON_OUTSIDE_REGIME = "outside-decided-regime"


@dataclass(frozen=True)
class PreserverMap:
    """The pair (X, Y) defining A -> X A Y on the space of (rows of X) x (rows of Y)."""

    x: Matrix
    y: Matrix

    def __post_init__(self) -> None:
        if not self.x.is_square or not self.y.is_square:
            raise DimensionError("X and Y must both be square")

    @property
    def space(self) -> tuple[int, int]:
        return (self.x.rows, self.y.rows)

    def inverse_map(self) -> "PreserverMap":
        return PreserverMap(self.x.inverse(), self.y.inverse())


def apply(lmap: PreserverMap, a: Matrix) -> Matrix:
    if a.rows != lmap.x.cols or a.cols != lmap.y.rows:
        raise DimensionError(
            f"map on {lmap.space} space cannot act on a {a.shape} matrix"
        )
    return lmap.x @ a @ lmap.y


@dataclass(frozen=True)
class FalsifyCertificate:
    """Evidence that the map (x, y) fails to preserve the named class.

    kind "image-leaves-class": ``a`` is in the class, ``image`` equals
    x @ a @ y and is not; optionally a probe vector u with image @ u =
    probe_image exhibits the violation directly.

    kind "no-preimage": ``a`` is in the class but x M y = a has no solution M,
    witnessed by a left-null vector q of x (stored as probe_image) that is not
    orthogonal to some column z of a @ y^{-1} (stored as probe).
    """

    kind: str
    class_name: str
    x: Matrix
    y: Matrix
    a: Matrix
    image: Matrix | None = None
    probe: Vector | None = None
    probe_image: Vector | None = None
    note: str = ""

    def _member(self, m: Matrix) -> bool:
        if self.class_name == CLASS_SP:
            return classify.is_semipositive(m)[0]
        return classify.is_minimally_semipositive(m)

    def verify(self) -> bool:
        if not self._member(self.a):
            return False
        if self.kind == "image-leaves-class":
            if self.image is None or self.image != self.x @ self.a @ self.y:
                return False
            if self._member(self.image):
                return False
            if self.probe is not None:
                if self.probe_image is None:
                    return False
                if self.image @ self.probe != self.probe_image:
                    return False
            return True
        if self.kind == "no-preimage":
            q = self.probe_image
            z = self.probe
            if q is None or z is None or q.is_zero():
                return False
            if any(v != 0 for v in (self.x.transpose() @ q).entries):
                return False
            try:
                carried = self.a @ self.y.inverse()
            except Exception:  # noqa: BLE001 - singular y invalidates the certificate
                return False
            cols = [carried.col(j) for j in range(carried.cols)]
            if z not in cols:
                return False
            return any(q.dot(c) != 0 for c in cols)
        return False


@dataclass(frozen=True)
class PreserverVerdict:
    status: Verdict
    reason: str
    certificate: FalsifyCertificate | None = None

    def __post_init__(self) -> None:
        if self.status is Verdict.NO:
            if self.certificate is None:
                raise InvalidInputError("a negative verdict requires a certificate")
            if not self.certificate.verify():
                raise ArithmeticError("certificate failed re-verification")


# -- decision rules -------------------------------------------------------------


def into_sp_condition(x: Matrix, y: Matrix) -> bool:
    if classify.is_row_positive(x) and classify.is_inverse_nonnegative(y)[0]:
        return True
    return classify.is_row_positive(-x) and classify.is_inverse_nonnegative(-y)[0]


def into_msp_square_condition(x: Matrix, y: Matrix) -> bool:
    if classify.is_inverse_nonnegative(x)[0] and classify.is_inverse_nonnegative(y)[0]:
        return True
    return (
        classify.is_inverse_nonnegative(-x)[0]
        and classify.is_inverse_nonnegative(-y)[0]
    )


def _monomial_pair_reason(x: Matrix, y: Matrix) -> str | None:
    if classify.is_monomial(x) and classify.is_monomial(y):
        return REASON_MONOMIAL_PAIR
    if classify.is_monomial(-x) and classify.is_monomial(-y):
        return REASON_NEGATED_PAIR
    return None


def into_sp_preserver(lmap: PreserverMap) -> PreserverVerdict:
    """Does A -> X A Y map every semipositive matrix to a semipositive one?"""
    x, y = lmap.x, lmap.y
    if classify.is_row_positive(x) and classify.is_inverse_nonnegative(y)[0]:
        return PreserverVerdict(Verdict.YES, REASON_SP_PAIR)
    if classify.is_row_positive(-x) and classify.is_inverse_nonnegative(-y)[0]:
        return PreserverVerdict(Verdict.YES, REASON_NEGATED_PAIR)
    return PreserverVerdict(Verdict.NO, REASON_FALSIFIED, falsify_into_sp(lmap))


def onto_sp_preserver(lmap: PreserverMap) -> PreserverVerdict:
    """Does A -> X A Y map the semipositive matrices onto themselves?"""
    x, y = lmap.x, lmap.y
    reason = _monomial_pair_reason(x, y)
    if reason is not None:
        return PreserverVerdict(Verdict.YES, reason)
    if not into_sp_condition(x, y):
        return PreserverVerdict(Verdict.NO, REASON_FALSIFIED, falsify_into_sp(lmap))
    if x.det() == 0:
        return PreserverVerdict(
            Verdict.NO, REASON_X_SINGULAR, _no_preimage_certificate(lmap)
        )
    return PreserverVerdict(
        Verdict.NO, REASON_INVERSE_NOT_INTO, falsify_into_sp(lmap.inverse_map())
    )


def into_msp_preserver(
    lmap: PreserverMap,
    m: int | None = None,
    n: int | None = None,
    *,
    seed: int = 0,
    trials: int = 40,
) -> PreserverVerdict:
    """Does A -> X A Y map every minimally semipositive matrix into the class?

    Fully decided when the space is square or a single column.  For strictly
    more rows than columns (width >= 2) the known pair condition is sufficient
    only, so its failure triggers a seeded randomized counterexample search
    and, failing that, "unknown".  For more columns than rows the question is
    undecided and "unknown" is returned directly.
    """
    x, y = lmap.x, lmap.y
    rows, cols = lmap.space
    if m is not None and m != rows:
        raise DimensionError(f"X is {x.shape}, inconsistent with m={m}")
    if n is not None and n != cols:
        raise DimensionError(f"Y is {y.shape}, inconsistent with n={n}")

    if rows == cols:
        if classify.is_inverse_nonnegative(x)[0] and classify.is_inverse_nonnegative(y)[0]:
            return PreserverVerdict(Verdict.YES, REASON_MSP_PAIR)
        if classify.is_inverse_nonnegative(-x)[0] and classify.is_inverse_nonnegative(-y)[0]:
            return PreserverVerdict(Verdict.YES, REASON_NEGATED_PAIR)
        return PreserverVerdict(Verdict.NO, REASON_FALSIFIED, falsify_into_msp(lmap))

    if rows > cols == 1:
        scalar = y.entries[0][0]
        if scalar > 0 and classify.is_row_positive(x):
            return PreserverVerdict(Verdict.YES, REASON_COLUMN_PAIR)
        if scalar < 0 and classify.is_row_positive(-x):
            return PreserverVerdict(Verdict.YES, REASON_NEGATED_PAIR)
        return PreserverVerdict(
            Verdict.NO, REASON_FALSIFIED, _falsify_column_map(lmap)
        )

    if rows > cols:
        if classify.is_monomial(x) and classify.is_inverse_nonnegative(y)[0]:
            return PreserverVerdict(Verdict.YES, REASON_TALL_PAIR)
        if classify.is_monomial(-x) and classify.is_inverse_nonnegative(-y)[0]:
            return PreserverVerdict(Verdict.YES, REASON_NEGATED_PAIR)
        if y.det() == 0:
            a = _canonical_msp(rows, cols)
            cert = FalsifyCertificate(
                "image-leaves-class",
                CLASS_MSP,
                x,
                y,
                a,
                image=x @ a @ y,
                note="y-singular-image-rank-deficient",
            )
            return PreserverVerdict(Verdict.NO, REASON_Y_SINGULAR, cert)
        cfg = genfuzz.GenConfig(seed)
        for a in genfuzz.iter_msp_mixture(rows, cols, cfg, trials):
            image = x @ a @ y
            if not classify.is_minimally_semipositive(image):
                cert = FalsifyCertificate(
                    "image-leaves-class",
                    CLASS_MSP,
                    x,
                    y,
                    a,
                    image=image,
                    note="randomized-counterexample",
                )
                return PreserverVerdict(Verdict.NO, REASON_FALSIFIED, cert)
        return PreserverVerdict(Verdict.UNKNOWN, REASON_OUTSIDE_REGIME)

    return PreserverVerdict(Verdict.UNKNOWN, REASON_OUTSIDE_REGIME)


def onto_msp_preserver(lmap: PreserverMap) -> PreserverVerdict:
    """Does A -> X A Y map the minimally semipositive matrices onto themselves?

    Supported on square spaces only.
    """
    x, y = lmap.x, lmap.y
    if x.rows != y.rows:
        raise InvalidInputError(
            "onto preservation of minimal semipositivity is decided for square spaces only"
        )
    reason = _monomial_pair_reason(x, y)
    if reason is not None:
        return PreserverVerdict(Verdict.YES, reason)
    if not into_msp_square_condition(x, y):
        return PreserverVerdict(Verdict.NO, REASON_FALSIFIED, falsify_into_msp(lmap))
    return PreserverVerdict(
        Verdict.NO, REASON_INVERSE_NOT_INTO, falsify_into_msp(lmap.inverse_map())
    )


# -- falsifiers -------------------------------------------------------------------


def falsify_into_msp(lmap: PreserverMap) -> FalsifyCertificate:
    """Counterexample for a square map failing the minimal-semipositivity rule.

    Three constructions, by how the pair condition fails:

    * X or Y singular: the identity works, since the image is singular.
    * neither X nor -X inverse nonnegative: take a both-signs vector v with
      X v >= 0; send the inverse of the nonnegative invertible B mapping v to
      Y w (with w a negated basis vector).  The image maps w, which has a
      negative entry, to the nonnegative X v, so its inverse cannot be
      nonnegative.
    * X inverse nonnegative up to sign but Y not: a small positive shift of a
      basis vector w keeps the inverse image u = Y^{-1} w negative somewhere;
      the inverse of the nonnegative invertible B mapping X^{-1} w to w gives
      an image sending u, with a negative entry, to a positive vector.
    """
    x, y = lmap.x, lmap.y
    if x.rows != y.rows:
        raise DimensionError("square falsifier needs matching X and Y sizes")
    if into_msp_square_condition(x, y):
        raise InvalidInputError("the pair condition holds; nothing to falsify")
    n = x.rows

    if x.det() == 0 or y.det() == 0:
        a = Matrix.identity(n)
        return _checked(
            FalsifyCertificate(
                "image-leaves-class",
                CLASS_MSP,
                x,
                y,
                a,
                image=x @ a @ y,
                note="x-or-y-singular",
            )
        )

    x_ok = classify.is_inverse_nonnegative(x)[0]
    neg_x_ok = classify.is_inverse_nonnegative(-x)[0]
    if not x_ok and not neg_x_ok:
        v = mixed_sign_vector(x)
        w = -basis_vector(n, 0)
        b, _ = build_np(v, y @ w)
        a = b.inverse()
        return _checked(
            FalsifyCertificate(
                "image-leaves-class",
                CLASS_MSP,
                x,
                y,
                a,
                image=x @ a @ y,
                probe=w,
                probe_image=x @ v,
                note="x-not-inverse-nonnegative-either-sign",
            )
        )

    sign = 1 if x_ok else -1
    xs = x * sign
    ys = y * sign
    c = ys.inverse()
    i, j = next(
        (i, j) for i in range(n) for j in range(n) if c.entries[i][j] < 0
    )
    shifted = c @ ones_vector(n)
    delta = abs(c.entries[i][j]) / (2 * (1 + max(abs(v) for v in shifted.entries)))
    w = basis_vector(n, j) + delta * ones_vector(n)
    u = c @ w
    v = xs.inverse() @ w
    if u.entries[i] >= 0 or not w.is_positive() or not v.is_nonneg():
        raise ArithmeticError("shift construction lost its sign pattern")
    b = build_pos(v, w)
    a = b.inverse()
    return _checked(
        FalsifyCertificate(
            "image-leaves-class",
            CLASS_MSP,
            x,
            y,
            a,
            image=x @ a @ y,
            probe=u,
            probe_image=xs @ v,
            note="y-not-inverse-nonnegative",
        )
    )


def falsify_into_sp(lmap: PreserverMap) -> FalsifyCertificate:
    """Counterexample for a map failing the semipositivity rule.

    Four constructions, by how the pair condition fails:

    * X has a zero row: the all-ones matrix maps to something with a zero row.
    * some row of X has entries of both signs: a positive vector v tuned to
      zero that row's image, replicated as every column, maps to something
      with a zero row.
    * otherwise X has a nonpositive row and a nonnegative row: the matrix with
      an all-ones first column maps to columns proportional to the both-signs
      vector X 1, so no image vector is positive.
    * X row positive up to sign but Y not inverse nonnegative: if Y is
      singular, rows copying a left-null vector of Y give image zero; else a
      negative inverse entry yields rows whose product with Y is nonpositive.
    """
    x, y = lmap.x, lmap.y
    if into_sp_condition(x, y):
        raise InvalidInputError("the pair condition holds; nothing to falsify")
    m, n = lmap.space

    if not classify.is_row_positive(x) and not classify.is_row_positive(-x):
        if x.has_zero_row():
            a = Matrix.ones(m, n)
            note = "zero-row"
        else:
            mixed_row = next(
                (i for i in range(m) if x.row(i).has_mixed_signs()), None
            )
            if mixed_row is not None:
                v = _positive_vector_zeroing_row(x, mixed_row)
                a = Matrix.from_cols([v] * n)
                note = "mixed-row"
            else:
                first = [ones_vector(m)] + [
                    Vector([Fraction(0)] * m) for _ in range(n - 1)
                ]
                a = Matrix.from_cols(first)
                note = "uniform-sign-rows"
        return _checked(
            FalsifyCertificate(
                "image-leaves-class", CLASS_SP, x, y, a, image=x @ a @ y, note=note
            )
        )

    sign = 1 if classify.is_row_positive(x) else -1
    ys = y * sign
    if ys.det() == 0:
        q = ys.transpose().kernel_vector()
        assert q is not None
        lead = next(i for i in range(n) if q[i] != 0)
        if q[lead] < 0:
            q = -q
        a = Matrix.from_rows([q] * m)
        note = "y-singular"
    else:
        c = ys.inverse()
        i, _j = next(
            (i, j) for i in range(n) for j in range(n) if c.entries[i][j] < 0
        )
        a = Matrix.from_rows([-c.row(i)] * m)
        note = "y-inverse-negative-entry"
    return _checked(
        FalsifyCertificate(
            "image-leaves-class", CLASS_SP, x, y, a, image=x @ a @ y, note=note
        )
    )


def _positive_vector_zeroing_row(x: Matrix, i: int) -> Vector:
    """Strictly positive v with (X v)_i = 0, for a row with both signs.

    Weight t goes on a negative entry when the row sum is nonnegative and on a
    positive entry otherwise, which forces the solution t of the single linear
    equation to be positive.
    """
    row = x.row(i)
    total = sum(row.entries, Fraction(0))
    if total >= 0:
        p = next(j for j in range(row.dim) if row[j] < 0)
    else:
        p = next(j for j in range(row.dim) if row[j] > 0)
    t = 1 - total / row[p]
    entries = [Fraction(1)] * row.dim
    entries[p] = t
    v = Vector(entries)
    if not v.is_positive() or (x @ v)[i] != 0:
        raise ArithmeticError("row-zeroing vector construction failed")
    return v


def _falsify_column_map(lmap: PreserverMap) -> FalsifyCertificate:
    """Counterexample for a single-column map: a positive column whose image
    has a nonpositive entry."""
    x, y = lmap.x, lmap.y
    m = x.rows
    scalar = y.entries[0][0]
    if scalar == 0:
        col = ones_vector(m)
        note = "y-zero"
    else:
        xs = x if scalar > 0 else -x
        neg = next(
            ((i, j) for i in range(m) for j in range(m) if xs.entries[i][j] < 0),
            None,
        )
        if neg is None:
            col = ones_vector(m)  # xs has a zero row
            note = "x-zero-row"
        else:
            i, j = neg
            row_total = sum(xs.entries[i], Fraction(0))
            t = 1 + (max(row_total, Fraction(0)) + 1) / (-xs.entries[i][j])
            entries = [Fraction(1)] * m
            entries[j] = t
            col = Vector(entries)
            note = "x-negative-entry"
    a = column_matrix(col)
    return _checked(
        FalsifyCertificate(
            "image-leaves-class", CLASS_MSP, x, y, a, image=x @ a @ y, note=note
        )
    )


def _no_preimage_certificate(lmap: PreserverMap) -> FalsifyCertificate:
    """For singular X (with Y invertible): a semipositive matrix outside the
    image of the map, witnessed by a left-null vector of X."""
    x, y = lmap.x, lmap.y
    m, n = lmap.space
    q = x.transpose().kernel_vector()
    if q is None:
        raise InvalidInputError("X is invertible; no such certificate exists")
    lead = next(i for i in range(m) if q[i] != 0)
    z = ones_vector(m)
    if q.dot(z) == 0:
        z = z + basis_vector(m, lead)
    c = y.transpose() @ ones_vector(n)
    a = outer(z, c)
    return _checked(
        FalsifyCertificate(
            "no-preimage",
            CLASS_SP,
            x,
            y,
            a,
            probe=z,
            probe_image=q,
            note="x-singular-no-preimage",
        )
    )


def _canonical_msp(m: int, n: int) -> Matrix:
    return vstack(Matrix.identity(n), Matrix.ones(m - n, n))


def _checked(cert: FalsifyCertificate) -> FalsifyCertificate:
    if not cert.verify():
        raise ArithmeticError(f"falsification certificate failed ({cert.note})")
    return cert
