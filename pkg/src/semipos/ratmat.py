"""Exact rational vectors, matrices, and elimination-based linear algebra.

Every scalar is a ``fractions.Fraction`` in canonical reduced form, so all
sign tests, comparisons, and equalities used elsewhere in the package are
exact decisions.  Binary floating point never enters: decimal strings such
as ``"0.5"`` are converted digit-exactly.

Determinants and ranks run on integer grids via Bareiss-style fraction-free
elimination after clearing row denominators; inversion and kernel extraction
use Gauss-Jordan over canonical fractions.  Intended scale is dense matrices
up to roughly 12x12.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence, Union

RationalLike = Union[Fraction, int, str]

_ZERO = Fraction(0)
_ONE = Fraction(1)


class DimensionError(ValueError):
    """Operand shapes do not fit the requested operation."""


class SingularMatrixError(ValueError):
    """A matrix required to be invertible has determinant zero."""


class InvalidInputError(ValueError):
    """An argument violates a documented precondition."""


class MatrixParseError(ValueError):
    """Matrix or vector text is malformed."""


def parse_rational(text: str) -> Fraction:
    """Parse ``"3"``, ``"-4/7"``, or an exact decimal such as ``"0.125"``."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise MatrixParseError(f"bad rational {text.strip()!r}: {exc}") from None


def rat(value: RationalLike) -> Fraction:
    """Coerce an int, string, or Fraction to a Fraction; floats are rejected."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"cannot convert {type(value).__name__} to an exact rational")


@dataclass(frozen=True)
class SignProfile:
    """Exact sign census of a vector's entries."""

    has_positive: bool
    has_negative: bool
    has_zero: bool

    @property
    def mixed(self) -> bool:
        return self.has_positive and self.has_negative

    @property
    def nonneg(self) -> bool:
        return not self.has_negative

    @property
    def positive(self) -> bool:
        return self.has_positive and not self.has_negative and not self.has_zero


@dataclass(frozen=True, init=False)
class Vector:
    entries: tuple[Fraction, ...]

    def __init__(self, entries: Iterable[RationalLike]):
        tup = tuple(rat(x) for x in entries)
        if not tup:
            raise DimensionError("a vector needs at least one entry")
        object.__setattr__(self, "entries", tup)

    @property
    def dim(self) -> int:
        return len(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self.entries)

    def __getitem__(self, i: int) -> Fraction:
        return self.entries[i]

    def __add__(self, other: "Vector") -> "Vector":
        if self.dim != other.dim:
            raise DimensionError("vector dimensions differ")
        return Vector(a + b for a, b in zip(self.entries, other.entries))

    def __sub__(self, other: "Vector") -> "Vector":
        return self + (-other)

    def __neg__(self) -> "Vector":
        return Vector(-a for a in self.entries)

    def __mul__(self, c: RationalLike) -> "Vector":
        f = rat(c)
        return Vector(a * f for a in self.entries)

    __rmul__ = __mul__

    def dot(self, other: "Vector") -> Fraction:
        if self.dim != other.dim:
            raise DimensionError("vector dimensions differ")
        return sum((a * b for a, b in zip(self.entries, other.entries)), _ZERO)

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.entries)

    def is_nonneg(self) -> bool:
        return all(a >= 0 for a in self.entries)

    def is_nonpos(self) -> bool:
        return all(a <= 0 for a in self.entries)

    def is_positive(self) -> bool:
        return all(a > 0 for a in self.entries)

    def has_mixed_signs(self) -> bool:
        return sign_profile(self).mixed

    def to_strings(self) -> list[str]:
        return [str(a) for a in self.entries]

    def __str__(self) -> str:
        return " ".join(self.to_strings())


def sign_profile(v: Vector) -> SignProfile:
    return SignProfile(
        has_positive=any(a > 0 for a in v.entries),
        has_negative=any(a < 0 for a in v.entries),
        has_zero=any(a == 0 for a in v.entries),
    )


@dataclass(frozen=True, init=False)
class Matrix:
    entries: tuple[tuple[Fraction, ...], ...]

    def __init__(self, rows: Iterable[Iterable[RationalLike]]):
        grid = tuple(tuple(rat(x) for x in row) for row in rows)
        if not grid or not grid[0]:
            raise DimensionError("a matrix needs at least one row and one column")
        width = len(grid[0])
        if any(len(row) != width for row in grid):
            raise DimensionError("rows have unequal lengths")
        object.__setattr__(self, "entries", grid)

    # -- construction helpers -------------------------------------------------

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([[_ONE if i == j else _ZERO for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, m: int, n: int) -> "Matrix":
        return cls([[_ZERO] * n for _ in range(m)])

    @classmethod
    def ones(cls, m: int, n: int) -> "Matrix":
        return cls([[_ONE] * n for _ in range(m)])

    @classmethod
    def from_cols(cls, cols: Sequence[Vector]) -> "Matrix":
        if not cols:
            raise DimensionError("need at least one column")
        m = cols[0].dim
        if any(c.dim != m for c in cols):
            raise DimensionError("columns have unequal lengths")
        return cls([[c[i] for c in cols] for i in range(m)])

    @classmethod
    def from_rows(cls, rows: Sequence[Vector]) -> "Matrix":
        return cls([list(r.entries) for r in rows])

    @classmethod
    def diagonal(cls, values: Sequence[RationalLike]) -> "Matrix":
        vals = [rat(v) for v in values]
        n = len(vals)
        return cls([[vals[i] if i == j else _ZERO for j in range(n)] for i in range(n)])

    # -- shape and access -----------------------------------------------------

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0])

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def row(self, i: int) -> Vector:
        return Vector(self.entries[i])

    def col(self, j: int) -> Vector:
        return Vector(row[j] for row in self.entries)

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self.entries[i][j]

    # -- arithmetic -----------------------------------------------------------

    def __neg__(self) -> "Matrix":
        return Matrix([[-x for x in row] for row in self.entries])

    def __mul__(self, c: RationalLike) -> "Matrix":
        f = rat(c)
        return Matrix([[x * f for x in row] for row in self.entries])

    __rmul__ = __mul__

    def __matmul__(self, other: "Matrix | Vector"):
        if isinstance(other, Vector):
            if other.dim != self.cols:
                raise DimensionError(f"cannot apply {self.shape} matrix to {other.dim}-vector")
            return Vector(
                sum((row[k] * other.entries[k] for k in range(self.cols)), _ZERO)
                for row in self.entries
            )
        if isinstance(other, Matrix):
            if self.cols != other.rows:
                raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
            ot = other.transpose().entries
            return Matrix(
                [
                    [sum((row[k] * col[k] for k in range(self.cols)), _ZERO) for col in ot]
                    for row in self.entries
                ]
            )
        return NotImplemented

    def transpose(self) -> "Matrix":
        return Matrix([[self.entries[i][j] for i in range(self.rows)] for j in range(self.cols)])

    def delete_col(self, j: int) -> "Matrix":
        if self.cols == 1:
            raise DimensionError("cannot delete the only column")
        return Matrix([row[:j] + row[j + 1 :] for row in self.entries])

    def take_rows(self, k: int) -> "Matrix":
        if not 1 <= k <= self.rows:
            raise DimensionError(f"cannot take {k} rows from {self.rows}")
        return Matrix(self.entries[:k])

    # -- sign predicates --------------------------------------------------------

    def is_nonneg(self) -> bool:
        return all(x >= 0 for row in self.entries for x in row)

    def is_nonpos(self) -> bool:
        return all(x <= 0 for row in self.entries for x in row)

    def is_positive(self) -> bool:
        return all(x > 0 for row in self.entries for x in row)

    def has_zero_row(self) -> bool:
        return any(all(x == 0 for x in row) for row in self.entries)

    # -- elimination kernels ----------------------------------------------------

    def _integer_grid(self) -> tuple[list[list[int]], Fraction]:
        """Clear denominators row by row; returns (grid, product of row scales)."""
        grid: list[list[int]] = []
        scale = _ONE
        for row in self.entries:
            lcm = 1
            for x in row:
                lcm = math.lcm(lcm, x.denominator)
            scale *= lcm
            grid.append([int(x * lcm) for x in row])
        return grid, scale

    def det(self) -> Fraction:
        """Exact determinant by fraction-free (Bareiss) elimination."""
        if not self.is_square:
            raise DimensionError("determinant requires a square matrix")
        n = self.rows
        grid, scale = self._integer_grid()
        sign = 1
        prev = 1
        for k in range(n - 1):
            pivot_row = next((i for i in range(k, n) if grid[i][k] != 0), None)
            if pivot_row is None:
                return _ZERO
            if pivot_row != k:
                grid[k], grid[pivot_row] = grid[pivot_row], grid[k]
                sign = -sign
            pivot = grid[k][k]
            for i in range(k + 1, n):
                head = grid[i][k]
                row_i = grid[i]
                row_k = grid[k]
                for j in range(k + 1, n):
                    row_i[j] = (row_i[j] * pivot - head * row_k[j]) // prev
                row_i[k] = 0
            prev = pivot
        return Fraction(sign * grid[n - 1][n - 1]) / scale

    def rank(self) -> int:
        """Exact rank by Gaussian elimination over the rationals."""
        rows = [list(r) for r in self.entries]
        m, n = self.rows, self.cols
        r = 0
        for c in range(n):
            pivot_row = next((i for i in range(r, m) if rows[i][c] != 0), None)
            if pivot_row is None:
                continue
            rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
            pivot = rows[r][c]
            for i in range(r + 1, m):
                if rows[i][c] != 0:
                    f = rows[i][c] / pivot
                    rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
            r += 1
            if r == m:
                break
        return r

    def inverse(self) -> "Matrix":
        """Exact inverse by Gauss-Jordan; raises SingularMatrixError if det = 0."""
        if not self.is_square:
            raise DimensionError("inverse requires a square matrix")
        n = self.rows
        aug = [list(self.entries[i]) + [_ONE if i == j else _ZERO for j in range(n)] for i in range(n)]
        for c in range(n):
            pivot_row = next((i for i in range(c, n) if aug[i][c] != 0), None)
            if pivot_row is None:
                raise SingularMatrixError("matrix is singular")
            aug[c], aug[pivot_row] = aug[pivot_row], aug[c]
            pivot = aug[c][c]
            aug[c] = [x / pivot for x in aug[c]]
            for i in range(n):
                if i != c and aug[i][c] != 0:
                    f = aug[i][c]
                    aug[i] = [a - f * b for a, b in zip(aug[i], aug[c])]
        inv = Matrix([row[n:] for row in aug])
        if self @ inv != Matrix.identity(n):
            raise ArithmeticError("inverse self-check failed")
        return inv

    def kernel_vector(self) -> "Vector | None":
        """One nonzero x with Ax = 0, or None if the columns are independent."""
        rows = [list(r) for r in self.entries]
        m, n = self.rows, self.cols
        pivots: list[int] = []
        r = 0
        for c in range(n):
            pivot_row = next((i for i in range(r, m) if rows[i][c] != 0), None)
            if pivot_row is None:
                continue
            rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
            pivot = rows[r][c]
            rows[r] = [x / pivot for x in rows[r]]
            for i in range(m):
                if i != r and rows[i][c] != 0:
                    f = rows[i][c]
                    rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
            pivots.append(c)
            r += 1
        free = [c for c in range(n) if c not in pivots]
        if not free:
            return None
        f = free[0]
        x = [_ZERO] * n
        x[f] = _ONE
        for ri, c in enumerate(pivots):
            x[c] = -rows[ri][f]
        return Vector(x)

    def to_strings(self) -> list[list[str]]:
        return [[str(x) for x in row] for row in self.entries]

    def __str__(self) -> str:
        return "\n".join(" ".join(cell for cell in row) for row in self.to_strings())


# -- free constructors and helpers -------------------------------------------


def ones_vector(n: int) -> Vector:
    return Vector([_ONE] * n)


def basis_vector(n: int, i: int) -> Vector:
    if not 0 <= i < n:
        raise DimensionError(f"basis index {i} out of range for dimension {n}")
    return Vector([_ONE if j == i else _ZERO for j in range(n)])


def outer(u: Vector, v: Vector) -> Matrix:
    return Matrix([[a * b for b in v.entries] for a in u.entries])


def hstack(a: Matrix, b: Matrix) -> Matrix:
    if a.rows != b.rows:
        raise DimensionError("hstack needs equal row counts")
    return Matrix([ra + rb for ra, rb in zip(a.entries, b.entries)])


def vstack(a: Matrix, b: Matrix) -> Matrix:
    if a.cols != b.cols:
        raise DimensionError("vstack needs equal column counts")
    return Matrix(list(a.entries) + list(b.entries))


def column_matrix(v: Vector) -> Matrix:
    return Matrix([[x] for x in v.entries])


def permutation_matrix(perm: Sequence[int]) -> Matrix:
    """P with (P x)_i = x[perm[i]]; perm must be a permutation of 0..n-1."""
    n = len(perm)
    if sorted(perm) != list(range(n)):
        raise InvalidInputError(f"{perm!r} is not a permutation of 0..{n - 1}")
    return Matrix([[_ONE if j == perm[i] else _ZERO for j in range(n)] for i in range(n)])


def permutation_sign(perm: Sequence[int]) -> int:
    inversions = sum(
        1 for i in range(len(perm)) for j in range(i + 1, len(perm)) if perm[i] > perm[j]
    )
    return -1 if inversions % 2 else 1


# -- text formats --------------------------------------------------------------


def parse_vector_text(text: str, source: str = "<vector>") -> Vector:
    """Whitespace-separated entries, e.g. ``"1 0 -5/2 0.25"``."""
    tokens = text.split()
    if not tokens:
        raise MatrixParseError(f"{source}: empty vector")
    try:
        return Vector(parse_rational(tok) for tok in tokens)
    except MatrixParseError as exc:
        raise MatrixParseError(f"{source}: {exc}") from None


def parse_matrix_text(text: str, source: str = "<matrix>") -> Matrix:
    """One row per line; blank lines and ``#`` comments ignored."""
    rows: list[list[Fraction]] = []
    first_width: int | None = None
    first_line = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            row = [parse_rational(tok) for tok in line.split()]
        except MatrixParseError as exc:
            raise MatrixParseError(f"{source}, line {lineno}: {exc}") from None
        if first_width is None:
            first_width = len(row)
            first_line = lineno
        elif len(row) != first_width:
            raise MatrixParseError(
                f"{source}, line {lineno}: row has {len(row)} entries, "
                f"but line {first_line} has {first_width}"
            )
        rows.append(row)
    if not rows:
        raise MatrixParseError(f"{source}: no matrix rows found")
    return Matrix(rows)
