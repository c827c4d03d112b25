"""Exact-arithmetic tools for semipositive matrix classes, constructive
witnesses, and linear preserver checks."""

from .ratmat import (
    DimensionError,
    InvalidInputError,
    Matrix,
    MatrixParseError,
    SignProfile,
    SingularMatrixError,
    Vector,
    sign_profile,
)

__version__ = "0.1.0"

__all__ = [
    "DimensionError",
    "InvalidInputError",
    "Matrix",
    "MatrixParseError",
    "SignProfile",
    "SingularMatrixError",
    "Vector",
    "sign_profile",
    "__version__",
]
