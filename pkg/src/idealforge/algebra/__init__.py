"""Exact fields, polynomials, matrices and root finding."""

from .field import FieldKind, FieldSpec, Scalar, Value, is_prime
from .matrix import (
    DenseMatrix,
    EchelonBasis,
    characteristic_polynomial,
    columns_independent,
    mat_rank,
    mat_row_space_contains,
    row_spaces_equal,
)
from .polynomial import (
    Polynomial,
    poly_divmod,
    poly_from_values,
    poly_gcd,
    poly_gcd_many,
    poly_squarefree,
)
from .roots import RootSet, find_roots

__all__ = [
    "DenseMatrix",
    "EchelonBasis",
    "FieldKind",
    "FieldSpec",
    "Polynomial",
    "RootSet",
    "Scalar",
    "Value",
    "characteristic_polynomial",
    "columns_independent",
    "find_roots",
    "is_prime",
    "mat_rank",
    "mat_row_space_contains",
    "poly_divmod",
    "poly_from_values",
    "poly_gcd",
    "poly_gcd_many",
    "poly_squarefree",
    "row_spaces_equal",
]
