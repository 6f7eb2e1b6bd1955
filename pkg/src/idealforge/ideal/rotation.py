"""Rotation matrices and the (double) generalized ideal matrices built from them.

The modulus is stored as a monic polynomial

    phi(x) = x^n - phi_{n-1} x^{n-1} - ... - phi_1 x - phi_0

and the rotation matrix carries (phi_0, ..., phi_{n-1}) in its last column, with
the identity I_{n-1} in the lower-left block. Multiplying a coefficient vector
by H is multiplication by x modulo phi.
"""

from collections.abc import Sequence
from dataclasses import dataclass
from functools import cached_property

from ..algebra import DenseMatrix, FieldSpec, Polynomial, Value
from ..exceptions import DegreeZero, DimensionMismatch, FieldMismatch, NotMonic, ZeroConstantTerm


@dataclass(frozen=True)
class RotationMatrix:
    """H_phi for a monic phi with nonzero constant term."""

    phi: Polynomial

    @property
    def field(self) -> FieldSpec:
        return self.phi.field

    @property
    def n(self) -> int:
        return len(self.phi.values) - 1

    @cached_property
    def column(self) -> tuple[Value, ...]:
        """The rotation column (phi_0, ..., phi_{n-1})."""
        f = self.field
        return tuple(f.neg(c) for c in self.phi.values[:-1])

    @cached_property
    def matrix(self) -> DenseMatrix:
        n, f = self.n, self.field
        values = [f.zero] * (n * n)
        for i in range(1, n):
            values[i * n + i - 1] = f.one
        for i, c in enumerate(self.column):
            values[i * n + n - 1] = c
        return DenseMatrix(f, n, n, tuple(values))

    def apply(self, vector: Sequence[Value]) -> tuple[Value, ...]:
        """H @ vector, i.e. x * v(x) mod phi."""
        if len(vector) != self.n:
            raise DimensionMismatch(
                f"vector of length {len(vector)} for rotation of order {self.n}"
            )
        f = self.field
        top = vector[-1]
        shifted = (f.zero,) + tuple(vector[:-1])
        return tuple(f.add(s, f.mul(top, c)) for s, c in zip(shifted, self.column))


def build_rotation(phi: Polynomial) -> RotationMatrix:
    """Validate phi and wrap it as a rotation matrix.

    Raises:
        DegreeZero: deg phi < 1
        NotMonic: leading coefficient is not 1
        ZeroConstantTerm: phi(0) = 0, so H would be singular
    """
    if phi.is_zero or phi.degree < 1:
        raise DegreeZero(f"rotation modulus must have degree >= 1, got {phi}")
    if not phi.is_monic:
        raise NotMonic(f"rotation modulus must be monic, got {phi}")
    if phi.values[0] == 0:
        raise ZeroConstantTerm(f"rotation modulus must have a nonzero constant term, got {phi}")
    return RotationMatrix(phi)


def circulant_phi(field: FieldSpec, n: int) -> Polynomial:
    """x^n - 1, whose ideal matrices are the circulant matrices."""
    return r_circulant_phi(field, n, 1)


def r_circulant_phi(field: FieldSpec, n: int, r: Value) -> Polynomial:
    """x^n - r, whose ideal matrices are the r-circulant matrices."""
    return Polynomial.monomial(field, n) - Polynomial(field, (r,))


def phi_from_column(field: FieldSpec, column: Sequence[Value]) -> Polynomial:
    """Monic phi whose rotation column is ``column``."""
    return Polynomial.monomial(field, len(column)) - Polynomial(field, field.vector(column))


def _generator_vector(H: RotationMatrix, f: "Sequence[Value] | Polynomial") -> tuple[Value, ...]:
    if isinstance(f, Polynomial):
        if f.field != H.field:
            raise FieldMismatch(f"generator over {f.field} for rotation over {H.field}")
        return f.to_vector(H.n)
    if len(f) != H.n:
        raise DimensionMismatch(f"generator of length {len(f)} for rotation of order {H.n}")
    return H.field.vector(f)


def shift_generator(
    H: RotationMatrix, f: "Sequence[Value] | Polynomial", s: int
) -> tuple[Value, ...]:
    """H^s f, the generator whose ideal matrix starts at column s of that of f."""
    v = _generator_vector(H, f)
    for _ in range(s):
        v = H.apply(v)
    return v


def build_ideal_matrix(H: RotationMatrix, f: "Sequence[Value] | Polynomial", m: int) -> DenseMatrix:
    """The n x m generalized ideal matrix [f, Hf, ..., H^{m-1} f]."""
    if m < 1:
        raise DimensionMismatch(f"an ideal matrix needs m >= 1 columns, got {m}")
    v = _generator_vector(H, f)
    columns = [v]
    for _ in range(m - 1):
        v = H.apply(v)
        columns.append(v)
    return DenseMatrix.from_columns(H.field, columns)


def build_double_ideal(
    H1: RotationMatrix,
    H2: RotationMatrix,
    f1: "Sequence[Value] | Polynomial",
    f2: "Sequence[Value] | Polynomial",
    m: int,
) -> DenseMatrix:
    """The (n1+n2) x m double ideal matrix: H1's ideal matrix stacked on H2's."""
    if H1.field != H2.field:
        raise FieldMismatch(f"rotations over {H1.field} and {H2.field}")
    return DenseMatrix.vstack(build_ideal_matrix(H1, f1, m), build_ideal_matrix(H2, f2, m))


def generator_polynomial(H: RotationMatrix, f: "Sequence[Value] | Polynomial") -> Polynomial:
    """f(x) for a generator given as a coefficient vector."""
    return Polynomial(H.field, _generator_vector(H, f))
