"""Spectral identities of rotation and ideal matrices over split moduli.

When phi has n distinct roots w_1..w_n in the working field, (1, w, ..., w^{n-1})
is an eigenvector of H^T with eigenvalue w, and the ideal matrix factors through
the generalized Vandermonde matrix:

    [H*(f)_{n x m}]^T V_n = V_{m x n} diag(f(w_1), ..., f(w_n)).

Everything here is exact and refuses incomplete root sets.
"""

from collections.abc import Sequence
from dataclasses import dataclass

from ..algebra import DenseMatrix, FieldSpec, RootSet, Value
from ..exceptions import FieldMismatch, IncompleteRoots, InvalidArgument, InvariantViolation
from ..log_handler import get_structured_logger
from .reports import Generator
from .rotation import RotationMatrix, build_double_ideal, build_ideal_matrix, generator_polynomial

logger = get_structured_logger(__name__, component="spectral")


def _require_complete(H: RotationMatrix, roots: RootSet) -> None:
    if roots.poly != H.phi:
        raise InvalidArgument(f"roots belong to {roots.poly}, not to phi = {H.phi}")
    if not roots.complete:
        raise IncompleteRoots(f"phi = {H.phi} does not split into distinct linear factors")


def power_vector(field: FieldSpec, w: Value, length: int) -> tuple[Value, ...]:
    """(1, w, ..., w^{length-1})"""
    out = [field.one]
    for _ in range(length - 1):
        out.append(field.mul(out[-1], w))
    return tuple(out[:length])


def vandermonde(field: FieldSpec, roots: Sequence[Value], rows: int) -> DenseMatrix:
    """rows x len(roots) matrix with entry (i, j) = roots[j]^i."""
    return DenseMatrix.from_columns(field, [power_vector(field, w, rows) for w in roots], rows)


def verify_eigenvectors(H: RotationMatrix, roots: RootSet) -> bool:
    """H^T (1, w, ..., w^{n-1}) = w (1, w, ..., w^{n-1}) for every root w."""
    _require_complete(H, roots)
    f = H.field
    Ht = H.matrix.transpose()
    for w in roots.roots:
        v = power_vector(f, w, H.n)
        if Ht.matvec(v) != tuple(f.mul(w, c) for c in v):
            return False
    return True


def verify_row_eigen_identity(H: RotationMatrix, f: Generator, m: int, roots: RootSet) -> bool:
    """[H*(f)_{n x m}]^T (1, ..., w^{n-1}) = f(w) (1, ..., w^{m-1}) for every root w."""
    _require_complete(H, roots)
    field = H.field
    fpoly = generator_polynomial(H, f)
    Mt = build_ideal_matrix(H, fpoly, m).transpose()
    for w in roots.roots:
        fw = fpoly.evaluate(w)
        expected = tuple(field.mul(fw, c) for c in power_vector(field, w, m))
        if Mt.matvec(power_vector(field, w, H.n)) != expected:
            return False
    return True


def verify_vandermonde_identity(H: RotationMatrix, f: Generator, m: int, roots: RootSet) -> bool:
    """Entrywise check of [H*(f)_{n x m}]^T V_n = V_{m x n} diag(f(w_i))."""
    _require_complete(H, roots)
    fpoly = generator_polynomial(H, f)
    field = H.field
    lhs = build_ideal_matrix(H, fpoly, m).transpose() @ vandermonde(field, roots.roots, H.n)
    rhs = vandermonde(field, roots.roots, m) @ DenseMatrix.diagonal(
        field, [fpoly.evaluate(w) for w in roots.roots]
    )
    return lhs == rhs


def verify_double_vandermonde_identity(
    H1: RotationMatrix,
    H2: RotationMatrix,
    f1: Generator,
    f2: Generator,
    m: int,
    roots1: RootSet,
    roots2: RootSet,
) -> bool:
    """Block form: D^T diag(V1, V2) = [V_{m x n1} diag(f1(w)) | V_{m x n2} diag(f2(v))]."""
    _require_complete(H1, roots1)
    _require_complete(H2, roots2)
    field = H1.field
    p1 = generator_polynomial(H1, f1)
    p2 = generator_polynomial(H2, f2)
    D = build_double_ideal(H1, H2, p1, p2, m)
    block_v = DenseMatrix.block_diagonal(
        vandermonde(field, roots1.roots, H1.n), vandermonde(field, roots2.roots, H2.n)
    )
    rhs = DenseMatrix.hstack(
        vandermonde(field, roots1.roots, m)
        @ DenseMatrix.diagonal(field, [p1.evaluate(w) for w in roots1.roots]),
        vandermonde(field, roots2.roots, m)
        @ DenseMatrix.diagonal(field, [p2.evaluate(v) for v in roots2.roots]),
    )
    return D.transpose() @ block_v == rhs


def verify_double_eigen_identity(
    H1: RotationMatrix,
    H2: RotationMatrix,
    f1: Generator,
    f2: Generator,
    m: int,
    roots1: RootSet,
    roots2: RootSet,
) -> bool:
    """Per-root form of the double identity, with right-hand sides of length m.

    D^T (1, ..., w^{n1-1}, 0, ..., 0) = f1(w) (1, ..., w^{m-1}) for roots w of phi1,
    and the mirrored statement for roots of phi2.
    """
    _require_complete(H1, roots1)
    _require_complete(H2, roots2)
    field = H1.field
    p1 = generator_polynomial(H1, f1)
    p2 = generator_polynomial(H2, f2)
    Dt = build_double_ideal(H1, H2, p1, p2, m).transpose()
    zeros1 = (field.zero,) * H1.n
    zeros2 = (field.zero,) * H2.n

    for w in roots1.roots:
        lhs = Dt.matvec(power_vector(field, w, H1.n) + zeros2)
        if lhs != tuple(field.mul(p1.evaluate(w), c) for c in power_vector(field, w, m)):
            return False
    for v in roots2.roots:
        lhs = Dt.matvec(zeros1 + power_vector(field, v, H2.n))
        if lhs != tuple(field.mul(p2.evaluate(v), c) for c in power_vector(field, v, m)):
            return False
    return True


@dataclass(frozen=True)
class KernelVector:
    """A left-kernel vector of the square double ideal matrix and where it came from."""

    family: str  # "first", "second" or "common"
    root: Value
    vector: tuple[Value, ...]


def kernel_family(
    H1: RotationMatrix,
    H2: RotationMatrix,
    f1: Generator,
    f2: Generator,
    roots1: RootSet,
    roots2: RootSet,
) -> list[KernelVector]:
    """Labelled kernel vectors of D^T for the square double ideal matrix D.

    Raises:
        IncompleteRoots: a root set does not split its phi
        InvariantViolation: an emitted vector fails to annihilate D^T
    """
    _require_complete(H1, roots1)
    _require_complete(H2, roots2)
    if H1.field != H2.field:
        raise FieldMismatch(f"rotations over {H1.field} and {H2.field}")
    field = H1.field
    n1, n2 = H1.n, H2.n
    p1 = generator_polynomial(H1, f1)
    p2 = generator_polynomial(H2, f2)
    zeros1 = (field.zero,) * n1
    zeros2 = (field.zero,) * n2

    found: list[KernelVector] = []
    for w in roots1.roots:
        if p1.evaluate(w) == 0:
            found.append(KernelVector("first", w, power_vector(field, w, n1) + zeros2))
    for v in roots2.roots:
        if p2.evaluate(v) == 0:
            found.append(KernelVector("second", v, zeros1 + power_vector(field, v, n2)))
    second_roots = set(roots2.roots)
    for c in roots1.roots:
        if c not in second_roots:
            continue
        a, b = p1.evaluate(c), p2.evaluate(c)
        if a != 0 and b != 0:
            left = tuple(field.mul(field.neg(b), x) for x in power_vector(field, c, n1))
            right = tuple(field.mul(a, x) for x in power_vector(field, c, n2))
            found.append(KernelVector("common", c, left + right))

    Dt = build_double_ideal(H1, H2, p1, p2, n1 + n2).transpose()
    zero = (field.zero,) * (n1 + n2)
    for kv in found:
        if Dt.matvec(kv.vector) != zero:
            raise InvariantViolation(
                f"{kv.family} kernel vector for root {field.format(kv.root)} does not annihilate"
            )
    logger.debug("Kernel vectors emitted", field=field.tag, count=len(found))
    return found


def kernel_vectors_square(
    H1: RotationMatrix,
    H2: RotationMatrix,
    f1: Generator,
    f2: Generator,
    roots1: RootSet,
    roots2: RootSet,
) -> list[tuple[Value, ...]]:
    """Kernel vectors of the transposed square double ideal matrix (m = n1 + n2)."""
    return [kv.vector for kv in kernel_family(H1, H2, f1, f2, roots1, roots2)]
