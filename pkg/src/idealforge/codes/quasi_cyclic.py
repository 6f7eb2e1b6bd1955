"""phi-quasi-cyclic codes over prime fields.

A code is generated by (a, b) in F[x]/<phi1> x F[x]/<phi2>: it is the image of
the encoding map f -> (f a mod phi1, f b mod phi2) on messages f of degree
below k + l - m, where k = deg phi1, l = deg phi2 and m = deg gcd(phi1, phi2).
With phi3 = gcd(phi1, phi2):

    g = gcd(a, phi1/phi3) * gcd(b, phi2/phi3) * gcd(a, b, phi3)
    h = phi1 phi2 / (phi3 g)

the kernel of encoding is <h> and the code has dimension deg h.
"""

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Any

from ..algebra import (
    DenseMatrix,
    EchelonBasis,
    FieldSpec,
    Polynomial,
    Value,
    mat_rank,
    poly_gcd,
    poly_gcd_many,
    row_spaces_equal,
)
from ..config import DEFAULT_ENUMERATION_BOUND
from ..exceptions import (
    DegreeTooLarge,
    FieldMismatch,
    IndexOutOfRange,
    InvariantViolation,
    NotPrimeField,
    SpanDeficit,
    TooLarge,
    ZeroCode,
)
from ..ideal import RotationMatrix, build_ideal_matrix, build_rotation, require_squarefree
from ..log_handler import get_structured_logger
from .residue import ResidueRing

logger = get_structured_logger(__name__, component="codes")


def _degree(p: Polynomial) -> int:
    return len(p.values) - 1


@dataclass(frozen=True)
class Codeword:
    """(a_0, ..., a_{k-1} | b_0, ..., b_{l-1})"""

    left: tuple[Value, ...]
    right: tuple[Value, ...]

    @property
    def values(self) -> tuple[Value, ...]:
        return self.left + self.right

    @property
    def weight(self) -> int:
        return sum(1 for v in self.values if v != 0)

    @property
    def is_zero(self) -> bool:
        return self.weight == 0

    def to_strings(self) -> list[str]:
        return [str(v) for v in self.values]


@dataclass(frozen=True)
class QuasiCyclicCode:
    field: FieldSpec
    phi1: Polynomial
    phi2: Polynomial
    phi3: Polynomial
    a_bar: Polynomial
    b_bar: Polynomial
    g_bar: Polynomial
    h_bar: Polynomial
    k: int
    l: int  # noqa: E741
    m: int
    t: int
    dim: int
    d_cor: int

    @cached_property
    def H1(self) -> RotationMatrix:
        return build_rotation(self.phi1)

    @cached_property
    def H2(self) -> RotationMatrix:
        return build_rotation(self.phi2)

    @cached_property
    def ring1(self) -> ResidueRing:
        return ResidueRing(self.phi1)

    @cached_property
    def ring2(self) -> ResidueRing:
        return ResidueRing(self.phi2)

    @cached_property
    def message_ring(self) -> ResidueRing:
        """F[x]/<phi1 phi2 / phi3>, the messages of degree < k + l - m."""
        return ResidueRing((self.phi1 * self.phi2).exact_div(self.phi3))

    @cached_property
    def generator(self) -> DenseMatrix:
        """Block generator matrix, checked once against the encode(x^s) rows."""
        return _checked_generator(self)

    @cached_property
    def codewords(self) -> tuple[Codeword, ...]:
        """Distinct codewords; ``enumerate_codewords`` guards the message-space size."""
        seen: dict[Codeword, None] = {}
        for f in self.message_ring.elements():
            seen.setdefault(_image(self, f), None)
        return tuple(seen)

    @property
    def message_dim(self) -> int:
        return self.k + self.l - self.m

    @property
    def rows_available(self) -> int:
        """kl/t, the row count of the block generator matrix."""
        return self.k * self.l // self.t

    @property
    def r(self) -> int:
        """Size of the consecutive row windows claimed to generate the code."""
        return min(self.rows_available, self.k + self.l - self.d_cor)

    @property
    def span_deficit(self) -> bool:
        return self.r < self.dim

    @property
    def degree_identity_holds(self) -> bool:
        return self.dim == self.k + self.l - self.d_cor

    def descriptor(self) -> dict[str, Any]:
        """Input form of the code, readable by ``formats.load_code_descriptor``."""
        return {
            "field": self.field.tag,
            "phi1": self.phi1.to_strings(),
            "phi2": self.phi2.to_strings(),
            "a": self.a_bar.to_strings(),
            "b": self.b_bar.to_strings(),
        }

    def to_dict(self) -> dict[str, Any]:
        return {
            **self.descriptor(),
            "phi3": self.phi3.to_strings(),
            "g_bar": self.g_bar.to_strings(),
            "h_bar": self.h_bar.to_strings(),
            "k": self.k,
            "l": self.l,
            "m": self.m,
            "t": self.t,
            "dim": self.dim,
            "d": self.d_cor,
        }


def build_code(
    field: FieldSpec,
    phi1: Polynomial,
    phi2: Polynomial,
    a_bar: Polynomial,
    b_bar: Polynomial,
) -> QuasiCyclicCode:
    """Build the code generated by (a_bar, b_bar) and derive g, h and the dimension.

    Raises:
        NotPrimeField: field is Q
        NotMonic, ZeroConstantTerm, DegreeZero: invalid moduli
        NotSquarefree: phi1 or phi2 has a repeated root
        DegreeTooLarge: deg a_bar >= k or deg b_bar >= l
    """
    if not field.is_prime_field:
        raise NotPrimeField(f"codes are built over prime fields, got {field}")
    for p in (phi1, phi2, a_bar, b_bar):
        if p.field != field:
            raise FieldMismatch(f"polynomial over {p.field} for a code over {field}")

    H1, H2 = build_rotation(phi1), build_rotation(phi2)
    require_squarefree(H1, H2)
    k, l = H1.n, H2.n  # noqa: E741
    if len(a_bar.values) > k:
        raise DegreeTooLarge(f"deg a = {a_bar.degree} must be below k = {k}")
    if len(b_bar.values) > l:
        raise DegreeTooLarge(f"deg b = {b_bar.degree} must be below l = {l}")

    phi3 = poly_gcd(phi1, phi2)
    g_bar = (
        poly_gcd(a_bar, phi1.exact_div(phi3))
        * poly_gcd(b_bar, phi2.exact_div(phi3))
        * poly_gcd_many(a_bar, b_bar, phi3)
    )
    lcm_poly = (phi1 * phi2).exact_div(phi3)
    h_bar = lcm_poly.exact_div(g_bar)

    d_poly = (poly_gcd(a_bar, phi1) * poly_gcd(b_bar, phi2) * phi3).exact_div(
        poly_gcd(a_bar * b_bar, phi3)
    )

    code = QuasiCyclicCode(
        field=field,
        phi1=phi1,
        phi2=phi2,
        phi3=phi3,
        a_bar=a_bar,
        b_bar=b_bar,
        g_bar=g_bar,
        h_bar=h_bar,
        k=k,
        l=l,
        m=_degree(phi3),
        t=math.gcd(k, l),
        dim=_degree(h_bar),
        d_cor=_degree(d_poly),
    )
    logger.debug(
        "Built quasi-cyclic code", field=field.tag, k=k, l=l, dim=code.dim, d=code.d_cor
    )
    return code


# =============================================================================
# Encoding
# =============================================================================


def _image(code: QuasiCyclicCode, f: Polynomial) -> Codeword:
    return Codeword(
        left=code.ring1.vector(f * code.a_bar),
        right=code.ring2.vector(f * code.b_bar),
    )


def encode(code: QuasiCyclicCode, f: Polynomial) -> Codeword:
    """(f a mod phi1, f b mod phi2) for a message of degree < k + l - m."""
    return _image(code, code.message_ring.check(f))


def kernel_check(code: QuasiCyclicCode, f: Polynomial) -> bool:
    """True iff f encodes to the zero word; cross-checked against divisibility by h."""
    in_kernel = encode(code, f).is_zero
    divisible = (f % code.h_bar).is_zero
    if in_kernel != divisible:
        raise InvariantViolation(
            f"encode({f}) is {'zero' if in_kernel else 'nonzero'} but h = {code.h_bar} "
            f"{'does' if divisible else 'does not'} divide it"
        )
    return in_kernel


# =============================================================================
# Generator matrices
# =============================================================================


def _block_generator(code: QuasiCyclicCode) -> DenseMatrix:
    """Stack [A (H1^T)^{ki} | B (H2^T)^{lj}] with A = H*(a)^T and B = H*(b)^T."""
    k, l, t = code.k, code.l, code.t
    A = build_ideal_matrix(code.H1, code.a_bar, k).transpose()
    B = build_ideal_matrix(code.H2, code.b_bar, l).transpose()
    step1 = code.H1.matrix.transpose().power(k)
    step2 = code.H2.matrix.transpose().power(l)

    left_blocks, block = [], A
    for _ in range(l // t):
        left_blocks.append(block)
        block = block @ step1
    right_blocks, block = [], B
    for _ in range(k // t):
        right_blocks.append(block)
        block = block @ step2
    return DenseMatrix.hstack(DenseMatrix.vstack(*left_blocks), DenseMatrix.vstack(*right_blocks))


def _power_generator(code: QuasiCyclicCode) -> DenseMatrix:
    rows = [
        _image(code, Polynomial.monomial(code.field, s)).values for s in range(code.rows_available)
    ]
    return DenseMatrix.from_rows(code.field, rows)


def _checked_generator(code: QuasiCyclicCode) -> DenseMatrix:
    block = _block_generator(code)
    power = _power_generator(code)
    if block != power:
        raise InvariantViolation("block generator matrix differs from the encode(x^s) rows")
    return block


def generator_matrix_full(code: QuasiCyclicCode) -> DenseMatrix:
    """The kl/t x (k+l) block generator matrix; row s is encode(x^s).

    Built and checked once per code.
    """
    return code.generator


def code_span_reference(code: QuasiCyclicCode, bound: int | None = None) -> DenseMatrix:
    """Echelon basis of the code.

    Built from the enumerated codewords when that fits in ``bound``; otherwise
    from encode(x^s) for s < k + l - m, which spans the same space.
    """
    basis = EchelonBasis(code.field, code.k + code.l)
    try:
        words = enumerate_codewords(code, bound)
    except TooLarge:
        logger.debug("Enumeration too large, using monomial images as span reference")
        words = [_image(code, Polynomial.monomial(code.field, s)) for s in range(code.message_dim)]
    basis.extend(w.values for w in words)
    return DenseMatrix.from_rows(code.field, basis.rows(), code.k + code.l)


def generator_matrix_minimal(
    code: QuasiCyclicCode,
    start_row: int,
    bound: int | None = None,
    reference: DenseMatrix | None = None,
) -> DenseMatrix:
    """Rows start_row .. start_row + r - 1 of the full generator matrix.

    ``reference`` is a precomputed ``code_span_reference`` for callers that
    check many windows of the same code.

    Raises:
        IndexOutOfRange: the window runs past kl/t rows
        SpanDeficit: r < dim, or the rows do not span the code
        InvariantViolation: the selected rows are dependent
    """
    r = code.r
    if start_row < 0 or start_row + r > code.rows_available:
        raise IndexOutOfRange(
            f"rows {start_row}..{start_row + r - 1} outside 0..{code.rows_available - 1}"
        )
    if r < code.dim:
        raise SpanDeficit(
            f"{r} consecutive rows cannot span a code of dimension {code.dim}",
            r=r,
            dim=code.dim,
            rows_available=code.rows_available,
        )

    rows = code.generator.row_block(start_row, r)
    if mat_rank(rows) != r:
        raise InvariantViolation(f"rows {start_row}..{start_row + r - 1} are dependent")
    if r == code.dim:
        if reference is None:
            reference = code_span_reference(code, bound)
        if not row_spaces_equal(rows, reference):
            raise SpanDeficit(
                f"rows {start_row}..{start_row + r - 1} do not span the code",
                r=r,
                dim=code.dim,
                rows_available=code.rows_available,
            )
    return rows


# =============================================================================
# Enumeration
# =============================================================================


def _check_enumerable(code: QuasiCyclicCode, bound: int | None) -> None:
    limit = DEFAULT_ENUMERATION_BOUND if bound is None else bound
    size = code.message_ring.size()
    if size > limit:
        raise TooLarge(f"{size} messages exceed the enumeration bound {limit}")


def enumerate_codewords(code: QuasiCyclicCode, bound: int | None = None) -> list[Codeword]:
    """Distinct codewords, in lexicographic order of their first message."""
    _check_enumerable(code, bound)
    return list(code.codewords)


def is_shift_closed(words: list[Codeword], phi1: Polynomial, phi2: Polynomial) -> bool:
    """True iff (x c1 mod phi1, x c2 mod phi2) is in ``words`` for every word."""
    ring1, ring2 = ResidueRing(phi1), ResidueRing(phi2)
    members = set(words)
    for w in words:
        shifted = Codeword(
            left=ring1.vector(ring1.shift(Polynomial(phi1.field, w.left))),
            right=ring2.vector(ring2.shift(Polynomial(phi2.field, w.right))),
        )
        if shifted not in members:
            return False
    return True


def shift_closure_check(code: QuasiCyclicCode, bound: int | None = None) -> bool:
    return is_shift_closed(enumerate_codewords(code, bound), code.phi1, code.phi2)


def minimum_distance(code: QuasiCyclicCode, bound: int | None = None) -> int:
    """Minimum Hamming weight over the nonzero codewords (exhaustive)."""
    if code.dim == 0:
        raise ZeroCode("the zero code has no nonzero codewords")
    return min(w.weight for w in enumerate_codewords(code, bound) if not w.is_zero)


def isomorphism_check(code: QuasiCyclicCode, bound: int | None = None) -> bool:
    """Encoding restricted to <g> is a bijection onto the code."""
    _check_enumerable(code, bound)
    ideal = code.message_ring.principal_ideal(code.g_bar)
    images = {_image(code, u) for u in ideal}
    assert code.field.modulus is not None
    expected = code.field.modulus**code.dim
    return (
        len(ideal) == expected
        and len(images) == expected
        and images == set(enumerate_codewords(code, bound))
    )
