"""Exact root finding: exhaustive scan over F_p, rational-root theorem over Q."""

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from ..config import get_scan_bound
from ..exceptions import FieldTooLarge, ZeroPolynomial
from ..log_handler import get_structured_logger
from .field import FieldSpec, Scalar, Value
from .polynomial import Polynomial

logger = get_structured_logger(__name__, component="roots")


@dataclass(frozen=True)
class RootSet:
    """Distinct roots of ``poly`` in ``field``.

    ``complete`` is true iff ``poly`` splits into distinct linear factors, in
    which case there are exactly ``deg(poly)`` roots.
    """

    field: FieldSpec
    poly: Polynomial
    roots: tuple[Value, ...]
    complete: bool

    @property
    def scalars(self) -> list[Scalar]:
        return [Scalar(self.field, r) for r in self.roots]

    def __len__(self) -> int:
        return len(self.roots)

    def to_dict(self) -> dict:
        return {
            "field": self.field.tag,
            "poly": self.poly.to_strings(),
            "roots": [self.field.format(r) for r in self.roots],
            "complete": self.complete,
        }


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small = [d for d in range(1, int(n**0.5) + 1) if n % d == 0]
    return sorted(set(small + [n // d for d in small]))


def _rational_candidates(p: Polynomial) -> set[Fraction]:
    """Candidates +-a/b with a | c_0 and b | c_n after clearing denominators."""
    denominators = lcm(*(Fraction(v).denominator for v in p.values))
    integral = [int(Fraction(v) * denominators) for v in p.values]

    # Factor out x^k so the constant term is nonzero
    shift = next(i for i, c in enumerate(integral) if c != 0)
    candidates: set[Fraction] = {Fraction(0)} if shift else set()
    integral = integral[shift:]
    if len(integral) == 1:
        return candidates

    for a in _divisors(integral[0]):
        for b in _divisors(integral[-1]):
            candidates.add(Fraction(a, b))
            candidates.add(Fraction(-a, b))
    return candidates


def find_roots(p: Polynomial, scan_bound: int | None = None) -> RootSet:
    """Distinct roots of ``p`` over its own field, in increasing order.

    Args:
        p: Nonzero polynomial
        scan_bound: Largest modulus scanned exhaustively; defaults to the
            environment/config bound

    Raises:
        ZeroPolynomial: If p is zero
        FieldTooLarge: If the prime modulus exceeds the scan bound
    """
    if p.is_zero:
        raise ZeroPolynomial("the zero polynomial has every element as a root")

    field = p.field
    if field.is_prime_field:
        bound = get_scan_bound() if scan_bound is None else scan_bound
        assert field.modulus is not None
        if field.modulus > bound:
            raise FieldTooLarge(f"modulus {field.modulus} exceeds scan bound {bound}")
        roots = [c for c in field.elements() if p.evaluate(c) == 0]
    else:
        roots = sorted(c for c in _rational_candidates(p) if p.evaluate(c) == 0)

    complete = len(roots) == p.degree
    logger.debug("Root scan finished", field=field.tag, degree=p.degree, found=len(roots))
    return RootSet(field=field, poly=p, roots=tuple(field.vector(roots)), complete=complete)
