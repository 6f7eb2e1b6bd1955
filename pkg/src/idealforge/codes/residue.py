"""Residue rings F[x]/<modulus> with canonical remainder representatives."""

import itertools
from collections.abc import Iterator
from dataclasses import dataclass

from ..algebra import FieldSpec, Polynomial, Value, poly_divmod
from ..exceptions import DegreeZero, DegreeTooLarge, FieldMismatch, NotMonic


@dataclass(frozen=True)
class ResidueRing:
    """F[x]/<modulus>; elements are polynomials of degree < deg(modulus)."""

    modulus: Polynomial

    def __post_init__(self) -> None:
        if self.modulus.is_zero or self.modulus.degree < 1:
            raise DegreeZero(f"residue modulus must have degree >= 1, got {self.modulus}")
        if not self.modulus.is_monic:
            raise NotMonic(f"residue modulus must be monic, got {self.modulus}")

    @property
    def field(self) -> FieldSpec:
        return self.modulus.field

    @property
    def degree(self) -> int:
        return len(self.modulus.values) - 1

    def reduce(self, p: Polynomial) -> Polynomial:
        if p.field != self.field:
            raise FieldMismatch(f"polynomial over {p.field} in a ring over {self.field}")
        return poly_divmod(p, self.modulus)[1]

    def check(self, p: Polynomial) -> Polynomial:
        """Return ``p`` unchanged if it is already a canonical representative."""
        if p.field != self.field:
            raise FieldMismatch(f"polynomial over {p.field} in a ring over {self.field}")
        if len(p.values) > self.degree:
            raise DegreeTooLarge(f"deg {p} >= {self.degree} = deg {self.modulus}")
        return p

    def add(self, a: Polynomial, b: Polynomial) -> Polynomial:
        return self.reduce(a + b)

    def mul(self, a: Polynomial, b: Polynomial) -> Polynomial:
        return self.reduce(a * b)

    def shift(self, a: Polynomial) -> Polynomial:
        """x * a mod modulus."""
        return self.reduce(a * Polynomial.x(self.field))

    def vector(self, p: Polynomial) -> tuple[Value, ...]:
        return self.reduce(p).to_vector(self.degree)

    def elements(self) -> Iterator[Polynomial]:
        """Every element, lexicographic in the ascending coefficient tuple."""
        if not self.field.is_prime_field:
            raise FieldMismatch("only residue rings over prime fields are finite")
        for coefficients in itertools.product(self.field.elements(), repeat=self.degree):
            yield Polynomial(self.field, coefficients)

    def size(self) -> int:
        assert self.field.modulus is not None
        return self.field.modulus**self.degree

    def principal_ideal(self, g: Polynomial) -> list[Polynomial]:
        """Distinct elements of <g>, in order of first appearance over ``elements()``."""
        seen: dict[tuple[Value, ...], Polynomial] = {}
        for u in self.elements():
            product = self.mul(g, u)
            seen.setdefault(product.values, product)
        return list(seen.values())
