"""Dense univariate polynomials over a FieldSpec.

Coefficients are ascending: ``values[i]`` is the coefficient of x^i. The zero
polynomial has no coefficients and degree ``-inf``.
"""

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from functools import reduce

from ..exceptions import (
    DimensionMismatch,
    DivisionByZeroPoly,
    FieldMismatch,
    InvariantViolation,
    ZeroPolynomial,
)
from ..log_handler import get_structured_logger
from .field import FieldSpec, Scalar, Value

logger = get_structured_logger(__name__, component="polynomial")

NEG_INF = float("-inf")


@dataclass(frozen=True)
class Polynomial:
    """Immutable polynomial with canonical, trailing-zero-free coefficients."""

    field: FieldSpec
    values: tuple[Value, ...] = ()

    def __post_init__(self) -> None:
        canonical = list(self.field.vector(self.values))
        while canonical and canonical[-1] == 0:
            canonical.pop()
        object.__setattr__(self, "values", tuple(canonical))

    # -------------------------------------------------------------------------
    # Constructors
    # -------------------------------------------------------------------------

    @classmethod
    def zero(cls, field: FieldSpec) -> "Polynomial":
        return cls(field)

    @classmethod
    def one(cls, field: FieldSpec) -> "Polynomial":
        return cls(field, (1,))

    @classmethod
    def x(cls, field: FieldSpec) -> "Polynomial":
        return cls(field, (0, 1))

    @classmethod
    def monomial(cls, field: FieldSpec, degree: int, coefficient: Value = 1) -> "Polynomial":
        return cls(field, (0,) * degree + (coefficient,))

    @classmethod
    def from_roots(cls, field: FieldSpec, roots: Iterable[Value]) -> "Polynomial":
        """Monic product of (x - r) over the given roots."""
        result = cls.one(field)
        for r in roots:
            result = result * cls(field, (field.neg(field.element(r)), 1))
        return result

    # -------------------------------------------------------------------------
    # Inspection
    # -------------------------------------------------------------------------

    @property
    def degree(self) -> int | float:
        """Degree, or ``-inf`` for the zero polynomial."""
        return len(self.values) - 1 if self.values else NEG_INF

    @property
    def is_zero(self) -> bool:
        return not self.values

    @property
    def leading(self) -> Value:
        if not self.values:
            raise ZeroPolynomial("the zero polynomial has no leading coefficient")
        return self.values[-1]

    @property
    def is_monic(self) -> bool:
        return bool(self.values) and self.values[-1] == 1

    @property
    def coeffs(self) -> list[Scalar]:
        return [Scalar(self.field, v) for v in self.values]

    def coefficient(self, i: int) -> Value:
        return self.values[i] if 0 <= i < len(self.values) else self.field.zero

    def to_vector(self, length: int) -> tuple[Value, ...]:
        """Coefficient vector zero-padded to ``length``."""
        if len(self.values) > length:
            raise DimensionMismatch(
                f"degree {self.degree} does not fit a vector of length {length}"
            )
        return self.values + (self.field.zero,) * (length - len(self.values))

    def to_strings(self) -> list[str]:
        return [self.field.format(v) for v in self.values]

    def evaluate(self, point: "Value | Scalar") -> Value:
        """Horner evaluation at a field element."""
        at = self.field.element(point)
        result = self.field.zero
        for c in reversed(self.values):
            result = self.field.add(self.field.mul(result, at), c)
        return result

    def derivative(self) -> "Polynomial":
        f = self.field
        return Polynomial(f, tuple(f.mul(f.element(i), c) for i, c in enumerate(self.values))[1:])

    def monic(self) -> "Polynomial":
        if self.is_zero:
            return self
        return self.scale(self.field.inv(self.leading))

    def scale(self, c: Value) -> "Polynomial":
        return Polynomial(self.field, tuple(self.field.mul(c, v) for v in self.values))

    def exact_div(self, divisor: "Polynomial") -> "Polynomial":
        """Quotient of a division that must leave no remainder."""
        quotient, remainder = poly_divmod(self, divisor)
        if not remainder.is_zero:
            raise InvariantViolation(f"{divisor} does not divide {self} (remainder {remainder})")
        return quotient

    # -------------------------------------------------------------------------
    # Arithmetic
    # -------------------------------------------------------------------------

    def _coerce(self, other: "Polynomial | Value") -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.field != self.field:
                raise FieldMismatch(f"cannot combine {self.field} with {other.field}")
            return other
        return Polynomial(self.field, (other,))

    def __add__(self, other: "Polynomial | Value") -> "Polynomial":
        o = self._coerce(other)
        size = max(len(self.values), len(o.values))
        return Polynomial(
            self.field,
            tuple(self.field.add(self.coefficient(i), o.coefficient(i)) for i in range(size)),
        )

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.field, tuple(self.field.neg(v) for v in self.values))

    def __sub__(self, other: "Polynomial | Value") -> "Polynomial":
        return self + (-self._coerce(other))

    def __rsub__(self, other: "Polynomial | Value") -> "Polynomial":
        return self._coerce(other) - self

    def __mul__(self, other: "Polynomial | Value") -> "Polynomial":
        o = self._coerce(other)
        if self.is_zero or o.is_zero:
            return Polynomial(self.field)
        f = self.field
        out = [f.zero] * (len(self.values) + len(o.values) - 1)
        for i, a in enumerate(self.values):
            if a == 0:
                continue
            for j, b in enumerate(o.values):
                out[i + j] = f.add(out[i + j], f.mul(a, b))
        return Polynomial(f, tuple(out))

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Polynomial":
        result = Polynomial.one(self.field)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __mod__(self, other: "Polynomial") -> "Polynomial":
        return poly_divmod(self, other)[1]

    def __floordiv__(self, other: "Polynomial") -> "Polynomial":
        return poly_divmod(self, other)[0]

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        terms = []
        for i in range(len(self.values) - 1, -1, -1):
            c = self.values[i]
            if c == 0:
                continue
            text = self.field.format(c)
            if i == 0:
                terms.append(text)
            else:
                power = "x" if i == 1 else f"x^{i}"
                terms.append(power if c == 1 else f"{text}*{power}")
        return " + ".join(terms)


def _check_same_field(*polys: Polynomial) -> FieldSpec:
    field = polys[0].field
    for p in polys[1:]:
        if p.field != field:
            raise FieldMismatch(f"cannot combine {field} with {p.field}")
    return field


def poly_divmod(a: Polynomial, b: Polynomial) -> tuple[Polynomial, Polynomial]:
    """Euclidean division: a = q*b + r with deg r < deg b."""
    f = _check_same_field(a, b)
    if b.is_zero:
        raise DivisionByZeroPoly(f"cannot divide {a} by the zero polynomial")

    remainder = list(a.values)
    db = len(b.values) - 1
    if len(remainder) <= db:
        return Polynomial(f), a

    quotient = [f.zero] * (len(remainder) - db)
    lead_inv = f.inv(b.leading)
    for shift in range(len(remainder) - 1 - db, -1, -1):
        c = remainder[shift + db]
        if c == 0:
            continue
        factor = f.mul(c, lead_inv)
        quotient[shift] = factor
        for j, bv in enumerate(b.values):
            remainder[shift + j] = f.sub(remainder[shift + j], f.mul(factor, bv))
    return Polynomial(f, tuple(quotient)), Polynomial(f, tuple(remainder[:db]))


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic gcd; gcd(0, p) = monic(p) and gcd(0, 0) = 0."""
    _check_same_field(a, b)
    while not b.is_zero:
        a, b = b, poly_divmod(a, b)[1]
    return a.monic()


def poly_gcd_many(first: Polynomial, *rest: Polynomial) -> Polynomial:
    return reduce(poly_gcd, rest, first.monic())


def poly_squarefree(p: Polynomial) -> bool:
    """True iff gcd(p, p') is a constant.

    Over F_p a polynomial with vanishing derivative is a p-th power and is
    reported as not squarefree.
    """
    if p.is_zero:
        raise ZeroPolynomial("squarefreeness is undefined for the zero polynomial")
    if p.degree == 0:
        return True
    dp = p.derivative()
    if dp.is_zero:
        logger.warning(
            "Derivative vanishes, polynomial is inseparable",
            field=p.field.tag,
            poly=p.to_strings(),
        )
        return False
    return poly_gcd(p, dp).degree == 0


def poly_from_values(field: FieldSpec, values: Sequence[Value | str]) -> Polynomial:
    """Polynomial from an ascending coefficient list given as values or text."""
    return Polynomial(field, field.vector(values))
