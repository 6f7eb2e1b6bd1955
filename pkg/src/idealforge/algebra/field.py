"""Exact scalar arithmetic over the rationals and prime fields.

Values are stored as their canonical representative: a reduced ``Fraction``
over Q, the least nonnegative residue (an ``int``) over F_p. Polynomials and
matrices hold these raw values and route every operation through the
``FieldSpec`` they belong to; ``Scalar`` wraps a single value for callers that
want operator syntax.
"""

from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from ..exceptions import FieldMismatch, InvalidField, NotInvertible

Value = int | Fraction

MAX_MODULUS = 2**31


class FieldKind(str, Enum):
    RATIONALS = "Q"
    PRIME = "F"


def is_prime(n: int) -> bool:
    """Trial-division primality test (moduli stay below 2**31)."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    divisor = 3
    while divisor * divisor <= n:
        if n % divisor == 0:
            return False
        divisor += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    """The field all values of a computation live in: Q or F_p."""

    kind: FieldKind
    modulus: int | None = None

    def __post_init__(self) -> None:
        if self.kind is FieldKind.RATIONALS:
            if self.modulus is not None:
                raise InvalidField("the rationals take no modulus")
            return
        if self.modulus is None or not is_prime(self.modulus):
            raise InvalidField(f"prime field needs a prime modulus, got {self.modulus}")
        if self.modulus >= MAX_MODULUS:
            raise InvalidField(f"modulus {self.modulus} is not below 2^31")

    @classmethod
    def rationals(cls) -> "FieldSpec":
        return cls(FieldKind.RATIONALS)

    @classmethod
    def prime(cls, p: int) -> "FieldSpec":
        return cls(FieldKind.PRIME, p)

    @classmethod
    def parse(cls, tag: str) -> "FieldSpec":
        """Parse a field tag: "Q" or "Fp" for a prime p (e.g. "F2", "F13")."""
        text = tag.strip()
        if text == "Q":
            return cls.rationals()
        if len(text) > 1 and text[0] == "F" and text[1:].isdigit():
            return cls.prime(int(text[1:]))
        raise InvalidField(f"unknown field tag {tag!r}; expected Q or Fp with p prime")

    @property
    def tag(self) -> str:
        return "Q" if self.kind is FieldKind.RATIONALS else f"F{self.modulus}"

    @property
    def is_prime_field(self) -> bool:
        return self.kind is FieldKind.PRIME

    def __str__(self) -> str:
        return self.tag

    # -------------------------------------------------------------------------
    # Element construction
    # -------------------------------------------------------------------------

    @property
    def zero(self) -> Value:
        return 0 if self.modulus else Fraction(0)

    @property
    def one(self) -> Value:
        return 1 if self.modulus else Fraction(1)

    def element(self, value: "Value | str | Scalar") -> Value:
        """Canonical representative of ``value`` in this field."""
        if isinstance(value, Scalar):
            if value.field != self:
                raise FieldMismatch(f"scalar over {value.field} used in {self}")
            return value.value
        if isinstance(value, str):
            try:
                value = Fraction(value.strip())
            except (ValueError, ZeroDivisionError) as e:
                raise InvalidField(f"cannot read {value!r} as an element of {self}") from e
        if isinstance(value, bool) or not isinstance(value, (int, Fraction)):
            raise InvalidField(f"cannot read {value!r} as an element of {self}")

        p = self.modulus
        if p is None:
            return Fraction(value)
        if isinstance(value, int):
            return value % p
        if value.denominator % p == 0:
            raise NotInvertible(f"denominator of {value} is zero in {self}")
        return value.numerator * pow(value.denominator, -1, p) % p

    def vector(self, values: Iterable["Value | str | Scalar"]) -> tuple[Value, ...]:
        return tuple(self.element(v) for v in values)

    def scalar(self, value: "Value | str | Scalar") -> "Scalar":
        return Scalar(self, self.element(value))

    def elements(self) -> Iterator[int]:
        """All elements of F_p in increasing order."""
        if self.modulus is None:
            raise InvalidField("the rationals cannot be enumerated")
        return iter(range(self.modulus))

    def format(self, value: Value) -> str:
        if isinstance(value, Fraction) and value.denominator == 1:
            return str(value.numerator)
        return str(value)

    # -------------------------------------------------------------------------
    # Arithmetic on canonical values
    # -------------------------------------------------------------------------

    def add(self, a: Value, b: Value) -> Value:
        return (a + b) % self.modulus if self.modulus else a + b

    def sub(self, a: Value, b: Value) -> Value:
        return (a - b) % self.modulus if self.modulus else a - b

    def neg(self, a: Value) -> Value:
        return (-a) % self.modulus if self.modulus else -a

    def mul(self, a: Value, b: Value) -> Value:
        return (a * b) % self.modulus if self.modulus else a * b

    def inv(self, a: Value) -> Value:
        if a == 0:
            raise NotInvertible(f"zero has no inverse in {self}")
        if self.modulus:
            return pow(int(a), -1, self.modulus)
        return 1 / Fraction(a)

    def div(self, a: Value, b: Value) -> Value:
        return self.mul(a, self.inv(b))

    def power(self, a: Value, exponent: int) -> Value:
        if self.modulus:
            return pow(int(a), exponent, self.modulus)
        return Fraction(a) ** exponent

    def dot(self, a: Sequence[Value], b: Sequence[Value]) -> Value:
        total = self.zero
        for x, y in zip(a, b):
            total = self.add(total, self.mul(x, y))
        return total


@dataclass(frozen=True, slots=True)
class Scalar:
    """A single exact field element with operator syntax."""

    field: FieldSpec
    value: Value

    def _other(self, other: "Scalar | int | Fraction") -> Value:
        if isinstance(other, Scalar):
            if other.field != self.field:
                raise FieldMismatch(f"cannot combine {self.field} with {other.field}")
            return other.value
        return self.field.element(other)

    def __add__(self, other: "Scalar | int | Fraction") -> "Scalar":
        return Scalar(self.field, self.field.add(self.value, self._other(other)))

    __radd__ = __add__

    def __sub__(self, other: "Scalar | int | Fraction") -> "Scalar":
        return Scalar(self.field, self.field.sub(self.value, self._other(other)))

    def __rsub__(self, other: "Scalar | int | Fraction") -> "Scalar":
        return Scalar(self.field, self.field.sub(self._other(other), self.value))

    def __mul__(self, other: "Scalar | int | Fraction") -> "Scalar":
        return Scalar(self.field, self.field.mul(self.value, self._other(other)))

    __rmul__ = __mul__

    def __truediv__(self, other: "Scalar | int | Fraction") -> "Scalar":
        return Scalar(self.field, self.field.div(self.value, self._other(other)))

    def __neg__(self) -> "Scalar":
        return Scalar(self.field, self.field.neg(self.value))

    def __bool__(self) -> bool:
        return self.value != 0

    def inverse(self) -> "Scalar":
        return Scalar(self.field, self.field.inv(self.value))

    def __str__(self) -> str:
        return self.field.format(self.value)
