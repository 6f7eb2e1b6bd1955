"""Random instance generators for verification campaigns.

Every generator takes an explicit ``random.Random`` so a trial is fully
determined by its seed. Rejection sampling is bounded through tenacity.
"""

import itertools
import random
from collections.abc import Callable, Iterator, Sequence
from fractions import Fraction
from typing import TypeVar

from tenacity import RetryError, retry, retry_if_exception_type, stop_after_attempt

from ..algebra import FieldSpec, Polynomial, Value, poly_gcd, poly_squarefree
from ..exceptions import ExhaustedRetries, InvalidArgument
from ..log_handler import get_structured_logger

logger = get_structured_logger(__name__, component="generators")

T = TypeVar("T")

DEFAULT_MAX_RETRIES = 10_000
DEFAULT_RATIONAL_RANGE = 3
# Shapes with at most this many monic candidates are sampled by enumeration
ENUMERATION_LIMIT = 256
COMMON_FACTOR_ATTEMPTS = 8


class _Rejected(Exception):
    pass


def rejection_sample(
    draw: Callable[[], T],
    accept: Callable[[T], bool],
    max_retries: int = DEFAULT_MAX_RETRIES,
    what: str = "sample",
) -> T:
    """Call ``draw`` until ``accept`` holds, at most ``max_retries`` times.

    Raises:
        ExhaustedRetries: No accepted candidate within the bound
    """

    @retry(
        retry=retry_if_exception_type(_Rejected),
        stop=stop_after_attempt(max_retries),
    )
    def attempt() -> T:
        candidate = draw()
        if not accept(candidate):
            raise _Rejected
        return candidate

    try:
        return attempt()
    except RetryError as e:
        logger.warning("Rejection sampling exhausted", what=what, max_retries=max_retries)
        raise ExhaustedRetries(f"no acceptable {what} after {max_retries} attempts") from e


def random_element(
    field: FieldSpec, rng: random.Random, rational_range: int = DEFAULT_RATIONAL_RANGE
) -> Value:
    """Uniform over F_p; over Q a small fraction n/d with |n| <= R and d in {1, 2}."""
    if field.modulus is not None:
        return rng.randrange(field.modulus)
    return Fraction(rng.randint(-rational_range, rational_range), rng.randint(1, 2))


def random_vector(
    field: FieldSpec, length: int, rng: random.Random, rational_range: int = DEFAULT_RATIONAL_RANGE
) -> tuple[Value, ...]:
    """Uniform vector; the zero vector is in-distribution."""
    return tuple(random_element(field, rng, rational_range) for _ in range(length))


def random_monic_poly(
    field: FieldSpec, degree: int, rng: random.Random, rational_range: int = DEFAULT_RATIONAL_RANGE
) -> Polynomial:
    return Polynomial(field, random_vector(field, degree, rng, rational_range) + (field.one,))


def _separable_candidate(p: Polynomial) -> bool:
    # Skip the inseparable case before the gcd test so it stays quiet
    return p.values[0] != 0 and not p.derivative().is_zero and poly_squarefree(p)


def random_squarefree_poly(
    field: FieldSpec,
    degree: int,
    rng: random.Random,
    max_retries: int = DEFAULT_MAX_RETRIES,
    rational_range: int = DEFAULT_RATIONAL_RANGE,
) -> Polynomial:
    """Monic, squarefree, nonzero constant term.

    Raises:
        InvalidArgument: degree < 1
        ExhaustedRetries: no candidate accepted
    """
    if degree < 1:
        raise InvalidArgument(f"squarefree moduli need degree >= 1, got {degree}")
    return rejection_sample(
        lambda: random_monic_poly(field, degree, rng, rational_range),
        _separable_candidate,
        max_retries,
        what=f"squarefree polynomial of degree {degree} over {field}",
    )


def random_modulus(
    field: FieldSpec,
    degree: int,
    rng: random.Random,
    max_retries: int = DEFAULT_MAX_RETRIES,
    rational_range: int = DEFAULT_RATIONAL_RANGE,
) -> Polynomial:
    """Monic with nonzero constant term; may have repeated roots."""
    if degree < 1:
        raise InvalidArgument(f"moduli need degree >= 1, got {degree}")
    return rejection_sample(
        lambda: random_monic_poly(field, degree, rng, rational_range),
        lambda p: p.values[0] != 0,
        max_retries,
        what=f"modulus of degree {degree} over {field}",
    )


def random_squarefree_multiple(
    base: Polynomial,
    degree: int,
    rng: random.Random,
    max_retries: int = DEFAULT_MAX_RETRIES,
    rational_range: int = DEFAULT_RATIONAL_RANGE,
) -> Polynomial:
    """A squarefree modulus of the given degree that ``base`` divides."""
    field = base.field
    extra = degree - (len(base.values) - 1)
    if extra < 0:
        raise InvalidArgument(f"cannot fit a factor of degree {base.degree} into degree {degree}")
    if extra == 0:
        if not _separable_candidate(base):
            raise InvalidArgument(f"{base} is not a squarefree modulus")
        return base
    return rejection_sample(
        lambda: base * random_monic_poly(field, extra, rng, rational_range),
        _separable_candidate,
        max_retries,
        what=f"squarefree multiple of {base} of degree {degree}",
    )


def random_split_poly(
    field: FieldSpec,
    degree: int,
    rng: random.Random,
    rational_range: int = DEFAULT_RATIONAL_RANGE,
    shared: Sequence[Value] = (),
) -> Polynomial:
    """Product of (x - r) over ``degree`` distinct nonzero roots, including ``shared``.

    Over Q the roots are integers in [-R, R] (R widened if needed).
    """
    shared = list(field.vector(shared))
    if degree < max(1, len(shared)):
        raise InvalidArgument(f"degree {degree} cannot hold {len(shared)} shared roots")
    if field.modulus is not None:
        pool = [field.element(c) for c in range(1, field.modulus)]
    else:
        bound = max(rational_range, (degree + 1) // 2)
        pool = [field.element(c) for c in range(-bound, bound + 1) if c != 0]
    fresh = [c for c in pool if c not in shared]
    if len(fresh) < degree - len(shared):
        raise InvalidArgument(f"{field} has too few nonzero elements for {degree} distinct roots")
    roots = shared + rng.sample(fresh, degree - len(shared))
    return Polynomial.from_roots(field, roots)


def _monic_candidates(field: FieldSpec, degree: int) -> Iterator[Polynomial]:
    assert field.modulus is not None
    for values in itertools.product(range(field.modulus), repeat=degree):
        yield Polynomial(field, values + (field.one,))


def _sample_monic(
    field: FieldSpec,
    degree: int,
    rng: random.Random,
    accept: Callable[[Polynomial], bool],
    max_retries: int,
    rational_range: int,
    what: str,
) -> Polynomial:
    """Uniform monic polynomial satisfying ``accept``.

    Small prime-field shapes are enumerated, so an empty candidate set fails
    at once instead of after ``max_retries`` rejections.
    """
    if field.modulus is not None and field.modulus**degree <= ENUMERATION_LIMIT:
        candidates = [p for p in _monic_candidates(field, degree) if accept(p)]
        if not candidates:
            raise ExhaustedRetries(f"no {what} exists")
        return rng.choice(candidates)
    return rejection_sample(
        lambda: random_monic_poly(field, degree, rng, rational_range),
        accept,
        max_retries,
        what=what,
    )


def _common_factors(
    field: FieldSpec, shared: int, rng: random.Random, max_retries: int, rational_range: int
) -> Iterator[Polynomial]:
    if shared == 0:
        yield Polynomial.one(field)
    elif field.modulus is not None and field.modulus**shared <= ENUMERATION_LIMIT:
        commons = [p for p in _monic_candidates(field, shared) if _separable_candidate(p)]
        rng.shuffle(commons)
        yield from commons
    else:
        for _ in range(COMMON_FACTOR_ATTEMPTS):
            yield random_squarefree_poly(field, shared, rng, max_retries, rational_range)


def _coprime_cofactor(
    common: Polynomial,
    degree: int,
    rng: random.Random,
    max_retries: int,
    rational_range: int,
    what: str,
) -> Polynomial:
    if degree == 0:
        return Polynomial.one(common.field)
    return _sample_monic(
        common.field,
        degree,
        rng,
        lambda p: _separable_candidate(p) and poly_gcd(p, common).degree == 0,
        max_retries,
        rational_range,
        f"cofactor of degree {degree} for {what}",
    )


def random_related_pair(
    field: FieldSpec,
    n1: int,
    n2: int,
    shared: int,
    rng: random.Random,
    max_retries: int = DEFAULT_MAX_RETRIES,
    rational_range: int = DEFAULT_RATIONAL_RANGE,
) -> tuple[Polynomial, Polynomial]:
    """Squarefree moduli of degrees n1, n2 whose gcd has degree at least ``shared``.

    The common factor is a squarefree modulus and both cofactors are coprime
    to it. Small fields cannot realize every shape (over F2 no squarefree
    modulus of degree 2 has the factor x + 1); those raise ExhaustedRetries
    so the caller can pick another shape. Small prime-field shapes try every
    common factor, so they raise only when no pair exists.

    Raises:
        InvalidArgument: shared does not fit both degrees
        ExhaustedRetries: the shape has no squarefree realization
    """
    if not 0 <= shared <= min(n1, n2) or min(n1, n2) < 1:
        raise InvalidArgument(f"cannot share degree {shared} between degrees {n1} and {n2}")
    what = f"modulus pair of degrees ({n1}, {n2}) sharing degree {shared} over {field}"
    budget = max(1, max_retries // COMMON_FACTOR_ATTEMPTS)

    for common in _common_factors(field, shared, rng, max_retries, rational_range):
        try:
            cofactors = [
                _coprime_cofactor(common, n - shared, rng, budget, rational_range, what)
                for n in (n1, n2)
            ]
        except ExhaustedRetries:
            continue
        return common * cofactors[0], common * cofactors[1]

    logger.debug("Modulus pair shape not realized", n1=n1, n2=n2, shared=shared, field=field.tag)
    raise ExhaustedRetries(f"no acceptable {what}")
