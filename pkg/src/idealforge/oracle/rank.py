"""Second-opinion rank and dimension computations.

These deliberately share no elimination code with ``idealforge.algebra``:
``oracle_rank`` works on the transpose with reversed pivot scanning and full
Gauss-Jordan reduction, and ``brute_code_dimension`` enumerates messages and
reduces images incrementally without touching g or h.
"""

import itertools

from ..algebra import DenseMatrix, FieldSpec, Polynomial, Value
from ..codes import QuasiCyclicCode, encode
from ..config import DEFAULT_ENUMERATION_BOUND
from ..exceptions import TooLarge


def oracle_rank(m: DenseMatrix) -> int:
    """Rank of ``m`` by Gauss-Jordan on m^T, pivoting from the last row and column."""
    f = m.field
    rows = [list(m.column(j)) for j in range(m.cols)]
    if not rows or m.rows == 0:
        return 0
    width = len(rows[0])
    used: set[int] = set()
    rank = 0
    for col in range(width - 1, -1, -1):
        pivot = next(
            (i for i in range(len(rows) - 1, -1, -1) if i not in used and rows[i][col] != 0),
            None,
        )
        if pivot is None:
            continue
        used.add(pivot)
        rank += 1
        inv = f.inv(rows[pivot][col])
        rows[pivot] = [f.mul(inv, v) for v in rows[pivot]]
        for i in range(len(rows)):
            if i != pivot and rows[i][col] != 0:
                factor = rows[i][col]
                rows[i] = [f.sub(a, f.mul(factor, b)) for a, b in zip(rows[i], rows[pivot])]
    return rank


def _reduce_against(
    field: FieldSpec, basis: list[tuple[int, list[Value]]], v: list[Value]
) -> list[Value]:
    for pivot, row in basis:
        if v[pivot] != 0:
            c = field.div(v[pivot], row[pivot])
            v = [field.sub(a, field.mul(c, b)) for a, b in zip(v, row)]
    return v


def brute_code_dimension(code: QuasiCyclicCode, bound: int | None = None) -> int:
    """Dimension of span{encode(f)} over every message f, by incremental elimination."""
    field = code.field
    assert field.modulus is not None
    limit = DEFAULT_ENUMERATION_BOUND if bound is None else bound
    size = field.modulus**code.message_dim
    if size > limit:
        raise TooLarge(f"{size} messages exceed the enumeration bound {limit}")

    basis: list[tuple[int, list[Value]]] = []
    for coefficients in itertools.product(range(field.modulus), repeat=code.message_dim):
        word = list(encode(code, Polynomial(field, coefficients)).values)
        reduced = _reduce_against(field, basis, word)
        pivot = next((i for i, c in enumerate(reduced) if c != 0), None)
        if pivot is not None:
            basis.append((pivot, reduced))
    return len(basis)
