"""Exact dense matrices and Gaussian elimination."""

from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from ..exceptions import DimensionMismatch, FieldMismatch, IndexOutOfRange
from .field import FieldSpec, Scalar, Value
from .polynomial import Polynomial


@dataclass(frozen=True)
class DenseMatrix:
    """Row-major exact matrix over a single field."""

    field: FieldSpec
    rows: int
    cols: int
    values: tuple[Value, ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise DimensionMismatch(f"negative shape {self.rows}x{self.cols}")
        if len(self.values) != self.rows * self.cols:
            raise DimensionMismatch(
                f"{len(self.values)} entries do not fill a {self.rows}x{self.cols} matrix"
            )
        object.__setattr__(self, "values", self.field.vector(self.values))

    # -------------------------------------------------------------------------
    # Constructors
    # -------------------------------------------------------------------------

    @classmethod
    def from_rows(
        cls, field: FieldSpec, rows: Sequence[Sequence[Value]], cols: int | None = None
    ) -> "DenseMatrix":
        width = len(rows[0]) if rows else (cols or 0)
        if any(len(r) != width for r in rows):
            raise DimensionMismatch("rows have different lengths")
        return cls(field, len(rows), width, tuple(v for r in rows for v in r))

    @classmethod
    def from_columns(
        cls, field: FieldSpec, columns: Sequence[Sequence[Value]], rows: int | None = None
    ) -> "DenseMatrix":
        height = len(columns[0]) if columns else (rows or 0)
        if any(len(c) != height for c in columns):
            raise DimensionMismatch("columns have different lengths")
        if not columns or height == 0:
            return cls.zeros(field, height, len(columns))
        return cls.from_rows(field, [list(row) for row in zip(*columns)])

    @classmethod
    def zeros(cls, field: FieldSpec, rows: int, cols: int) -> "DenseMatrix":
        return cls(field, rows, cols, (field.zero,) * (rows * cols))

    @classmethod
    def identity(cls, field: FieldSpec, n: int) -> "DenseMatrix":
        return cls.diagonal(field, [field.one] * n)

    @classmethod
    def diagonal(cls, field: FieldSpec, entries: Sequence[Value]) -> "DenseMatrix":
        n = len(entries)
        values = [field.zero] * (n * n)
        for i, v in enumerate(entries):
            values[i * n + i] = v
        return cls(field, n, n, tuple(values))

    @classmethod
    def block_diagonal(cls, *blocks: "DenseMatrix") -> "DenseMatrix":
        field = _same_field(*blocks)
        rows = sum(b.rows for b in blocks)
        cols = sum(b.cols for b in blocks)
        values = [field.zero] * (rows * cols)
        r0 = c0 = 0
        for b in blocks:
            for i in range(b.rows):
                for j in range(b.cols):
                    values[(r0 + i) * cols + c0 + j] = b[i, j]
            r0 += b.rows
            c0 += b.cols
        return cls(field, rows, cols, tuple(values))

    @classmethod
    def vstack(cls, *blocks: "DenseMatrix") -> "DenseMatrix":
        field = _same_field(*blocks)
        if len({b.cols for b in blocks}) > 1:
            raise DimensionMismatch("vstack needs equal column counts")
        return cls(
            field, sum(b.rows for b in blocks), blocks[0].cols, sum((b.values for b in blocks), ())
        )

    @classmethod
    def hstack(cls, *blocks: "DenseMatrix") -> "DenseMatrix":
        if len({b.rows for b in blocks}) > 1:
            raise DimensionMismatch("hstack needs equal row counts")
        return cls.vstack(*(b.transpose() for b in blocks)).transpose()

    # -------------------------------------------------------------------------
    # Access
    # -------------------------------------------------------------------------

    def __getitem__(self, index: tuple[int, int]) -> Value:
        i, j = index
        return self.values[i * self.cols + j]

    def row(self, i: int) -> tuple[Value, ...]:
        return self.values[i * self.cols : (i + 1) * self.cols]

    def column(self, j: int) -> tuple[Value, ...]:
        return self.values[j :: self.cols] if self.cols else ()

    def to_rows(self) -> list[list[Value]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def to_strings(self) -> list[list[str]]:
        return [[self.field.format(v) for v in self.row(i)] for i in range(self.rows)]

    def scalar(self, i: int, j: int) -> Scalar:
        return Scalar(self.field, self[i, j])

    def column_block(self, start: int, count: int) -> "DenseMatrix":
        if start < 0 or count < 0 or start + count > self.cols:
            raise IndexOutOfRange(
                f"columns {start}..{start + count - 1} outside 0..{self.cols - 1}"
            )
        return DenseMatrix.from_rows(
            self.field, [self.row(i)[start : start + count] for i in range(self.rows)], count
        )

    def row_block(self, start: int, count: int) -> "DenseMatrix":
        if start < 0 or count < 0 or start + count > self.rows:
            raise IndexOutOfRange(f"rows {start}..{start + count - 1} outside 0..{self.rows - 1}")
        return DenseMatrix(
            self.field,
            count,
            self.cols,
            self.values[start * self.cols : (start + count) * self.cols],
        )

    # -------------------------------------------------------------------------
    # Arithmetic
    # -------------------------------------------------------------------------

    def transpose(self) -> "DenseMatrix":
        values = tuple(v for j in range(self.cols) for v in self.column(j))
        return DenseMatrix(self.field, self.cols, self.rows, values)

    def __matmul__(self, other: "DenseMatrix") -> "DenseMatrix":
        _same_field(self, other)
        if self.cols != other.rows:
            raise DimensionMismatch(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        columns = [other.column(j) for j in range(other.cols)]
        return DenseMatrix(
            self.field,
            self.rows,
            other.cols,
            tuple(self.field.dot(self.row(i), c) for i in range(self.rows) for c in columns),
        )

    def matvec(self, vector: Sequence[Value]) -> tuple[Value, ...]:
        if len(vector) != self.cols:
            raise DimensionMismatch(f"vector of length {len(vector)} for {self.cols} columns")
        v = self.field.vector(vector)
        return tuple(self.field.dot(self.row(i), v) for i in range(self.rows))

    def power(self, exponent: int) -> "DenseMatrix":
        if self.rows != self.cols:
            raise DimensionMismatch("only square matrices have powers")
        result = DenseMatrix.identity(self.field, self.rows)
        base = self
        while exponent:
            if exponent & 1:
                result = result @ base
            base = base @ base
            exponent >>= 1
        return result


def _same_field(*matrices: DenseMatrix) -> FieldSpec:
    if not matrices:
        raise DimensionMismatch("at least one matrix is required")
    field = matrices[0].field
    for m in matrices[1:]:
        if m.field != field:
            raise FieldMismatch(f"cannot combine {field} with {m.field}")
    return field


# =============================================================================
# Elimination
# =============================================================================


def _row_echelon(field: FieldSpec, rows: list[list[Value]]) -> list[list[Value]]:
    """Row echelon form in place, pivoting on the first nonzero entry top-to-bottom."""
    width = len(rows[0]) if rows else 0
    pivot_row = 0
    for col in range(width):
        pivot = next((i for i in range(pivot_row, len(rows)) if rows[i][col] != 0), None)
        if pivot is None:
            continue
        rows[pivot_row], rows[pivot] = rows[pivot], rows[pivot_row]
        inv = field.inv(rows[pivot_row][col])
        for i in range(pivot_row + 1, len(rows)):
            if rows[i][col] == 0:
                continue
            factor = field.mul(rows[i][col], inv)
            rows[i] = [field.sub(a, field.mul(factor, b)) for a, b in zip(rows[i], rows[pivot_row])]
        pivot_row += 1
        if pivot_row == len(rows):
            break
    return rows[:pivot_row]


def mat_rank(m: DenseMatrix) -> int:
    """Rank by exact Gaussian elimination."""
    if m.rows == 0 or m.cols == 0:
        return 0
    return len(_row_echelon(m.field, m.to_rows()))


def mat_row_space_contains(m: DenseMatrix, v: Sequence["Value | Scalar"]) -> bool:
    """True iff ``v`` lies in the row space of ``m``."""
    if len(v) != m.cols:
        raise DimensionMismatch(f"vector of length {len(v)} for a matrix with {m.cols} columns")
    for entry in v:
        if isinstance(entry, Scalar) and entry.field != m.field:
            raise FieldMismatch(f"vector over {entry.field} for a matrix over {m.field}")
    row = DenseMatrix(m.field, 1, m.cols, m.field.vector(v))
    return mat_rank(DenseMatrix.vstack(m, row)) == mat_rank(m)


def columns_independent(m: DenseMatrix, start: int, count: int) -> bool:
    """True iff columns start..start+count-1 are linearly independent."""
    block = m.column_block(start, count)
    return count == 0 or mat_rank(block) == count


def row_spaces_equal(a: DenseMatrix, b: DenseMatrix) -> bool:
    if a.cols != b.cols:
        raise DimensionMismatch(f"row spaces of widths {a.cols} and {b.cols} cannot be compared")
    ra, rb = mat_rank(a), mat_rank(b)
    return ra == rb and mat_rank(DenseMatrix.vstack(a, b)) == ra


class EchelonBasis:
    """Incrementally grown basis of a row space.

    Stored rows are fully reduced against each other, keyed by pivot column.
    """

    def __init__(self, field: FieldSpec, width: int):
        self.field = field
        self.width = width
        self._rows: dict[int, list[Value]] = {}

    def reduce(self, vector: Sequence[Value]) -> list[Value]:
        if len(vector) != self.width:
            raise DimensionMismatch(f"vector of length {len(vector)} for width {self.width}")
        f = self.field
        v = list(f.vector(vector))
        for pivot, row in self._rows.items():
            if v[pivot] != 0:
                c = v[pivot]
                v = [f.sub(a, f.mul(c, b)) for a, b in zip(v, row)]
        return v

    def add(self, vector: Sequence[Value]) -> bool:
        """Insert ``vector``; return True iff it was independent of the basis."""
        v = self.reduce(vector)
        pivot = next((i for i, c in enumerate(v) if c != 0), None)
        if pivot is None:
            return False
        f = self.field
        inv = f.inv(v[pivot])
        v = [f.mul(inv, c) for c in v]
        for key, row in self._rows.items():
            if row[pivot] != 0:
                c = row[pivot]
                self._rows[key] = [f.sub(a, f.mul(c, b)) for a, b in zip(row, v)]
        self._rows[pivot] = v
        return True

    def extend(self, vectors: Iterable[Sequence[Value]]) -> int:
        return sum(1 for v in vectors if self.add(v))

    def contains(self, vector: Sequence[Value]) -> bool:
        return not any(self.reduce(vector))

    @property
    def rank(self) -> int:
        return len(self._rows)

    def __len__(self) -> int:
        return len(self._rows)

    def rows(self) -> list[tuple[Value, ...]]:
        return [tuple(self._rows[k]) for k in sorted(self._rows)]


# =============================================================================
# Characteristic polynomial
# =============================================================================


def _hessenberg(field: FieldSpec, a: list[list[Value]]) -> list[list[Value]]:
    """Upper Hessenberg form by exact similarity transforms."""
    n = len(a)
    f = field
    for j in range(n - 2):
        pivot = next((i for i in range(j + 1, n) if a[i][j] != 0), None)
        if pivot is None:
            continue
        if pivot != j + 1:
            a[pivot], a[j + 1] = a[j + 1], a[pivot]
            for row in a:
                row[pivot], row[j + 1] = row[j + 1], row[pivot]
        inv = f.inv(a[j + 1][j])
        for i in range(j + 2, n):
            if a[i][j] == 0:
                continue
            u = f.mul(a[i][j], inv)
            a[i] = [f.sub(x, f.mul(u, y)) for x, y in zip(a[i], a[j + 1])]
            for row in a:
                row[j + 1] = f.add(row[j + 1], f.mul(u, row[i]))
    return a


def characteristic_polynomial(m: DenseMatrix) -> Polynomial:
    """det(xI - m), via Hessenberg reduction and its three-term expansion."""
    if m.rows != m.cols:
        raise DimensionMismatch("characteristic polynomial needs a square matrix")
    f = m.field
    h = _hessenberg(f, m.to_rows())
    x = Polynomial.x(f)
    chain = [Polynomial.one(f)]
    for k in range(1, m.rows + 1):
        p = (x - h[k - 1][k - 1]) * chain[k - 1]
        product = f.one
        for i in range(k - 1, 0, -1):
            product = f.mul(product, h[i][i - 1])
            p = p - chain[i - 1].scale(f.mul(h[i - 1][k - 1], product))
        chain.append(p)
    return chain[-1]
