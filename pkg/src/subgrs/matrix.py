"""Dense exact linear algebra over a finite field.

Entries are held as integer encodings (see :mod:`subgrs.field`); indexing a
:class:`Matrix` hands back :class:`FieldElement` objects.  Elimination uses
first-nonzero pivoting, so every result is deterministic.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import DuplicatePoints, ShapeMismatch
from .field import FieldElement, FieldSpec


def _encode(field: FieldSpec, x) -> int:
    if isinstance(x, FieldElement):
        return field(x).value
    if isinstance(x, int):
        return x % field.p
    return field(x).value


def _rref_inplace(field: FieldSpec, rows: list[list[int]], ncols: int) -> list[int]:
    """Reduce ``rows`` to reduced row-echelon form; return the pivot columns."""
    pivots: list[int] = []
    nrows = len(rows)
    r = 0
    if field.m == 1:
        p = field.p
        for c in range(ncols):
            if r == nrows:
                break
            piv = next((i for i in range(r, nrows) if rows[i][c]), None)
            if piv is None:
                continue
            rows[r], rows[piv] = rows[piv], rows[r]
            prow = rows[r]
            inv = pow(prow[c], p - 2, p)
            if inv != 1:
                prow = rows[r] = [x * inv % p for x in prow]
            for i in range(nrows):
                if i != r:
                    f = rows[i][c]
                    if f:
                        row = rows[i]
                        rows[i] = [(x - f * y) % p for x, y in zip(row, prow)]
            pivots.append(c)
            r += 1
        return pivots
    mul, sub = field.mul, field.sub
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = field.inv(rows[r][c])
        prow = rows[r] = [mul(x, inv) for x in rows[r]]
        for i in range(nrows):
            if i != r:
                f = rows[i][c]
                if f:
                    rows[i] = [sub(x, mul(f, y)) for x, y in zip(rows[i], prow)]
        pivots.append(c)
        r += 1
    return pivots


def rank_of_rows(field: FieldSpec, rows: Sequence[Sequence[int]]) -> int:
    """Rank of a list of integer-encoded rows (no Matrix wrapper)."""
    if not rows:
        return 0
    work = [list(r) for r in rows]
    return len(_rref_inplace(field, work, len(work[0])))


class Matrix:
    """Immutable r x c matrix over ``field``."""

    __slots__ = ("field", "rows", "nrows", "ncols")

    def __init__(self, field: FieldSpec, rows: Iterable[Iterable], ncols: int | None = None):
        data = tuple(tuple(_encode(field, x) for x in row) for row in rows)
        if ncols is None:
            if not data:
                raise ShapeMismatch("column count required for a matrix with no rows")
            ncols = len(data[0])
        if any(len(row) != ncols for row in data):
            raise ShapeMismatch("ragged rows")
        self.field = field
        self.rows = data
        self.nrows = len(data)
        self.ncols = ncols

    @classmethod
    def _raw(cls, field: FieldSpec, rows, ncols: int) -> "Matrix":
        m = object.__new__(cls)
        m.field = field
        m.rows = tuple(tuple(r) for r in rows)
        m.nrows = len(m.rows)
        m.ncols = ncols
        return m

    @classmethod
    def zeros(cls, field: FieldSpec, nrows: int, ncols: int) -> "Matrix":
        return cls._raw(field, [[0] * ncols for _ in range(nrows)], ncols)

    @classmethod
    def identity(cls, field: FieldSpec, n: int) -> "Matrix":
        return cls._raw(field, [[int(i == j) for j in range(n)] for i in range(n)], n)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def __getitem__(self, idx) -> FieldElement:
        i, j = idx
        return FieldElement(self.field, self.rows[i][j])

    def row(self, i: int) -> list[FieldElement]:
        return [FieldElement(self.field, x) for x in self.rows[i]]

    def column(self, j: int) -> list[FieldElement]:
        return [FieldElement(self.field, r[j]) for r in self.rows]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Matrix)
            and self.field == other.field
            and self.shape == other.shape
            and self.rows == other.rows
        )

    def __hash__(self) -> int:
        return hash((self.field, self.shape, self.rows))

    def __repr__(self) -> str:
        body = "; ".join(" ".join(repr(x) for x in self.row(i)) for i in range(self.nrows))
        return f"Matrix({self.field}, {self.nrows}x{self.ncols}, [{body}])"

    def _check_field(self, other: "Matrix") -> None:
        if self.field != other.field:
            raise ShapeMismatch(f"matrices over {self.field} and {other.field}")

    # algebra ---------------------------------------------------------------
    def transpose(self) -> "Matrix":
        return Matrix._raw(self.field, zip(*self.rows) if self.nrows else [], self.nrows)

    @property
    def T(self) -> "Matrix":
        return self.transpose()

    def __matmul__(self, other: "Matrix") -> "Matrix":
        return mat_mul(self, other)

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_field(other)
        if self.shape != other.shape:
            raise ShapeMismatch(f"{self.shape} + {other.shape}")
        add = self.field.add
        rows = [[add(x, y) for x, y in zip(r, s)] for r, s in zip(self.rows, other.rows)]
        return Matrix._raw(self.field, rows, self.ncols)

    def scale(self, c) -> "Matrix":
        c = _encode(self.field, c)
        mul = self.field.mul
        return Matrix._raw(self.field, [[mul(c, x) for x in r] for r in self.rows], self.ncols)

    def vstack(self, other: "Matrix") -> "Matrix":
        self._check_field(other)
        if self.ncols != other.ncols:
            raise ShapeMismatch(f"cannot stack {self.shape} over {other.shape}")
        return Matrix._raw(self.field, self.rows + other.rows, self.ncols)

    def hstack(self, other: "Matrix") -> "Matrix":
        self._check_field(other)
        if self.nrows != other.nrows:
            raise ShapeMismatch(f"cannot join {self.shape} and {other.shape}")
        rows = [r + s for r, s in zip(self.rows, other.rows)]
        return Matrix._raw(self.field, rows, self.ncols + other.ncols)

    def submatrix(self, rows: Sequence[int] | None = None, cols: Sequence[int] | None = None) -> "Matrix":
        rsel = range(self.nrows) if rows is None else rows
        csel = range(self.ncols) if cols is None else cols
        return Matrix._raw(self.field, [[self.rows[i][j] for j in csel] for i in rsel], len(csel))

    def is_zero(self) -> bool:
        return not any(any(r) for r in self.rows)

    # elimination -------------------------------------------------------------
    def rref(self) -> "Matrix":
        """Reduced row-echelon form (same shape, zero rows at the bottom)."""
        work = [list(r) for r in self.rows]
        _rref_inplace(self.field, work, self.ncols)
        return Matrix._raw(self.field, work, self.ncols)

    def row_basis(self) -> "Matrix":
        """Nonzero rows of the rref."""
        work = [list(r) for r in self.rows]
        pivots = _rref_inplace(self.field, work, self.ncols)
        return Matrix._raw(self.field, work[: len(pivots)], self.ncols)

    def pivots(self) -> list[int]:
        work = [list(r) for r in self.rows]
        return _rref_inplace(self.field, work, self.ncols)

    def rank(self) -> int:
        return len(self.pivots())

    def right_kernel(self) -> "Matrix":
        """Basis, in rref, of {x : M x^T = 0}."""
        work = [list(r) for r in self.rows]
        pivots = _rref_inplace(self.field, work, self.ncols)
        free = [c for c in range(self.ncols) if c not in set(pivots)]
        neg = self.field.neg
        basis = []
        for f in free:
            vec = [0] * self.ncols
            vec[f] = 1
            for i, pc in enumerate(pivots):
                vec[pc] = neg(work[i][f])
            basis.append(vec)
        return Matrix._raw(self.field, basis, self.ncols).row_basis()

    def to_json(self) -> list[list[list[int]]]:
        return [[list(self.field.coeffs(x)) for x in r] for r in self.rows]

    @staticmethod
    def from_json(field: FieldSpec, data, ncols: int | None = None) -> "Matrix":
        return Matrix(field, [[field(list(x)) for x in r] for r in data], ncols)


# Module-level operations --------------------------------------------------

def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    a._check_field(b)
    if a.ncols != b.nrows:
        raise ShapeMismatch(f"cannot multiply {a.shape} by {b.shape}")
    field = a.field
    cols = list(zip(*b.rows)) if b.nrows else [()] * b.ncols
    if field.m == 1:
        p = field.p
        rows = [[sum(x * y for x, y in zip(r, c)) % p for c in cols] for r in a.rows]
    else:
        add, mul = field.add, field.mul
        rows = []
        for r in a.rows:
            out = []
            for c in cols:
                s = 0
                for x, y in zip(r, c):
                    if x and y:
                        s = add(s, mul(x, y))
                out.append(s)
            rows.append(out)
    return Matrix._raw(field, rows, b.ncols)


def transpose(m: Matrix) -> Matrix:
    return m.transpose()


def rank(m: Matrix) -> int:
    return m.rank()


def rref(m: Matrix) -> Matrix:
    return m.rref()


def right_kernel(m: Matrix) -> Matrix:
    return m.right_kernel()


def row_space_equal(a: Matrix, b: Matrix) -> bool:
    if a.ncols != b.ncols:
        raise ShapeMismatch(f"column counts differ: {a.ncols} vs {b.ncols}")
    return a.row_basis() == b.row_basis()


def _distinct_ints(field: FieldSpec, points: Sequence) -> list[int]:
    vals = [_encode(field, x) for x in points]
    if len(set(vals)) != len(vals):
        raise DuplicatePoints("evaluation points must be pairwise distinct")
    return vals


def vandermonde_rows(points: Sequence[FieldElement], degrees: Iterable[int]) -> Matrix:
    """Rows (a_1^j, ..., a_n^j) for j in ``degrees``, in increasing j."""
    field = points[0].field
    vals = _distinct_ints(field, points)
    power = field.power
    degs = sorted(set(degrees))
    return Matrix._raw(field, [[power(x, j) for x in vals] for j in degs], len(vals))


def vandermonde(points: Sequence[FieldElement]) -> Matrix:
    return vandermonde_rows(points, range(len(points)))


def diag(values: Sequence[FieldElement]) -> Matrix:
    field = values[0].field
    vals = [_encode(field, v) for v in values]
    n = len(vals)
    return Matrix._raw(field, [[vals[i] if i == j else 0 for j in range(n)] for i in range(n)], n)
