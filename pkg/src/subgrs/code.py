"""Linear codes: duals, exact minimum distance, MDS/AMDS/NMDS classification."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb

from .errors import TooLarge, ZeroMatrix
from .field import FieldSpec
from .matrix import Matrix, _rref_inplace, rank_of_rows

DEFAULT_MAX_WORK = 10**8


class LinearCode:
    """An [n, k] code given by a full-rank generator matrix.

    ``generator`` keeps the rows in the order they were supplied when they are
    independent (the family constructors rely on this for positional
    comparisons); ``basis`` is the canonical rref form used for equality.
    """

    def __init__(self, generator: Matrix, _checked: bool = False):
        if not _checked and generator.nrows and generator.rank() != generator.nrows:
            generator = generator.row_basis()
        self.generator = generator
        self.field: FieldSpec = generator.field
        self.n = generator.ncols
        self.k = generator.nrows
        self._basis: Matrix | None = None

    @classmethod
    def zero(cls, field: FieldSpec, n: int) -> "LinearCode":
        return cls(Matrix.zeros(field, 0, n), _checked=True)

    @property
    def basis(self) -> Matrix:
        if self._basis is None:
            self._basis = self.generator.row_basis()
        return self._basis

    def __eq__(self, other) -> bool:
        return isinstance(other, LinearCode) and self.n == other.n and self.basis == other.basis

    def __hash__(self) -> int:
        return hash(self.basis)

    def __repr__(self) -> str:
        return f"LinearCode([{self.n},{self.k}] over {self.field})"

    def contains(self, word) -> bool:
        row = Matrix(self.field, [word])
        return rank_of_rows(self.field, self.generator.rows + row.rows) == self.k

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "field": self.field.to_json(),
            "generator": self.generator.to_json(),
        }

    @staticmethod
    def from_json(obj: dict) -> "LinearCode":
        field = FieldSpec.from_json(obj["field"])
        g = Matrix.from_json(field, obj["generator"], obj["n"])
        return LinearCode(g) if g.nrows else LinearCode.zero(field, obj["n"])


def code_from_generator(g: Matrix) -> LinearCode:
    if g.is_zero():
        raise ZeroMatrix("generator matrix is zero")
    return LinearCode(g)


def dual(c: LinearCode) -> LinearCode:
    if c.k == 0:
        return LinearCode(Matrix.identity(c.field, c.n), _checked=True)
    ker = c.generator.right_kernel()
    if ker.nrows == 0:
        return LinearCode.zero(c.field, c.n)
    return LinearCode(ker, _checked=True)


# minimum distance -------------------------------------------------------------

def _min_weight_enumerate(c: LinearCode, max_work: int) -> int:
    field, k, n = c.field, c.k, c.n
    q = field.q
    if q**k > max_work:
        raise TooLarge(f"q^k = {q}^{k} exceeds max_work={max_work}")
    rows = c.generator.rows
    best = n
    # Scaling a codeword does not change its weight: take messages whose
    # leading nonzero coordinate is 1.
    if field.m == 1:
        p = field.p
        for lead in range(k):
            base = rows[lead]
            rest = rows[lead + 1:]
            for tail in itertools.product(range(q), repeat=k - lead - 1):
                word = list(base)
                for coef, row in zip(tail, rest):
                    if coef:
                        word = [w + coef * x for w, x in zip(word, row)]
                wt = sum(1 for w in word if w % p)
                if wt < best:
                    best = wt
                    if best == 1:
                        return 1
        return best
    add, mul = field.add, field.mul
    for lead in range(k):
        base = rows[lead]
        rest = rows[lead + 1:]
        for tail in itertools.product(range(q), repeat=k - lead - 1):
            word = list(base)
            for coef, row in zip(tail, rest):
                if coef:
                    word = [add(w, mul(coef, x)) for w, x in zip(word, row)]
            best = min(best, sum(1 for w in word if w))
    return best


def _min_weight_subsets(c: LinearCode, max_work: int) -> int:
    # A nonzero codeword vanishes on a column set Z iff rank(G_Z) < k, so
    # d = n - max{|Z| : rank(G_Z) < k}.  Find the least s at which every
    # s-subset of columns has full rank.
    field, k, n = c.field, c.k, c.n
    cols = list(zip(*c.generator.rows))
    work = 0
    for s in range(k, n + 1):
        deficient = False
        for sel in itertools.combinations(range(n), s):
            work += 1
            if work > max_work:
                raise TooLarge(f"column-subset search exceeds max_work={max_work}")
            sub = [list(r) for r in zip(*(cols[j] for j in sel))]
            if len(_rref_inplace(field, sub, s)) < k:
                deficient = True
                break
        if not deficient:
            return n - s + 1
    raise AssertionError("generator is not full rank")  # unreachable


def _dependent_columns_size(g: Matrix, max_work: int) -> int:
    """Least s such that some s columns of g are dependent (n+1 if none)."""
    field, n = g.field, g.ncols
    cols = list(zip(*g.rows))
    work = 0
    for s in range(1, min(g.nrows + 1, n) + 1):
        for sel in itertools.combinations(range(n), s):
            work += 1
            if work > max_work:
                raise TooLarge(f"column-subset search exceeds max_work={max_work}")
            sub = [list(r) for r in zip(*(cols[j] for j in sel))]
            if len(_rref_inplace(field, sub, s)) < s:
                return s
    return n + 1


def _auto_method(c: LinearCode) -> str:
    enum_cost = c.field.q ** max(c.k - 1, 0) * c.n
    subset_cost = sum(comb(c.n, s) for s in range(c.k, c.n + 1)) * c.k * c.k
    return "enumerate" if enum_cost <= subset_cost else "subsets"


def min_distance(c: LinearCode, method: str = "auto", max_work: int = DEFAULT_MAX_WORK) -> int:
    """Exact minimum Hamming weight of a nonzero codeword.

    ``method="enumerate"`` walks the message space; ``"subsets"`` uses column
    rank deficiencies of the generator.  Both are exhaustive; ``"auto"`` picks
    the cheaper one.
    """
    if c.k == 0:
        raise ValueError("the zero code has no minimum distance")
    if method == "auto":
        method = _auto_method(c)
    if method == "enumerate":
        return _min_weight_enumerate(c, max_work)
    if method == "subsets":
        return _min_weight_subsets(c, max_work)
    raise ValueError(f"unknown method {method!r}")


def dual_distance(c: LinearCode, method: str = "auto", max_work: int = DEFAULT_MAX_WORK) -> int:
    """Minimum distance of the dual code (n + 1 when the dual is zero).

    ``"columns"`` finds the smallest dependent set of columns of the generator
    of ``c``; the other methods run :func:`min_distance` on the dual itself.
    """
    if method == "columns":
        return _dependent_columns_size(c.generator, max_work)
    d = dual(c)
    if d.k == 0:
        return c.n + 1
    if method == "auto":
        if _auto_method(d) == "subsets":
            return _dependent_columns_size(c.generator, max_work)
        method = "enumerate"
    return min_distance(d, method, max_work)


@dataclass(frozen=True)
class DistanceProfile:
    d: int
    d_dual: int
    category: str  # MDS | NMDS | AMDS | OTHER

    def to_json(self) -> dict:
        return {"d": self.d, "d_dual": self.d_dual, "category": self.category}


def category_of(n: int, k: int, d: int, d_dual: int) -> str:
    if d == n - k + 1:
        return "MDS"
    if d == n - k:
        return "NMDS" if d_dual == k else "AMDS"
    return "OTHER"


def classify(c: LinearCode, method: str = "auto", max_work: int = DEFAULT_MAX_WORK) -> DistanceProfile:
    if c.k == 0:
        raise ValueError("cannot classify the zero code")
    d = min_distance(c, method, max_work)
    dd = dual_distance(c, "columns" if method == "subsets" else method, max_work)
    return DistanceProfile(d, dd, category_of(c.n, c.k, d, dd))


def gram(c: LinearCode) -> Matrix:
    g = c.generator
    return g @ g.T


def is_self_dual(c: LinearCode) -> bool:
    return c.n == 2 * c.k and gram(c).is_zero()
