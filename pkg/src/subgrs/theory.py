"""Self-dual, MDS and NMDS characterizations and closed-form duals of the subcodes.

Point lists are sequences of :class:`FieldElement`.  Every predicate here
has a brute-force counterpart (``classify``, ``dual``, the factor oracles at
the bottom of this module) that the tests and the ``audit`` command compare
against.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from typing import Callable, Sequence

from .code import DEFAULT_MAX_WORK, LinearCode, is_self_dual
from .errors import (
    CharacteristicDividesLength,
    EvenCharacteristic,
    EvenLength,
    HypothesisFailed,
    OddLength,
    OutOfRange,
    TooLarge,
)
from .family import EvalConfig, Poly, evaluate, plus_tgrs, sub_grs, subcode_degrees
from .field import FieldElement, FieldSpec
from .matrix import Matrix, vandermonde_rows
from .syminv import SymContext

Points = Sequence[FieldElement]


# result types -------------------------------------------------------------------

def _enc(xs):
    return None if xs is None else [x.to_json() for x in xs]


@dataclass(frozen=True)
class SelfDualVerdict:
    exists: bool
    witness_factors: tuple[FieldElement, ...] | None
    reason: dict
    in_hypothesis: bool = True

    def to_json(self) -> dict:
        return {
            "exists": self.exists,
            "witness": _enc(self.witness_factors),
            "reason": self.reason,
            "in_hypothesis": self.in_hypothesis,
        }


@dataclass(frozen=True)
class MdsVerdict:
    """``is_mds`` plus, when false, a subset on which the criterion fails."""

    is_mds: bool
    witness: tuple[FieldElement, ...] | None = None
    condition: str | None = None

    def __bool__(self) -> bool:
        return self.is_mds

    def to_json(self) -> dict:
        return {"is_mds": self.is_mds, "witness": _enc(self.witness), "condition": self.condition}


@dataclass(frozen=True)
class NmdsCertificate:
    dual_distance_ge_k: bool
    violating_subset: tuple[FieldElement, ...] | None = None
    condition: str | None = None

    def __bool__(self) -> bool:
        return self.dual_distance_ge_k

    def to_json(self) -> dict:
        return {
            "dual_distance_ge_k": self.dual_distance_ge_k,
            "violating_subset": _enc(self.violating_subset),
            "condition": self.condition,
        }


@dataclass(frozen=True)
class RankCertificate:
    """Rank of the linear system in v_i^2 that GG^T = 0 imposes."""

    degrees: tuple[int, ...]
    rank: int
    n: int
    matrix: Matrix = dc_field(repr=False, compare=False)

    @property
    def full_rank(self) -> bool:
        return self.rank == self.n

    def __bool__(self) -> bool:
        return self.full_rank

    def to_json(self) -> dict:
        return {"degrees": list(self.degrees), "rank": self.rank, "n": self.n, "full_rank": self.full_rank}


# helpers ----------------------------------------------------------------------

def _field_of(a: Points) -> FieldSpec:
    if not a:
        raise OutOfRange("empty point list")
    return a[0].field


def _require_odd(field: FieldSpec) -> None:
    if field.p == 2:
        raise EvenCharacteristic("squareness criteria need odd characteristic")


def _uniform_class(vals: Sequence[FieldElement]) -> bool:
    first = vals[0].is_square()
    return all(v != 0 and v.is_square() == first for v in vals)


def _sqrt_witness(vals: Sequence[FieldElement]) -> tuple[FieldElement, ...]:
    """sqrt(lambda * vals_i) with lambda = 1 / vals_0."""
    lam = vals[0].inv()
    return tuple((lam * v).sqrt() for v in vals)


def _esym_int(field: FieldSpec, vals: Sequence[int], r: int) -> int:
    if r < 0 or r > len(vals):
        return 0
    add, mul = field.add, field.mul
    e = [1] + [0] * r
    for i, x in enumerate(vals, start=1):
        for j in range(min(i, r), 0, -1):
            e[j] = add(e[j], mul(x, e[j - 1]))
    return e[r]


def _elements(field: FieldSpec, vals) -> tuple[FieldElement, ...]:
    return tuple(FieldElement(field, v) for v in vals)


def _check_kr(n: int, k: int, r: int, r_lo: int = 1) -> None:
    if not r_lo <= r <= k - 1:
        raise OutOfRange(f"need {r_lo} <= r <= k-1, got k={k}, r={r}")
    if not 1 <= k <= n - 1:
        raise OutOfRange(f"need k <= n-1, got k={k}, n={n}")


def _transport(field: FieldSpec, base: Sequence[FieldElement], factors: Points | None, n: int):
    """Column factors of the dual of a code scaled by ``factors``: base_i / v_i."""
    if factors is None:
        return list(base)
    if len(factors) != n:
        raise OutOfRange("factor list length differs from the number of points")
    return [b / field(v) for b, v in zip(base, factors)]


# self-dual existence ----------------------------------------------------------

def grs_selfdual_exists(a: Points) -> SelfDualVerdict:
    """Self-dual GRS_{n/2}(a, v) exists iff all u_i lie in one square class."""
    field = _field_of(a)
    _require_odd(field)
    n = len(a)
    if n % 2:
        raise OddLength(f"self-dual codes need even length, got {n}")
    ctx = SymContext.of(a)
    if _uniform_class(ctx.u):
        return SelfDualVerdict(True, _sqrt_witness(ctx.u), {"u_uniform_class": True})
    return SelfDualVerdict(False, None, {"u_uniform_class": False})


def sub1_selfdual_exists(a: Points) -> SelfDualVerdict:
    """GRS_{n/2,1}(a, v) self-dual for some v iff t_1 = 0 and the u_i share a square class."""
    field = _field_of(a)
    _require_odd(field)
    n = len(a)
    if n % 2:
        raise OddLength(f"self-dual codes need even length, got {n}")
    if n < 4:
        raise OutOfRange("r = 1 subcodes need k >= 2, so n >= 4")
    ctx = SymContext.of(a)
    t1_zero = ctx.t[1] == 0
    uniform = _uniform_class(ctx.u)
    reason = {"t1_zero": t1_zero, "u_uniform_class": uniform}
    ok = t1_zero and uniform
    return SelfDualVerdict(ok, _sqrt_witness(ctx.u) if ok else None, reason, n >= 8)


def shift_points(a: Points) -> list[FieldElement]:
    """Translate a by -t_1/n so that the points sum to zero."""
    field = _field_of(a)
    n = len(a)
    if n % field.p == 0:
        raise CharacteristicDividesLength(f"p = {field.p} divides n = {n}")
    c = sum(a, field.zero) / field(n)
    return [x - c for x in a]


def subk1_selfdual_exists(a: Points) -> SelfDualVerdict:
    """GRS_{n/2,n/2-1}(a, v) self-dual for some v iff t_{n-1} = 0 and the w_i share a square class."""
    field = _field_of(a)
    _require_odd(field)
    n = len(a)
    if n % 2:
        raise OddLength(f"self-dual codes need even length, got {n}")
    if n < 4:
        raise OutOfRange("r = k-1 subcodes need k >= 2, so n >= 4")
    ctx = SymContext.of(a)
    tn1_zero = ctx.t[n - 1] == 0
    reason: dict = {"t_n_minus_1_zero": tn1_zero}
    if not tn1_zero:
        return SelfDualVerdict(False, None, reason, n >= 8)
    w = ctx.weights()
    uniform = _uniform_class(w)
    reason["w_uniform_class"] = uniform
    return SelfDualVerdict(uniform, _sqrt_witness(w) if uniform else None, reason, n >= 8)


def sub_egrs_k1_selfdual_exists(a: Points) -> SelfDualVerdict:
    """GRS_{k,k-1}(a, v, inf), n + 1 = 2k: self-dual for some v iff t_{n-1} = 0 and every t_n w_i is a square."""
    field = _field_of(a)
    _require_odd(field)
    n = len(a)
    if n % 2 == 0:
        raise EvenLength(f"the extended code has length n+1, so n must be odd; got {n}")
    if n < 3:
        raise OutOfRange("need n >= 3")
    ctx = SymContext.of(a)
    tn1_zero = ctx.t[n - 1] == 0
    reason: dict = {"t_n_minus_1_zero": tn1_zero}
    if not tn1_zero:
        return SelfDualVerdict(False, None, reason, n + 1 >= 8)
    tn = ctx.t[n]
    if tn == 0:  # excluded by t_{n-1} = 0; kept as a guard
        raise AssertionError("t_n vanished although t_{n-1} = 0")
    scaled = [w / tn for w in ctx.weights()]
    squares = all(x.is_square() for x in scaled)
    reason["tn_w_all_squares"] = squares
    witness = tuple(x.sqrt() for x in scaled) if squares else None
    return SelfDualVerdict(squares, witness, reason, n + 1 >= 8)


def midrange_never_selfdual(a: Points, k: int, r: int, extended: bool = False) -> RankCertificate:
    """Rank of the homogeneous system sum_l x_l a_l^s = 0, s in J + J.

    For the extended code the equation at s = 2k carries the extension
    coordinate and is left out.  Full rank forces x = 0, so no nonzero
    factors make the code self-dual.
    """
    n = len(a)
    if not 2 <= r <= k - 2:
        raise OutOfRange(f"need 2 <= r <= k-2, got k={k}, r={r}")
    if (n + int(extended)) != 2 * k:
        raise OutOfRange(f"length {n + int(extended)} is not 2k = {2 * k}")
    degs = subcode_degrees(k, r)
    sums = sorted({i + j for i in degs for j in degs})
    if extended:
        sums = [s for s in sums if s != 2 * k]
    m = vandermonde_rows(list(a), sums)
    return RankCertificate(tuple(sums), m.rank(), n, m)


# MDS / NMDS ---------------------------------------------------------------------

def _vanishing_subset(field: FieldSpec, vals: list[int], size: int, rs: Sequence[int]):
    """First ``size``-subset on which every s_r, r in ``rs``, vanishes."""
    for sub in itertools.combinations(vals, size):
        if all(_esym_int(field, sub, r) == 0 for r in rs):
            return sub
    return None


def sub_grs_is_mds(a: Points, k: int, r: int) -> MdsVerdict:
    """MDS iff s_r(S) != 0 for every k-subset S of a."""
    field = _field_of(a)
    _check_kr(len(a), k, r)
    vals = [x.value for x in a]
    hit = _vanishing_subset(field, vals, k, [r])
    if hit is None:
        return MdsVerdict(True)
    return MdsVerdict(False, _elements(field, hit), f"s_{r} vanishes on a {k}-subset")


def sub_egrs_is_mds(a: Points, k: int, r: int) -> MdsVerdict:
    """MDS iff no (k-1)-subset kills s_{r-1} and no k-subset kills s_r."""
    field = _field_of(a)
    _check_kr(len(a), k, r)
    vals = [x.value for x in a]
    if r >= 2:
        hit = _vanishing_subset(field, vals, k - 1, [r - 1])
        if hit is not None:
            return MdsVerdict(False, _elements(field, hit), f"s_{r - 1} vanishes on a {k - 1}-subset")
    hit = _vanishing_subset(field, vals, k, [r])
    if hit is not None:
        return MdsVerdict(False, _elements(field, hit), f"s_{r} vanishes on a {k}-subset")
    return MdsVerdict(True)


def plus_tgrs_is_mds(a: Points, k: int, eta) -> MdsVerdict:
    """The (+)-TGRS code is MDS iff no k-subset of a sums to -1/eta."""
    field = _field_of(a)
    eta = field(eta)
    if eta == 0:
        raise OutOfRange("eta must be nonzero")
    if not 1 <= k <= len(a) - 1:
        raise OutOfRange(f"need 1 <= k <= n-1, got k={k}")
    target = (-eta.inv()).value
    vals = [x.value for x in a]
    add = field.add
    for sub in itertools.combinations(vals, k):
        acc = 0
        for x in sub:
            acc = add(acc, x)
        if acc == target:
            return MdsVerdict(False, _elements(field, sub), f"a {k}-subset sums to -1/eta")
    return MdsVerdict(True)


def sub_grs_dual_dist_ge_k(a: Points, k: int, r: int) -> NmdsCertificate:
    """d(dual) >= k iff s_{r-1}(A), s_r(A) never both vanish on a (k-1)-subset A."""
    field = _field_of(a)
    _check_kr(len(a), k, r, r_lo=2)
    vals = [x.value for x in a]
    hit = _vanishing_subset(field, vals, k - 1, [r - 1, r])
    if hit is None:
        return NmdsCertificate(True)
    return NmdsCertificate(False, _elements(field, hit), f"s_{r - 1} and s_{r} vanish on a {k - 1}-subset")


def sub_egrs_dual_dist_ge_k(a: Points, k: int, r: int) -> NmdsCertificate:
    """The (k-1)-subset test of the plain code, plus for r >= 3 the same test one level down on (k-2)-subsets."""
    field = _field_of(a)
    _check_kr(len(a), k, r, r_lo=2)
    vals = [x.value for x in a]
    hit = _vanishing_subset(field, vals, k - 1, [r - 1, r])
    if hit is not None:
        return NmdsCertificate(False, _elements(field, hit), f"s_{r - 1} and s_{r} vanish on a {k - 1}-subset")
    if r >= 3:
        hit = _vanishing_subset(field, vals, k - 2, [r - 2, r - 1])
        if hit is not None:
            return NmdsCertificate(
                False, _elements(field, hit), f"s_{r - 2} and s_{r - 1} vanish on a {k - 2}-subset"
            )
    return NmdsCertificate(True)


# closed-form duals ----------------------------------------------------------------

def dual_of_sub1(a: Points, k: int, factors: Points | None = None) -> LinearCode:
    """Dual of GRS_{k,1}(a, v): GRS_{n-k,1}(a, u/v) if t_1 = 0, else the (+)-TGRS code with eta = -1/t_1."""
    field = _field_of(a)
    n = len(a)
    if not 2 <= k <= n - 2:
        raise OutOfRange(f"need 2 <= k <= n-2, got k={k}, n={n}")
    ctx = SymContext.of(a)
    cfg = EvalConfig.of(field, a, _transport(field, ctx.u, factors, n))
    t1 = ctx.t[1]
    if t1 == 0:
        return sub_grs(cfg, n - k, 1)
    return plus_tgrs(cfg, n - k, -t1.inv())


def _require_tn1_zero(ctx: SymContext) -> None:
    if ctx.t[ctx.n - 1] != 0:
        raise HypothesisFailed("t_{n-1} must vanish")


def dual_of_sub_k1(a: Points, k: int, factors: Points | None = None) -> LinearCode:
    """Dual of GRS_{k,k-1}(a, v) when t_{n-1} = 0: GRS_{n-k,n-k-1}(a, w/v)."""
    field = _field_of(a)
    n = len(a)
    if not 3 <= k <= n - 2:
        raise OutOfRange(f"need 3 <= k <= n-2, got k={k}, n={n}")
    ctx = SymContext.of(a)
    _require_tn1_zero(ctx)
    cfg = EvalConfig.of(field, a, _transport(field, ctx.weights(), factors, n))
    return sub_grs(cfg, n - k, n - k - 1)


def sub2_dual_case(a: Points) -> int:
    """Which of the five (h_1, h_2) patterns the points fall into."""
    ctx = SymContext.of(a)
    h1, h2 = ctx.h[1], ctx.h[2]
    if h1 == 0 and h2 == 0:
        return 1
    if h1 == 0:
        return 2
    if h2 == 0:
        return 3
    if h2 == h1 * h1:
        return 4
    return 5


def sub2_dual_polynomial(a: Points, k: int) -> tuple[Poly, int]:
    """The extra basis polynomial g of the dual of GRS_{k,2}(a) and its case label."""
    field = _field_of(a)
    n = len(a)
    ctx = SymContext.of(a)
    h1, h2 = ctx.h[1], ctx.h[2]
    case = sub2_dual_case(a)
    lo, mid, hi = n - k - 1, n - k, n - k + 1
    coeffs = [field.zero] * (hi + 1)
    if case == 1:
        coeffs[hi] = field.one
    elif case == 2:
        coeffs[lo], coeffs[hi] = field.one, -h2.inv()
    elif case == 3:
        coeffs[lo], coeffs[mid], coeffs[hi] = field.one, -h1.inv(), (h1 * h1).inv()
    elif case == 4:
        coeffs[mid], coeffs[hi] = field.one, -h1.inv()
    else:
        den = (h1 * h1 - h2).inv()
        coeffs[lo], coeffs[mid], coeffs[hi] = field.one, -h1 * den, den
    return Poly(field, coeffs), case


def dual_of_sub2(a: Points, k: int, factors: Points | None = None) -> LinearCode:
    """Dual of GRS_{k,2}(a, v): evaluations under u/v of 1, x, ..., x^(n-k-2) and g."""
    field = _field_of(a)
    n = len(a)
    if not 3 <= k <= n - 2:
        raise OutOfRange(f"need 3 <= k <= n-2, got k={k}, n={n}")
    ctx = SymContext.of(a)
    cfg = EvalConfig.of(field, a, _transport(field, ctx.u, factors, n))
    g, _ = sub2_dual_polynomial(a, k)
    polys = [Poly.monomial(field, d) for d in range(n - k - 1)] + [g]
    return LinearCode(Matrix(field, [evaluate(f, cfg) for f in polys], n))


# parity-check matrices of the extended subcodes -----------------------------------

def _with_column(g: Matrix, col: Sequence[FieldElement]) -> Matrix:
    return g.hstack(Matrix(g.field, [[c] for c in col], 1))


def parity_of_sub_egrs_1(a: Points, k: int, factors: Points | None = None) -> Matrix:
    """Parity-check matrix of GRS_{k,1}(a, v, inf)."""
    field = _field_of(a)
    n = len(a)
    if not 2 <= k <= n - 1:
        raise OutOfRange(f"need 2 <= k <= n-1 (r = 1 requires k >= 2), got k={k}, n={n}")
    ctx = SymContext.of(a)
    cfg = EvalConfig.of(field, a, _transport(field, ctx.u, factors, n))
    rows = [evaluate(Poly.monomial(field, d), cfg) for d in range(n - k + 1)]
    ext = [field.zero] * (n - k + 1)
    ext[n - k - 1] = -field.one
    ext[n - k] = -ctx.t[1]
    return _with_column(Matrix(field, rows, n), ext)


def parity_of_sub_egrs_2(a: Points, k: int, factors: Points | None = None) -> Matrix:
    """Parity-check matrix of GRS_{k,2}(a, v, inf); the branch follows t_1 = 0 or not."""
    field = _field_of(a)
    n = len(a)
    if not 3 <= k <= n - 2:
        raise OutOfRange(f"need 3 <= k <= n-2, got k={k}, n={n}")
    ctx = SymContext.of(a)
    cfg = EvalConfig.of(field, a, _transport(field, ctx.u, factors, n))
    t1, t2 = ctx.t[1], ctx.t[2]
    ext = [field.zero] * (n - k + 1)
    ext[-2] = -field.one
    if t1 == 0:
        base = sub_grs(cfg, n - k + 1, 1)
        ext[-1] = t2
    else:
        base = plus_tgrs(cfg, n - k + 1, -t1.inv())
        ext[-1] = -t2 / t1
    return _with_column(base.generator, ext)


def parity_of_sub_egrs_k1(a: Points, k: int, factors: Points | None = None) -> Matrix:
    """Parity-check matrix of GRS_{k,k-1}(a, v, inf) when t_{n-1} = 0."""
    field = _field_of(a)
    n = len(a)
    if not 3 <= k <= n - 2:
        raise OutOfRange(f"need 3 <= k <= n-2, got k={k}, n={n}")
    ctx = SymContext.of(a)
    _require_tn1_zero(ctx)
    cfg = EvalConfig.of(field, a, _transport(field, ctx.weights(), factors, n))
    degs = [0] + list(range(2, n - k + 2))
    rows = [evaluate(Poly.monomial(field, d), cfg) for d in degs]
    ext = [field.zero] * len(degs)
    ext[-1] = ctx.t[n]
    return _with_column(Matrix(field, rows, n), ext)


# self-dual oracles ------------------------------------------------------------------

def selfdual_factors_by_kernel(
    a: Points,
    degrees: Sequence[int],
    extension_degree: int | None = None,
    max_work: int = DEFAULT_MAX_WORK,
) -> tuple[FieldElement, ...] | None:
    """Nonzero v making the monomial code on ``degrees`` self-dual, or None.

    G G^T = 0 is linear in x_i = v_i^2: sum_i x_i a_i^s = 0 for every s in
    degrees + degrees, except that the equation at s = 2e equals -1 when the
    extension coordinate sits on the degree-e row.  The affine solution set
    is enumerated and any solution of nonzero squares is returned.
    """
    field = _field_of(a)
    n = len(a)
    degs = sorted(set(degrees))
    if 2 * len(degs) != n + int(extension_degree is not None):
        return None
    sums = sorted({i + j for i in degs for j in degs})
    m = vandermonde_rows(list(a), sums)
    rhs = [0] * len(sums)
    if extension_degree is not None:
        rhs[sums.index(2 * extension_degree)] = field.neg(1)
    # Solve [M | rhs] by elimination on the augmented matrix.
    aug = Matrix._raw(field, [list(row) + [b] for row, b in zip(m.rows, rhs)], n + 1)
    red = aug.rref()
    pivots = aug.pivots()
    if n in pivots:
        return None
    free = [c for c in range(n) if c not in pivots]
    if field.q ** len(free) > max_work:
        raise TooLarge(f"{field.q}^{len(free)} kernel points exceed max_work={max_work}")
    sub, mul = field.sub, field.mul
    for choice in itertools.product(range(field.q), repeat=len(free)):
        x = [0] * n
        for c, val in zip(free, choice):
            x[c] = val
        for i, pc in enumerate(pivots):
            acc = red.rows[i][n]
            for c, val in zip(free, choice):
                if val:
                    acc = sub(acc, mul(red.rows[i][c], val))
            x[pc] = acc
        if all(xi and field.is_square_int(xi) for xi in x):
            return tuple(FieldElement(field, field.sqrt_int(xi)) for xi in x)
    return None


def selfdual_factors_by_enumeration(
    n: int,
    field: FieldSpec,
    build: Callable[[list[FieldElement]], LinearCode],
    max_work: int = DEFAULT_MAX_WORK,
) -> tuple[FieldElement, ...] | None:
    """Try every v in (F_q^*)^n; return the first whose code is self-dual."""
    if (field.q - 1) ** n > max_work:
        raise TooLarge(f"{field.q - 1}^{n} factor vectors exceed max_work={max_work}")
    nonzero = [FieldElement(field, x) for x in range(1, field.q)]
    for v in itertools.product(nonzero, repeat=n):
        if is_self_dual(build(list(v))):
            return v
    return None
