"""Constructors for GRS, extended GRS, their codimension-1 subcodes and TGRS codes.

Every generator matrix lists its rows in increasing monomial degree; the
extension column of the extended families carries the coefficient of the top
monomial (degree k-1 for ``egrs``, degree k for ``sub_egrs``).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .code import LinearCode
from .errors import BadDimension, DuplicatePoints, ShapeMismatch, SpecValidation, ZeroTwist
from .field import FieldElement, FieldSpec
from .matrix import Matrix


@dataclass(frozen=True)
class EvalConfig:
    """Pairwise-distinct evaluation points with nonzero column factors."""

    points: tuple[FieldElement, ...]
    factors: tuple[FieldElement, ...]

    def __post_init__(self):
        if not self.points:
            raise BadDimension("at least one evaluation point is required")
        if len(self.points) != len(self.factors):
            raise ShapeMismatch("points and factors differ in length")
        if len({x.value for x in self.points}) != len(self.points):
            raise DuplicatePoints("evaluation points must be pairwise distinct")
        if any(v == 0 for v in self.factors):
            raise ValueError("column factors must be nonzero")
        if len(self.points) > self.field.q:
            raise BadDimension("more points than field elements")

    @classmethod
    def of(cls, field: FieldSpec, points: Iterable, factors: Iterable | None = None) -> "EvalConfig":
        pts = tuple(field(x) for x in points)
        fac = tuple(field(v) for v in factors) if factors is not None else (field.one,) * len(pts)
        return cls(pts, fac)

    @property
    def field(self) -> FieldSpec:
        return self.points[0].field

    @property
    def n(self) -> int:
        return len(self.points)

    def with_factors(self, factors: Iterable) -> "EvalConfig":
        return EvalConfig.of(self.field, self.points, factors)


class Poly:
    """Polynomial over a finite field, coefficients low-to-high."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: FieldSpec, coeffs: Iterable = ()):
        c = [field(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.field = field
        self.coeffs = tuple(c)

    @classmethod
    def monomial(cls, field: FieldSpec, degree: int, coeff=1) -> "Poly":
        return cls(field, [0] * degree + [coeff])

    @property
    def degree(self):
        """Degree; ``-inf`` for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else -math.inf

    def __getitem__(self, k: int) -> FieldElement:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else self.field.zero

    def __call__(self, x: FieldElement) -> FieldElement:
        acc = self.field.zero
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other: "Poly") -> "Poly":
        size = max(len(self.coeffs), len(other.coeffs))
        return Poly(self.field, [self[i] + other[i] for i in range(size)])

    def __sub__(self, other: "Poly") -> "Poly":
        size = max(len(self.coeffs), len(other.coeffs))
        return Poly(self.field, [self[i] - other[i] for i in range(size)])

    def scale(self, c) -> "Poly":
        return Poly(self.field, [c * x for x in self.coeffs])

    def __eq__(self, other) -> bool:
        return isinstance(other, Poly) and self.coeffs == other.coeffs

    def __repr__(self) -> str:
        terms = [f"({c!r})x^{i}" for i, c in enumerate(self.coeffs) if c != 0]
        return " + ".join(terms) or "0"


def evaluate(f: Poly, cfg: EvalConfig) -> list[FieldElement]:
    """(v_1 f(a_1), ..., v_n f(a_n))."""
    return [v * f(a) for a, v in zip(cfg.points, cfg.factors)]


def subcode_degrees(k: int, r: int) -> list[int]:
    """J(k, r) = [0, k] without k - r."""
    return [j for j in range(k + 1) if j != k - r]


def _code(cfg: EvalConfig, polys: Sequence[Poly], ext: Sequence[int] | None = None) -> LinearCode:
    rows = [evaluate(f, cfg) for f in polys]
    if ext is not None:
        rows = [row + [cfg.field(e)] for row, e in zip(rows, ext)]
    ncols = cfg.n + (1 if ext is not None else 0)
    return LinearCode(Matrix(cfg.field, rows, ncols))


def _monomials(field: FieldSpec, degrees: Iterable[int]) -> list[Poly]:
    return [Poly.monomial(field, d) for d in degrees]


def grs(cfg: EvalConfig, k: int) -> LinearCode:
    if not 1 <= k <= cfg.n:
        raise BadDimension(f"GRS needs 1 <= k <= n, got k={k}, n={cfg.n}")
    return _code(cfg, _monomials(cfg.field, range(k)))


def egrs(cfg: EvalConfig, k: int) -> LinearCode:
    if not 1 <= k <= cfg.n + 1:
        raise BadDimension(f"EGRS needs 1 <= k <= n+1, got k={k}, n={cfg.n}")
    ext = [int(d == k - 1) for d in range(k)]
    return _code(cfg, _monomials(cfg.field, range(k)), ext)


def _check_subcode(cfg: EvalConfig, k: int, r: int) -> None:
    if not 1 <= r <= k - 1:
        raise BadDimension(f"subcode needs 1 <= r <= k-1, got k={k}, r={r}")
    if k > cfg.n - 1:
        raise BadDimension(f"subcode needs k <= n-1, got k={k}, n={cfg.n}")


def sub_grs(cfg: EvalConfig, k: int, r: int) -> LinearCode:
    """GRS_{k,r}(a, v): degrees [0, k] except k - r."""
    _check_subcode(cfg, k, r)
    return _code(cfg, _monomials(cfg.field, subcode_degrees(k, r)))


def sub_egrs(cfg: EvalConfig, k: int, r: int) -> LinearCode:
    """GRS_{k,r}(a, v, inf): ``sub_grs`` plus the coefficient of x^k."""
    _check_subcode(cfg, k, r)
    degs = subcode_degrees(k, r)
    return _code(cfg, _monomials(cfg.field, degs), [int(d == k) for d in degs])


def plus_tgrs(cfg: EvalConfig, k: int, eta) -> LinearCode:
    """(+)-twisted code spanned by 1, ..., x^(k-2), x^(k-1) + eta x^k."""
    field = cfg.field
    eta = field(eta)
    if not 1 <= k <= cfg.n - 1:
        raise BadDimension(f"(+)-TGRS needs 1 <= k <= n-1, got k={k}, n={cfg.n}")
    if eta == 0:
        raise ZeroTwist("twist coefficient must be nonzero")
    polys = _monomials(field, range(k - 1))
    polys.append(Poly(field, [0] * (k - 1) + [1, eta]))
    return _code(cfg, polys)


def tgrs(cfg: EvalConfig, eta: Matrix) -> LinearCode:
    """Code spanned by g_i = x^i + sum_j eta[i][j] x^(k+j), i < k."""
    k = eta.nrows
    if k < 1 or eta.ncols != cfg.n - k:
        raise ShapeMismatch(f"twist matrix must be k x (n-k); got {eta.shape} for n={cfg.n}")
    field = cfg.field
    polys = []
    for i in range(k):
        coeffs = [0] * (cfg.n)
        coeffs[i] = 1
        for j, e in enumerate(eta.row(i)):
            coeffs[k + j] = e
        polys.append(Poly(field, coeffs))
    return _code(cfg, polys)


FAMILIES = ("grs", "egrs", "sub_grs", "sub_egrs", "plus_tgrs", "tgrs")


def build(family: str, cfg: EvalConfig, k: int | None = None, r: int | None = None, eta=None) -> LinearCode:
    """Dispatch on a family name."""
    if family == "grs":
        return grs(cfg, k)
    if family == "egrs":
        return egrs(cfg, k)
    if family == "sub_grs":
        return sub_grs(cfg, k, r)
    if family == "sub_egrs":
        return sub_egrs(cfg, k, r)
    if family == "plus_tgrs":
        return plus_tgrs(cfg, k, eta)
    if family == "tgrs":
        if not isinstance(eta, Matrix):
            eta = Matrix(cfg.field, eta)
        return tgrs(cfg, eta)
    raise SpecValidation(f"unknown family {family!r}; expected one of {', '.join(FAMILIES)}")


def from_descriptor(field: FieldSpec, desc: dict) -> LinearCode:
    """Build a code from ``{"family", "k", "r", "eta", "points", "factors"}``.

    Elements in ``points``/``factors``/``eta`` may be ints (prime subfield)
    or coefficient lists.
    """
    points = desc["points"]
    cfg = EvalConfig.of(field, points, desc.get("factors"))
    eta = desc.get("eta")
    if desc["family"] == "tgrs":
        eta = Matrix(field, [[field(x) for x in row] for row in eta], cfg.n - len(eta))
    return build(desc["family"], cfg, desc.get("k"), desc.get("r"), eta)


def descriptor(family: str, cfg: EvalConfig, k=None, r=None, eta=None) -> dict:
    out = {"family": family}
    if k is not None:
        out["k"] = k
    if r is not None:
        out["r"] = r
    if eta is not None:
        out["eta"] = eta.to_json() if isinstance(eta, (Matrix, FieldElement)) else eta
    out["points"] = [x.to_json() for x in cfg.points]
    out["factors"] = [v.to_json() for v in cfg.factors]
    return out
