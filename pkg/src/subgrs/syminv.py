"""Elementary symmetric values, Lagrange coefficients and power moments.

Throughout, ``u_i = prod_{j != i} (a_i - a_j)^{-1}``.  With this sign the
moment sums ``sum_i u_i a_i^l`` vanish for ``l <= n-2`` and equal 1 at
``l = n-1``; :class:`SymContext` re-checks that at construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import BadIndex, DuplicatePoints, NotADivisor, OutOfRange
from .field import FieldElement, FieldSpec


def elem_sym_all(vals: Sequence[FieldElement], field: FieldSpec | None = None) -> list[FieldElement]:
    """[s_0, s_1, ..., s_n] of ``vals`` via one-point extension."""
    if field is None:
        field = vals[0].field
    e = [field.one] + [field.zero] * len(vals)
    for i, x in enumerate(vals, start=1):
        for j in range(i, 0, -1):
            e[j] = e[j] + x * e[j - 1]
    return e


def elem_sym(vals: Sequence[FieldElement], r: int, field: FieldSpec | None = None) -> FieldElement:
    """s_r(vals); s_0 = 1 and s_r = 0 for r < 0 or r > len(vals)."""
    if field is None:
        field = vals[0].field
    if r < 0 or r > len(vals):
        return field.zero
    e = [field.one] + [field.zero] * r
    for i, x in enumerate(vals, start=1):
        for j in range(min(i, r), 0, -1):
            e[j] = e[j] + x * e[j - 1]
    return e[r]


def _check_distinct(a: Sequence[FieldElement]) -> None:
    if len({x.value for x in a}) != len(a):
        raise DuplicatePoints("evaluation points must be pairwise distinct")


def lagrange_u(a: Sequence[FieldElement]) -> list[FieldElement]:
    _check_distinct(a)
    field = a[0].field
    out = []
    for i, ai in enumerate(a):
        prod = field.one
        for j, aj in enumerate(a):
            if j != i:
                prod = prod * (ai - aj)
        out.append(prod.inv())
    return out


def deleted_sym(a: Sequence[FieldElement], i: int, r: int) -> FieldElement:
    """s_r of the point list with a_i removed."""
    if not 0 <= i < len(a):
        raise BadIndex(f"index {i} out of range for {len(a)} points")
    field = a[0].field
    return elem_sym([x for j, x in enumerate(a) if j != i], r, field)


@dataclass(frozen=True)
class SymContext:
    """Cached symmetric data of a point list ``a``.

    ``t[l] = s_l(a)``; ``h[l] = sum_i u_i a_i^(n-1+l)`` for l = 0, 1, 2;
    ``deleted[i] = s_{n-2}(a without a_i)``.
    """

    field: FieldSpec
    a: tuple[FieldElement, ...]
    u: tuple[FieldElement, ...]
    t: tuple[FieldElement, ...]
    h: tuple[FieldElement, ...]
    deleted: tuple[FieldElement, ...]

    @property
    def n(self) -> int:
        return len(self.a)

    @classmethod
    def of(cls, a: Sequence[FieldElement], check: bool = True) -> "SymContext":
        a = tuple(a)
        field = a[0].field
        n = len(a)
        u = tuple(lagrange_u(a))
        t = tuple(elem_sym_all(a, field))
        # f_a(x) = sum_j (-1)^j t_j x^(n-j), high-to-low; divide by (x - a_i).
        f = [t[j] if j % 2 == 0 else -t[j] for j in range(n + 1)]
        sign = 1 if n % 2 == 0 else -1
        deleted = []
        for ai in a:
            b = f[0]
            quotient = [b]
            for j in range(1, n):
                b = f[j] + ai * b
                quotient.append(b)
            # quotient[n-2] is the coefficient of x^1
            deleted.append(quotient[n - 2] * sign if n >= 2 else field.zero)
        h = tuple(sum((ui * ai ** (n - 1 + ell) for ui, ai in zip(u, a)), field.zero) for ell in range(3))
        ctx = cls(field, a, u, t, h, tuple(deleted))
        if check:
            for ell in range(n):
                expected = field.one if ell == n - 1 else field.zero
                if moments(ctx, ell) != expected:
                    raise AssertionError(f"Lagrange moment self-check failed at l={ell}")
        return ctx

    def tl(self, ell: int) -> FieldElement:
        """t_l with t_l = 0 outside [0, n]."""
        if 0 <= ell <= self.n:
            return self.t[ell]
        return self.field.zero

    def weights(self) -> list[FieldElement]:
        """u_i * s_{n-2}(a_i), the factors of the r = k-1 theorems."""
        return [ui * si for ui, si in zip(self.u, self.deleted)]


def _check_l(ctx: SymContext, ell: int) -> None:
    if not 0 <= ell <= ctx.n + 1:
        raise OutOfRange(f"moment index {ell} outside [0, {ctx.n + 1}]")


def moments(ctx: SymContext, ell: int) -> FieldElement:
    """sum_i u_i a_i^l."""
    _check_l(ctx, ell)
    return sum((ui * ai**ell for ui, ai in zip(ctx.u, ctx.a)), ctx.field.zero)


def deleted_moments(ctx: SymContext, ell: int) -> FieldElement:
    """sum_i a_i^l u_i s_{n-2}(a_i)."""
    _check_l(ctx, ell)
    return sum(
        (ai**ell * ui * si for ai, ui, si in zip(ctx.a, ctx.u, ctx.deleted)),
        ctx.field.zero,
    )


def moment_closed_form(ctx: SymContext, ell: int) -> FieldElement:
    """Closed form of ``moments``: 0, 1, t_1, t_1^2 - t_2 by range of l."""
    _check_l(ctx, ell)
    n, F = ctx.n, ctx.field
    if ell <= n - 2:
        return F.zero
    if ell == n - 1:
        return F.one
    if ell == n:
        return ctx.tl(1)
    return ctx.tl(1) ** 2 - ctx.tl(2)


def deleted_moment_closed_form(ctx: SymContext, ell: int) -> FieldElement:
    """Closed form of ``deleted_moments`` (needs n >= 2)."""
    _check_l(ctx, ell)
    n, F = ctx.n, ctx.field
    if n < 2:
        raise OutOfRange("the deleted-moment table needs at least two points")
    if ell == 1:
        return F.one if n % 2 == 0 else -F.one
    if ell == 0 or 2 <= ell <= n - 1:
        return F.zero
    if ell == n:
        return ctx.tl(n - 1)
    return ctx.tl(1) * ctx.tl(n - 1) - ctx.tl(n)


def cyclic_subgroup_points(field: FieldSpec, n: int) -> list[FieldElement]:
    """The order-n subgroup of F_q^*, listed as powers of its least generator."""
    if n < 1 or (field.q - 1) % n:
        raise NotADivisor(f"{n} does not divide q - 1 = {field.q - 1}")
    gen = next(x for x in range(1, field.q) if field.order_int(x) == n)
    g = field.from_int(gen)
    return [g**i for i in range(n)]
