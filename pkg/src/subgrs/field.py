"""Exact arithmetic in GF(p^m).

An element of GF(p^m) = Z_p[x]/(modulus) is stored as the integer
``c_0 + c_1 p + ... + c_{m-1} p^{m-1}`` built from its reduced coefficient
vector.  That integer is the canonical form: two elements are equal exactly
when their coefficient vectors are equal, and the natural integer order is
the lexicographic order of the coefficient vector read from the top degree
down.  ``enumerate`` and every deterministic tie-break use this order.

Field orders up to ``MAX_ORDER`` (2^32) are accepted.  Extension fields build
exp/log tables lazily on the first multiplication when q <= 2^16, so creating
a field stays cheap.
"""

from __future__ import annotations

import functools
import re
from typing import Iterable, Sequence

from .errors import (
    DivisionByZero,
    FieldMismatch,
    NonPrimeCharacteristic,
    NotASquare,
    ReducibleModulus,
)

MAX_ORDER = 1 << 32
_TABLE_LIMIT = 1 << 16


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


# --- polynomials over Z_p as low-to-high coefficient lists -----------------

def _trim(f: list[int]) -> list[int]:
    while f and f[-1] == 0:
        f.pop()
    return f


def _pmod(f: list[int], g: list[int], p: int) -> list[int]:
    f = _trim(list(f))
    dg = len(g) - 1
    lead_inv = pow(g[-1], p - 2, p)
    while len(f) - 1 >= dg and f:
        c = f[-1] * lead_inv % p
        shift = len(f) - 1 - dg
        for i, gi in enumerate(g):
            f[shift + i] = (f[shift + i] - c * gi) % p
        _trim(f)
    return f


def _pmulmod(f: list[int], g: list[int], mod: list[int], p: int) -> list[int]:
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, fi in enumerate(f):
        if fi:
            for j, gj in enumerate(g):
                out[i + j] = (out[i + j] + fi * gj) % p
    return _pmod(out, mod, p)


def _pgcd(f: list[int], g: list[int], p: int) -> list[int]:
    f, g = _trim(list(f)), _trim(list(g))
    while g:
        f, g = g, _pmod(f, g, p)
    return f


def _x_pow_mod(e: int, mod: list[int], p: int) -> list[int]:
    result, base = [1], _pmod([0, 1], mod, p)
    while e:
        if e & 1:
            result = _pmulmod(result, base, mod, p)
        base = _pmulmod(base, base, mod, p)
        e >>= 1
    return result


def is_irreducible(f: Sequence[int], p: int) -> bool:
    """Rabin's irreducibility test for a monic polynomial over Z_p."""
    f = _trim([c % p for c in f])
    m = len(f) - 1
    if m < 1:
        return False
    if m == 1:
        return True
    def sub_x(g):
        g = list(g) + [0] * max(0, 2 - len(g))
        g[1] = (g[1] - 1) % p
        return _trim(g)

    if _trim(sub_x(_x_pow_mod(p**m, f, p))) != []:
        return False
    for d in prime_factors(m):
        h = sub_x(_x_pow_mod(p ** (m // d), f, p))
        if len(_pgcd(f, h, p)) != 1:
            return False
    return True


def least_irreducible(p: int, m: int) -> tuple[int, ...]:
    """Lexicographically least monic irreducible polynomial of degree m."""
    for low in range(p**m):
        coeffs = [(low // p**i) % p for i in range(m)] + [1]
        if is_irreducible(coeffs, p):
            return tuple(coeffs)
    raise AssertionError("no irreducible polynomial found")  # unreachable


# --- field specification ----------------------------------------------------

class FieldSpec:
    """The field GF(p^m) with a fixed irreducible modulus.

    Arithmetic helpers (``add``, ``mul``, ...) act on integer encodings and are
    what the matrix engine uses; ``F(value)`` wraps a value as a
    :class:`FieldElement` for ordinary operator-based code.
    """

    def __init__(self, p: int, m: int, modulus: tuple[int, ...]):
        self.p = p
        self.m = m
        self.q = p**m
        self.modulus = modulus
        self.is_prime_field = m == 1
        self._exp: list[int] | None = None
        self._log: list[int] | None = None
        self._nonsquare: int | None = None
        self._primitive: int | None = None

    def __repr__(self) -> str:
        if self.m == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.m})"

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FieldSpec)
            and self.p == other.p
            and self.m == other.m
            and self.modulus == other.modulus
        )

    def __hash__(self) -> int:
        return hash((self.p, self.m, self.modulus))

    def __reduce__(self):
        return (field_make, (self.p, self.m, list(self.modulus)))

    # encoding -------------------------------------------------------------
    def coeffs(self, x: int) -> tuple[int, ...]:
        p = self.p
        return tuple((x // p**i) % p for i in range(self.m))

    def from_coeffs(self, coeffs: Sequence[int]) -> int:
        c = _pmod([int(v) % self.p for v in coeffs], list(self.modulus), self.p)
        return sum(ci * self.p**i for i, ci in enumerate(c))

    # integer-level arithmetic ---------------------------------------------
    def add(self, x: int, y: int) -> int:
        if self.m == 1:
            return (x + y) % self.p
        if self.p == 2:
            return x ^ y
        p, out, scale = self.p, 0, 1
        while x or y:
            out += ((x % p + y % p) % p) * scale
            x //= p
            y //= p
            scale *= p
        return out

    def neg(self, x: int) -> int:
        if self.m == 1:
            return -x % self.p
        if self.p == 2:
            return x
        p, out, scale = self.p, 0, 1
        while x:
            out += (-(x % p) % p) * scale
            x //= p
            scale *= p
        return out

    def sub(self, x: int, y: int) -> int:
        if self.m == 1:
            return (x - y) % self.p
        return self.add(x, self.neg(y))

    def _mul_poly(self, x: int, y: int) -> int:
        f = list(self.coeffs(x))
        g = list(self.coeffs(y))
        return self.from_coeffs(_pmulmod(_trim(f), _trim(g), list(self.modulus), self.p))

    def _tables(self) -> bool:
        if self._exp is not None:
            return True
        if self.q > _TABLE_LIMIT:
            return False
        g = self.primitive_int()
        exp = [0] * (self.q - 1)
        log = [0] * self.q
        x = 1
        for i in range(self.q - 1):
            exp[i] = x
            log[x] = i
            x = self._mul_poly(x, g)
        self._exp, self._log = exp, log
        return True

    def mul(self, x: int, y: int) -> int:
        if self.m == 1:
            return x * y % self.p
        if x == 0 or y == 0:
            return 0
        if self._exp is not None or self._tables():
            return self._exp[(self._log[x] + self._log[y]) % (self.q - 1)]
        return self._mul_poly(x, y)

    def inv(self, x: int) -> int:
        if x == 0:
            raise DivisionByZero("inverse of zero")
        if self.m == 1:
            return pow(x, self.p - 2, self.p)
        if self._exp is not None or self._tables():
            return self._exp[-self._log[x] % (self.q - 1)]
        return self.power(x, self.q - 2)

    def div(self, x: int, y: int) -> int:
        return self.mul(x, self.inv(y))

    def power(self, x: int, e: int) -> int:
        if e < 0:
            x, e = self.inv(x), -e
        if self.m == 1:
            return pow(x, e, self.p)
        result = 1
        while e:
            if e & 1:
                result = self.mul(result, x)
            x = self.mul(x, x)
            e >>= 1
        return result

    def embed(self, n: int) -> int:
        """Encoding of the integer n in the prime subfield."""
        return n % self.p

    # squares -----------------------------------------------------------------
    def is_square_int(self, x: int) -> bool:
        if x == 0 or self.p == 2:
            return True
        return self.power(x, (self.q - 1) // 2) == 1

    def nonsquare_int(self) -> int:
        """Least non-square in enumeration order (odd characteristic)."""
        if self._nonsquare is None:
            if self.p == 2:
                raise NotASquare("every element of a binary field is a square")
            self._nonsquare = next(x for x in range(1, self.q) if not self.is_square_int(x))
        return self._nonsquare

    def sqrt_int(self, x: int) -> int:
        if not self.is_square_int(x):
            raise NotASquare(f"{self.coeffs(x)} is not a square in {self}")
        if x == 0:
            return 0
        if self.p == 2:
            return self.power(x, self.q // 2)
        # Tonelli-Shanks
        s, t = 0, self.q - 1
        while t % 2 == 0:
            s, t = s + 1, t // 2
        z = self.nonsquare_int()
        big_m, c = s, self.power(z, t)
        big_t, r = self.power(x, t), self.power(x, (t + 1) // 2)
        while big_t != 1:
            i, tt = 0, big_t
            while tt != 1:
                tt = self.mul(tt, tt)
                i += 1
            b = c
            for _ in range(big_m - i - 1):
                b = self.mul(b, b)
            big_m, c = i, self.mul(b, b)
            big_t, r = self.mul(big_t, c), self.mul(r, b)
        return min(r, self.neg(r))

    def order_int(self, x: int) -> int:
        if x == 0:
            raise DivisionByZero("zero has no multiplicative order")
        n = self.q - 1
        for ell in prime_factors(self.q - 1):
            while n % ell == 0 and self.power(x, n // ell) == 1:
                n //= ell
        return n

    def primitive_int(self) -> int:
        """Least generator of the multiplicative group."""
        if self._primitive is None:
            n = self.q - 1
            factors = prime_factors(n)
            pw = self._pow_slow if self.m > 1 else self.power
            for g in range(1, self.q):
                if all(pw(g, n // ell) != 1 for ell in factors):
                    self._primitive = g
                    break
        return self._primitive

    def _pow_slow(self, x: int, e: int) -> int:
        result = 1
        while e:
            if e & 1:
                result = self._mul_poly(result, x)
            x = self._mul_poly(x, x)
            e >>= 1
        return result

    # element-level API ---------------------------------------------------------
    def __call__(self, value) -> "FieldElement":
        if isinstance(value, FieldElement):
            if value.field != self:
                raise FieldMismatch(f"{value.field} element given to {self}")
            return value
        if isinstance(value, int):
            return FieldElement(self, value % self.p)
        if isinstance(value, (list, tuple)):
            return FieldElement(self, self.from_coeffs(value))
        raise TypeError(f"cannot build a {self} element from {value!r}")

    def from_int(self, x: int) -> "FieldElement":
        """Wrap an integer encoding (0 <= x < q)."""
        if not 0 <= x < self.q:
            raise ValueError(f"encoding {x} out of range for {self}")
        return FieldElement(self, x)

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    def primitive_element(self) -> "FieldElement":
        return FieldElement(self, self.primitive_int())

    def elements(self) -> list["FieldElement"]:
        return [FieldElement(self, x) for x in range(self.q)]

    def to_json(self) -> dict:
        return {"p": self.p, "m": self.m, "modulus": list(self.modulus)}

    @staticmethod
    def from_json(obj: dict) -> "FieldSpec":
        return field_make(obj["p"], obj["m"], obj.get("modulus"))


@functools.lru_cache(maxsize=None)
def _field_cached(p: int, m: int, modulus: tuple[int, ...] | None) -> FieldSpec:
    if not isinstance(p, int) or not is_prime(p):
        raise NonPrimeCharacteristic(f"characteristic {p} is not prime")
    if not isinstance(m, int) or m < 1:
        raise ValueError(f"degree must be a positive integer, got {m}")
    if p**m > MAX_ORDER:
        raise ValueError(f"field order {p}^{m} exceeds supported bound {MAX_ORDER}")
    if modulus is None:
        # share one instance with the explicit-modulus spelling
        return _field_cached(p, m, least_irreducible(p, m))
    else:
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != m + 1 or modulus[-1] != 1:
            raise ReducibleModulus(f"modulus must be monic of degree {m}")
        if not is_irreducible(modulus, p):
            raise ReducibleModulus(f"modulus {list(modulus)} is reducible over Z_{p}")
    return FieldSpec(p, m, modulus)


def field_make(p: int, m: int = 1, modulus: Iterable[int] | None = None) -> FieldSpec:
    """Validated GF(p^m); the modulus defaults to the least monic irreducible."""
    key = None if modulus is None else tuple(int(c) for c in modulus)
    return _field_cached(p, m, key)


def parse_field(text: str, modulus: Iterable[int] | None = None) -> FieldSpec:
    """Parse ``"7"``, ``"3^2"`` or ``"9"`` into a field."""
    text = text.strip()
    match = re.fullmatch(r"(\d+)\s*\^\s*(\d+)", text)
    if match:
        return field_make(int(match.group(1)), int(match.group(2)), modulus)
    q = int(text)
    for p in prime_factors(q)[:1]:
        m, rest = 0, q
        while rest % p == 0:
            rest //= p
            m += 1
        if rest == 1:
            return field_make(p, m, modulus)
    raise NonPrimeCharacteristic(f"{q} is not a prime power")


def enumerate_field(spec: FieldSpec) -> list["FieldElement"]:
    return spec.elements()


class FieldElement:
    """Immutable element of a :class:`FieldSpec`."""

    __slots__ = ("field", "value")

    def __init__(self, field: FieldSpec, value: int):
        self.field = field
        self.value = value

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.field.coeffs(self.value)

    def _other(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field is not self.field and other.field != self.field:
                raise FieldMismatch(f"cannot mix {self.field} and {other.field}")
            return other.value
        if isinstance(other, int):
            return other % self.field.p
        return NotImplemented

    def _wrap(self, v: int) -> "FieldElement":
        return FieldElement(self.field, v)

    def __add__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return self._wrap(self.field.add(self.value, o))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return self._wrap(self.field.sub(self.value, o))

    def __rsub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return self._wrap(self.field.sub(o, self.value))

    def __mul__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return self._wrap(self.field.mul(self.value, o))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return self._wrap(self.field.div(self.value, o))

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return self._wrap(self.field.div(o, self.value))

    def __neg__(self):
        return self._wrap(self.field.neg(self.value))

    def __pow__(self, e: int):
        return self._wrap(self.field.power(self.value, e))

    def inv(self) -> "FieldElement":
        return self._wrap(self.field.inv(self.value))

    def is_square(self) -> bool:
        return self.field.is_square_int(self.value)

    def sqrt(self) -> "FieldElement":
        return self._wrap(self.field.sqrt_int(self.value))

    def order(self) -> int:
        return self.field.order_int(self.value)

    def __eq__(self, other) -> bool:
        if isinstance(other, FieldElement):
            return self.value == other.value and self.field == other.field
        if isinstance(other, int):
            return self.value == other % self.field.p
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.field.p, self.field.m, self.value))

    def __lt__(self, other: "FieldElement") -> bool:
        return self.value < self._other(other)

    def __bool__(self) -> bool:
        return self.value != 0

    def __int__(self) -> int:
        return self.value

    def __repr__(self) -> str:
        if self.field.m == 1:
            return str(self.value)
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
                terms.append(mono if c == 1 and mono else f"{c}{mono}")
        return "+".join(reversed(terms)) or "0"

    def to_json(self) -> list[int]:
        return list(self.coeffs)


def elements(field: FieldSpec, values: Iterable) -> list[FieldElement]:
    """Coerce ints / coefficient lists / elements to elements of ``field``."""
    return [field(v) for v in values]
