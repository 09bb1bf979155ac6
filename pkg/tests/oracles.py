"""Independent brute-force references used by the tests.

Nothing here calls into the elimination or enumeration code under test; the
field references work on raw coefficient lists.
"""

from __future__ import annotations

import itertools


def poly_mulmod(f, g, modulus, p):
    """Product of coefficient lists f, g reduced by a monic modulus."""
    m = len(modulus) - 1
    prod = [0] * (len(f) + len(g) - 1)
    for i, x in enumerate(f):
        for j, y in enumerate(g):
            prod[i + j] = (prod[i + j] + x * y) % p
    for deg in range(len(prod) - 1, m - 1, -1):
        c = prod[deg]
        if c:
            for t in range(m + 1):
                prod[deg - m + t] = (prod[deg - m + t] - c * modulus[t]) % p
    out = prod[:m] + [0] * (m - len(prod[:m]))
    return out


def all_vectors(p, m):
    return [list(v) for v in itertools.product(range(p), repeat=m)]


def brute_min_distance(code):
    """Minimum weight over every nonzero message, element arithmetic only."""
    g = code.generator
    field = code.field
    rows = [g.row(i) for i in range(g.nrows)]
    elems = field.elements()
    best = None
    for msg in itertools.product(elems, repeat=len(rows)):
        if all(m == 0 for m in msg):
            continue
        word = [field.zero] * code.n
        for c, row in zip(msg, rows):
            word = [w + c * x for w, x in zip(word, row)]
        wt = sum(1 for w in word if w != 0)
        best = wt if best is None else min(best, wt)
    return best


def brute_dual_distance(code):
    """Smallest weight of a nonzero x with G x^T = 0, by direct search."""
    g = code.generator
    field = code.field
    n = code.n
    rows = [g.row(i) for i in range(g.nrows)]
    nonzero = [x for x in field.elements() if x != 0]
    for w in range(1, n + 1):
        for support in itertools.combinations(range(n), w):
            for vals in itertools.product(nonzero, repeat=w):
                ok = True
                for row in rows:
                    acc = field.zero
                    for j, x in zip(support, vals):
                        acc = acc + row[j] * x
                    if acc != 0:
                        ok = False
                        break
                if ok:
                    return w
    return n + 1


def naive_esym(vals, r, field):
    """s_r by summing products over all r-subsets."""
    total = field.zero
    for sub in itertools.combinations(vals, r):
        prod = field.one
        for x in sub:
            prod = prod * x
        total = total + prod
    return total
