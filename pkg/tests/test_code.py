import random

import pytest
from hypothesis import given, strategies as st

from oracles import brute_dual_distance, brute_min_distance
from subgrs.code import (
    LinearCode,
    category_of,
    classify,
    code_from_generator,
    dual,
    dual_distance,
    is_self_dual,
    min_distance,
)
from subgrs.errors import TooLarge, ZeroMatrix
from subgrs.family import EvalConfig, grs, sub_grs
from subgrs.field import field_make
from subgrs.matrix import Matrix, row_space_equal


def test_code_from_generator():
    F = field_make(5)
    c = code_from_generator(Matrix(F, [[1, 0, 0, 0], [0, 1, 0, 0]]))
    assert (c.n, c.k) == (4, 2)
    assert code_from_generator(Matrix(F, [[1, 2, 3], [1, 2, 3]])).k == 1
    with pytest.raises(ZeroMatrix):
        code_from_generator(Matrix.zeros(F, 2, 3))


def test_dual_examples():
    F = field_make(5)
    full = LinearCode(Matrix.identity(F, 3))
    assert dual(full).k == 0
    assert dual(dual(full)) == full
    c = grs(EvalConfig.of(F, [0, 1, 2, 3]), 2)
    assert classify(dual(c)).category == "MDS"
    assert min_distance(c) == 3


def test_min_distance_examples():
    F = field_make(7)
    row = LinearCode(Matrix(F, [[1, 3, 0, 5, 2]]))
    assert min_distance(row) == 4
    c = sub_grs(EvalConfig.of(F, [0, 1, 2, 4]), 3, 1)
    assert min_distance(c) in (0 + 4 - 3, 4 - 3 + 1)
    with pytest.raises(TooLarge):
        min_distance(grs(EvalConfig.of(F, range(7)), 6), method="enumerate", max_work=1000)


def test_categories():
    assert category_of(6, 3, 4, 4) == "MDS"
    assert category_of(6, 3, 3, 3) == "NMDS"
    assert category_of(6, 3, 3, 2) == "AMDS"
    assert category_of(6, 3, 2, 3) == "OTHER"


def test_self_dual_examples():
    F = field_make(5)
    assert is_self_dual(LinearCode(Matrix(F, [[1, 2]])))
    assert not is_self_dual(LinearCode(Matrix(F, [[1, 1]])))
    assert not is_self_dual(LinearCode(Matrix(F, [[1, 2, 0]])))


def test_json_roundtrip():
    F = field_make(3, 2)
    c = grs(EvalConfig.of(F, [0, 1, 2, [0, 1]]), 2)
    assert LinearCode.from_json(c.to_json()) == c


def _random_code(rng, q, n, k):
    F = field_make(q)
    while True:
        g = Matrix(F, [[rng.randrange(q) for _ in range(n)] for _ in range(k)])
        if g.rank() == k:
            return LinearCode(g)


@given(st.integers(0, 10_000), st.sampled_from([2, 3, 5]), st.integers(2, 6), st.data())
def test_distance_methods_agree_with_brute_force(seed, q, n, data):
    rng = random.Random(seed)
    k = data.draw(st.integers(1, n - 1))
    c = _random_code(rng, q, n, k)
    want = brute_min_distance(c)
    assert min_distance(c, "enumerate") == want
    assert min_distance(c, "subsets") == want
    assert min_distance(c) == want
    dd = brute_dual_distance(c)
    assert dual_distance(c, "columns") == dd
    assert dual_distance(c, "enumerate") == dd
    assert want <= n - k + 1


@given(st.integers(0, 10_000), st.integers(2, 6))
def test_dual_involution_and_self_dual_definitions(seed, n):
    rng = random.Random(seed)
    k = rng.randint(1, n)
    c = _random_code(rng, 5, n, k)
    assert dual(dual(c)) == c
    assert dual(c).k == n - k
    gram_sd = is_self_dual(c)
    rowspace_sd = c.n == 2 * c.k and row_space_equal(c.generator, dual(c).generator)
    assert gram_sd == rowspace_sd


def test_self_dual_codes_share_distance():
    F = field_make(5)
    c = LinearCode(Matrix(F, [[1, 2, 0, 0], [0, 0, 1, 2]]))
    assert is_self_dual(c)
    assert dual(c) == c
    assert min_distance(c) == min_distance(dual(c)) == 2
