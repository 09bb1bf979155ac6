import itertools
import random

import pytest

from subgrs.code import classify, dual, dual_distance, is_self_dual
from subgrs.errors import (
    CharacteristicDividesLength,
    EvenCharacteristic,
    EvenLength,
    HypothesisFailed,
    OddLength,
    OutOfRange,
)
from subgrs.family import EvalConfig, grs, plus_tgrs, sub_egrs, sub_grs, subcode_degrees
from subgrs.field import field_make
from subgrs.matrix import Matrix, diag, row_space_equal
from subgrs.syminv import SymContext, cyclic_subgroup_points, lagrange_u
from subgrs import theory as th


def pts(F, xs):
    return [F(x) for x in xs]


def subsets(F, n):
    for combo in itertools.combinations(range(F.q), n):
        yield [F.from_int(x) for x in combo]


# self-dual existence ------------------------------------------------------------

def test_grs_selfdual_witness_and_falsification():
    seen = {True: 0, False: 0}
    for q in (5, 7):
        F = field_make(q)
        for a in subsets(F, 4):
            v = th.grs_selfdual_exists(a)
            seen[v.exists] += 1
            builder = lambda f, a=a: grs(EvalConfig.of(F, a, f), 2)
            brute = th.selfdual_factors_by_enumeration(4, F, builder)
            assert v.exists == (brute is not None)
            if v.exists:
                assert is_self_dual(builder(list(v.witness_factors)))
    assert seen[True] and seen[False]


def test_selfdual_predicates_reject_bad_input():
    F7, F8 = field_make(7), field_make(2, 3)
    with pytest.raises(OddLength):
        th.grs_selfdual_exists(pts(F7, [0, 1, 2]))
    with pytest.raises(EvenCharacteristic):
        th.sub1_selfdual_exists([F8.from_int(x) for x in range(4)])
    with pytest.raises(OddLength):
        th.subk1_selfdual_exists(pts(F7, range(5)))
    with pytest.raises(EvenLength):
        th.sub_egrs_k1_selfdual_exists(pts(F7, range(4)))


def test_sub1_selfdual():
    F = field_make(17)
    rng = random.Random(2)
    found = 0
    for _ in range(3000):
        a = pts(F, rng.sample(range(17), 8))
        v = th.sub1_selfdual_exists(a)
        assert v.in_hypothesis
        if SymContext.of(a).t[1] != 0:
            assert not v.exists and v.reason["t1_zero"] is False
        if v.exists:
            found += 1
            code = sub_grs(EvalConfig.of(F, a, v.witness_factors), 4, 1)
            assert is_self_dual(code)
            assert classify(code).category in ("NMDS", "MDS")
    assert found
    small = th.sub1_selfdual_exists(pts(F, [1, 2, 14, 0]))
    assert not small.in_hypothesis


def test_shift_points():
    F = field_make(13)
    rng = random.Random(8)
    for _ in range(50):
        a = pts(F, rng.sample(range(13), 6))
        b = th.shift_points(a)
        assert sum(b, F.zero) == 0
        assert lagrange_u(b) == lagrange_u(a)
        if th.grs_selfdual_exists(a).exists:
            assert th.sub1_selfdual_exists(b).exists
    with pytest.raises(CharacteristicDividesLength):
        th.shift_points(pts(field_make(5), range(5)))


def test_subk1_cyclic_subgroup_examples():
    F = field_make(17)
    a = cyclic_subgroup_points(F, 8)
    v = th.subk1_selfdual_exists(a)
    assert v.exists
    code = sub_grs(EvalConfig.of(F, a, v.witness_factors), 4, 3)
    assert (code.generator @ code.generator.T).is_zero()
    assert classify(code).category in ("NMDS", "MDS")
    # All points are squares exactly when n divides (q-1)/2.
    for q, n in [(13, 6), (17, 4), (29, 14), (13, 4), (13, 12), (17, 16)]:
        F = field_make(q)
        a = cyclic_subgroup_points(F, n)
        v = th.subk1_selfdual_exists(a)
        assert v.exists == (((q - 1) // 2) % n == 0)
        if v.exists:
            assert is_self_dual(sub_grs(EvalConfig.of(F, a, v.witness_factors), n // 2, n // 2 - 1))


def test_subk1_fails_when_tn1_nonzero():
    F = field_make(13)
    a = pts(F, [0, 1, 2, 3, 4, 5])  # contains 0, so t_{n-1} != 0
    assert SymContext.of(a).t[5] != 0
    assert not th.subk1_selfdual_exists(a).exists


def test_sub_egrs_k1_selfdual():
    F = field_make(19)
    found = 0
    for a in itertools.islice(subsets(F, 7), 20000):
        v = th.sub_egrs_k1_selfdual_exists(a)
        ctx = SymContext.of(a)
        if ctx.t[6] != 0:
            assert not v.exists
            continue
        assert ctx.t[7] != 0
        if v.exists:
            found += 1
            code = sub_egrs(EvalConfig.of(F, a, v.witness_factors), 4, 3)
            assert is_self_dual(code)
            if found >= 3:
                break
    assert found


def test_sufficiency_outside_hypothesis():
    # The witness direction needs no length bound.
    for q in (7, 11, 13):
        F = field_make(q)
        for a in subsets(F, 4):
            for fn, r in ((th.sub1_selfdual_exists, 1), (th.subk1_selfdual_exists, 1)):
                v = fn(a)
                if v.exists:
                    assert is_self_dual(sub_grs(EvalConfig.of(F, a, v.witness_factors), 2, r))


def test_factor_oracles_agree():
    for q in (5, 7):
        F = field_make(q)
        for a in subsets(F, 4):
            for degs in ([0, 1], subcode_degrees(2, 1)):
                by_kernel = th.selfdual_factors_by_kernel(a, degs)
                builder = lambda f, a=a, degs=degs: (grs if degs == [0, 1] else (lambda c, k: sub_grs(c, 2, 1)))(EvalConfig.of(F, a, f), 2)
                brute = th.selfdual_factors_by_enumeration(4, F, builder)
                assert (by_kernel is None) == (brute is None)
                if by_kernel is not None:
                    assert is_self_dual(builder(list(by_kernel)))


def test_midrange_rank_certificate():
    F = field_make(13)
    rng = random.Random(4)
    for _ in range(20):
        a = pts(F, rng.sample(range(13), 8))
        cert = th.midrange_never_selfdual(a, 4, 2)
        assert cert.full_rank and cert.degrees == tuple(range(9))
        for _ in range(50):
            v = [F(rng.randrange(1, 13)) for _ in a]
            assert not is_self_dual(sub_grs(EvalConfig.of(F, a, v), 4, 2))
        a7 = a[:7]
        cert_e = th.midrange_never_selfdual(a7, 4, 2, extended=True)
        assert cert_e.full_rank and 8 not in cert_e.degrees
    F9 = field_make(3, 2)
    for a in itertools.islice(subsets(F9, 8), 5):
        assert th.selfdual_factors_by_kernel(a, subcode_degrees(4, 2)) is None
    with pytest.raises(OutOfRange):
        th.midrange_never_selfdual(pts(F, range(8)), 4, 1)
    with pytest.raises(OutOfRange):
        th.midrange_never_selfdual(pts(F, range(7)), 4, 2)


# MDS / NMDS --------------------------------------------------------------------------

def test_mds_criteria_agree_on_gf7():
    F = field_make(7)
    for n in (4, 5, 6):
        for a in subsets(F, n):
            cfg = EvalConfig.of(F, a)
            for k in range(2, n):
                for r in range(1, k):
                    v = th.sub_grs_is_mds(a, k, r)
                    assert v.is_mds == (classify(sub_grs(cfg, k, r)).category == "MDS")
                    e = th.sub_egrs_is_mds(a, k, r)
                    assert e.is_mds == (classify(sub_egrs(cfg, k, r)).category == "MDS")
                    if r == 1:
                        sums_zero = any(sum(S, F.zero) == 0 for S in itertools.combinations(a, k))
                        assert v.is_mds == (not sums_zero) == e.is_mds
                    if not v.is_mds:
                        assert len(v.witness) == k


def test_mds_criteria_ranges():
    F = field_make(7)
    a = pts(F, range(5))
    with pytest.raises(OutOfRange):
        th.sub_grs_is_mds(a, 3, 3)
    with pytest.raises(OutOfRange):
        th.sub_egrs_is_mds(a, 5, 1)
    with pytest.raises(OutOfRange):
        th.sub_grs_dual_dist_ge_k(a, 3, 1)


def test_nmds_certificates_agree_on_gf7():
    F = field_make(7)
    for n in (5, 6, 7):
        for a in subsets(F, n):
            cfg = EvalConfig.of(F, a)
            for k in range(3, n):
                for r in range(2, k):
                    plain = th.sub_grs_dual_dist_ge_k(a, k, r)
                    assert plain.dual_distance_ge_k == (dual_distance(sub_grs(cfg, k, r), "columns") >= k)
                    ext = th.sub_egrs_dual_dist_ge_k(a, k, r)
                    assert ext.dual_distance_ge_k == (dual_distance(sub_egrs(cfg, k, r), "columns") >= k)
                    if r == k - 1:
                        assert plain and ext


def test_violating_subset_gives_rank_deficient_columns():
    F = field_make(13)  # a 3-subset with s_1 = s_2 = 0 is a coset of cube roots
    hits = 0
    for a in itertools.islice(subsets(F, 7), 300):
        cert = th.sub_grs_dual_dist_ge_k(a, 4, 2)
        if cert:
            continue
        hits += 1
        g = sub_grs(EvalConfig.of(F, a), 4, 2).generator
        cols = [a.index(x) for x in cert.violating_subset]
        assert g.submatrix(cols=cols).rank() == 2
    assert hits


def test_egrs_second_level_condition_matters():
    F = field_make(13)
    seen = False
    for a in subsets(F, 6):
        k, r = 5, 3
        cert = th.sub_egrs_dual_dist_ge_k(a, k, r)
        if not cert and len(cert.violating_subset) == k - 2:
            assert th.sub_grs_dual_dist_ge_k(a, k, r)
            assert dual_distance(sub_egrs(EvalConfig.of(F, a), k, r), "columns") < k
            seen = True
            break
    assert seen


# closed-form duals -------------------------------------------------------------

def test_dual_of_sub1_examples():
    F = field_make(7)
    a = pts(F, [0, 1, 2, 4])
    u = lagrange_u(a)
    closed = th.dual_of_sub1(a, 2)
    assert closed == sub_grs(EvalConfig.of(F, a, u), 2, 1)
    assert closed == dual(sub_grs(EvalConfig.of(F, a), 2, 1))
    b = pts(F, [0, 1, 2, 3, 5])
    t1 = sum(b, F.zero)
    c = th.dual_of_sub1(b, 2)
    assert c == plus_tgrs(EvalConfig.of(F, b, lagrange_u(b)), 3, -t1.inv())
    assert c == dual(sub_grs(EvalConfig.of(F, b), 2, 1))
    v = pts(F, [3, 1, 5, 2, 6])
    assert th.dual_of_sub1(b, 3, v) == dual(sub_grs(EvalConfig.of(F, b, v), 3, 1))
    with pytest.raises(OutOfRange):
        th.dual_of_sub1(b, 4)


def _tn1_zero_sets(F, n, limit=30):
    out = []
    for a in subsets(F, n):
        if SymContext.of(a).t[n - 1] == 0:
            out.append(a)
            if len(out) >= limit:
                break
    return out


def test_dual_of_sub_k1_and_parity():
    F = field_make(13)
    sets = _tn1_zero_sets(F, 7)
    assert sets
    for a in sets:
        ctx = SymContext.of(a)
        assert all(s != 0 for s in ctx.deleted)
        for k in (3, 4, 5):
            c = th.dual_of_sub_k1(a, k)
            assert c.k == 7 - k
            assert c == dual(sub_grs(EvalConfig.of(F, a), k, k - 1))
            h = th.parity_of_sub_egrs_k1(a, k)
            g = sub_egrs(EvalConfig.of(F, a), k, k - 1).generator
            assert (h @ g.T).is_zero() and h.rank() == 8 - k
            assert h[h.nrows - 1, 7] == ctx.t[7] != 0
    bad = pts(F, [0, 1, 2, 3, 4, 5, 6])
    with pytest.raises(HypothesisFailed):
        th.dual_of_sub_k1(bad, 3)
    with pytest.raises(HypothesisFailed):
        th.parity_of_sub_egrs_k1(bad, 3)


def test_dual_of_sub2_all_cases():
    seen = {}
    for q in (11, 13, 17):
        F = field_make(q)
        rng = random.Random(q)
        pools = [cyclic_subgroup_points(F, n) for n in range(5, 11) if (q - 1) % n == 0]
        for _ in range(300):
            n = rng.randint(5, min(10, q))
            pools.append(pts(F, rng.sample(range(q), n)))
        for a in pools:
            case = th.sub2_dual_case(a)
            if case in seen and len(seen) == 5:
                break
            n = len(a)
            for k in range(3, n - 1):
                assert th.dual_of_sub2(a, k) == dual(sub_grs(EvalConfig.of(F, a), k, 2))
            seen[case] = seen.get(case, 0) + 1
    assert set(seen) == {1, 2, 3, 4, 5}


def test_parity_of_sub_egrs_2_both_branches():
    F = field_make(11)
    branches = set()
    for a in itertools.islice(subsets(F, 7), 200):
        t1_zero = SymContext.of(a).t[1] == 0
        branches.add(t1_zero)
        for k in (3, 4, 5):
            h = th.parity_of_sub_egrs_2(a, k)
            g = sub_egrs(EvalConfig.of(F, a), k, 2).generator
            assert (h @ g.T).is_zero() and h.rank() == 8 - k
    assert branches == {True, False}


def test_parity_of_sub_egrs_1():
    F = field_make(13)
    rng = random.Random(9)
    for _ in range(40):
        n = rng.randint(3, 9)
        a = pts(F, rng.sample(range(13), n))
        v = [F(rng.randrange(1, 13)) for _ in a]
        for k in range(2, n):
            h = th.parity_of_sub_egrs_1(a, k, v)
            g = sub_egrs(EvalConfig.of(F, a, v), k, 1).generator
            assert (h @ g.T).is_zero() and h.rank() == n + 1 - k
    a = pts(F, [1, 2, 3, 4, 6])
    h1 = th.parity_of_sub_egrs_1(a, 2)
    u = lagrange_u(a)
    base = th.parity_of_sub_egrs_1(a, 2, u)  # factors u cancel the diagonal
    assert h1 == base @ diag(u + [F.one])
    with pytest.raises(OutOfRange):
        th.parity_of_sub_egrs_1(a, 1)


from hypothesis import given, strategies as st


@given(st.sampled_from([7, 11, 13]), st.data())
def test_property_closed_duals_match_kernel(q, data):
    F = field_make(q)
    n = data.draw(st.integers(5, min(q, 9)))
    a = pts(F, data.draw(st.lists(st.integers(0, q - 1), min_size=n, max_size=n, unique=True)))
    v = pts(F, data.draw(st.lists(st.integers(1, q - 1), min_size=n, max_size=n)))
    k = data.draw(st.integers(3, n - 2))
    cfg = EvalConfig.of(F, a, v)
    assert th.dual_of_sub1(a, k, v) == dual(sub_grs(cfg, k, 1))
    assert th.dual_of_sub2(a, k, v) == dual(sub_grs(cfg, k, 2))
    h = th.parity_of_sub_egrs_2(a, k, v)
    assert (h @ sub_egrs(cfg, k, 2).generator.T).is_zero()
