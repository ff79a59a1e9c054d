import random

import pytest
from hypothesis import given, strategies as st

from oracles import form
from spschur.galg import convolve, transvection_sum
from spschur.gf2 import rank
from spschur.ortho import form_with_sign, so_transvections
from spschur.schur import (
    TPartition,
    d1_d2,
    eq31_holds,
    f_profile,
    gamma1,
    pairwise_meeting_basis,
    point_values,
    square_split,
    triangle_sets,
    verify_partition,
    whole_class,
    zero_triangle_count,
    zero_triangle_identity,
)
from spschur.spgroup import identity_rows


def point_oracle(a, C, n):
    f1 = len({frozenset((b, a ^ b)) for b in C if b != a and form(a, b, n) and a ^ b in C})
    f2 = sum(1 for b in C if form(a, b, n) and a ^ b not in C)
    f4 = sum(1 for b in C if b != a and not form(a, b, n))
    return f1, f2, len(C), f4


@st.composite
def blocks(draw):
    n = draw(st.sampled_from([4, 6]))
    C = draw(st.sets(st.integers(1, (1 << n) - 1), min_size=1, max_size=20))
    return n, C


@given(blocks())
def test_point_values_oracle_and_identity(nc):
    n, C = nc
    for a in C:
        vals = point_values(a, frozenset(C), n)
        assert vals == point_oracle(a, C, n)
        assert eq31_holds(vals)


@given(blocks())
def test_square_split(nc):
    n, C = nc
    s1, s2, s4 = square_split(C, n)
    c = transvection_sum(C, n)
    lhs = convolve(c, c)
    rhs = {identity_rows(n): len(C)}
    for S, k in ((s1, 3), (s2, 1), (s4, 2)):
        for g, _ in S.items():
            rhs[g] = rhs.get(g, 0) + k
    assert dict(lhs.items()) == rhs


@given(blocks())
def test_triangles_and_d_sets(nc):
    n, C = nc
    tr2, tr3 = triangle_sets(C, n)
    assert all(len(t & C) == 2 for t in tr2) and all(t <= C for t in tr3)
    d1, d2 = d1_d2(C, n)
    assert d1 <= C and not (d2 & C)


def test_partition_validation():
    with pytest.raises(ValueError):
        TPartition(4, [range(1, 15)])
    with pytest.raises(ValueError):
        TPartition(4, [range(1, 16), [1]])
    with pytest.raises(ValueError):
        TPartition(4, [range(1, 16), []])
    with pytest.raises(ValueError):
        TPartition(4, [range(0, 16)])


def test_partition_round_trip():
    p = TPartition.with_remainder(4, [[1, 2, 3]])
    assert len(p) == 2 and p.block_of(1) == 0 and p.block_of(15) == 1
    q = TPartition.loads("# comment\n" + p.dumps(), 4)
    assert q.blocks == p.blocks


def test_zero_triangle_count():
    for n in (2, 4, 6):
        tr = {frozenset((a, b, a ^ b)) for a in range(1, 1 << n) for b in range(1, 1 << n) if form(a, b, n)}
        assert zero_triangle_count(n) == len(tr)


@pytest.mark.parametrize("n", [4, 6, 8])
def test_whole_class_passes(n):
    p = whole_class(n)
    rep = verify_partition(p)
    assert rep.passed, rep.first_failure()
    assert rep.profiles[0].values == (2 ** (n - 2), 0, 2**n - 1, 2 ** (n - 1) - 2)
    lhs, rhs = zero_triangle_identity(p)
    assert lhs == rhs


@pytest.mark.parametrize("n", [6, 8])
@pytest.mark.parametrize("sign", "+-")
def test_orthogonal_split_passes(n, sign):
    C2 = so_transvections(form_with_sign(n, sign))
    p = TPartition(n, [set(range(1, 1 << n)) - C2, C2])
    rep = verify_partition(p)
    assert rep.passed, rep.first_failure()
    assert all(eq31_holds(pr.values) for pr in rep.profiles)
    lhs, rhs = zero_triangle_identity(p)
    assert lhs == rhs
    g = gamma1(p)
    assert g.edges == [(0, 1)] and g.star_source() == 0


def test_random_colorings_fail():
    rng = random.Random(7)
    n = 6
    for _ in range(20):
        mask = [rng.random() < 0.5 for _ in range(63)]
        if all(mask) or not any(mask):
            continue
        p = TPartition(n, [[v for v, m in zip(range(1, 64), mask) if m],
                           [v for v, m in zip(range(1, 64), mask) if not m]])
        rep = verify_partition(p)
        assert not rep.passed and rep.first_failure().witness is not None


def test_profile_witness_points_differ():
    prof = f_profile({1, 2, 4}, 4)
    if not prof.constant:
        a, b = prof.witness
        assert prof.per_point[a] != prof.per_point[b]


@pytest.mark.parametrize("n", [2, 4, 6, 8, 10, 12])
def test_pairwise_meeting_basis(n):
    vs = pairwise_meeting_basis(n)
    assert len(vs) == n + 1 and rank(vs[:n]) == n
    assert all(form(x, y, n) for i, x in enumerate(vs) for y in vs[i + 1:])
