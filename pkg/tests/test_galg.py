import random
from collections import Counter

import pytest
from hypothesis import given, strategies as st

from oracles import word_rows
from spschur.galg import (
    LazyFilter,
    LazyProduct,
    Multiset,
    commutes,
    conjugate,
    convolve,
    empty,
    filter_multiplicity,
    indicator,
    product_coefficient,
    restrict_by_tag,
    transvection_sum,
    unit,
)
from spschur.spgroup import ClassTag, class_sizes, identity_rows, mul_rows, product_of_transvections

N = 4


def element(seed):
    rng = random.Random(seed)
    return tuple(product_of_transvections([rng.randrange(1, 16) for _ in range(rng.randrange(0, 5))], N))


@st.composite
def multisets(draw, size=6):
    entries = draw(st.lists(st.tuples(st.integers(0, 10**6), st.integers(1, 3)), max_size=size))
    return Multiset(N, [(element(s), c) for s, c in entries])


def convolve_oracle(A, B):
    out = Counter()
    for x, a in A.items():
        for y, b in B.items():
            out[mul_rows(x, y)] += a * b
    return Multiset(N, out)


@given(multisets(), multisets())
def test_convolve_matches_oracle(A, B):
    assert convolve(A, B) == convolve_oracle(A, B)


@given(multisets(), multisets(), multisets())
def test_associative(A, B, C):
    assert convolve(convolve(A, B), C) == convolve(A, convolve(B, C))


@given(multisets(), multisets())
def test_mass_multiplies(A, B):
    assert convolve(A, B).mass() == A.mass() * B.mass()


@given(multisets(), multisets(), st.integers(0, 10**6))
def test_conjugation_equivariant(A, B, seed):
    g = element(seed)
    assert conjugate(convolve(A, B), g) == convolve(conjugate(A, g), conjugate(B, g))


@given(multisets())
def test_unit_and_empty(A):
    assert convolve(unit(N), A) == A == convolve(A, unit(N))
    assert convolve(empty(N), A) == empty(N)


@given(multisets(), multisets(), st.integers(0, 10**6))
def test_product_coefficient_and_lazy(A, B, seed):
    AB = convolve(A, B)
    keys = sorted(AB.support()) + [element(seed)]
    lazy = LazyProduct(A, B)
    for g in keys:
        assert product_coefficient(A, B, g) == AB[g] == lazy[g]
        assert LazyFilter(lazy, 1)[g] == int(AB[g] == 1)


def test_lazy_length_bound():
    T = transvection_sum(range(1, 16), N)
    lazy = LazyProduct(T, T, length=2)
    T2 = convolve(T, T)
    for g in T2.support():
        assert lazy[g] == T2[g]
    far = tuple(product_of_transvections([1, 8, 2, 4], N))
    assert lazy[far] == 0


def test_multiset_validation():
    with pytest.raises(ValueError):
        Multiset(N, [((1, 2), 1)])
    with pytest.raises(ValueError):
        Multiset(N, [(identity_rows(N), -1)])
    with pytest.raises(ValueError):
        convolve(unit(2), unit(4))
    with pytest.raises(ValueError):
        transvection_sum([0, 1], N)
    with pytest.raises(ValueError):
        filter_multiplicity(unit(N), 0)


def test_dump_sorted_and_stable():
    A = Multiset(N, [(element(3), 2), (element(1), 1), (element(3), 1)])
    lines = A.dump().splitlines()
    assert lines == sorted(lines, key=lambda s: tuple(int(w, 16) for w in s.split("\t")[1].split(",")))
    assert sum(int(s.split("\t")[0]) for s in lines) == 4


@pytest.mark.parametrize("n", [4, 6])
def test_square_of_all_transvections(n):
    T = transvection_sum(range(1, 1 << n), n)
    T2 = convolve(T, T)
    t, tt0, tt1, _, _ = class_sizes(n)
    assert T2[identity_rows(n)] == t
    tt0_part = restrict_by_tag(T2, ClassTag.TT0)
    tt1_part = restrict_by_tag(T2, ClassTag.TT1)
    assert tt0_part.spectrum() == [2] and len(tt0_part) == tt0
    assert tt1_part.spectrum() == [3] and len(tt1_part) == tt1
    assert len(T2) == 1 + tt0 + tt1


def test_commutes_witness_is_least():
    n = 4
    A = transvection_sum([1], n)
    B = transvection_sum([8], n)
    res = commutes(A, B)
    assert not res
    ab, ba = convolve(A, B), convolve(B, A)
    diff = sorted(g for g in ab.support() | ba.support() if ab[g] != ba[g])
    assert res.witness == diff[0] and (res.coef_ab, res.coef_ba) == (ab[diff[0]], ba[diff[0]])
    assert commutes(A, transvection_sum([2], n))
    assert word_rows([1, 8], n) in ab.support()


def test_indicator_and_filter():
    T = transvection_sum(range(1, 16), N)
    T3 = convolve(convolve(T, T), T)
    for lam in T3.spectrum():
        S = indicator(filter_multiplicity(T3, lam), N)
        assert all(T3[g] == lam for g in S.support())
