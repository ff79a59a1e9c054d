import random

import pytest
import sympy
from hypothesis import given, strategies as st

from oracles import form, symplectic_pairs_basis
from spschur.gf2 import rank
from spschur.ortho import (
    BASE_COUNTS,
    QuadForm,
    arf,
    arf_by_majority,
    epsilon_delta_counts,
    f4_of_so,
    form_from_basis,
    form_with_sign,
    graph_basis,
    has_totally_singular_half,
    k_charpoly,
    k_closed_form,
    k_power_vector,
    k_recursion_check,
    polarizes,
    so_count,
    so_sign,
    so_transvections,
    standard_form,
    BASE_GRAPHS,
)
from spschur.spgroup import product_of_transvections


def random_symplectic_rows(rng, n):
    return tuple(product_of_transvections([rng.randrange(1, 1 << n) for _ in range(3 * n)], n))


forms = st.builds(lambda n, d: QuadForm(n, d & ((1 << n) - 1)),
                  st.sampled_from([2, 4, 6, 8]), st.integers(0, 255))


@given(forms, st.data())
def test_polarization(Q, data):
    n = Q.n
    x = data.draw(st.integers(0, (1 << n) - 1))
    y = data.draw(st.integers(0, (1 << n) - 1))
    assert polarizes(Q, x, y)
    assert Q(x ^ y) == Q(x) ^ Q(y) ^ form(x, y, n)
    assert Q(0) == 0


@given(forms, st.integers(0, 10**6))
def test_arf_basis_independent(Q, seed):
    rng = random.Random(seed)
    B = symplectic_pairs_basis(random_symplectic_rows(rng, Q.n))
    assert arf(Q, B) == arf(Q) == arf_by_majority(Q)


@pytest.mark.parametrize("n", [2, 4, 6])
def test_arf_zero_iff_singular_half(n):
    for d in range(1 << n):
        Q = QuadForm(n, d)
        assert (arf(Q) == 0) == has_totally_singular_half(Q)


@pytest.mark.parametrize("n", [4, 6, 8, 10])
@pytest.mark.parametrize("sign", "+-")
def test_so_counts(n, sign):
    Q = form_with_sign(n, sign)
    assert so_sign(Q) == sign
    assert len(so_transvections(Q)) == so_count(n, sign)


def test_so_count_values():
    assert [so_count(4, "+"), so_count(4, "-"), so_count(6, "+"), so_count(6, "-")] == [6, 10, 28, 36]


def test_standard_form_values():
    Q = standard_form(4, 0)
    assert [Q(1), Q(8), Q(9)] == [0, 0, 1]
    with pytest.raises(ValueError):
        standard_form(4, 2)


@given(st.integers(0, 10**6))
def test_form_from_basis(seed):
    rng = random.Random(seed)
    n = 6
    B = list(random_symplectic_rows(rng, n))
    Q = form_from_basis(B, n)
    assert all(Q(b) == 1 for b in B)
    with pytest.raises(ValueError):
        form_from_basis(B[:-1] + [B[0]], n)


@pytest.mark.parametrize("n", [8, 10])
@pytest.mark.parametrize("sign", "+-")
def test_f4_constant_beyond_six(n, sign):
    assert f4_of_so(form_with_sign(n, sign)).value == 2 ** (n - 2) - 1


def test_f4_small_recorded_values():
    # at n = 4, 6 the values still exist; they are kept as observations
    for n in (4, 6):
        for sign in "+-":
            assert f4_of_so(form_with_sign(n, sign)).value is not None


def test_k_charpoly():
    poly, lam = k_charpoly()
    assert sympy.expand(poly - lam * (lam - 1) * (lam - 4) * (lam**2 + 4)) == 0


def test_k_powers_closed_form():
    assert k_power_vector(0) == list(BASE_COUNTS) + [1]
    for m in range(1, 13):
        assert k_power_vector(m) == k_closed_form(m)


@pytest.mark.parametrize("name", sorted(BASE_GRAPHS))
def test_base_graphs(name):
    B = graph_basis(BASE_GRAPHS[name], 8)
    assert rank(B) == 8
    assert epsilon_delta_counts(B, 8) == BASE_COUNTS


def test_base_graphs_cover_both_signs():
    signs = {so_sign(form_from_basis(graph_basis(e, 8), 8)) for e in BASE_GRAPHS.values()}
    assert signs == {"+", "-"}


def test_k_recursion_report():
    rep = k_recursion_check(12)
    assert rep.passed
    with pytest.raises(ValueError):
        k_recursion_check(0)
