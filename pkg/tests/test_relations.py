from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from spschur.relations import (
    FAMILIES,
    build_system,
    cross_check_profiles,
    dye_bound,
    family_data,
    integrality_scan,
    r3_quotient,
    r3_remainder_formula,
    so_closed_form,
    solve_case,
    sym_r2_ratio,
)

evens = st.integers(3, 32).map(lambda k: 2 * k)


@given(st.sampled_from(FAMILIES), st.sampled_from([2, 3]), evens)
def test_solution_satisfies_system(family, r, n):
    M, rhs, names, fixed = build_system(family, r, n)
    res = solve_case(family, r, n)
    if res.determined:
        x = [res.values[k] for k in names]
        for i in range(M.rows):
            assert sum(Fraction(str(M[i, j])) * x[j] for j in range(len(names))) == Fraction(str(rhs[i]))
    for k, v in fixed.items():
        assert res.values[k] == v


@pytest.mark.parametrize("family", ["SOplus", "SOminus"])
def test_orthogonal_closed_forms(family):
    for n in range(6, 41, 2):
        res = solve_case(family, 2, n)
        assert res.feasible and res.determined
        for k, v in so_closed_form(family, n).items():
            assert res.values[k] == v, (n, k)


@pytest.mark.parametrize("family", ["SOplus", "SOminus"])
@pytest.mark.parametrize("n", [6, 8, 10])
def test_cross_check_with_geometry(family, n):
    c = cross_check_profiles(family, n)
    assert c.passed, c.mismatches


@pytest.mark.parametrize("family", ["SymNplus1", "SymNplus2"])
def test_symmetric_ratio(family):
    for n in range(6, 65, 2):
        N, D = sym_r2_ratio(family, n)
        assert solve_case(family, 2, n).values["a1"] == Fraction(N) / Fraction(D)


def test_scan_infeasible_ranges():
    for row in integrality_scan("SymNplus1", 2, range(8, 65)):
        assert not row.feasible, row.n
    for row in integrality_scan("SymNplus2", 2, range(14, 65)):
        assert not row.feasible, row.n
    for fam in FAMILIES:
        for row in integrality_scan(fam, 3, range(6, 65)):
            assert not row.feasible and row.certificate["not_half_integer"], (fam, row.n)
            assert row.certificate["R_matches"] and row.certificate["lambda2_matches"]


def test_scan_rows_flat_and_bounds():
    row = integrality_scan("SOplus", 2, [6])[0]
    flat = row.flat()
    assert flat["verdict"] == "feasible" and flat["n"] == 6
    with pytest.raises(ValueError):
        integrality_scan("SOplus", 2, [4])


@given(st.sampled_from(FAMILIES), evens)
def test_r3_remainder(family, n):
    q = r3_quotient(family, n)
    assert q.R == r3_remainder_formula(family, n)
    assert q.N - q.q * q.D == q.R
    assert (2 * q.q).denominator == 1


def test_family_data_and_validation():
    assert family_data("SymNplus1", 6) == (21, 10)
    assert family_data("SOplus", 6) == (28, 15)
    with pytest.raises(ValueError):
        family_data("nope", 6)
    with pytest.raises(ValueError):
        solve_case("SOplus", 4, 6)
    with pytest.raises(ValueError):
        so_closed_form("SymNplus1", 6)


def test_dye_bound():
    rows = {m: holds for m, _, _, holds in dye_bound(range(2, 21))}
    assert not rows[2] and not rows[3]
    assert all(rows[m] for m in range(4, 21))
    with pytest.raises(ValueError):
        dye_bound([1])
