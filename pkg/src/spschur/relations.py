"""Exact linear relation systems for two- and three-block partitions of T.

Notation: a_i = f_i(C_1), b_i = f_i(C_2) where C_2 is the block with f_2 = 0.
Once a family fixes b_3 and b_4, every relation is linear in the remaining
unknowns, so each case is an exact rational linear solve (sympy).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Iterable

import sympy

FAMILIES = ("SymNplus1", "SymNplus2", "SOplus", "SOminus")

R2_UNKNOWNS = ("a1", "a2", "a4", "b1", "lambda1", "lambda2", "mu")
R3_UNKNOWNS = ("a1", "a2", "a4", "b1", "lambda1", "lambda2")


def family_data(family: str, n: int) -> tuple[int, int]:
    """(b_3, b_4) for the group generated by C_2."""
    m = n // 2
    if family == "SymNplus1":
        return comb(n + 1, 2), comb(n - 1, 2)
    if family == "SymNplus2":
        return comb(n + 2, 2), comb(n, 2)
    if family == "SOplus":
        return 2 ** (m - 1) * (2**m - 1), 2 ** (n - 2) - 1
    if family == "SOminus":
        return 2 ** (m - 1) * (2**m + 1), 2 ** (n - 2) - 1
    raise ValueError(f"unknown family {family!r}")


def _check(family: str, r: int, n: int) -> None:
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}")
    if r not in (2, 3):
        raise ValueError("r must be 2 or 3")
    if n % 2 or n < 4:
        raise ValueError("n must be even and at least 4")


def _q(x) -> sympy.Rational:
    return sympy.Rational(x)


def build_system(family: str, r: int, n: int) -> tuple[sympy.Matrix, sympy.Matrix, tuple[str, ...], dict]:
    """(M, rhs, unknowns, fixed) with M x = rhs."""
    _check(family, r, n)
    b3, b4 = family_data(family, n)
    h = 2 ** (n - 1)
    if r == 2:
        a3 = 2**n - 1 - b3
        names = R2_UNKNOWNS
        rows = [
            # a3 = 2 a1 + a2 + a4 + 1
            ([2, 1, 1, 0, 0, 0, 0], a3 - 1),
            # b3 = 2 b1 + b2 + b4 + 1 with b2 = 0
            ([0, 0, 0, 2, 0, 0, 0], b3 - b4 - 1),
            # zero-triangle count
            ([Fraction(a3, 3), Fraction(a3, 2), 0, Fraction(b3, 3), 0, 0, 0],
             Fraction((2**n - 1) * 2 ** (n - 2), 3)),
            # a3 (2^{n-1} - 2 - a4) = lambda1 b3
            ([0, 0, a3, 0, b3, 0, 0], a3 * (h - 2)),
            # b3 (2^{n-1} - 2 - b4) = lambda2 a3
            ([0, 0, 0, 0, 0, a3, 0], b3 * (h - 2 - b4)),
            # every zero-triangle through a point of C1 meets C1 again (b2 = 0)
            ([1, 1, 0, 0, 0, 0, 0], 2 ** (n - 2)),
            # a3 a2 = b3 mu
            ([0, a3, 0, 0, 0, 0, -b3], 0),
        ]
    else:
        a3 = 2**n - 2 - b3
        names = R3_UNKNOWNS
        rows = [
            ([2, 1, 1, 0, 0, 0], a3 - 1),
            ([0, 0, 0, 2, 0, 0], b3 - b4 - 1),
            ([0, 0, a3, 0, b3, 0], a3 * (h - 2)),
            # b3 (2^{n-1} - 3 - b4) = lambda2 a3
            ([0, 0, 0, 0, 0, a3], b3 * (h - 3 - b4)),
        ]
    M = sympy.Matrix([[_q(c) for c in row] for row, _ in rows])
    rhs = sympy.Matrix([_q(v) for _, v in rows])
    fixed = {"a3": a3, "b2": 0, "b3": b3, "b4": b4}
    return M, rhs, names, fixed


@dataclass
class CaseResult:
    family: str
    r: int
    n: int
    values: dict[str, Fraction]          # determined variables, fixed ones included
    free: tuple[str, ...] = ()           # unknowns left undetermined
    kernel_dim: int = 0
    feasible: bool = True
    reason: str = ""
    extra: dict = field(default_factory=dict)

    @property
    def determined(self) -> bool:
        return self.kernel_dim == 0


def _frac(x) -> Fraction:
    x = sympy.Rational(x)
    return Fraction(int(x.p), int(x.q))


def solve_case(family: str, r: int, n: int) -> CaseResult:
    M, rhs, names, fixed = build_system(family, r, n)
    aug = M.row_join(rhs)
    R, piv = aug.rref()
    k = len(names)
    if k in piv:
        raise ValueError(f"inconsistent relation system for {family}, r={r}, n={n}")
    values: dict[str, Fraction] = {name: Fraction(v) for name, v in fixed.items()}
    free = tuple(names[j] for j in range(k) if j not in piv)
    # a pivot variable is determined when its row has no free columns
    for i, j in enumerate(piv):
        if all(R[i, c] == 0 for c in range(k) if c not in piv):
            values[names[j]] = _frac(R[i, k])
    kernel = len(free)
    res = CaseResult(family, r, n, values, free, kernel)
    bad = sorted(name for name, v in values.items() if v.denominator != 1 or v < 0)
    if bad:
        res.feasible = False
        res.reason = "non-integral or negative: " + ", ".join(
            f"{name}={values[name]}" for name in bad)
    elif kernel:
        res.reason = f"underdetermined, kernel dimension {kernel}"
    if r == 2:
        v = values
        if all(x in v for x in ("a2", "b1")):
            lhs = v["a2"] * v["a3"]
            rhs_ = v["b3"] * (2 ** (n - 1) - 2 * v["b1"] - 2 * v["b2"])
            res.extra["edge_count_residual"] = lhs - rhs_
    return res


# -- closed forms and quotients --------------------------------------------------

def so_closed_form(family: str, n: int) -> dict[str, int]:
    """Two-block values for the orthogonal families."""
    m = n // 2
    s = 1 if family == "SOplus" else -1
    if family not in ("SOplus", "SOminus"):
        raise ValueError("closed forms exist for the orthogonal families only")
    return {
        "a1": 0,
        "a2": 2 ** (n - 2),
        "a3": 2 ** (n - 1) + s * 2 ** (m - 1) - 1,
        "a4": 2 ** (n - 2) + s * 2 ** (m - 1) - 2,
        "b1": 2 ** (n - 3) - s * 2 ** (m - 2) if m >= 2 else None,
        "b2": 0,
        "b3": 2 ** (n - 1) - s * 2 ** (m - 1),
        "b4": 2 ** (n - 2) - 1,
        "lambda1": 2 ** (n - 2) - 1,
        "lambda2": 2 ** (n - 2) - s * 2 ** (m - 1),
    }


def sym_r2_ratio(family: str, n: int) -> tuple[int, Fraction]:
    """(N, D) with a_1 = N / D for the symmetric families, r = 2."""
    F = Fraction
    p = 2**n
    if family == "SymNplus1":
        N = 2 ** (2 * n - 2) - 3 * F(p, 8) * n * n - 3 * F(p, 8) * n - F(p, 4) + n**3 - n
        D = p - F(n * n, 2) - F(n, 2) - 1
    elif family == "SymNplus2":
        N = 2 ** (2 * n - 2) - 3 * F(p, 8) * n * n - 9 * F(p, 8) * n - p + n**3 + 3 * n * n + 2 * n
        D = p - F(n * n, 2) - F(3 * n, 2) - 2
    else:
        raise ValueError("symmetric families only")
    return N, D


@dataclass
class R3Quotient:
    N: Fraction
    D: Fraction
    q: Fraction          # the half-integral quotient used in the certificate
    R: Fraction          # N - q D

    @property
    def integral(self) -> bool:
        return (self.N / self.D).denominator == 1

    @property
    def half_integral_residue(self) -> Fraction:
        """R / D; must lie in (1/2)Z for N / D to be an integer."""
        return self.R / self.D

    @property
    def certificate(self) -> bool:
        """True when R / D is not a half-integer, which rules out N / D in Z."""
        return (2 * self.half_integral_residue).denominator != 1


def r3_quotient(family: str, n: int) -> R3Quotient:
    """lambda_2 = N / D for r = 3, scaled so that q below is a half-integer."""
    b3, b4 = family_data(family, n)
    a3 = 2**n - 2 - b3
    N0 = b3 * (2 ** (n - 1) - 3 - b4)
    m = n // 2
    F = Fraction
    if family == "SymNplus1":
        scale, q = 1, F(n * n + n, 4)
    elif family == "SymNplus2":
        scale, q = 1, F(n * n + 3 * n + 2, 4)
    elif family == "SOplus":
        scale, q = 2, F(2 ** (n - 2) - 2 ** (m - 1)) - F(1, 2)
    else:
        scale, q = 2, F(2 ** (n - 2) + 2 ** (m - 1)) - F(1, 2)
    N, D = F(scale * N0), F(scale * a3)
    return R3Quotient(N, D, q, N - q * D)


def r3_remainder_formula(family: str, n: int) -> Fraction:
    """Closed form of N - q D."""
    F = Fraction
    m = n // 2
    if family == "SymNplus1":
        return -F(n**4, 8) + F(3 * n**3, 4) - F(5 * n * n, 8) - F(3 * n, 2)
    if family == "SymNplus2":
        return -F(n**4, 8) + F(n**3, 4) + F(7 * n * n, 8) - n - F(3, 2)
    if family == "SOplus":
        return F(2 ** (m - 1) - 2)
    return F(-(2 ** (m - 1)) - 2)


# -- scans --------------------------------------------------------------------------

@dataclass
class ScanRow:
    n: int
    family: str
    r: int
    feasible: bool
    values: dict[str, Fraction]
    certificate: dict

    def flat(self) -> dict:
        out = {"n": self.n, "family": self.family, "r": self.r,
               "verdict": "feasible" if self.feasible else "infeasible"}
        for k, v in sorted(self.values.items()):
            out[k] = str(v)
        for k, v in sorted(self.certificate.items()):
            out["cert_" + k] = str(v)
        return out


def integrality_scan(family: str, r: int, n_range: Iterable[int]) -> list[ScanRow]:
    rows = []
    for n in n_range:
        if n % 2:
            continue
        if not 6 <= n <= 200:
            raise ValueError("scan range must lie within [6, 200]")
        res = solve_case(family, r, n)
        cert: dict = {}
        if r == 2 and family.startswith("Sym"):
            N, D = sym_r2_ratio(family, n)
            cert = {"N": N, "D": D, "N_mod_D": (N % D) if N.denominator == D.denominator == 1 else "",
                    "a1_matches": Fraction(N) / Fraction(D) == res.values["a1"]}
        elif r == 3:
            q = r3_quotient(family, n)
            cert = {"N": q.N, "D": q.D, "N_mod_D": q.N % q.D, "R": q.R,
                    "R_over_D": q.half_integral_residue, "not_half_integer": q.certificate,
                    "R_matches": q.R == r3_remainder_formula(family, n),
                    "lambda2_matches": q.N / q.D == res.values["lambda2"]}
        rows.append(ScanRow(n, family, r, res.feasible, res.values, cert))
    return rows


def dye_bound(m_range: Iterable[int]) -> list[tuple[int, int, int, bool]]:
    """(m, (2^{2m}-1) 2^m m, 2^{m^2}, holds) per m."""
    out = []
    for m in m_range:
        if m < 2:
            raise ValueError("m must be at least 2")
        lhs = (2 ** (2 * m) - 1) * 2**m * m
        rhs = 2 ** (m * m)
        out.append((m, lhs, rhs, lhs < rhs))
    return out


# -- geometry cross-check ------------------------------------------------------------

@dataclass
class CrossCheck:
    family: str
    n: int
    geometric: dict[str, Fraction]
    solved: dict[str, Fraction]
    mismatches: list[str]

    @property
    def passed(self) -> bool:
        return not self.mismatches


PROFILE_KEYS = ("a1", "a2", "a3", "a4", "b1", "b2", "b3", "b4", "lambda1", "lambda2")


def cross_check_profiles(family: str, n: int) -> CrossCheck:
    """Compare solve_case with f-profiles of the orthogonal block and its complement."""
    from .ortho import form_with_sign, so_transvections
    from .schur import f_profile

    if family not in ("SOplus", "SOminus"):
        raise ValueError("cross-check is defined for the orthogonal families")
    Q = form_with_sign(n, "+" if family == "SOplus" else "-")
    C2 = so_transvections(Q)
    C1 = set(range(1, 1 << n)) - C2
    p1, p2 = f_profile(C1, n), f_profile(C2, n)
    if not (p1.constant and p2.constant):
        raise ValueError("orthogonal partition has non-constant f-functions")
    geo = {f"a{i + 1}": Fraction(v) for i, v in enumerate(p1.values)}
    geo.update({f"b{i + 1}": Fraction(v) for i, v in enumerate(p2.values)})
    h = 2 ** (n - 1)
    geo["lambda1"] = Fraction(geo["a3"] * (h - 2 - geo["a4"]), geo["b3"])
    geo["lambda2"] = Fraction(geo["b3"] * (h - 2 - geo["b4"]), geo["a3"])
    solved = solve_case(family, 2, n).values
    bad = [k for k in PROFILE_KEYS if geo[k] != solved.get(k)]
    return CrossCheck(family, n, geo, {k: solved.get(k) for k in PROFILE_KEYS}, bad)
