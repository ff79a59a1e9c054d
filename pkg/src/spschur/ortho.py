"""Quadratic forms over F_2 polarizing to the symplectic form.

A form is fixed by its values on e_1..e_n; the rest follows from
Q(x + y) = Q(x) + Q(y) + x . y.  With the standard form e_i . e_{n+1-i} = 1
this gives Q(v) = <v, diag> + (number of pairs {i, n+1-i} inside v) mod 2.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Sequence

import sympy

from .gf2 import (
    check_dim,
    check_vec,
    coordinates,
    dot_function,
    is_independent,
    nonzero_vectors,
    path_adjacency,
    realize_graph,
    reverse_bits,
)
from .schur import f_profile

TABLE_LIMIT = 16


@dataclass(frozen=True)
class QuadForm:
    n: int
    diag: int        # bit i-1 holds Q(e_i)
    label: str = ""

    def __call__(self, v: int) -> int:
        n = self.n
        pairs = (v & reverse_bits(v, n)).bit_count() // 2
        return ((v & self.diag).bit_count() + pairs) & 1

    @cached_property
    def values(self) -> bytes:
        """Q(v) for every v, indexed by v (n <= 16)."""
        if self.n > TABLE_LIMIT:
            raise ValueError("value table only kept for small n")
        return bytes(self(v) for v in range(1 << self.n))

    def serialize(self) -> str:
        return self.label or f"diag:{self.diag:#x}"


def standard_form(n: int, alpha: int) -> QuadForm:
    """alpha x_1 + x_1 x_n + alpha x_n + x_2 x_{n-1} + ... + x_m x_{m+1}."""
    check_dim(n)
    if alpha not in (0, 1):
        raise ValueError("alpha is a bit")
    diag = (1 | 1 << (n - 1)) if alpha else 0
    return QuadForm(n, diag, f"Q{alpha}")


def form_from_basis(B: Sequence[int], n: int) -> QuadForm:
    """The form with Q(b) = 1 for every b in the basis B."""
    check_dim(n)
    B = list(B)
    for b in B:
        check_vec(b, n)
    if len(B) != n or not is_independent(B):
        raise ValueError("B must be a basis")
    dot = dot_function(n)
    diag = 0
    for i in range(n):
        c = coordinates(1 << i, B, n)
        idx = [j for j in range(n) if c[j]]
        q = len(idx) + sum(dot(B[a], B[b]) for a, b in combinations(idx, 2))
        if q & 1:
            diag |= 1 << i
    return QuadForm(n, diag, "basis:" + ",".join(f"{b:#x}" for b in B))


def polarizes(Q: QuadForm, x: int, y: int) -> bool:
    return Q(x ^ y) ^ Q(x) ^ Q(y) == dot_function(Q.n)(x, y)


def arf(Q: QuadForm, basis: Sequence[int] | None = None) -> int:
    """Sum of Q(a_i) Q(b_i) over a symplectic basis listed a_1, b_1, a_2, b_2, ..."""
    n = Q.n
    if basis is None:
        return sum(Q(1 << i) & Q(1 << (n - 1 - i)) for i in range(n // 2)) & 1
    return sum(Q(basis[2 * i]) & Q(basis[2 * i + 1]) for i in range(n // 2)) & 1


def arf_by_majority(Q: QuadForm) -> int:
    """The value Q takes most often."""
    ones = sum(Q(v) for v in range(1 << Q.n))
    return int(2 * ones > 1 << Q.n)


def has_totally_singular_half(Q: QuadForm) -> bool:
    """Is there an n/2-dimensional subspace on which Q vanishes?  (small n)"""
    n = Q.n
    m = n // 2
    dot = dot_function(n)
    singular = [v for v in nonzero_vectors(n) if not Q(v)]

    def grow(chosen: list[int], span_set: set[int], start: int) -> bool:
        if len(chosen) == m:
            return True
        for i in range(start, len(singular)):
            v = singular[i]
            if v in span_set or any(dot(v, w) for w in chosen):
                continue
            new = span_set | {s ^ v for s in span_set}
            if grow(chosen + [v], new, i + 1):
                return True
        return False

    return grow([], {0}, 0)


def so_sign(Q: QuadForm) -> str:
    """'+' when Arf is 0 (Witt index n/2), '-' otherwise."""
    return "-" if arf(Q) else "+"


def so_transvections(Q: QuadForm) -> set[int]:
    """Nonzero v with Q(v) = 1: the transvections of the orthogonal group of Q."""
    return {v for v in nonzero_vectors(Q.n) if Q(v)}


def so_count(n: int, sign: str) -> int:
    m = n // 2
    return 2 ** (m - 1) * (2**m - 1 if sign == "+" else 2**m + 1)


def form_with_sign(n: int, sign: str) -> QuadForm:
    """A standard form whose orthogonal group has the requested sign."""
    for alpha in (0, 1):
        Q = standard_form(n, alpha)
        if so_sign(Q) == sign:
            return Q
    raise AssertionError("both Arf classes occur")


@dataclass(frozen=True)
class F4Result:
    value: int | None
    witness: tuple[int, int] | None = None


def f4_of_so(Q: QuadForm) -> F4Result:
    prof = f_profile(so_transvections(Q), Q.n)
    if not prof.constant:
        # f4 may still be constant while another f varies
        vals = {a: v[3] for a, v in prof.per_point.items()}
        pts = sorted(vals)
        for b in pts[1:]:
            if vals[b] != vals[pts[0]]:
                return F4Result(None, (pts[0], b))
        return F4Result(vals[pts[0]])
    return F4Result(prof.f4)


# -- the 5x5 recursion ------------------------------------------------------------

K_MATRIX = (
    (1, 1, 2, 0, 1),
    (1, 1, 0, 2, 1),
    (0, 2, 1, 1, 2),
    (2, 0, 1, 1, 2),
    (0, 0, 0, 0, 1),
)

BASE_COUNTS = (31, 31, 32, 32)

# 8-vertex generator graphs (0-based edges) with the base counts; vertex 0 is
# a leaf on vertex 1 and the tail grows from vertex 7.  The path gives a form
# of Arf 0, the one-cycle graph a form of Arf 1, so both signs are covered.
BASE_GRAPHS = {
    "path": [(i, i + 1) for i in range(7)],
    "cycle": [(0, 1), (1, 3), (2, 4), (2, 7), (3, 5), (3, 7), (4, 5), (5, 6)],
}


def k_charpoly():
    lam = sympy.Symbol("lambda")
    return sympy.factor(sympy.Matrix(K_MATRIX).charpoly(lam).as_expr()), lam


def k_power_vector(m: int) -> list[int]:
    v = list(BASE_COUNTS) + [1]
    for _ in range(m):
        v = [sum(K_MATRIX[i][j] * v[j] for j in range(5)) for i in range(5)]
    return v


def k_closed_form(m: int) -> list[int]:
    p = 2 ** (2 * m + 5)
    return [p - 1, p - 1, p, p, 1]


def graph_with_tail(edges: list[tuple[int, int]], n: int) -> list[list[int]]:
    """Adjacency of the 8-vertex base graph extended by a path to n vertices."""
    es = list(edges) + [(i, i + 1) for i in range(7, n - 1)]
    adj = [[0] * n for _ in range(n)]
    for i, j in es:
        adj[i][j] = adj[j][i] = 1
    return adj


def graph_basis(edges: list[tuple[int, int]], n: int) -> list[int]:
    return realize_graph(graph_with_tail(edges, n), n)


def epsilon_delta_counts(B: Sequence[int], n: int) -> tuple[int, int, int, int]:
    """(n00, n10, n01, n11): vectors t not in {0, b_1} with Q_B(t) = eps,
    B-coordinate of b_n equal to delta, and b_1 . t = 0."""
    Q = form_from_basis(B, n)
    dot = dot_function(n)
    b1 = B[0]
    counts = {(0, 0): 0, (1, 0): 0, (0, 1): 0, (1, 1): 0}
    for t in nonzero_vectors(n):
        if t == b1 or dot(b1, t):
            continue
        delta = coordinates(t, B, n)[n - 1]
        counts[(Q(t), delta)] += 1
    return counts[(0, 0)], counts[(1, 0)], counts[(0, 1)], counts[(1, 1)]


@dataclass
class KRecursionReport:
    charpoly: str
    charpoly_ok: bool
    vector_ok: dict[int, bool]
    direct: dict[tuple[str, int], tuple[tuple[int, int, int, int], list[int], str]]

    @property
    def passed(self) -> bool:
        return (self.charpoly_ok and all(self.vector_ok.values())
                and all(tuple(c) == tuple(v[:4]) for c, v, _ in self.direct.values()))


def k_recursion_check(m_max: int, direct_n: Sequence[int] = (8, 10)) -> KRecursionReport:
    if m_max < 1:
        raise ValueError("m_max must be at least 1")
    poly, lam = k_charpoly()
    want = sympy.factor(lam * (lam - 1) * (lam - 4) * (lam**2 + 4))
    charpoly_ok = sympy.expand(poly - want) == 0
    vec = {m: k_power_vector(m) == k_closed_form(m) for m in range(1, m_max + 1)}
    direct = {}
    for name, edges in BASE_GRAPHS.items():
        for n in direct_n:
            B = graph_basis(edges, n)
            c = epsilon_delta_counts(B, n)
            sign = so_sign(form_from_basis(B, n))
            direct[(name, n)] = (c, k_closed_form((n - 8) // 2), sign)
    return KRecursionReport(str(poly), charpoly_ok, vec, direct)


def path_form(k: int, n: int) -> QuadForm:
    """Q_B for a path-graph basis of length k = n."""
    return form_from_basis(realize_graph(path_adjacency(k), n), n)
