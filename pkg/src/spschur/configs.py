"""Explicit configurations where two members of a Schur ring cannot commute.

Each function builds a partial partition of the transvections (inside a
small subspace W when only W is pinned down), forms the relevant multisets
and reads the coefficient of one element in both orders.  Every element is
given as a word of transvections; ``ab`` is the coefficient in (left)(right)
and ``ba`` the coefficient in (right)(left), products applied left first.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import reduce
from typing import Sequence

from .factorize import (
    FactorQuery,
    count_split,
    enumerate_factorizations,
    min_length,
    parse_factor_word,
    support_span,
)
from .galg import (
    LazyFilter,
    LazyProduct,
    Multiset,
    commutes,
    convolve,
    filter_multiplicity,
    indicator,
    restrict_by_tag,
    transvection_sum,
)
from .gf2 import (
    basis_vector,
    dot_function,
    format_vector,
    path_adjacency,
    perp,
    realize_graph,
    span,
)
from .ortho import form_from_basis
from .schur import f_profile
from .spgroup import ClassTag, product_of_transvections, serialize

# products above this many terms are read lazily instead of materialized
EAGER_LIMIT = 200_000


@dataclass
class SplitCount:
    name: str
    n: int
    word: list[int]
    left: str
    right: str
    ab: int
    ba: int
    extra: dict = field(default_factory=dict)

    @property
    def element(self) -> tuple:
        return tuple(product_of_transvections(self.word, self.n))

    @property
    def noncommuting(self) -> bool:
        return self.ab != self.ba

    def as_dict(self) -> dict:
        return {"name": self.name, "n": self.n, "left": self.left, "right": self.right,
                "word": [format_vector(v, self.n) for v in self.word],
                "element": serialize(self.element), "ab": self.ab, "ba": self.ba,
                **self.extra}


def _check_n(n: int, least: int = 6) -> None:
    if n < least or n % 2:
        raise ValueError(f"configuration needs even n >= {least}")


def _word(text: str, n: int) -> list[int]:
    return parse_factor_word(text, n)


def _prod(vs: Sequence[int], n: int) -> tuple:
    return tuple(product_of_transvections(vs, n))


def support(M: Multiset) -> Multiset:
    """The underlying set of a multiset, as an indicator."""
    return indicator(M.support(), M.n)


def _factors_inside(target: Sequence[int], k: int, universe: Sequence[int], W) -> dict:
    """All k-factorizations over ``universe`` and whether each stays in W."""
    sols = enumerate_factorizations(FactorQuery(target, k, allowed=universe))
    return {"factorizations": len(sols), "all_in_W": all(v in W for s in sols for v in s)}


# -- three blocks meeting pairwise (two non-isotropic blocks besides C_1) ------

def three_blocks(n: int) -> SplitCount:
    """C_2 = {e_1, e_n, e_1+e_n}, C_3 = {e_2, e_{n-1}, e_2+e_{n-1}}, C_1 the rest
    of W = Span(e_1, e_2, e_{n-1}, e_n).

    X = C_1C_2 in (t_1t_2)^G, Y = C_1^2 in (t_1t_n)^G, Z = C_1 Y.  Counted as
    sets: the support of an element of the ring is again in the ring.
    """
    _check_n(n)
    e = lambda i: basis_vector(i, n)
    W = span([e(1), e(2), e(n - 1), e(n)], n)
    C2 = {e(1), e(n), e(1) ^ e(n)}
    C3 = {e(2), e(n - 1), e(2) ^ e(n - 1)}
    C1 = set(W.nonzero()) - C2 - C3
    c1, c2 = transvection_sum(C1, n), transvection_sum(C2, n)
    X = restrict_by_tag(convolve(c1, c2), ClassTag.TT0)
    Y = restrict_by_tag(convolve(c1, c1), ClassTag.TT1)
    Z = convolve(c1, Y)
    w1 = _word("t_{1,2,n-1,n} t_{1,n}", n)
    w2 = _word("t_{1,n-1,n} t_{n-1,n} t_{2,n}", n)
    alpha = _prod(w1 + w2, n)
    ab, ba = count_split(alpha, support(X), support(Z))
    ml = min_length(alpha, 5)
    # one direction beyond W, normalized orthogonal to W
    W5 = W + span([e(3)], n)
    extra = {
        "sizes": [len(C1), len(C2), len(C3)],
        "alpha1_in_X": X[_prod(w1, n)] > 0,
        "y_in_Y": Y[_prod(_word("t_{n-1,n} t_{2,n}", n), n)] > 0,
        "alpha2_in_Z": Z[_prod(w2, n)] > 0,
        "Z_spectrum": Z.spectrum(),
        "min_length": ml.length,
        "min_length_steps": ml.searched,
        "multiset_counts": list(count_split(alpha, X, Z)),
        **_factors_inside(alpha, 5, W5.nonzero(), W),
    }
    return SplitCount("three-blocks", n, w1 + w2, "X", "Z", ab, ba, extra)


# -- maximal isotropic union ---------------------------------------------------

LAGRANGIAN_WORDS = {
    # the last factor t_1 makes alpha_2 t_1 a multiplicity-one element of Z
    "working": ("t_{1,2,3,n} t_{1,n-1}", "t_{2,n-1} t_{1,2,3}", "t_1"),
    "listed": ("t_{1,2,3,n} t_{1,n-1}", "t_{2,n-1} t_{1,2,3}", "t_{1,2}"),
}


def lagrangian(n: int, word: str = "working") -> SplitCount:
    """A = Span(e_1..e_{n/2})^#, C_1 = the rest of V^#.

    X = C_1^2 in (t_1t_2)^G, Y = C_1A in (t_1t_n)^G, Z = YA, Z_1 its
    multiplicity-one part.
    """
    _check_n(n)
    if word not in LAGRANGIAN_WORDS:
        raise ValueError(f"word must be one of {sorted(LAGRANGIAN_WORDS)}")
    m = n // 2
    A = set(span([basis_vector(i, n) for i in range(1, m + 1)], n).nonzero())
    C1 = set(range(1, 1 << n)) - A
    a, c1 = transvection_sum(A, n), transvection_sum(C1, n)
    X = restrict_by_tag(convolve(c1, c1), ClassTag.TT0)
    Y = restrict_by_tag(convolve(c1, a), ClassTag.TT1)
    Z = convolve(Y, a)
    Z1 = indicator(filter_multiplicity(Z, 1), n)
    s1, s2, s3 = LAGRANGIAN_WORDS[word]
    w1, w2, w3 = _word(s1, n), _word(s2, n), _word(s3, n)
    alpha = _prod(w1 + w2 + w3, n)
    ab, ba = count_split(alpha, X, Z1)
    extra = {
        "word_choice": word,
        "Z_spectrum": Z.spectrum(),
        "alpha1_in_X": X[_prod(w1, n)] > 0,
        "alpha2_in_Y": Y[_prod(w2, n)] > 0,
        "alpha3_multiplicity_in_Z": Z[_prod(w2 + w3, n)],
        "support": format_support(alpha),
    }
    return SplitCount("lagrangian", n, w1 + w2 + w3, "X", "Z1", ab, ba, extra)


def format_support(alpha: Sequence[int]) -> list[str]:
    n = len(alpha)
    return [format_vector(v, n) for v in support_span(alpha).basis]


# -- one non-isotropic block over an isotropic span ----------------------------

def isotropic_span(n: int) -> SplitCount:
    """W = Span(a_1, b_1, a_2, b_2, a_3, b_3) with a_i = e_i, b_i = e_{n+1-i}.

    Inside W: C_1 = (b_1 + a_1^perp) u (b_2 + a_2^perp), C_2 = {u + v : u in
    {a_3, b_3, a_3+b_3}, v in Span(a_1, a_2)}, the rest is Span(a_1, a_2)^#.
    A = (C_1^3)_1 and B = (C_1C_2C_1)_1.
    """
    _check_n(n)
    a = lambda i: basis_vector(i, n)
    b = lambda i: basis_vector(n + 1 - i, n)
    dot = dot_function(n)
    W = span([a(1), b(1), a(2), b(2), a(3), b(3)], n)
    C1 = {v for v in W.nonzero() if any(not dot(v ^ b(i), a(i)) for i in (1, 2))}
    C2 = {u ^ v for u in (a(3), b(3), a(3) ^ b(3)) for v in (0, a(1), a(2), a(1) ^ a(2))}
    c1, c2 = transvection_sum(C1, n), transvection_sum(C2, n)
    A = indicator(filter_multiplicity(convolve(convolve(c1, c1), c1), 1), n)
    B = indicator(filter_multiplicity(convolve(convolve(c1, c2), c1), 1), n)
    w1 = [b(2) ^ b(1), a(1) ^ a(3) ^ b(2) ^ b(1), a(1) ^ b(3) ^ b(2) ^ b(1)]
    w2 = [a(2) ^ a(3) ^ b(3) ^ b(2), a(2) ^ a(3) ^ b(3), a(1) ^ a(2) ^ b(2)]
    alpha = _prod(w1 + w2, n)
    ab, ba = count_split(alpha, A, B)
    S = support_span(alpha)
    extra = {
        "sizes": [len(C1), len(C2), 3],
        "alpha1_in_A": A[_prod(w1, n)] > 0,
        "alpha2_in_B": B[_prod(w2, n)] > 0,
        "support_is_W": S == W,
    }
    return SplitCount("isotropic-span", n, w1 + w2, "A", "B", ab, ba, extra)


# -- two orthogonal nondegenerate components -----------------------------------

def split_components(n: int) -> SplitCount:
    """V_v = Span(e_3, e_{n-2}), V_u its perp; C_2 = V_u^# u V_v^#, C_1 the rest.

    X = C_1C_2 in (t_1t_2)^G, Y = C_1^2 in (t_1t_n)^G, Z = C_1 Y, Z_1 its
    multiplicity-one part (read lazily when Z is large).
    """
    _check_n(n)
    Vv = span([basis_vector(3, n), basis_vector(n - 2, n)], n)
    Vu = perp(Vv)
    C2 = set(Vu.nonzero()) | set(Vv.nonzero())
    C1 = set(range(1, 1 << n)) - C2
    c1, c2 = transvection_sum(C1, n), transvection_sum(C2, n)
    X = restrict_by_tag(convolve(c1, c2), ClassTag.TT0)
    Y = restrict_by_tag(convolve(c1, c1), ClassTag.TT1)
    if len(c1) * len(Y) <= EAGER_LIMIT:
        Z = convolve(c1, Y)
        Z1 = indicator(filter_multiplicity(Z, 1), n)
    else:
        Z1 = LazyFilter(LazyProduct(c1, Y, length=3), 1)
    wz = _word("t_{n-2,n} t_{2,n-2,n-1} t_{n-2,n-1}", n)
    wx = _word("t_{2,3,n} t_{1,2,n-1}", n)
    alpha = _prod(wz + wx, n)
    ab, ba = count_split(alpha, X, Z1)
    extra = {
        "sizes": [len(C1), len(C2)],
        "z_in_Z1": Z1[_prod(wz, n)] == 1,
        "x_in_X": X[_prod(wx, n)] > 0,
        "support": format_support(alpha),
        "min_length": min_length(alpha, 5).length,
    }
    return SplitCount("split-components", n, wz + wx, "X", "Z1", ab, ba, extra)


# -- orthogonal form on a path-graph subspace ----------------------------------

# b-index words: the listed element and one found by a full comparison of
# X_1X_3 with X_3X_1 (the listed one turns out to be balanced)
PATH_WORDS = {
    "listed": ([(1, 2, 4), (2, 5), (1, 5)], [(1, 2, 3, 4, 5), (2, 3, 5, 6), (1, 2, 3, 5, 6)]),
    "found": ([(1, 2, 4, 5), (3, 6), (1, 2, 4, 5, 6)], [(1, 6), (2, 3, 6), (2, 5, 6)]),
}


def path_cubes(n: int, word: str = "found", search: bool = False) -> SplitCount:
    """b_1..b_6 with b_i . b_j = 1 exactly for |i - j| = 1, W their span and Q
    the form with Q(b_i) = 1.  C_1 in W is {Q = 0}, C_2 is {Q = 1}.

    X_i = elements of multiplicity i in (C_1 in W)^3.  With ``search`` the
    full products are compared as well (slow: about a minute and a half).
    """
    if word not in PATH_WORDS:
        raise ValueError(f"word must be one of {sorted(PATH_WORDS)}")
    _check_n(n)
    B = realize_graph(path_adjacency(6), n)[:6]
    # the form of the path basis, extended by any basis of the rest
    Q = form_from_basis(B + _complement(B, n), n)
    W = span(B, n)
    C1 = {v for v in W.nonzero() if not Q(v)}
    C2 = {v for v in W.nonzero() if Q(v)}
    c1 = transvection_sum(C1, n)
    cube = convolve(convolve(c1, c1), c1)
    X1 = indicator(filter_multiplicity(cube, 1), n)
    X3 = indicator(filter_multiplicity(cube, 3), n)
    bv = lambda ix: reduce(lambda s, i: s ^ B[i - 1], ix, 0)
    w1, w2 = ([bv(ix) for ix in half] for half in PATH_WORDS[word])
    alpha = _prod(w1 + w2, n)
    ab, ba = count_split(alpha, X1, X3)
    extra = {
        "word_choice": word,
        "sizes": [len(C1), len(C2)],
        "cube_spectrum": cube.spectrum(),
        "alpha1_multiplicity": cube[_prod(w1, n)],
        "alpha2_multiplicity": cube[_prod(w2, n)],
        "support_is_W": support_span(alpha) == W,
    }
    if search:
        res = commutes(X1, X3)
        extra["commute"] = res.commute
        if not res.commute:
            extra["witness"] = serialize(res.witness)
            extra["witness_counts"] = [res.coef_ab, res.coef_ba]
    return SplitCount("path-cubes", n, w1 + w2, "X1", "X3", ab, ba, extra)


def _complement(B: Sequence[int], n: int) -> list[int]:
    """Standard basis vectors completing B to a basis."""
    out = list(B)
    cur = span(out, n)
    for i in range(1, n + 1):
        v = basis_vector(i, n)
        if v not in cur:
            out.append(v)
            cur = span(out, n)
    return out[len(B):]


# -- the three surviving cases of two adjacent f_2-blocks ----------------------

@dataclass
class CaseCheck:
    name: str
    n: int
    target: list[int]
    listed: list[tuple[int, ...]]       # unconstrained solutions
    admissible: list[tuple[int, ...]]   # solutions obeying the block membership
    extra: dict = field(default_factory=dict)

    @property
    def excluded(self) -> bool:
        return not self.admissible

    def as_dict(self) -> dict:
        fmt = lambda t: [format_vector(v, self.n) for v in t]
        return {"name": self.name, "n": self.n, "target": fmt(self.target),
                "listed": [fmt(t) for t in self.listed],
                "admissible": [fmt(t) for t in self.admissible], **self.extra}


def _f2_pair(C1: set[int], dot):
    """u, v in C_1 with u . v = 1 and u + v outside C_1."""
    return lambda u, v: u in C1 and v in C1 and dot(u, v) == 1 and (u ^ v) not in C1


def case_a1(n: int) -> CaseCheck:
    """C_1 has e_1, e_n, e_1+e_2, e_1+e_2+e_n; C_2 has e_1+e_n, e_2+e_n.
    t_{2,n} t_1 t_n lies in C_2 (C_1^2)_f2 but not in (C_1^2)_f2 C_2."""
    _check_n(n, 4)
    e = lambda *ix: reduce(lambda s, i: s ^ basis_vector(i, n), ix, 0)
    C1 = {e(1), e(n), e(1, 2), e(1, 2, n)}
    C2 = {e(1, n), e(2, n)}
    dot = dot_function(n)
    f2 = _f2_pair(C1, dot)
    target = _word("t_{2,n} t_1 t_n", n)
    alpha = _prod(target, n)
    listed = enumerate_factorizations(FactorQuery(alpha, 3))
    adm = [t for t in listed if f2(t[0], t[1]) and t[2] in C2]
    return CaseCheck("caseA1", n, target, listed, adm,
                     {"target_in_C2_C1C1": target[0] in C2 and f2(target[1], target[2])})


def case_a21(n: int) -> CaseCheck:
    """C_1 has e_1, e_n, e_1+e_2; C_2 has e_1+e_n, e_2+e_n, e_1+e_2+e_n.
    beta = t_{1,n} t_n t_{1,2} is in C_2 (C_1^2)_f2 but not (C_1^2)_f2 C_2."""
    _check_n(n, 4)
    e = lambda *ix: reduce(lambda s, i: s ^ basis_vector(i, n), ix, 0)
    C1 = {e(1), e(n), e(1, 2)}
    C2 = {e(1, n), e(2, n), e(1, 2, n)}
    dot = dot_function(n)
    f2 = _f2_pair(C1, dot)
    W = span([e(1), e(2), e(n)], n)
    pairs = sorted((u, v) for u in W.nonzero() for v in W.nonzero() if f2(u, v))
    target = _word("t_{1,n} t_n t_{1,2}", n)
    beta = _prod(target, n)
    listed = enumerate_factorizations(FactorQuery(beta, 3))
    adm = [t for t in listed if f2(t[0], t[1]) and t[2] in C2]
    # (C_1^2)_f2 in Sp(W), one representative pair per element
    elems = {}
    for u, v in pairs:
        elems.setdefault(_prod([u, v], n), (u, v))
    return CaseCheck("caseA21", n, target, listed, adm, {
        "f2_squares_in_W": [[format_vector(x, n) for x in p] for p in sorted(elems.values())],
        "target_in_C2_C1C1": target[0] in C2 and f2(target[1], target[2])})


def case_b21(n: int) -> CaseCheck:
    """C_1 has e_1, e_n, e_1+e_2+e_n; C_2 has e_1+e_n, e_2+e_n; C_3 has e_1+e_2.
    alpha = t_n t_{2,n} t_{1,n} is in E C_2 for E = C_1C_2 in (t_1t_2)^G but
    no u in C_2, (v, w) in C_1 x C_2 with v . w = 0 gives t_u t_v t_w = alpha."""
    _check_n(n, 4)
    e = lambda *ix: reduce(lambda s, i: s ^ basis_vector(i, n), ix, 0)
    C1 = {e(1), e(n), e(1, 2, n)}
    C2 = {e(1, n), e(2, n)}
    dot = dot_function(n)
    target = _word("t_n t_{2,n} t_{1,n}", n)
    alpha = _prod(target, n)
    listed = orthogonal_tail_factorizations(alpha)
    adm = [t for t in listed if t[0] in C2 and t[1] in C1 and t[2] in C2]
    W = span([e(1), e(2), e(n)], n)
    U = {_prod([u, v], n): (u, v) for u in C1 for v in C2 if u in W and v in W and not dot(u, v)}
    return CaseCheck("caseB21", n, target, listed, adm, {
        "E_in_W": [[format_vector(x, n) for x in p] for p in sorted(U.values())]})


def orthogonal_tail_factorizations(alpha: Sequence[int]) -> list[tuple[int, ...]]:
    """Triples with t_u t_v t_w = alpha and v . w = 0."""
    dot = dot_function(len(alpha))
    pred = lambda p: len(p) < 3 or dot(p[1], p[2]) == 0
    return enumerate_factorizations(FactorQuery(alpha, 3, predicate=pred))


# -- isotropic span of small dimension -----------------------------------------

@dataclass
class SmallSpanCheck:
    n: int
    p: int
    first_count: int
    last_count: int
    f4_first: int
    f4_last: int
    witness: tuple[int, int] | None

    @property
    def passed(self) -> bool:
        return (self.first_count == 2 ** (self.p - 1) - 1 and self.last_count == 2 ** self.p - 1
                and self.f4_first != self.f4_last and self.witness is not None)


def small_isotropic_span(n: int, p: int) -> SmallSpanCheck:
    """X = Span(a_1..a_p)^# with p < n/2 and C_1 the rest.  Count the x in X
    orthogonal to b_1 and to b_{n/2}; f_4 on C_1 then differs at those two."""
    _check_n(n, 4)
    m = n // 2
    if not 1 <= p < m:
        raise ValueError("need 1 <= p < n/2")
    dot = dot_function(n)
    X = span([basis_vector(i, n) for i in range(1, p + 1)], n).nonzero()
    b1, bm = basis_vector(n, n), basis_vector(n + 1 - m, n)
    C1 = set(range(1, 1 << n)) - set(X)
    prof = f_profile(C1, n)
    return SmallSpanCheck(
        n, p,
        sum(1 for x in X if not dot(x, b1)),
        sum(1 for x in X if not dot(x, bm)),
        prof.per_point[b1][3], prof.per_point[bm][3], prof.witness)
