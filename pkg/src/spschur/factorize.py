"""Factorizations of group elements into transvections.

A product t_{x_1} ... t_{x_k} moves every vector by an element of
Span(x_1, ..., x_k), so the factor vectors always span a superspace of the
support of the target.  When that support already has dimension k the
factors lie in it, which keeps most searches tiny.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from .galg import image_table
from .gf2 import Subspace, basis_vector, dot_function, is_nondegenerate, perp, span
from .spgroup import identity_rows, inverse_rows, mul_rows, transvection_rows

MAX_LENGTH = 6

Prefix = tuple[int, ...]


def support_span(a: Sequence[int]) -> Subspace:
    """Span of (v)A - v over the basis."""
    n = len(a)
    return span([r ^ (1 << i) for i, r in enumerate(a)], n)


@dataclass
class FactorQuery:
    """Factor ``target`` as t_{x_1} ... t_{x_k}.

    ``allowed`` restricts every factor; ``positions`` optionally restricts
    factor i to ``positions[i]``; ``predicate`` sees every prefix (length 1 to
    k) and returns False to prune it.
    """

    target: Sequence[int]
    k: int
    allowed: Iterable[int] | None = None
    positions: Sequence[Iterable[int] | None] | None = None
    predicate: Callable[[Prefix], bool] | None = None
    universe: list[int] = field(init=False, default_factory=list)

    def __post_init__(self):
        if not 1 <= self.k <= MAX_LENGTH:
            raise ValueError(f"factorization length must be in 1..{MAX_LENGTH}")
        n = len(self.target)
        if self.allowed is not None:
            u = sorted(set(self.allowed))
            if 0 in u:
                raise ValueError("allowed vectors must be nonzero")
        else:
            S = support_span(self.target)
            u = S.nonzero() if S.dim == self.k else list(range(1, 1 << n))
        self.universe = u
        if self.positions is not None and len(self.positions) != self.k:
            raise ValueError("one position set per factor")


def enumerate_factorizations(q: FactorQuery) -> list[Prefix]:
    """All k-tuples over the universe whose transvection product is the target,
    in lexicographic order."""
    n = len(q.target)
    k = q.k
    pos = [None if s is None else frozenset(s) for s in (q.positions or [None] * k)]
    choices = [[v for v in q.universe if pos[i] is None or v in pos[i]] for i in range(k)]
    rows = {v: transvection_rows(v, n) for v in q.universe}
    pred = q.predicate
    target = tuple(q.target)
    out: list[Prefix] = []

    def ok(prefix: Prefix) -> bool:
        return pred is None or pred(prefix)

    if k == 1:
        return [(v,) for v in choices[0] if rows[v] == target and ok((v,))]

    # products of the last two factors, keyed by the element they form
    pairs: dict[tuple, list[tuple[int, int]]] = {}
    for u in choices[k - 2]:
        for v in choices[k - 1]:
            pairs.setdefault(mul_rows(rows[u], rows[v]), []).append((u, v))

    def dfs(prefix: Prefix, rest: tuple) -> None:
        # rest = (t_{x_j} ... t_{x_1}) target, what the remaining factors must make
        i = len(prefix)
        if i == k - 2:
            for u, v in pairs.get(rest, ()):
                cand = prefix + (u, v)
                if pred is None or (pred(prefix + (u,)) and pred(cand)):
                    out.append(cand)
            return
        for x in choices[i]:
            nxt = prefix + (x,)
            if not ok(nxt):
                continue
            dfs(nxt, mul_rows(rows[x], rest))

    dfs((), target)
    out.sort()
    return out


def enumerate_brute(target: Sequence[int], k: int, universe: Iterable[int]) -> list[Prefix]:
    """Unpruned oracle: every k-tuple over ``universe``."""
    from itertools import product

    n = len(target)
    target = tuple(target)
    u = sorted(set(universe))
    rows = {v: transvection_rows(v, n) for v in u}
    out = []
    for tup in product(u, repeat=k):
        g = identity_rows(n)
        for v in tup:
            g = mul_rows(g, rows[v])
        if g == target:
            out.append(tup)
    return out


def _nondegenerate_extension(S: Subspace, extra: int) -> Subspace:
    """S plus a standard piece of S^perp: one vector if extra == 1, else a
    nondegenerate subspace of dimension min(2 extra, dim S^perp)."""
    P = perp(S)
    n = S.n
    if extra == 1:
        c = next(v for v in P if v)
        return S + span([c], n)
    want = min(2 * extra, P.dim)
    dot = dot_function(n)
    chosen: list[int] = []
    # greedy hyperbolic pairs inside P
    while len(chosen) < want:
        cur = span(chosen, n)
        a = next(v for v in P if v and v not in cur and all(not dot(v, w) for w in chosen))
        b = next(v for v in P if v not in cur and dot(a, v)
                 and all(not dot(v, w) for w in chosen))
        chosen += [a, b]
    return S + span(chosen, n)


@dataclass
class MinLength:
    length: int | None
    searched: list[tuple[int, int]]   # (k, universe size) per step
    witness: Prefix | None = None

    @property
    def exceeds_cap(self) -> bool:
        return self.length is None


def exists_factorization(target: Sequence[int], k: int, universe: Sequence[int]) -> Prefix | None:
    sols = enumerate_factorizations(FactorQuery(target, k, allowed=universe))
    return sols[0] if sols else None


def min_length(target: Sequence[int], cap: int = MAX_LENGTH) -> MinLength:
    """Least k <= cap such that the target is a product of k transvections.

    k below dim(support) is impossible.  At k = dim(support) the factors lie
    in the support.  Beyond that, for a nondegenerate support S the centralizer
    of the target contains Sp(S^perp), so the extra directions may be taken
    inside a fixed standard subspace of S^perp; for a degenerate support every
    superspace S + <c> is tried (k = dim + 1) and otherwise all of V is used.
    """
    if cap > MAX_LENGTH:
        raise ValueError(f"cap must be at most {MAX_LENGTH}")
    n = len(target)
    if tuple(target) == identity_rows(n):
        return MinLength(0, [])
    S = support_span(target)
    steps = []
    for k in range(max(S.dim, 1), cap + 1):
        extra = k - S.dim
        if extra == 0 or S.dim == n:
            universes = [S.nonzero()]
        elif is_nondegenerate(S):
            universes = [_nondegenerate_extension(S, extra).nonzero()]
        elif extra == 1:
            reps = _coset_representatives(S)
            universes = [(S + span([c], n)).nonzero() for c in reps]
        else:
            universes = [list(range(1, 1 << n))]
        for u in universes:
            steps.append((k, len(u)))
            w = exists_factorization(target, k, u)
            if w is not None:
                return MinLength(k, steps, w)
    return MinLength(None, steps)


def _coset_representatives(S: Subspace) -> list[int]:
    """One vector per line of V/S, i.e. per superspace S + <c> of one more dimension."""
    n = S.n
    seen = set()
    reps = []
    for c in range(1, 1 << n):
        if c in S:
            continue
        key = span(list(S.basis) + [c], n)
        if key.basis in seen:
            continue
        seen.add(key.basis)
        reps.append(c)
    return reps


def count_split(target: Sequence[int], A, B) -> tuple[int, int]:
    """(coefficient of target in AB, coefficient in BA).

    ``A`` must be a materialized multiset; ``B`` only needs ``__getitem__``.
    Uses (AB)(g) = sum_x A(x) B(x^-1 g) and (BA)(g) = sum_x A(x) B(g x^-1).
    """
    g = tuple(target)
    g_table = image_table(g)
    ab = ba = 0
    for x, cx in A.raw_items():
        xi = inverse_rows(x)
        left = tuple([g_table[r] for r in xi])
        right = mul_rows(g, xi)
        ab += cx * B[left]
        ba += cx * B[right]
    return ab, ba


def parse_factor_word(text: str, n: int) -> list[int]:
    """"t_{2,n} t_1 t_n" style words: each factor lists basis indices, n allowed."""
    vs = []
    for tok in text.replace("*", " ").split():
        inner = tok.strip()
        if inner.startswith("t_"):
            inner = inner[2:]
        inner = inner.strip("{}")
        v = 0
        for part in inner.split(","):
            part = part.strip()
            if part == "n":
                i = n
            elif part.startswith("n-"):
                i = n - int(part[2:])
            else:
                i = int(part)
            v ^= basis_vector(i, n)
        vs.append(v)
    return vs
