"""Bit-packed linear algebra over F_2 with the standard symplectic form.

Vectors are plain ints: bit ``i - 1`` holds the coefficient of ``e_i``.  The
ambient dimension ``n`` is passed explicitly.  The form pairs ``e_i`` with
``e_{n+1-i}``, so ``u . v`` is the parity of ``u & reverse(v)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Sequence

MAX_DIM = 30

_LITERAL_TERM = re.compile(r"e(\d+)")


def check_dim(n: int) -> None:
    if not (isinstance(n, int) and 2 <= n <= MAX_DIM and n % 2 == 0):
        raise ValueError(f"dimension must be an even integer in [2, {MAX_DIM}], got {n!r}")


def check_vec(v: int, n: int) -> None:
    if v < 0 or v >> n:
        raise ValueError(f"vector {v:#x} does not fit in dimension {n}")


def basis_vector(i: int, n: int) -> int:
    """``e_i`` (1-based)."""
    if not 1 <= i <= n:
        raise ValueError(f"e{i} is not a basis vector of F_2^{n}")
    return 1 << (i - 1)


@lru_cache(maxsize=None)
def _reverse_table(n: int) -> tuple[int, ...] | None:
    if n > 14:
        return None
    return tuple(int(format(v, f"0{n}b")[::-1], 2) for v in range(1 << n))


def reverse_bits(v: int, n: int) -> int:
    table = _reverse_table(n)
    if table is not None:
        return table[v]
    return int(format(v, f"0{n}b")[::-1], 2)


def symp_dot(u: int, v: int, n: int) -> int:
    """Symplectic form: sum over i of u_i v_{n+1-i}."""
    check_vec(u, n)
    check_vec(v, n)
    return (u & reverse_bits(v, n)).bit_count() & 1


def dot_function(n: int):
    """Unchecked fast form for inner loops (vectors assumed valid)."""
    table = _reverse_table(n)
    if table is not None:
        return lambda u, v: (u & table[v]).bit_count() & 1
    return lambda u, v: (u & reverse_bits(v, n)).bit_count() & 1


def nonzero_vectors(n: int) -> range:
    """V^# in increasing integer order."""
    return range(1, 1 << n)


# -- parsing / formatting ---------------------------------------------------

def parse_vector(text: str, n: int) -> int:
    """Parse ``"e1+e2+e6"``, ``"0x23"`` or ``"0"``."""
    s = text.strip().replace(" ", "")
    if s.lower().startswith("0x"):
        v = int(s, 16)
    elif s == "0":
        v = 0
    else:
        v = 0
        for term in s.split("+"):
            m = _LITERAL_TERM.fullmatch(term)
            if m is None:
                raise ValueError(f"bad vector literal {text!r}")
            v ^= basis_vector(int(m.group(1)), n)
    check_vec(v, n)
    return v


def format_vector(v: int, n: int | None = None) -> str:
    if n is not None:
        check_vec(v, n)
    if v == 0:
        return "0"
    return "+".join(f"e{i + 1}" for i in range(v.bit_length()) if v >> i & 1)


# -- echelon machinery --------------------------------------------------------

def reduce(v: int, basis: Sequence[int]) -> int:
    """Reduce ``v`` against a reduced echelon basis (pivot = leading bit)."""
    for b in basis:
        if v >> (b.bit_length() - 1) & 1:
            v ^= b
    return v


def echelon(vectors: Iterable[int]) -> tuple[int, ...]:
    """Canonical reduced row echelon form, pivots in decreasing order."""
    basis: list[int] = []
    for v in vectors:
        v = reduce(v, basis)
        if not v:
            continue
        top = v.bit_length() - 1
        basis = [b ^ v if b >> top & 1 else b for b in basis]
        basis.append(v)
        basis.sort(reverse=True)
    return tuple(basis)


def rank(vectors: Iterable[int]) -> int:
    return len(echelon(vectors))


def is_independent(vectors: Sequence[int]) -> bool:
    return rank(vectors) == len(vectors)


@dataclass(frozen=True)
class Subspace:
    """A subspace of F_2^n held as its canonical echelon basis."""

    n: int
    basis: tuple[int, ...]

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __contains__(self, v: int) -> bool:
        return reduce(v, self.basis) == 0

    def __iter__(self):
        """All vectors of the subspace (including 0), in a fixed order."""
        out = [0]
        for b in self.basis:
            out += [x ^ b for x in out]
        return iter(sorted(out))

    def nonzero(self) -> list[int]:
        return [v for v in self if v]

    def __le__(self, other: "Subspace") -> bool:
        return all(b in other for b in self.basis)

    def __add__(self, other: "Subspace") -> "Subspace":
        return span(self.basis + other.basis, self.n)

    def __str__(self) -> str:
        inner = ", ".join(format_vector(b) for b in self.basis)
        return f"Span({inner})"


def span(vs: Iterable[int], n: int) -> Subspace:
    vs = list(vs)
    for v in vs:
        check_vec(v, n)
    return Subspace(n, echelon(vs))


def zero_subspace(n: int) -> Subspace:
    return Subspace(n, ())


def whole_space(n: int) -> Subspace:
    return span((1 << i for i in range(n)), n)


def nullspace(rows: Sequence[int], n: int) -> Subspace:
    """Solutions x of <row, x> = 0 (plain dot product) for every row."""
    basis = echelon(rows)
    pivots = [b.bit_length() - 1 for b in basis]
    free = [c for c in range(n) if c not in pivots]
    sols = []
    for f in free:
        x = 1 << f
        for b, p in zip(basis, pivots):
            if (b & x).bit_count() & 1:
                x |= 1 << p
        sols.append(x)
    return span(sols, n)


def perp(S: Subspace) -> Subspace:
    """The symplectic complement: u with u . s = 0 for every s in S."""
    n = S.n
    # u . s = <u, reverse(s)>, so S^perp is the null space of the reversed basis.
    return nullspace([reverse_bits(b, n) for b in S.basis], n)


def perp_of_set(X: Iterable[int], n: int) -> Subspace:
    return perp(span(X, n))


def is_isotropic(S: Iterable[int], n: int) -> bool:
    vs = list(S)
    dot = dot_function(n)
    for v in vs:
        check_vec(v, n)
    return all(dot(u, v) == 0 for u, v in combinations(vs, 2))


def orthogonal(X: Iterable[int], Y: Iterable[int], n: int) -> bool:
    """X perp Y."""
    P = perp_of_set(X, n)
    return all(y in P for y in Y)


def intersection(S: Subspace, T: Subspace) -> Subspace:
    # Spaces here are small enough to enumerate.
    return span([v for v in S if v and v in T], S.n)


def radical(S: Subspace) -> Subspace:
    return intersection(S, perp(S))


def is_nondegenerate(S: Subspace) -> bool:
    return radical(S).dim == 0


# -- symplectic bases ---------------------------------------------------------

def slot_names(n: int) -> list[str]:
    return [f"{ab}{i}" for i in range(1, n // 2 + 1) for ab in "ab"]


def _slot_gram(s: str, t: str) -> int:
    """Target Gram value between two slot names of a symplectic basis."""
    if s[1:] != t[1:]:
        return 0
    return int(s[0] != t[0])


def standard_symplectic_basis(n: int) -> list[int]:
    """a_i = e_i, b_i = e_{n+1-i}, listed a_1, b_1, a_2, b_2, ..."""
    check_dim(n)
    out = []
    for i in range(1, n // 2 + 1):
        out += [basis_vector(i, n), basis_vector(n + 1 - i, n)]
    return out


def complete_symplectic_basis(n: int, prescribed: dict[str, int] | Sequence[int] = ()) -> list[int]:
    """Extend prescribed slots to a full symplectic basis a_1, b_1, ..., a_m, b_m.

    ``prescribed`` maps slot names (``"a1"``, ``"b3"``, ...) to vectors; a plain
    sequence fills ``a1, a2, ...`` in order (an isotropic request).  Free slots
    are filled in order a_1, b_1, a_2, ... with the least integer that keeps
    the set independent and satisfies the Gram pattern against every vector
    already fixed.  Witt's theorem guarantees that this greedy never stalls.
    """
    check_dim(n)
    names = slot_names(n)
    if not isinstance(prescribed, dict):
        prescribed = {f"a{i + 1}": v for i, v in enumerate(prescribed)}
    for name in prescribed:
        if name not in names:
            raise ValueError(f"unknown basis slot {name!r} for n={n}")
    fixed = dict(prescribed)
    for v in fixed.values():
        check_vec(v, n)
    if not is_independent(list(fixed.values())):
        raise ValueError("prescribed vectors are linearly dependent")
    dot = dot_function(n)
    for s, t in combinations(fixed, 2):
        if dot(fixed[s], fixed[t]) != _slot_gram(s, t):
            raise ValueError(f"prescribed Gram pattern is not symplectic at ({s}, {t})")

    for name in names:
        if name in fixed:
            continue
        chosen = list(fixed.values())
        basis = echelon(chosen)
        for v in range(1, 1 << n):
            if reduce(v, basis) == 0:
                continue
            if all(dot(v, fixed[t]) == _slot_gram(name, t) for t in fixed):
                fixed[name] = v
                break
        else:  # pragma: no cover - excluded by Witt's theorem
            raise ValueError(f"could not fill slot {name}")
    return [fixed[name] for name in names]


def gram_matrix(vs: Sequence[int], n: int) -> list[list[int]]:
    dot = dot_function(n)
    return [[dot(u, v) for v in vs] for u in vs]


def is_symplectic_basis(vs: Sequence[int], n: int) -> bool:
    if len(vs) != n or not is_independent(vs):
        return False
    names = slot_names(n)
    g = gram_matrix(vs, n)
    return all(g[i][j] == _slot_gram(names[i], names[j]) for i in range(n) for j in range(n))


def coordinates(v: int, basis: Sequence[int], n: int) -> list[int]:
    """Coefficients of ``v`` in ``basis`` (basis must be a basis of V)."""
    # Solve by brute elimination on augmented rows.
    k = len(basis)
    rows = [(b, 1 << i) for i, b in enumerate(basis)]
    piv: list[tuple[int, int]] = []
    for b, tag in rows:
        for pb, ptag in piv:
            if b >> (pb.bit_length() - 1) & 1:
                b ^= pb
                tag ^= ptag
        if b:
            piv.append((b, tag))
            piv.sort(key=lambda x: -x[0])
    tag = 0
    for pb, ptag in piv:
        if v >> (pb.bit_length() - 1) & 1:
            v ^= pb
            tag ^= ptag
    if v:
        raise ValueError("vector not in the span of the basis")
    return [tag >> i & 1 for i in range(k)]


def realize_graph(adjacency: Sequence[Sequence[int]], n: int) -> list[int]:
    """Independent vectors b_1..b_k with b_i . b_j = adjacency[i][j].

    Depth-first search in increasing integer order, so the first hit is the
    lexicographically least realization.
    """
    k = len(adjacency)
    dot = dot_function(n)
    out: list[int] = []

    def extend(i: int) -> bool:
        if i == k:
            return True
        basis = echelon(out)
        for v in range(1, 1 << n):
            if reduce(v, basis) == 0:
                continue
            if all(dot(v, out[j]) == adjacency[i][j] for j in range(i)):
                out.append(v)
                if extend(i + 1):
                    return True
                out.pop()
        return False

    if not extend(0):
        raise ValueError("graph is not realizable by independent vectors")
    return out


def path_adjacency(k: int) -> list[list[int]]:
    return [[int(abs(i - j) == 1) for j in range(k)] for i in range(k)]
