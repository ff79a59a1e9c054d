"""Exact multisets in the integral group algebra of Sp(n, 2).

Keys are raw row tuples (see :mod:`spgroup`), coefficients are Python ints.
Products use image tables: once every vector image of ``y`` is tabulated,
``x y`` is a lookup per row of ``x``.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Callable, Iterable, Mapping, Sequence

from .spgroup import (
    ClassTag,
    SpElement,
    class_tag,
    identity_rows,
    inverse_rows,
    moved_rank,
    mul_rows,
    serialize,
    transvection_rows,
)

Key = tuple


def image_table(rows: Sequence[int]) -> list[int]:
    """(v)M for every v in F_2^n, indexed by v."""
    table = [0] * (1 << len(rows))
    for v in range(1, len(table)):
        low = v & -v
        table[v] = table[v ^ low] ^ rows[low.bit_length() - 1]
    return table


def fast_product(a: Sequence[int], b_table: Sequence[int]) -> tuple[int, ...]:
    return tuple([b_table[r] for r in a])


class Multiset:
    """Finitely supported map from Sp(n, 2) to positive integers."""

    __slots__ = ("n", "_d")

    def __init__(self, n: int, entries: Mapping[Key, int] | Iterable[tuple[Key, int]] = ()):
        self.n = n
        d: dict[Key, int] = {}
        items = entries.items() if isinstance(entries, Mapping) else entries
        for k, c in items:
            if len(k) != n:
                raise ValueError("element dimension does not match multiset")
            if c < 0:
                raise ValueError("coefficients must be nonnegative")
            if c:
                d[tuple(k)] = d.get(tuple(k), 0) + c
        self._d = d

    @classmethod
    def _raw(cls, n: int, d: dict) -> "Multiset":
        m = cls.__new__(cls)
        m.n = n
        m._d = {k: c for k, c in d.items() if c}
        return m

    def __getitem__(self, g: Sequence[int]) -> int:
        return self._d.get(tuple(g), 0)

    def __contains__(self, g) -> bool:
        return tuple(g) in self._d

    def __len__(self) -> int:
        return len(self._d)

    def __iter__(self):
        return iter(sorted(self._d))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Multiset):
            return NotImplemented
        return self.n == other.n and self._d == other._d

    def __hash__(self):
        return hash((self.n, frozenset(self._d.items())))

    def __add__(self, other: "Multiset") -> "Multiset":
        _same_dim(self, other)
        d = dict(self._d)
        for k, c in other._d.items():
            d[k] = d.get(k, 0) + c
        return Multiset._raw(self.n, d)

    def __mul__(self, k: int) -> "Multiset":
        if k < 0:
            raise ValueError("coefficients must be nonnegative")
        return Multiset._raw(self.n, {g: c * k for g, c in self._d.items()})

    __rmul__ = __mul__

    def __matmul__(self, other: "Multiset") -> "Multiset":
        return convolve(self, other)

    def __repr__(self) -> str:
        return f"Multiset(n={self.n}, support={len(self._d)}, mass={self.mass()})"

    def items(self) -> list[tuple[Key, int]]:
        return sorted(self._d.items())

    def raw_items(self):
        """Unsorted view, for inner loops that do not care about order."""
        return self._d.items()

    def support(self) -> set[Key]:
        return set(self._d)

    def mass(self) -> int:
        return sum(self._d.values())

    def spectrum(self) -> list[int]:
        return sorted(set(self._d.values()))

    def dump(self) -> str:
        return "".join(f"{c}\t{serialize(g)}\n" for g, c in self.items())


def _same_dim(a, b) -> None:
    if a.n != b.n:
        raise ValueError(f"dimension mismatch: {a.n} vs {b.n}")


def indicator(elements: Iterable[Sequence[int]], n: int) -> Multiset:
    """The set sum of distinct elements."""
    return Multiset._raw(n, {tuple(g): 1 for g in elements if _fits(g, n)})


def _fits(g, n) -> bool:
    if len(g) != n:
        raise ValueError("element dimension does not match multiset")
    return True


def transvection_sum(vectors: Iterable[int], n: int) -> Multiset:
    """Sum of t_v over a set of nonzero vectors."""
    vs = set(vectors)
    if 0 in vs:
        raise ValueError("the zero vector is not a transvection")
    return indicator((transvection_rows(v, n) for v in vs), n)


def unit(n: int) -> Multiset:
    return Multiset._raw(n, {identity_rows(n): 1})


def empty(n: int) -> Multiset:
    return Multiset._raw(n, {})


def convolve(A: Multiset, B: Multiset) -> Multiset:
    """Exact product in the group algebra: (AB)(g) = sum over xy = g of A(x)B(y)."""
    _same_dim(A, B)
    out: dict[Key, int] = defaultdict(int)
    # tabulate the right factor; one table per element of B
    for y, cy in sorted(B.raw_items()):
        table = image_table(y)
        for x, cx in A.raw_items():
            out[tuple([table[r] for r in x])] += cx * cy
    return Multiset._raw(A.n, out)


def product_coefficient(A: Multiset, B, g: Sequence[int]) -> int:
    """(AB)(g) without forming AB: sum over x of A(x) B(x^-1 g).

    ``B`` only needs ``__getitem__``, so it may itself be lazy.
    """
    g_table = image_table(g)
    total = 0
    for x, cx in A.raw_items():
        y = tuple([g_table[r] for r in inverse_rows(x)])
        cy = B[y]
        if cy:
            total += cx * cy
    return total


class LazyProduct:
    """Coefficient oracle for A B, memoized; A must be materialized.

    ``length`` is an optional bound on the transvection length of every
    element of A B; anything moving a larger subspace is answered with 0
    at the cost of one rank computation.
    """

    def __init__(self, A: Multiset, B, length: int | None = None):
        self.n = A.n
        self.A = A
        self.B = B
        self.length = length
        self._memo: dict[Key, int] = {}

    def __getitem__(self, g: Sequence[int]) -> int:
        g = tuple(g)
        c = self._memo.get(g)
        if c is None:
            if self.length is not None and moved_rank(g) > self.length:
                c = 0
            else:
                c = product_coefficient(self.A, self.B, g)
            self._memo[g] = c
        return c


class LazyFilter:
    """Indicator of {g : M(g) = lam} for a coefficient oracle M."""

    def __init__(self, M, lam: int):
        self.n = M.n
        self.M = M
        self.lam = lam

    def __getitem__(self, g) -> int:
        return int(self.M[g] == self.lam)


@dataclass(frozen=True)
class CommuteResult:
    commute: bool
    witness: Key | None = None
    coef_ab: int = 0
    coef_ba: int = 0

    def __bool__(self) -> bool:
        return self.commute


def first_difference(P: Multiset, Q: Multiset) -> CommuteResult:
    keys = sorted(k for k in P.support() | Q.support() if P[k] != Q[k])
    if not keys:
        return CommuteResult(True)
    g = keys[0]
    return CommuteResult(False, g, P[g], Q[g])


def commutes(A: Multiset, B: Multiset) -> CommuteResult:
    """AB == BA, with the least differing element as witness."""
    _same_dim(A, B)
    return first_difference(convolve(A, B), convolve(B, A))


def filter_multiplicity(A: Multiset, lam: int) -> set[Key]:
    if lam < 1:
        raise ValueError("multiplicity must be positive")
    return {g for g, c in A.raw_items() if c == lam}


def restrict_by_tag(A: Multiset, tag: ClassTag) -> Multiset:
    return Multiset._raw(A.n, {g: c for g, c in A.raw_items() if class_tag(g) == tag})


def restrict(A: Multiset, keep: Callable[[Key], bool]) -> Multiset:
    return Multiset._raw(A.n, {g: c for g, c in A.raw_items() if keep(g)})


def conjugate(A: Multiset, g: Sequence[int]) -> Multiset:
    """g^-1 A g."""
    gi = inverse_rows(g)
    table = image_table(g)
    out = {}
    for x, c in A.raw_items():
        out[tuple([table[r] for r in mul_rows(gi, x)])] = c
    return Multiset._raw(A.n, out)


def as_elements(keys: Iterable[Key]) -> list[SpElement]:
    return [SpElement(k) for k in sorted(keys)]
