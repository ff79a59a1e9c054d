"""Elements of Sp(n, 2) as dense bit matrices.

An element is a tuple of ``n`` row words; row ``i`` is the image of ``e_{i+1}``
and vectors act on the right (``v -> vM``).  The row tuple itself is the
canonical key, so elements hash and compare as plain tuples.
"""

from __future__ import annotations

from enum import Enum
from math import prod
from typing import Iterable, Sequence

from .gf2 import check_dim, check_vec, dot_function, rank, reverse_bits

ORDER_CAP = 12


class ClassTag(str, Enum):
    IDENTITY = "Identity"
    TRANSVECTION = "Transvection"
    TT0 = "TT0"
    TT1 = "TT1"
    OTHER = "Other"


def mul_rows(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    """Matrix product over F_2 on raw row tuples."""
    out = []
    for r in a:
        acc = 0
        j = 0
        while r:
            if r & 1:
                acc ^= b[j]
            r >>= 1
            j += 1
        out.append(acc)
    return tuple(out)


def apply_rows(v: int, rows: Sequence[int]) -> int:
    acc = 0
    j = 0
    while v:
        if v & 1:
            acc ^= rows[j]
        v >>= 1
        j += 1
    return acc


def identity_rows(n: int) -> tuple[int, ...]:
    return tuple(1 << i for i in range(n))


def transvection_rows(v: int, n: int) -> tuple[int, ...]:
    # e_i . v is the coefficient of v at e_{n+1-i}, i.e. bit n - i.
    return tuple((1 << i) ^ (v if v >> (n - 1 - i) & 1 else 0) for i in range(n))


class SpElement(tuple):
    """A symplectic matrix over F_2; ``a @ b`` is the group product."""

    __slots__ = ()

    def __new__(cls, rows: Iterable[int]):
        return super().__new__(cls, rows)

    @property
    def n(self) -> int:
        return len(self)

    def __matmul__(self, other: Sequence[int]) -> "SpElement":
        if len(other) != len(self):
            raise ValueError("dimension mismatch")
        return SpElement(mul_rows(self, other))

    def act(self, v: int) -> int:
        """(v)M."""
        return apply_rows(v, self)

    def inv(self) -> "SpElement":
        return inverse(self)

    def conj(self, g: Sequence[int]) -> "SpElement":
        return conj(self, g)

    def is_identity(self) -> bool:
        return all(r == 1 << i for i, r in enumerate(self))

    def serialize(self) -> str:
        return serialize(self)

    def __repr__(self) -> str:
        return f"SpElement({serialize(self)})"


def identity(n: int) -> SpElement:
    check_dim(n)
    return SpElement(identity_rows(n))


def transvection(v: int, n: int) -> SpElement:
    """t_v: w -> w + (v . w) v; t_0 is the identity."""
    check_dim(n)
    check_vec(v, n)
    return SpElement(transvection_rows(v, n))


def product_of_transvections(vs: Iterable[int], n: int) -> SpElement:
    g = identity_rows(n)
    for v in vs:
        check_vec(v, n)
        g = mul_rows(g, transvection_rows(v, n))
    return SpElement(g)


def mul(a: Sequence[int], b: Sequence[int]) -> SpElement:
    if len(a) != len(b):
        raise ValueError("dimension mismatch")
    return SpElement(mul_rows(a, b))


def inverse_rows(a: Sequence[int]) -> tuple[int, ...]:
    """Inverse through the form: coordinate i of v M^-1 is v . (e_{n+1-i} M)."""
    n = len(a)
    dot = dot_function(n)
    out = []
    for i in range(n):
        e = 1 << i
        w = 0
        for j in range(n):
            if dot(e, a[n - 1 - j]):
                w |= 1 << j
        out.append(w)
    return tuple(out)


def inverse(a: Sequence[int]) -> SpElement:
    return SpElement(inverse_rows(a))


def conj(a: Sequence[int], g: Sequence[int]) -> SpElement:
    """g^-1 a g."""
    if len(a) != len(g):
        raise ValueError("dimension mismatch")
    return SpElement(mul_rows(mul_rows(inverse_rows(g), a), g))


def is_symplectic(a: Sequence[int]) -> bool:
    n = len(a)
    dot = dot_function(n)
    for i in range(n):
        for j in range(i, n):
            want = int(i + j == n - 1)
            if dot(a[i], a[j]) != want:
                return False
    return True


def from_rows(rows: Iterable[int], n: int, check: bool = True) -> SpElement:
    rows = tuple(rows)
    if len(rows) != n:
        raise ValueError(f"expected {n} rows, got {len(rows)}")
    for r in rows:
        check_vec(r, n)
    if check and not is_symplectic(rows):
        raise ValueError("matrix does not preserve the symplectic form")
    return SpElement(rows)


def serialize(a: Sequence[int]) -> str:
    return ",".join(f"{r:#x}" for r in a)


def deserialize(text: str, n: int | None = None) -> SpElement:
    rows = [int(w, 16) for w in text.split(",")]
    return from_rows(rows, n if n is not None else len(rows))


def order(a: Sequence[int], cap: int = ORDER_CAP) -> int | None:
    """Element order, or ``None`` when it exceeds ``cap``."""
    one = identity_rows(len(a))
    g = tuple(a)
    for k in range(1, cap + 1):
        if g == one:
            return k
        g = mul_rows(g, a)
    return None


def moved_rank(a: Sequence[int]) -> int:
    """rank(M - 1)."""
    return rank(r ^ (1 << i) for i, r in enumerate(a))


def class_tag(a: Sequence[int]) -> ClassTag:
    """Classify against {1}, T, (t_1 t_2)^G and (t_1 t_n)^G.

    rank(M - 1) separates 1 and T.  At rank 2 the order separates the two
    pair-product classes, except that t_a t_b t_{a+b} (a . b = 0) is also an
    involution of rank 2; it is told apart from t_a t_b by x . xM vanishing
    identically (that map is linear, so the basis suffices).
    """
    rk = moved_rank(a)
    if rk == 0:
        return ClassTag.IDENTITY
    if rk == 1:
        return ClassTag.TRANSVECTION
    if rk == 2:
        o = order(a, 3)
        if o == 3:
            return ClassTag.TT1
        if o == 2:
            n = len(a)
            if any((1 << i & reverse_bits(a[i], n)).bit_count() & 1 for i in range(n)):
                return ClassTag.TT0
    return ClassTag.OTHER


def pair_order(a: int, b: int, n: int) -> int:
    """Order of t_a t_b for nonzero a, b."""
    if a == 0 or b == 0:
        raise ValueError("pair_order needs nonzero vectors")
    check_vec(a, n)
    check_vec(b, n)
    if a == b:
        return 1
    return 3 if dot_function(n)(a, b) else 2


def transvection_vector(a: Sequence[int]) -> int | None:
    """v with a = t_v, or None when a is not a transvection."""
    n = len(a)
    moved = [r ^ (1 << i) for i, r in enumerate(a)]
    nz = [m for m in moved if m]
    if not nz:
        return None
    v = nz[0]
    if any(m not in (0, v) for m in moved):
        return None
    return v if tuple(a) == transvection_rows(v, n) else None


def group_order(n: int) -> int:
    check_dim(n)
    m = n // 2
    return 2 ** (m * m) * prod(4**k - 1 for k in range(1, m + 1))


def class_sizes(n: int) -> tuple[int, int, int, int, int]:
    """(|T|, |(t_1t_2)^G|, |(t_1t_n)^G|, #zero-triangles, |G_n|)."""
    if n % 2:
        raise ValueError("n must be even")
    check_dim(n)
    t = 2**n - 1
    return (t, t * (2 ** (n - 2) - 1), t * 2 ** (n - 1) // 3, t * 2 ** (n - 2) // 3, group_order(n))
