"""Partition diagnostics on the transvection class.

A block is a set of nonzero vectors, read as the transvections t_v.  For a
point a of a block C:

* f1: zero-triangles {a, b, a+b} lying inside C (unordered pairs {b, a+b});
* f2: b in C with a . b = 1 and a + b not in C;
* f3: |C|;
* f4: b in C, b != a, with a . b = 0.

With f1 counted per triangle, 2 f1 + f2 + f4 + 1 = f3 at every point.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .galg import Multiset
from .gf2 import basis_vector, check_dim, check_vec, dot_function, format_vector, parse_vector
from .spgroup import mul_rows, transvection_rows


# -- partitions ---------------------------------------------------------------

class TPartition:
    """Ordered disjoint cover of V^# by blocks."""

    def __init__(self, n: int, blocks: Iterable[Iterable[int]]):
        check_dim(n)
        self.n = n
        bl = [frozenset(b) for b in blocks]
        seen: set[int] = set()
        for i, b in enumerate(bl):
            if not b:
                raise ValueError(f"block {i} is empty")
            for v in b:
                check_vec(v, n)
                if v == 0:
                    raise ValueError("the zero vector is not a transvection")
                if v in seen:
                    raise ValueError(f"{format_vector(v)} lies in two blocks")
                seen.add(v)
        if len(seen) != (1 << n) - 1:
            raise ValueError(f"blocks cover {len(seen)} of {(1 << n) - 1} points")
        self.blocks = tuple(bl)

    @classmethod
    def with_remainder(cls, n: int, blocks: Iterable[Iterable[int]]) -> "TPartition":
        """Given blocks plus one more block holding everything left over."""
        bl = [set(b) for b in blocks]
        used = set().union(*bl) if bl else set()
        rest = [v for v in range(1, 1 << n) if v not in used]
        if rest:
            bl.append(set(rest))
        return cls(n, bl)

    def __len__(self) -> int:
        return len(self.blocks)

    def block_of(self, v: int) -> int:
        for i, b in enumerate(self.blocks):
            if v in b:
                return i
        raise KeyError(v)

    def index(self) -> dict[int, int]:
        return {v: i for i, b in enumerate(self.blocks) for v in b}

    def dumps(self) -> str:
        lines = [";".join(format_vector(v) for v in sorted(b)) for b in self.blocks]
        return "\n".join(lines) + "\n"

    @classmethod
    def loads(cls, text: str, n: int) -> "TPartition":
        blocks = []
        for line in text.splitlines():
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            blocks.append([parse_vector(t, n) for t in line.split(";") if t.strip()])
        return cls(n, blocks)


def whole_class(n: int) -> TPartition:
    return TPartition(n, [range(1, 1 << n)])


# -- f-functions --------------------------------------------------------------

@dataclass(frozen=True)
class FProfile:
    """Per-block f values, or the first pair of points where they differ."""

    values: tuple[int, int, int, int] | None
    witness: tuple[int, int] | None = None
    per_point: dict = field(default_factory=dict, compare=False, repr=False)

    @property
    def constant(self) -> bool:
        return self.values is not None

    @property
    def f1(self):
        return self.values[0] if self.values else None

    @property
    def f2(self):
        return self.values[1] if self.values else None

    @property
    def f3(self):
        return self.values[2] if self.values else None

    @property
    def f4(self):
        return self.values[3] if self.values else None


def point_values(a: int, C: frozenset | set, n: int, dot=None) -> tuple[int, int, int, int]:
    dot = dot or dot_function(n)
    inside = outside = orth = 0
    for b in C:
        if b == a:
            continue
        if dot(a, b):
            if a ^ b in C:
                inside += 1
            else:
                outside += 1
        else:
            orth += 1
    return inside // 2, outside, len(C), orth


def f_profile(C: Iterable[int], n: int) -> FProfile:
    C = frozenset(C)
    dot = dot_function(n)
    per = {a: point_values(a, C, n, dot) for a in sorted(C)}
    pts = sorted(per)
    if not pts:
        return FProfile((0, 0, 0, 0), None, per)
    first = per[pts[0]]
    for a in pts[1:]:
        if per[a] != first:
            return FProfile(None, (pts[0], a), per)
    return FProfile(first, None, per)


def eq31_holds(values: Sequence[int]) -> bool:
    f1, f2, f3, f4 = values
    return 2 * f1 + f2 + f4 + 1 == f3


# -- squares and triangles ------------------------------------------------------

def square_split(C: Iterable[int], n: int) -> tuple[Multiset, Multiset, Multiset]:
    """(S_f1, S_f2, S_f4) with C^2 = |C| + 3 S_f1 + S_f2 + 2 S_f4."""
    C = frozenset(C)
    dot = dot_function(n)
    rows = {v: transvection_rows(v, n) for v in C}
    s1, s2, s4 = {}, {}, {}
    for a in C:
        for b in C:
            if a == b:
                continue
            g = mul_rows(rows[a], rows[b])
            if not dot(a, b):
                s4[g] = 1
            elif a ^ b in C:
                s1[g] = 1
            else:
                s2[g] = 1
    return Multiset(n, s1), Multiset(n, s2), Multiset(n, s4)


def triangle_sets(C: Iterable[int], n: int) -> tuple[set[frozenset], set[frozenset]]:
    """(Tr2, Tr3): zero-triangles meeting C in exactly two points, and inside C."""
    C = frozenset(C)
    dot = dot_function(n)
    tr2, tr3 = set(), set()
    for a, b in combinations(sorted(C), 2):
        if not dot(a, b):
            continue
        t = frozenset((a, b, a ^ b))
        (tr3 if a ^ b in C else tr2).add(t)
    return tr2, tr3


def d1_d2(C: Iterable[int], n: int) -> tuple[set[int], set[int]]:
    C = frozenset(C)
    tr2, _ = triangle_sets(C, n)
    d1, d2 = set(), set()
    for t in tr2:
        for v in t:
            (d1 if v in C else d2).add(v)
    return d1, d2


def zero_triangle_count(n: int) -> int:
    return ((1 << n) - 1) * (1 << (n - 2)) // 3


def zero_triangle_identity(p: TPartition) -> tuple[Fraction, int]:
    """(sum over blocks of f1 f3 / 3 + f2 f3 / 2, total zero-triangles)."""
    lhs = Fraction(0)
    for b in p.blocks:
        prof = f_profile(b, p.n)
        if not prof.constant:
            raise ValueError("f-functions are not constant on a block")
        f1, f2, f3, _ = prof.values
        lhs += Fraction(f1 * f3, 3) + Fraction(f2 * f3, 2)
    return lhs, zero_triangle_count(p.n)


def orthogonal_partner_counts(C1: Iterable[int], C2: Iterable[int], n: int) -> dict[int, int]:
    """a -> #{b in C2 : a . b = 0} for a in C1."""
    dot = dot_function(n)
    C2 = list(C2)
    return {a: sum(1 for b in C2 if not dot(a, b)) for a in sorted(C1)}


# -- Gamma^1 --------------------------------------------------------------------

@dataclass
class Gamma1Graph:
    vertices: list[int]
    edges: list[tuple[int, int]]
    f2_positive: list[bool]
    orientation: dict[tuple[int, int], tuple[int, int] | None]

    def unoriented(self) -> list[tuple[int, int]]:
        return [e for e in self.edges if self.orientation[e] is None]

    def is_connected(self) -> bool:
        if not self.vertices:
            return True
        adj = {v: set() for v in self.vertices}
        for i, j in self.edges:
            adj[i].add(j)
            adj[j].add(i)
        seen = {self.vertices[0]}
        stack = [self.vertices[0]]
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(self.vertices)

    def is_bipartite(self) -> bool:
        adj = {v: set() for v in self.vertices}
        for i, j in self.edges:
            adj[i].add(j)
            adj[j].add(i)
        colour: dict[int, int] = {}
        for s in self.vertices:
            if s in colour:
                continue
            colour[s] = 0
            stack = [s]
            while stack:
                v = stack.pop()
                for w in adj[v]:
                    if w not in colour:
                        colour[w] = 1 - colour[v]
                        stack.append(w)
                    elif colour[w] == colour[v]:
                        return False
        return True

    def star_source(self) -> int | None:
        """The vertex every edge leaves, if the graph is a directed star."""
        if len(self.vertices) == 1:
            return self.vertices[0]
        if not self.is_connected() or self.unoriented():
            return None
        sources = {self.orientation[e][0] for e in self.edges}
        if len(sources) != 1:
            return None
        s = sources.pop()
        return s if len(self.edges) == len(self.vertices) - 1 else None


def gamma1(p: TPartition) -> Gamma1Graph:
    n = p.n
    dot = dot_function(n)
    r = len(p.blocks)
    pos = []
    for b in p.blocks:
        pos.append(any(point_values(a, b, n, dot)[1] > 0 for a in b))
    edges = set()
    blocks_sorted = [sorted(b) for b in p.blocks]
    for i in range(r):
        for j in range(i + 1, r):
            if _meets(blocks_sorted[i], blocks_sorted[j], dot):
                edges.add((i, j))
    orient = {}
    for i, j in sorted(edges):
        if pos[i] and not pos[j]:
            orient[(i, j)] = (i, j)
        elif pos[j] and not pos[i]:
            orient[(i, j)] = (j, i)
        else:
            orient[(i, j)] = None
    return Gamma1Graph(list(range(r)), sorted(edges), pos, orient)


def _meets(X: Sequence[int], Y: Sequence[int], dot) -> tuple[int, int] | None:
    for x in X:
        for y in Y:
            if dot(x, y):
                return x, y
    return None


# -- pairwise meeting basis -------------------------------------------------------

def pairwise_meeting_basis(n: int) -> list[int]:
    """v_1..v_{n+1} with v_i . v_j = 1 for all i != j; the first n are a basis."""
    check_dim(n)
    e = lambda i: basis_vector(i, n)
    head = lambda k: sum(e(i) for i in range(1, k + 1))
    tail = lambda k: sum(e(i) for i in range(n - k + 1, n + 1))
    out = [e(1), e(n)]
    for j in range(3, n + 1):
        if j % 2:
            k = (j - 1) // 2
            out.append(head(k + 1) ^ tail(k))
        else:
            k = j // 2
            out.append(head(k - 1) ^ tail(k))
    out.append((1 << n) - 1)
    return out


# -- the verifier -----------------------------------------------------------------

@dataclass
class CheckRecord:
    name: str
    passed: bool
    witness: object = None
    detail: str = ""


@dataclass
class VerificationReport:
    checks: list[CheckRecord]
    profiles: list[FProfile]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def first_failure(self) -> CheckRecord | None:
        return next((c for c in self.checks if not c.passed), None)

    def as_dict(self) -> dict:
        return {c.name: c.passed for c in self.checks}


def verify_partition(p: TPartition) -> VerificationReport:
    """Necessary conditions for the blocks to be the p-sets of a Schur ring on T."""
    n = p.n
    dot = dot_function(n)
    profiles = [f_profile(b, n) for b in p.blocks]
    checks = []

    bad = next((i for i, pr in enumerate(profiles) if not pr.constant), None)
    wit = None
    if bad is not None:
        a, b = profiles[bad].witness
        wit = {"block": bad, "points": [format_vector(a), format_vector(b)],
               "values": [list(profiles[bad].per_point[a]), list(profiles[bad].per_point[b])]}
    checks.append(CheckRecord("f_constant", bad is None, wit))

    bad_eq = None
    for i, pr in enumerate(profiles):
        for a, vals in sorted(pr.per_point.items()):
            if not eq31_holds(vals):
                bad_eq = {"block": i, "point": format_vector(a), "values": list(vals)}
                break
        if bad_eq:
            break
    checks.append(CheckRecord("eq31", bad_eq is None, bad_eq))

    g = gamma1(p)
    pos = g.f2_positive
    blocks = [sorted(b) for b in p.blocks]
    wit = None
    for i, j in g.edges:
        if pos[i] and pos[j]:
            wit = {"blocks": [i, j]}
            break
    checks.append(CheckRecord("no_edge_between_f2_positive", wit is None, wit))

    wit = None
    for i, j in combinations(range(len(blocks)), 2):
        if pos[i] != pos[j]:
            continue
        m = _meets(blocks[i], blocks[j], dot)
        if m:
            wit = {"blocks": [i, j], "points": [format_vector(m[0]), format_vector(m[1])]}
            break
    checks.append(CheckRecord("orthogonal_same_type", wit is None, wit))

    src = g.star_source()
    checks.append(CheckRecord("star_one_source", src is not None,
                              None if src is not None else {"edges": g.edges}))

    where = p.index()
    wit = None
    for i, b in enumerate(p.blocks):
        if pos[i]:
            continue
        for u in sorted(b):
            for v in range(1, 1 << n):
                if dot(u, v) and where[v ^ u] != where[v]:
                    wit = {"u": format_vector(u), "v": format_vector(v)}
                    break
            if wit:
                break
        if wit:
            break
    checks.append(CheckRecord("conjugation_invariant", wit is None, wit))
    return VerificationReport(checks, profiles)
