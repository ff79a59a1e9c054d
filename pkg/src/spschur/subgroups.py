"""Subgroups of Sp(n, 2) and the Schur rings of their conjugation classes.

Small groups are closed by breadth-first search on row tuples.  Orders of
larger groups come from Schreier-Sims on the permutation action on V^#
(sympy); orbits on V^# only need the generators (union-find).
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from importlib import resources
from itertools import combinations
from typing import Iterable, Sequence

from scipy.cluster.hierarchy import DisjointSet
from sympy.combinatorics import Permutation, PermutationGroup

from .galg import commutes, image_table, indicator
from .spgroup import deserialize, identity_rows, inverse_rows, mul_rows, serialize, transvection_rows

FULL_MODE_LIMIT = 10**4


class CapExceeded(Exception):
    pass


@dataclass
class SubgroupSpec:
    n: int
    generators: list[tuple]
    label: str = ""
    order: int | None = None

    @classmethod
    def from_transvections(cls, vectors: Iterable[int], n: int, label: str = "") -> "SubgroupSpec":
        return cls(n, [transvection_rows(v, n) for v in sorted(set(vectors)) if v], label)

    def to_json(self) -> dict:
        return {"n": self.n, "label": self.label, "order": self.order,
                "generators": [serialize(g) for g in self.generators]}

    @classmethod
    def from_json(cls, d: dict) -> "SubgroupSpec":
        n = d["n"]
        return cls(n, [tuple(deserialize(g, n)) for g in d["generators"]], d.get("label", ""),
                   d.get("order"))


def close_generators(spec: SubgroupSpec, cap: int = FULL_MODE_LIMIT) -> set[tuple]:
    """All elements of <generators>; raises CapExceeded beyond ``cap``."""
    one = identity_rows(spec.n)
    tables = [image_table(g) for g in spec.generators]
    seen = {one}
    frontier = [one]
    while frontier:
        nxt = []
        for x in frontier:
            for t in tables:
                y = tuple([t[r] for r in x])
                if y not in seen:
                    seen.add(y)
                    if len(seen) > cap:
                        raise CapExceeded(f"group has more than {cap} elements")
                    nxt.append(y)
        frontier = nxt
    return seen


def permutation_group(spec: SubgroupSpec) -> PermutationGroup:
    """The action on V^#, points relabelled v -> v - 1."""
    size = (1 << spec.n) - 1
    perms = []
    for g in spec.generators:
        t = image_table(g)
        perms.append(Permutation([t[v] - 1 for v in range(1, size + 1)]))
    if not perms:
        perms = [Permutation(list(range(size)))]
    return PermutationGroup(perms)


def group_order(spec: SubgroupSpec) -> int:
    return int(permutation_group(spec).order())


def orbits_on_T(spec: SubgroupSpec) -> list[list[int]]:
    """Orbits of <generators> on V^#, each sorted, ordered by least element."""
    ds = DisjointSet(range(1, 1 << spec.n))
    for g in spec.generators:
        t = image_table(g)
        for v in range(1, 1 << spec.n):
            ds.merge(v, t[v])
    return sorted((sorted(s) for s in ds.subsets()), key=lambda s: s[0])


def profile(spec: SubgroupSpec) -> list[int]:
    return sorted(len(o) for o in orbits_on_T(spec))


def conjugate_spec(spec: SubgroupSpec, g: Sequence[int]) -> SubgroupSpec:
    gi = inverse_rows(g)
    gens = [mul_rows(mul_rows(gi, x), g) for x in spec.generators]
    return SubgroupSpec(spec.n, gens, spec.label, spec.order)


# -- H-classes and commutativity -------------------------------------------------

def h_classes(G: Iterable[tuple], spec: SubgroupSpec) -> list[list[tuple]]:
    """Orbits of conjugation by <generators> on the element set G."""
    elems = sorted(G)
    ds = DisjointSet(elems)
    for h in spec.generators:
        hi = inverse_rows(h)
        t = image_table(h)
        for x in elems:
            ds.merge(x, tuple([t[r] for r in mul_rows(hi, x)]))
    return sorted((sorted(c) for c in ds.subsets()), key=lambda c: c[0])


@dataclass
class GelfandVerdict:
    strong_gelfand: bool
    classes: int
    witness: dict | None = None

    def __bool__(self) -> bool:
        return self.strong_gelfand


def strong_gelfand_test(spec: SubgroupSpec, G: set[tuple] | None = None) -> GelfandVerdict:
    """Do all H-class sums of G commute?"""
    if G is None:
        full = SubgroupSpec(spec.n, [transvection_rows(v, spec.n) for v in range(1, 1 << spec.n)])
        G = close_generators(full, FULL_MODE_LIMIT)
    if len(G) > FULL_MODE_LIMIT:
        raise CapExceeded("full class algebra is only built for small groups")
    classes = h_classes(G, spec)
    sums = [indicator(c, spec.n) for c in classes]
    for i, j in combinations(range(len(sums)), 2):
        res = commutes(sums[i], sums[j])
        if not res:
            return GelfandVerdict(False, len(classes), {
                "classes": [i, j], "element": serialize(res.witness),
                "coefficients": [res.coef_ab, res.coef_ba]})
    return GelfandVerdict(True, len(classes))


def symplectic_group(n: int) -> set[tuple]:
    full = SubgroupSpec(n, [transvection_rows(v, n) for v in range(1, 1 << n)])
    return close_generators(full, FULL_MODE_LIMIT)


# -- listed subgroups ------------------------------------------------------------------

# (order, orbit profile on V^#) for the strong Gelfand subgroups of Sp(4, 2)
SP4_TARGETS = [
    (48, [3, 12]),
    (48, [1, 6, 8]),
    (72, [6, 9]),
    (120, [5, 10]),
    (120, [15]),
    (360, [15]),
    (720, [15]),
]

SP2_TARGETS = [(2, [1, 2]), (3, [3]), (6, [3])]


def search_subgroups(n: int, targets: list[tuple[int, list[int]]], seed: int = 0,
                     tries: int = 20000) -> dict[tuple[int, tuple[int, ...]], SubgroupSpec]:
    """Random 1- to 3-generator subgroups matching (order, profile) targets."""
    rng = random.Random(seed)
    G = sorted(symplectic_group(n))
    want = {(o, tuple(p)) for o, p in targets}
    found: dict[tuple[int, tuple[int, ...]], SubgroupSpec] = {}
    for _ in range(tries):
        if len(found) == len(want):
            break
        k = rng.choice((1, 2, 2, 3))
        gens = [rng.choice(G) for _ in range(k)]
        spec = SubgroupSpec(n, gens)
        try:
            els = close_generators(spec, len(G))
        except CapExceeded:
            continue
        key = (len(els), tuple(profile(spec)))
        if key in want and key not in found:
            spec.order = len(els)
            found[key] = spec
    return found


def fixture_path():
    return resources.files("spschur").joinpath("data/subgroups.json")


def load_fixtures() -> dict[int, list[SubgroupSpec]]:
    data = json.loads(fixture_path().read_text())
    return {int(n): [SubgroupSpec.from_json(d) for d in lst] for n, lst in data.items()}


@dataclass
class ListedCheck:
    label: str
    order: int
    expected_order: int | None
    profile: list[int]
    expected_profile: list[int]
    strong_gelfand: bool | None
    extra: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        ok = self.profile == self.expected_profile
        if self.expected_order is not None:
            ok = ok and self.order == self.expected_order
        if self.strong_gelfand is not None:
            ok = ok and self.strong_gelfand
        return ok


def verify_listed_subgroups(n: int) -> list[ListedCheck]:
    if n not in (2, 4, 6):
        raise ValueError("listed subgroups exist for n in {2, 4, 6}")
    if n == 6:
        return _verify_n6()
    specs = load_fixtures()[n]
    targets = SP2_TARGETS if n == 2 else SP4_TARGETS
    G = symplectic_group(n)
    out = []
    for spec, (order, prof) in zip(specs, targets):
        els = close_generators(spec, len(G))
        v = strong_gelfand_test(spec, G)
        out.append(ListedCheck(spec.label, len(els), order, profile(spec), prof, v.strong_gelfand,
                               {"classes": v.classes}))
    return out


def _verify_n6() -> list[ListedCheck]:
    from .ortho import form_with_sign, so_transvections
    from .schur import TPartition, verify_partition

    n = 6
    block = sorted(so_transvections(form_with_sign(n, "-")))
    closure = SubgroupSpec.from_transvections(block, n, "orthogonal block, transvection closure")
    t = [transvection_rows(v, n) for v in block]
    # products of two block transvections generate the even part
    even = SubgroupSpec(n, [mul_rows(t[0], x) for x in t[1:]], "orthogonal block, even products")
    whole = SubgroupSpec.from_transvections(range(1, 1 << n), n, "Sp(6,2)")
    out = []
    for spec, order in ((closure, None), (even, 25920), (whole, 1451520)):
        orbs = orbits_on_T(spec)
        prof = sorted(len(o) for o in orbs)
        expected = [63] if spec is whole else [27, 36]
        rep = verify_partition(TPartition(n, orbs))
        out.append(ListedCheck(spec.label, group_order(spec), order, prof, expected, None,
                               {"partition_checks": rep.as_dict(), "partition_passed": rep.passed}))
    return out
