"""Named verification suites producing deterministic JSON reports.

A suite takes a small parameter dict and returns check records.  Status is
"pass" or "fail" for asserted outcomes and "recorded" for values that are
reported without an expected answer.  Suite ids are fixed strings that
downstream tooling keys on.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Callable

from . import __version__
from .configs import (
    case_a1,
    case_a21,
    case_b21,
    isotropic_span,
    lagrangian,
    orthogonal_tail_factorizations,
    path_cubes,
    small_isotropic_span,
    split_components,
    three_blocks,
)
from .factorize import FactorQuery, enumerate_brute, enumerate_factorizations, parse_factor_word
from .galg import convolve, transvection_sum
from .gf2 import dot_function, format_vector, is_independent
from .ortho import (
    arf_by_majority,
    f4_of_so,
    form_with_sign,
    k_recursion_check,
    so_count,
    so_sign,
    so_transvections,
)
from .relations import (
    FAMILIES,
    cross_check_profiles,
    dye_bound,
    integrality_scan,
    so_closed_form,
    solve_case,
    sym_r2_ratio,
)
from .schur import (
    TPartition,
    eq31_holds,
    pairwise_meeting_basis,
    verify_partition,
    whole_class,
    zero_triangle_identity,
)
from .spgroup import (
    ClassTag,
    class_sizes,
    class_tag,
    identity_rows,
    mul_rows,
    product_of_transvections,
    serialize,
    transvection_rows,
)
from .subgroups import (
    SubgroupSpec,
    close_generators,
    load_fixtures,
    strong_gelfand_test,
    symplectic_group,
    verify_listed_subgroups,
)

SCHEMA = "spschur-report/1"


class ParamError(ValueError):
    """Bad suite id or parameters."""


class GuardError(RuntimeError):
    """A size guard stopped the computation."""


@dataclass
class Check:
    name: str
    status: str
    values: dict = field(default_factory=dict)
    witness: object = None

    def as_dict(self) -> dict:
        d = {"name": self.name, "status": self.status, "values": jsonable(self.values)}
        if self.witness is not None:
            d["witness"] = jsonable(self.witness)
        return d


def check(name: str, ok: bool, witness=None, **values) -> Check:
    return Check(name, "pass" if ok else "fail", values, witness)


def recorded(name: str, **values) -> Check:
    return Check(name, "recorded", values)


def jsonable(x):
    if isinstance(x, Fraction):
        return str(x) if x.denominator != 1 else x.numerator
    if isinstance(x, dict):
        return {str(k): jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple, set, frozenset)):
        items = [jsonable(v) for v in x]
        return sorted(items, key=repr) if isinstance(x, (set, frozenset)) else items
    if isinstance(x, ClassTag):
        return x.value
    return x


@dataclass
class Suite:
    id: str
    summary: str
    defaults: dict
    func: Callable[[dict], list[Check]]
    table: bool = False


REGISTRY: dict[str, Suite] = {}


def suite(id: str, summary: str, table: bool = False, **defaults):
    def wrap(f):
        REGISTRY[id] = Suite(id, summary, defaults, f, table)
        return f
    return wrap


def resolve_params(s: Suite, given: dict) -> dict:
    params = dict(s.defaults)
    for k, v in given.items():
        if v is None:
            continue
        if k not in s.defaults:
            raise ParamError(f"suite {s.id} takes no parameter {k!r}")
        params[k] = v
    return params


def run_suite(suite_id: str, given: dict | None = None) -> dict:
    if suite_id not in REGISTRY:
        raise ParamError(f"unknown suite {suite_id!r}")
    s = REGISTRY[suite_id]
    params = resolve_params(s, given or {})
    checks = s.func(params)
    status = "fail" if any(c.status == "fail" for c in checks) else "pass"
    return {"schema": SCHEMA, "version": __version__, "suite": s.id, "summary": s.summary,
            "params": jsonable(params), "status": status,
            "checks": [c.as_dict() for c in checks]}


# -- parameter helpers --------------------------------------------------------

def _even(n: int, allowed=None) -> int:
    if not isinstance(n, int) or n < 2 or n % 2:
        raise ParamError("n must be an even integer >= 2")
    if allowed is not None and n not in allowed:
        raise ParamError(f"n must be one of {sorted(allowed)}")
    return n


def _range(r, lo: int, hi: int) -> range:
    a, b = r
    if a > b or a < lo or b > hi:
        raise ParamError(f"range must lie within {lo}..{hi}")
    return range(a, b + 1)


def _families(f) -> list[str]:
    if f in (None, "all"):
        return list(FAMILIES)
    if f not in FAMILIES:
        raise ParamError(f"family must be one of {', '.join(FAMILIES)} or all")
    return [f]


def _fmt(t, n) -> list[str]:
    return [format_vector(v, n) for v in t]


# -- class sizes and squares ---------------------------------------------------

@suite("class-sizes", "sizes of T, the two product classes, zero-triangles and G", n=4)
def _class_sizes(p):
    n = _even(p["n"], range(2, 9, 2))
    t, tt0, tt1, tri, g = class_sizes(n)
    dot = dot_function(n)
    seen = {ClassTag.TT0: set(), ClassTag.TT1: set()}
    rows = {v: transvection_rows(v, n) for v in range(1, 1 << n)}
    triangles = 0
    wrong = None
    for a in rows:
        for b in rows:
            if a == b:
                continue
            x = mul_rows(rows[a], rows[b])
            tag = class_tag(x)
            want = ClassTag.TT1 if dot(a, b) else ClassTag.TT0
            if tag != want and wrong is None:
                wrong = [format_vector(a), format_vector(b), tag.value]
            seen.setdefault(tag, set()).add(x)
            triangles += dot(a, b)
    out = [
        check("transvections", len(rows) == t, size=len(rows), formula=t),
        check("pair_tags_follow_form", wrong is None, witness=wrong),
        check("orthogonal_pairs", len(seen[ClassTag.TT0]) == tt0,
              size=len(seen[ClassTag.TT0]), formula=tt0),
        check("meeting_pairs", len(seen[ClassTag.TT1]) == tt1,
              size=len(seen[ClassTag.TT1]), formula=tt1),
        check("zero_triangles", triangles // 6 == tri, size=triangles // 6, formula=tri),
    ]
    if n <= 4:
        G = symplectic_group(n)
        out.append(check("group_order", len(G) == g, size=len(G), formula=g))
    else:
        out.append(recorded("group_order", formula=g))
    return out


@suite("t2-decomposition", "the square of the class sum of T", n=4)
def _t2(p):
    n = _even(p["n"], (4, 6))
    T = transvection_sum(range(1, 1 << n), n)
    T2 = convolve(T, T)
    t, tt0, tt1, _, _ = class_sizes(n)
    one = identity_rows(n)
    by_tag: dict[str, set[int]] = {}
    counts: dict[str, int] = {}
    for g, c in T2.items():
        tag = class_tag(g).value
        by_tag.setdefault(tag, set()).add(c)
        counts[tag] = counts.get(tag, 0) + 1
    return [
        check("identity_coefficient", T2[one] == t, value=T2[one], expected=t),
        check("orthogonal_pairs_coefficient", by_tag.get("TT0") == {2},
              values=sorted(by_tag.get("TT0", ())), count=counts.get("TT0", 0)),
        check("meeting_pairs_coefficient", by_tag.get("TT1") == {3},
              values=sorted(by_tag.get("TT1", ())), count=counts.get("TT1", 0)),
        check("no_other_elements", set(by_tag) == {"Identity", "TT0", "TT1"}, tags=sorted(by_tag)),
        check("class_counts", counts.get("TT0") == tt0 and counts.get("TT1") == tt1,
              tt0=counts.get("TT0"), tt1=counts.get("TT1")),
    ]


# -- factorizations -------------------------------------------------------------

def _all_vectors(n):
    return list(range(1, 1 << n))


@suite("lemma-2.3", "factorizations of t_a t_b with a . b = 1 into two transvections", n=6)
def _meeting_pair(p):
    n = _even(p["n"], range(2, 11, 2))
    a, b = 1, 1 << (n - 1)
    target = product_of_transvections([a, b], n)
    sols = enumerate_factorizations(FactorQuery(target, 2, allowed=_all_vectors(n)))
    want = sorted([(a, b), (b, a ^ b), (a ^ b, a)])
    return [check("three_pairs", sols == want, count=len(sols),
                  solutions=[_fmt(s, n) for s in sols])]


@suite("lemma-2.4", "orthogonal pairs factor two ways; no transvection is a product of two", n=4)
def _orthogonal_pair(p):
    n = _even(p["n"], (2, 4, 6))
    out = []
    if n >= 4:
        a, b = 1, 2
        target = product_of_transvections([a, b], n)
        sols = enumerate_factorizations(FactorQuery(target, 2, allowed=_all_vectors(n)))
        out.append(check("orthogonal_pair_two_ways", sols == sorted([(a, b), (b, a)]),
                         count=len(sols)))
    rows = {v: transvection_rows(v, n) for v in _all_vectors(n)}
    singles = set(rows.values())
    hit = None
    for u in rows:
        for v in rows:
            if mul_rows(rows[u], rows[v]) in singles:
                hit = [format_vector(u), format_vector(v)]
                break
        if hit:
            break
    out.append(check("no_transvection_from_two", hit is None, witness=hit,
                     pairs=len(rows) ** 2))
    return out


def triple_families(a: int, n: int) -> set[tuple[int, int, int]]:
    """The five shapes of t_x t_y t_z = t_a."""
    dot = dot_function(n)
    out = set()
    for d in _all_vectors(n):
        out.add((a, d, d))
        out.add((d, d, a))
        if not dot(a, d):
            out.add((d, a, d))
        else:
            out.add((d, a, a ^ d))
            out.add((d, a ^ d, d))
    return out


@suite("lemma-2.9", "three-transvection factorizations of a transvection", n=4)
def _transvection_triples(p):
    n = _even(p["n"], (2, 4))
    bad = []
    total = 0
    for a in _all_vectors(n):
        target = transvection_rows(a, n)
        sols = enumerate_factorizations(FactorQuery(target, 3, allowed=_all_vectors(n)))
        brute = enumerate_brute(target, 3, _all_vectors(n))
        fam = sorted(triple_families(a, n))
        total += len(sols)
        if not (sols == brute == fam):
            bad.append(format_vector(a))
    return [check("five_families", not bad, witness=bad or None, targets=(1 << n) - 1,
                  solutions=total)]


@suite("lemma-6.1", "n + 1 pairwise meeting vectors, the first n a basis", n=6)
def _meeting_basis(p):
    n = _even(p["n"], range(2, 17, 2))
    vs = pairwise_meeting_basis(n)
    dot = dot_function(n)
    pairs = all(dot(x, y) for x, y in combinations(vs, 2))
    basis = is_independent(vs[:n])
    reach = all(any(dot(v, w) for w in vs[:n]) for v in _all_vectors(n)) if n <= 12 else None
    out = [check("pairwise_meeting", pairs, vectors=_fmt(vs, n)),
           check("first_n_independent", basis)]
    if reach is not None:
        out.append(check("every_vector_meets_one", reach))
    return out


LISTED_TRIPLES = [
    "t_{1,2} t_1 t_{1,2,n}", "t_{1,2} t_{1,2,n} t_{2,n}", "t_{1,2} t_{2,n} t_1",
    "t_1 t_{1,2} t_{1,2,n}", "t_1 t_n t_{1,2}", "t_1 t_{1,2,n} t_n",
    "t_n t_{1,2} t_{2,n}", "t_n t_{1,n} t_{1,2}", "t_n t_{2,n} t_{1,n}",
    "t_{1,2,n} t_n t_{2,n}", "t_{1,2,n} t_{2,n} t_n",
    "t_{1,n} t_{1,2} t_1", "t_{1,n} t_1 t_{1,2}",
    "t_{2,n} t_1 t_n", "t_{2,n} t_n t_{1,n}", "t_{2,n} t_{1,n} t_1",
]

LISTED_ORTHOGONAL_TAIL = [
    "t_{1,2,n} t_n t_{2,n}", "t_{1,n} t_1 t_{1,2}", "t_{1,2,n} t_{2,n} t_n", "t_{1,n} t_{1,2} t_1",
]


@suite("lemma-7.2", "all factorizations of t_{2,n} t_1 t_n into three transvections", n=6)
def _three_factors(p):
    n = _even(p["n"], range(4, 11, 2))
    target = product_of_transvections(parse_factor_word("t_{2,n} t_1 t_n", n), n)
    sols = enumerate_factorizations(FactorQuery(target, 3))
    wide = enumerate_factorizations(FactorQuery(target, 3, allowed=_all_vectors(n))) if n <= 6 else sols
    want = sorted(tuple(parse_factor_word(w, n)) for w in LISTED_TRIPLES)
    return [check("sixteen_triples", sols == want, count=len(sols),
                  solutions=[_fmt(s, n) for s in sols]),
            check("none_outside_support", wide == sols, count=len(wide))]


@suite("lemma-7.4", "factorizations of t_n t_{2,n} t_{1,n} with orthogonal last two", n=6)
def _orthogonal_tail(p):
    n = _even(p["n"], range(4, 11, 2))
    target = product_of_transvections(parse_factor_word("t_n t_{2,n} t_{1,n}", n), n)
    sols = orthogonal_tail_factorizations(target)
    want = sorted(tuple(parse_factor_word(w, n)) for w in LISTED_ORTHOGONAL_TAIL)
    return [check("four_triples", sols == want, count=len(sols),
                  solutions=[_fmt(s, n) for s in sols])]


def _case_checks(c) -> list[Check]:
    return [
        check("target_factor_admissible_one_way", c.extra.get("target_in_C2_C1C1", True),
              target=_fmt(c.target, c.n)),
        check("no_admissible_reverse_factorization", c.excluded,
              listed=len(c.listed), admissible=[_fmt(t, c.n) for t in c.admissible]),
    ]


@suite("thm-7.1-caseA1", "first surviving case of two adjacent f2-blocks is impossible", n=6)
def _case_a1(p):
    c = case_a1(_even(p["n"], range(4, 11, 2)))
    return _case_checks(c) + [check("sixteen_candidates", len(c.listed) == 16, count=len(c.listed))]


@suite("thm-7.1-caseA21", "second surviving case of two adjacent f2-blocks is impossible", n=6)
def _case_a21(p):
    c = case_a21(_even(p["n"], range(4, 11, 2)))
    return _case_checks(c) + [recorded("f2_squares_in_W", pairs=c.extra["f2_squares_in_W"])]


@suite("thm-7.1-caseB21", "third surviving case of two adjacent f2-blocks is impossible", n=6)
def _case_b21(p):
    n = _even(p["n"], range(4, 11, 2))
    c = case_b21(n)
    want = sorted([_fmt(parse_factor_word("t_n t_{2,n}", n), n),
                   _fmt(parse_factor_word("t_{1,2,n} t_{1,n}", n), n)])
    return [
        check("orthogonal_tail_candidates", len(c.listed) == 4, count=len(c.listed)),
        check("no_admissible_reverse_factorization", c.excluded,
              admissible=[_fmt(t, n) for t in c.admissible]),
        check("E_in_W", sorted(c.extra["E_in_W"]) == want, pairs=c.extra["E_in_W"]),
    ]


# -- multiplicity configurations ---------------------------------------------------

def _pair_checks(r, expected: tuple[int, int], ordered: bool) -> list[Check]:
    got = (r.ab, r.ba)
    name = f"{r.left}{r.right}_vs_{r.right}{r.left}"
    if ordered:
        ok = got == expected
    else:
        ok = sorted(got) == sorted(expected)
    out = [check(name, ok and r.noncommuting, expected=list(expected), ab=r.ab, ba=r.ba,
                 ordered=ordered, element=serialize(r.element))]
    if not ordered:
        out.append(recorded("orientation", **{f"{r.left}{r.right}": r.ab, f"{r.right}{r.left}": r.ba}))
    return out


@suite("prop-8.5", "two non-isotropic blocks besides C_1 give X Z != Z X", n=6)
def _prop85(p):
    r = three_blocks(_even(p["n"], range(6, 11, 2)))
    e = r.extra
    return [
        check("memberships", e["alpha1_in_X"] and e["y_in_Y"] and e["alpha2_in_Z"]),
        check("min_length_five", e["min_length"] == 5, steps=e["min_length_steps"]),
        check("five_factorizations_inside_W", e["all_in_W"], count=e["factorizations"]),
    ] + _pair_checks(r, (5, 3), ordered=False) + [
        recorded("multiset_counts", counts=e["multiset_counts"], Z_spectrum=e["Z_spectrum"])]


@suite("prop-9.2", "an isotropic span below half dimension makes f4 non-constant", n=6, p=2)
def _prop92(p):
    n = _even(p["n"], range(4, 13, 2))
    dim = p["p"]
    if not isinstance(dim, int) or not 1 <= dim < n // 2:
        raise ParamError("p must satisfy 1 <= p < n/2")
    r = small_isotropic_span(n, dim)
    return [
        check("count_first", r.first_count == 2 ** (dim - 1) - 1, value=r.first_count),
        check("count_last", r.last_count == 2**dim - 1, value=r.last_count),
        check("f4_differs", r.f4_first != r.f4_last and r.witness is not None,
              witness=[format_vector(v) for v in r.witness] if r.witness else None,
              f4=[r.f4_first, r.f4_last]),
    ]


@suite("prop-9.3", "a maximal isotropic union gives X Z_1 != Z_1 X", n=6)
def _prop93(p):
    n = _even(p["n"], range(6, 11, 2))
    r = lagrangian(n)
    e = r.extra
    listed = lagrangian(n, "listed")
    return [
        check("memberships", e["alpha1_in_X"] and e["alpha2_in_Y"]
              and e["alpha3_multiplicity_in_Z"] == 1),
    ] + _pair_checks(r, (4, 0), ordered=True) + [
        recorded("Z_spectrum", spectrum=e["Z_spectrum"]),
        recorded("listed_word", ab=listed.ab, ba=listed.ba,
                 last_factor_multiplicity=listed.extra["alpha3_multiplicity_in_Z"]),
    ]


@suite("prop-10.6", "one non-isotropic block over an isotropic span gives A B != B A", n=6)
def _prop106(p):
    r = isotropic_span(_even(p["n"], range(6, 11, 2)))
    e = r.extra
    return [
        check("block_sizes", e["sizes"] == [48, 12, 3], sizes=e["sizes"]),
        check("memberships", e["alpha1_in_A"] and e["alpha2_in_B"]),
        check("support_is_W", e["support_is_W"]),
    ] + _pair_checks(r, (6, 3), ordered=True)


@suite("prop-11.1-case2", "two orthogonal components of C_2 give X Z_1 != Z_1 X", n=6)
def _prop111(p):
    r = split_components(_even(p["n"], range(6, 11, 2)))
    e = r.extra
    return [
        check("memberships", e["z_in_Z1"] and e["x_in_X"]),
        check("min_length_five", e["min_length"] == 5, support=e["support"]),
    ] + _pair_checks(r, (5, 3), ordered=False)


@suite("sec-17-x1x3", "orthogonal form on a path-graph span: X_1 X_3 != X_3 X_1", n=6)
def _sec17(p):
    n = _even(p["n"], range(6, 11, 2))
    listed = path_cubes(n, "listed")
    found = path_cubes(n, "found")
    e = listed.extra
    return [
        check("cube_spectrum", e["cube_spectrum"] == [1, 3, 4, 6, 20, 87], spectrum=e["cube_spectrum"]),
        check("block_sizes", e["sizes"] == [35, 28], sizes=e["sizes"]),
        check("listed_word_counts", (listed.ab, listed.ba) == (1, 3), expected=[1, 3],
              ab=listed.ab, ba=listed.ba, factor_multiplicities=[
                  e["alpha1_multiplicity"], e["alpha2_multiplicity"]]),
        check("found_word_noncommuting", found.noncommuting and found.extra["support_is_W"],
              ab=found.ab, ba=found.ba, word=_fmt(found.word, n),
              factor_multiplicities=[found.extra["alpha1_multiplicity"],
                                     found.extra["alpha2_multiplicity"]]),
    ]


# -- orthogonal groups ----------------------------------------------------------------

@suite("so-counts", "transvections in the orthogonal groups of both signs", range=(4, 10))
def _so_counts(p):
    out = []
    for n in _range(p["range"], 2, 14):
        if n % 2:
            continue
        for sign in "+-":
            Q = form_with_sign(n, sign)
            size = len(so_transvections(Q))
            out.append(check(f"n={n},sign={sign}", size == so_count(n, sign)
                             and so_sign(Q) == sign and arf_by_majority(Q) == (sign == "-"),
                             size=size, formula=so_count(n, sign), form=Q.serialize()))
    return out


@suite("so-f4", "orthogonal companions inside the orthogonal transvections", range=(4, 10))
def _so_f4(p):
    out = []
    for n in _range(p["range"], 4, 12):
        if n % 2:
            continue
        for sign in "+-":
            r = f4_of_so(form_with_sign(n, sign))
            want = 2 ** (n - 2) - 1
            name = f"n={n},sign={sign}"
            if n >= 8:
                out.append(check(name, r.value == want, value=r.value, formula=want))
            else:
                out.append(recorded(name, value=r.value, formula=want))
    return out


@suite("k-recursion", "the 5x5 recursion for orthogonal counts along a path", m=12)
def _k_recursion(p):
    m = p["m"]
    if not isinstance(m, int) or not 1 <= m <= 40:
        raise ParamError("m must be in 1..40")
    rep = k_recursion_check(m)
    out = [check("charpoly", rep.charpoly_ok, charpoly=rep.charpoly),
           check("closed_form_powers", all(rep.vector_ok.values()), m_max=m)]
    for (name, n), (counts, want, sign) in sorted(rep.direct.items()):
        out.append(check(f"direct_{name}_n={n}", tuple(counts) == tuple(want[:4]),
                         counts=list(counts), expected=want[:4], sign=sign))
    return out


# -- relations ------------------------------------------------------------------------

@suite("relations-solve", "two-block relation systems against closed forms",
       family="all", range=(6, 40))
def _relations_solve(p):
    out = []
    for fam in _families(p["family"]):
        for n in _range(p["range"], 6, 200):
            if n % 2:
                continue
            res = solve_case(fam, 2, n)
            if fam.startswith("SO"):
                want = so_closed_form(fam, n)
                bad = [k for k, v in want.items() if v is not None and res.values.get(k) != v]
                out.append(check(f"{fam},n={n}", not bad and res.determined, mismatches=bad))
            else:
                N, D = sym_r2_ratio(fam, n)
                a1 = res.values.get("a1")
                out.append(check(f"{fam},n={n}", a1 == Fraction(N) / Fraction(D),
                                 a1=a1, feasible=res.feasible))
    return out


@suite("relations-scan", "integrality of the relation systems", table=True,
       family="all", r=0, range=(6, 64))
def _relations_scan(p):
    rs = (2, 3) if p["r"] in (0, None) else (p["r"],)
    if any(r not in (2, 3) for r in rs):
        raise ParamError("r must be 2 or 3")
    out = []
    for fam in _families(p["family"]):
        for r in rs:
            for row in integrality_scan(fam, r, _range(p["range"], 6, 200)):
                out.append(_scan_check(row))
    return out


def _scan_check(row) -> Check:
    name = f"{row.family},r={row.r},n={row.n}"
    flat = row.flat()
    if row.r == 3:
        ok = (not row.feasible and row.certificate["not_half_integer"]
              and row.certificate["R_matches"] and row.certificate["lambda2_matches"])
        return check(name, ok, **flat)
    if row.family.startswith("SO"):
        return check(name, row.feasible, **flat)
    first_infeasible = 8 if row.family == "SymNplus1" else 14
    if row.n >= first_infeasible:
        return check(name, not row.feasible and row.certificate["a1_matches"], **flat)
    return recorded(name, **flat)


@suite("cross-check-profiles", "solved relations against measured block profiles", range=(6, 10))
def _cross_check(p):
    out = []
    for n in _range(p["range"], 6, 12):
        if n % 2:
            continue
        for fam in ("SOplus", "SOminus"):
            c = cross_check_profiles(fam, n)
            out.append(check(f"{fam},n={n}", c.passed, mismatches=c.mismatches))
    return out


@suite("dye-bound", "total degree bound against the order of the spread stabilizer",
       range=(2, 20))
def _dye(p):
    out = []
    for m, lhs, rhs, holds in dye_bound(_range(p["range"], 2, 200)):
        name = f"m={m}"
        if m < 4:
            out.append(recorded(name, lhs=lhs, rhs=rhs, holds=holds))
        else:
            out.append(check(name, holds, lhs=lhs, rhs=rhs))
    return out


# -- partitions -----------------------------------------------------------------------

def _partition_checks(name: str, part: TPartition) -> list[Check]:
    rep = verify_partition(part)
    out = [check(name, rep.passed, witness=None if rep.passed else rep.first_failure().witness,
                 checks=rep.as_dict())]
    if rep.passed:
        eq = all(eq31_holds(pr.values) for pr in rep.profiles)
        lhs, rhs = zero_triangle_identity(part)
        out.append(check(f"{name}:identities", eq and lhs == rhs, triangle_sum=lhs, triangles=rhs))
    return out


@suite("verify-partition", "necessary conditions on the whole class and orthogonal splits",
       range=(4, 8))
def _verify_partition(p):
    out = []
    for n in _range(p["range"], 2, 10):
        if n % 2:
            continue
        out += _partition_checks(f"whole,n={n}", whole_class(n))
        if n >= 6:
            for sign in "+-":
                C2 = so_transvections(form_with_sign(n, sign))
                part = TPartition.with_remainder(n, [C2])
                out += _partition_checks(f"orthogonal{sign},n={n}",
                                         TPartition(n, [part.blocks[1], part.blocks[0]]))
    return out


@suite("random-colorings", "seeded random 2-colorings of T all fail a check",
       n=6, seed=0, count=100)
def _random_colorings(p):
    n = _even(p["n"], range(2, 9, 2))
    count = p["count"]
    if not isinstance(count, int) or count < 1:
        raise ParamError("count must be positive")
    rng = random.Random(p["seed"])
    first: dict[str, int] = {}
    passed = []
    pts = _all_vectors(n)
    for i in range(count):
        while True:
            mask = [rng.random() < 0.5 for _ in pts]
            if any(mask) and not all(mask):
                break
        blocks = [[v for v, m in zip(pts, mask) if m], [v for v, m in zip(pts, mask) if not m]]
        rep = verify_partition(TPartition(n, blocks))
        if rep.passed:
            passed.append(i)
        else:
            name = rep.first_failure().name
            first[name] = first.get(name, 0) + 1
    return [check("all_fail", not passed, witness=passed or None, first_failures=first)]


# -- subgroups ------------------------------------------------------------------------

@suite("strong-gelfand", "class algebra commutativity for small subgroups", n=4)
def _strong_gelfand(p):
    n = _even(p["n"], (2, 4))
    G = symplectic_group(n)
    whole = SubgroupSpec.from_transvections(_all_vectors(n), n, "G")
    trivial = SubgroupSpec(n, [], "trivial")
    out = [check("whole_group", bool(strong_gelfand_test(whole, G)))]
    v = strong_gelfand_test(trivial, G)
    out.append(check("trivial_subgroup_fails", not v.strong_gelfand, witness=v.witness))
    specs = load_fixtures()[n]
    elems = {s.label: frozenset(close_generators(s, len(G))) for s in specs}
    verdict = {s.label: strong_gelfand_test(s, G).strong_gelfand for s in specs}
    bad = [[h, k] for h, k in combinations(sorted(elems), 2)
           for h, k in ((h, k), (k, h))
           if elems[h] < elems[k] and verdict[h] and not verdict[k]]
    out.append(check("overgroups_inherit", not bad, witness=bad or None,
                     chains=sum(1 for h in elems for k in elems if elems[h] < elems[k])))
    return out


@suite("subgroups-listed", "orders and orbit profiles of the listed subgroups", n=4)
def _subgroups_listed(p):
    n = _even(p["n"], (2, 4, 6))
    out = []
    for c in verify_listed_subgroups(n):
        vals = {"order": c.order, "expected_order": c.expected_order, "profile": c.profile,
                "expected_profile": c.expected_profile, "strong_gelfand": c.strong_gelfand, **c.extra}
        out.append(check(c.label, c.passed, **vals))
        if n == 6 and c.expected_order is None:
            out.append(recorded(f"{c.label}:order", order=c.order))
    return out
