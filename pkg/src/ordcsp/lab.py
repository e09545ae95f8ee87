"""Verification lab: finite-structure equivalences, alternating walks,
and growth of distinguishable n-subsets.

``check_set_hom_equiv`` computes two facts independently for a small
structure B -- whether the subset structure of B maps back into B, and
whether B has a totally symmetric polymorphism of arity (max arity) * |B|
-- and reports whether they agree. They provably always do, so a
``consistent = False`` report is a bug detector, not a data state.

``check_aclwalk_lemma`` exercises a second finite consequence of total
symmetry: when R and S are preserved by a totally symmetric operation of
arity n and some alternating closed walk on (R, S) has length exactly 2n,
then R and the converse of S must intersect.

``orbit_count`` counts, for a template, the isomorphism classes of
induced substructures on n distinct elements. For the built-in templates
qlt, ord3, gamma1 and gamma2 every isomorphism between finite induced
substructures extends to a symmetry of the whole template, so the class
count equals the number of n-subset orbits and is reported as exact;
otherwise it is a lower bound. Classes are enumerated by levelwise
extension: keep one concrete point configuration per class, re-grid it
with gaps so that a new point can take every relative position, and
canonicalize the grown structures. This visits a number of
configurations proportional to the number of classes rather than the
number of n-subsets of a sample, which is what makes counts like n = 5
over a 100-element sample feasible.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, permutations, product

from .errors import CapExceeded
from .formula import compile_formula
from .hom import hom_exists
from .polymorphism import (
    BinaryOpTable,
    find_semilattice,
    has_ts_polymorphism,
)
from .powerset import power_structure
from .structures import FiniteStructure
from .template import Template

EXACT = "exact"
LOWER_BOUND = "lower_bound"
EXACT_PRESETS = frozenset({"qlt", "ord3", "gamma1", "gamma2"})

MAX_ORBIT_N = 7
DEFAULT_ORBIT_BUDGET = 10**7


# ---------------------------------------------------------------------------
# Subset-structure equivalence


@dataclass
class EquivReport:
    set_hom: bool
    ts_at_km: bool
    ts_arity: int
    semilattice: BinaryOpTable | None
    consistent: bool

    def to_json_dict(self) -> dict:
        return {
            "set_hom": self.set_hom,
            "ts_at_km": self.ts_at_km,
            "ts_arity": self.ts_arity,
            "semilattice": (
                self.semilattice.to_json_dict() if self.semilattice else None
            ),
            "consistent": self.consistent,
        }


def check_set_hom_equiv(b: FiniteStructure, size_cap: int = 3) -> EquivReport:
    """Compare hom(subset structure -> B) with a totally symmetric
    polymorphism search at arity (max arity) * |B|, both exhaustive."""
    if b.size > size_cap:
        raise CapExceeded(
            f"equivalence check cap: size {b.size} > {size_cap}"
        )
    arity = max(1, b.max_arity() * b.size)
    set_hom = hom_exists(power_structure(b), b) is not None
    ts = has_ts_polymorphism(b, arity) is not None
    semilattice = find_semilattice(b)
    return EquivReport(set_hom, ts, arity, semilattice, set_hom == ts)


# ---------------------------------------------------------------------------
# Alternating closed walks


@dataclass
class Walk:
    """A closed walk x_0, ..., x_{2n} = x_0 stepping through R at even
    positions and S at odd positions."""

    elements: tuple[int, ...]

    @property
    def half_length(self) -> int:
        return (len(self.elements) - 1) // 2

    def validate(self, r_tuples, s_tuples) -> bool:
        e = self.elements
        if len(e) < 3 or len(e) % 2 == 0 or e[0] != e[-1]:
            return False
        for i in range(0, len(e) - 1, 2):
            if (e[i], e[i + 1]) not in r_tuples:
                return False
        for i in range(1, len(e) - 1, 2):
            if (e[i], e[i + 1]) not in s_tuples:
                return False
        return True

    def to_json_dict(self) -> dict:
        return {
            "elements": list(self.elements),
            "half_length": self.half_length,
        }


def _successors(tuples):
    succ: dict[int, list[int]] = {}
    for a, b in sorted(tuples):
        succ.setdefault(a, []).append(b)
    return succ


def find_alternating_walk(r_tuples, s_tuples, max_half_length: int):
    """Shortest alternating closed walk of length <= 2 * max_half_length,
    or None. Ties break toward the smallest starting element."""
    r_succ = _successors(r_tuples)
    s_succ = _successors(s_tuples)
    domain = sorted(
        {x for t in r_tuples for x in t} | {x for t in s_tuples for x in t}
    )
    best = None
    for x0 in domain:
        walk = _bfs_closed_walk(x0, r_succ, s_succ, max_half_length)
        if walk is not None and (
            best is None or len(walk.elements) < len(best.elements)
        ):
            best = walk
    return best


def _bfs_closed_walk(x0, r_succ, s_succ, max_half_length):
    start = (x0, 0)
    parents = {start: None}
    frontier = [start]
    depth = 0
    while frontier and depth < 2 * max_half_length:
        depth += 1
        nxt = []
        for state in frontier:
            u, parity = state
            succ = r_succ if parity == 0 else s_succ
            for v in succ.get(u, ()):
                cand = (v, 1 - parity)
                if cand == start:
                    elements = [x0]
                    cur = state
                    while cur is not None:
                        elements.append(cur[0])
                        cur = parents[cur]
                    elements.reverse()
                    return Walk(tuple(elements))
                if cand not in parents:
                    parents[cand] = state
                    nxt.append(cand)
        frontier = nxt
    return None


def _exact_closed_walk(x0, r_succ, s_succ, half_length):
    """A closed walk from x0 of length exactly 2 * half_length, or None."""
    layers = [{x0: None}]
    for step in range(2 * half_length):
        succ = r_succ if step % 2 == 0 else s_succ
        nxt = {}
        for u in layers[-1]:
            for v in succ.get(u, ()):
                if v not in nxt:
                    nxt[v] = u
        if not nxt:
            return None
        layers.append(nxt)
    if x0 not in layers[-1]:
        return None
    elements = [x0]
    cur = x0
    for step in range(2 * half_length, 0, -1):
        cur = layers[step][cur]
        elements.append(cur)
    elements.reverse()
    return Walk(tuple(elements))


@dataclass
class PairCheck:
    r_name: str
    s_name: str
    exact_walk: Walk | None
    shortest_walk: Walk | None
    intersection_nonempty: bool
    violation: bool

    def to_json_dict(self) -> dict:
        return {
            "r": self.r_name,
            "s": self.s_name,
            "exact_walk": (
                self.exact_walk.to_json_dict() if self.exact_walk else None
            ),
            "shortest_walk": (
                self.shortest_walk.to_json_dict()
                if self.shortest_walk
                else None
            ),
            "intersection_nonempty": self.intersection_nonempty,
            "violation": self.violation,
        }


@dataclass
class WalkLemmaReport:
    arity: int
    pairs: list[PairCheck] = field(default_factory=list)

    @property
    def violations(self):
        return [p for p in self.pairs if p.violation]

    def to_json_dict(self) -> dict:
        return {
            "arity": self.arity,
            "pairs": [p.to_json_dict() for p in self.pairs],
            "violations": len(self.violations),
        }


def check_aclwalk_lemma(b: FiniteStructure, n: int) -> WalkLemmaReport:
    """For every ordered pair (R, S) of binary relations of ``b``: if an
    alternating closed walk of length exactly 2n exists, R and the
    converse of S must intersect. Requires a verified totally symmetric
    polymorphism of arity n; shorter walks are reported informationally.
    """
    if has_ts_polymorphism(b, n) is None:
        raise ValueError(
            f"precondition unmet: no totally symmetric polymorphism of "
            f"arity {n}"
        )
    binary = [
        (name, b.relations[name])
        for name, arity in b.signature.symbols
        if arity == 2
    ]
    report = WalkLemmaReport(n)
    for r_name, r_tuples in binary:
        for s_name, s_tuples in binary:
            r_succ = _successors(r_tuples)
            s_succ = _successors(s_tuples)
            exact = None
            for x0 in range(b.size):
                exact = _exact_closed_walk(x0, r_succ, s_succ, n)
                if exact is not None:
                    break
            intersects = any((y, x) in s_tuples for x, y in r_tuples)
            shortest = find_alternating_walk(r_tuples, s_tuples, n)
            report.pairs.append(
                PairCheck(
                    r_name,
                    s_name,
                    exact,
                    shortest,
                    intersects,
                    exact is not None and not intersects,
                )
            )
    return report


# ---------------------------------------------------------------------------
# Canonical forms of small structures


def canonical_form(k: int, relation_tuples):
    """Canonical key of a structure on k points given as a list of
    (arity, tuple set), minimizing the relational encoding over point
    orderings compatible with an invariant-based pre-ordering."""
    if k == 0:
        return ()
    self_label = []
    for i in range(k):
        self_label.append(
            tuple((i,) * arity in tuples for arity, tuples in relation_tuples)
        )
    pair_label = {}
    binary = [tuples for arity, tuples in relation_tuples if arity == 2]
    for i in range(k):
        for j in range(k):
            if i != j:
                pair_label[i, j] = tuple((i, j) in t for t in binary)

    colors = list(self_label)
    for _ in range(2):
        colors = [
            (
                colors[i],
                tuple(
                    sorted(
                        (colors[j], pair_label[i, j], pair_label[j, i])
                        for j in range(k)
                        if j != i
                    )
                ),
            )
            for i in range(k)
        ]

    groups: dict = {}
    for i in range(k):
        groups.setdefault(colors[i], []).append(i)
    ordered_groups = [groups[c] for c in sorted(groups)]

    best = None
    for parts in product(*(permutations(g) for g in ordered_groups)):
        order = [i for part in parts for i in part]
        position = [0] * k
        for pos, i in enumerate(order):
            position[i] = pos
        encoding = tuple(
            tuple(sorted(tuple(position[x] for x in t) for t in tuples))
            for _, tuples in relation_tuples
        )
        if best is None or encoding < best:
            best = encoding
    return best


def _canonical_all_perms(k: int, relation_tuples):
    """Independent reference canonicalizer: plain minimum over all k!
    orderings (used by the subset-enumeration oracle)."""
    best = None
    for perm in permutations(range(k)):
        encoding = tuple(
            tuple(sorted(tuple(perm[x] for x in t) for t in tuples))
            for _, tuples in relation_tuples
        )
        if best is None or encoding < best:
            best = encoding
    return best


def subset_class_count(
    structure: FiniteStructure, n: int, budget: int = DEFAULT_ORBIT_BUDGET
) -> int:
    """Brute-force count of induced-substructure classes over all
    n-subsets of a finite structure's domain."""
    from math import comb

    if comb(structure.size, n) > budget:
        raise CapExceeded(
            f"subset enumeration budget: C({structure.size}, {n}) > {budget}"
        )
    rels = [
        (arity, structure.relations[name])
        for name, arity in structure.signature.symbols
    ]
    index_tuples = {
        arity: list(product(range(n), repeat=arity))
        for arity in {a for a, _ in rels}
    }
    forms = set()
    for subset in combinations(range(structure.size), n):
        induced = [
            (
                arity,
                {
                    it
                    for it in index_tuples[arity]
                    if tuple(subset[i] for i in it) in tuples
                },
            )
            for arity, tuples in rels
        ]
        forms.add(_canonical_all_perms(n, induced))
    return len(forms)


# ---------------------------------------------------------------------------
# Orbit growth


@dataclass
class OrbitReport:
    n: int
    class_count: int
    exactness: str

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "class_count": self.class_count,
            "exactness": self.exactness,
        }


def _rank_normalize(config):
    values = sorted({x for point in config for x in point})
    rank = {v: i for i, v in enumerate(values)}
    return tuple(sorted(tuple(rank[x] for x in point) for point in config))


class _RelationCache:
    """Memoized evaluation of relation formulas on concrete points."""

    def __init__(self, template: Template):
        self.rels = [
            (rel.arity, compile_formula(rel.formula))
            for rel in template.relations
        ]
        self.cache: dict = {}

    def structure_tuples(self, config):
        k = len(config)
        out = []
        for ri, (arity, fn) in enumerate(self.rels):
            members = set()
            for combo in product(range(k), repeat=arity):
                key = (ri,) + tuple(config[i] for i in combo)
                hit = self.cache.get(key)
                if hit is None:
                    flat = tuple(x for i in combo for x in config[i])
                    hit = fn(flat)
                    self.cache[key] = hit
                if hit:
                    members.add(combo)
            out.append((arity, members))
        return out


def orbit_count(
    t: Template, n: int, budget: int = DEFAULT_ORBIT_BUDGET
) -> OrbitReport:
    """Count isomorphism classes of induced substructures on n elements.

    Grows one representative configuration per class, level by level; see
    the module docstring for why this matches subset enumeration on the
    homogeneous built-ins and is a lower bound otherwise.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if n > MAX_ORBIT_N:
        raise CapExceeded(f"orbit counting cap: n {n} > {MAX_ORBIT_N}")
    d = t.dimension
    dom = compile_formula(t.domain_formula)
    eqf = compile_formula(t.equality_formula)
    cache = _RelationCache(t)

    configs = set()
    for pattern in product(range(d), repeat=d):
        values = sorted(set(pattern))
        if values != list(range(len(values))):
            continue
        if dom(pattern):
            configs.add((pattern,))
    work = len(configs)

    reps: dict = {}
    for config in sorted(configs):
        form = canonical_form(len(config), cache.structure_tuples(config))
        reps.setdefault(form, config)

    for _level in range(2, n + 1):
        candidates = set()
        for config in reps.values():
            # Spread the used values d+1 apart: every gap (including the
            # ends) then has d free slots, enough for any relative
            # placement of the new point's d coordinates.
            values = sorted({x for point in config for x in point})
            remap = {v: d + i * (d + 1) for i, v in enumerate(values)}
            gapped = tuple(
                tuple(remap[x] for x in point) for point in config
            )
            fine = d + len(values) * (d + 1)
            for w in product(range(fine), repeat=d):
                if not dom(w):
                    continue
                if any(eqf(p + w) or eqf(w + p) for p in gapped):
                    continue
                candidates.add(_rank_normalize(gapped + (w,)))
        work += len(candidates)
        if work > budget:
            raise CapExceeded(
                f"orbit counting budget: {work} configurations > {budget}"
            )
        reps = {}
        for config in sorted(candidates):
            form = canonical_form(
                len(config), cache.structure_tuples(config)
            )
            reps.setdefault(form, config)

    exactness = EXACT if t.name in EXACT_PRESETS else LOWER_BOUND
    return OrbitReport(n, len(reps), exactness)
