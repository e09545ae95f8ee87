"""Finite samples of infinite templates.

``sample(t, n)`` computes a finite structure that is equivalent to the
template for instances with n variables: an instance of size n maps into
the sample iff it maps into the template.

* Direct templates: the sample is the grid {0..n-1} (standing for n
  increasing rationals); relation tuples are exactly the grid tuples
  satisfying the defining formulas.
* Interpretations of dimension d: enumerate the d-tuples over the grid
  {0..dn-1} that satisfy the domain formula, quotient them by the
  equality formula (union-find over satisfying pairs), and evaluate each
  relation formula on class representatives.

The grid is 0-based; only the relative order of values matters. A sample
at n = 0 is defined as the sample at n = 1 (an empty instance is accepted
upstream without sampling). An unsatisfiable domain formula yields an
empty sample, not an error.

Before trusting the quotient, the equality formula is validated on the
grid: reflexivity on every satisfying tuple, symmetry on every pair, and
agreement on every within-class pair after closure. Congruence of each
relation formula (equal tuples are interchangeable as arguments) is
checked exhaustively while the total evaluation count stays under a
budget, and on a seeded random sample (with a warning) beyond it.
"""

from __future__ import annotations

import random
import warnings
from dataclasses import dataclass
from itertools import product

from .errors import (
    CapExceeded,
    EqualityNotCongruence,
    EqualityNotEquivalence,
)
from .formula import compile_formula
from .structures import FiniteStructure, Signature
from .template import DIRECT, INTERPRETATION, Template

DEFAULT_GRID_CAP = 10**6
DEFAULT_CONGRUENCE_BUDGET = 4 * 10**6
CONGRUENCE_SAMPLE = 10**5


@dataclass
class Sample:
    """A finite sample plus the grid points chosen to represent each
    element."""

    structure: FiniteStructure
    representatives: tuple[tuple[int, ...], ...]
    base_grid_size: int

    def sidecar_json_dict(self) -> dict:
        return {
            "representatives": [list(r) for r in self.representatives],
            "base_grid_size": self.base_grid_size,
        }


def sample(t: Template, n: int, **kwargs) -> Sample:
    if t.kind == DIRECT:
        return sample_direct(t, n)
    return sample_interpretation(t, n, **kwargs)


def sample_direct(t: Template, n: int) -> Sample:
    """Evaluate each relation formula on the grid {0..n-1}."""
    if t.kind != DIRECT:
        raise ValueError("sample_direct needs a direct template")
    n = max(n, 1)
    relations = {}
    for rel in t.relations:
        fn = compile_formula(rel.formula)
        relations[rel.name] = frozenset(
            tup for tup in product(range(n), repeat=rel.arity) if fn(tup)
        )
    structure = FiniteStructure(
        Signature(t.signature_symbols()), n, relations
    )
    return Sample(structure, tuple((i,) for i in range(n)), n)


class _UnionFind:
    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, i):
        while self.parent[i] != i:
            self.parent[i] = self.parent[self.parent[i]]
            i = self.parent[i]
        return i

    def union(self, i, j):
        ri, rj = self.find(i), self.find(j)
        if ri != rj:
            self.parent[max(ri, rj)] = min(ri, rj)


def sample_interpretation(
    t: Template,
    n: int,
    grid_cap: int = DEFAULT_GRID_CAP,
    congruence_budget: int = DEFAULT_CONGRUENCE_BUDGET,
    seed: int = 0,
    representative_rng: random.Random | None = None,
) -> Sample:
    """Quotient the satisfying grid tuples and evaluate relations on
    class representatives.

    ``representative_rng`` swaps the lexicographically-least
    representative for a random class member; by congruence the resulting
    structure is unchanged.
    """
    if t.kind != INTERPRETATION:
        raise ValueError("sample_interpretation needs an interpretation")
    n = max(n, 1)
    d = t.dimension
    g = d * n
    if g**d > grid_cap:
        raise CapExceeded(f"grid cap: {g}^{d} > {grid_cap}")

    dom = compile_formula(t.domain_formula)
    eqf = compile_formula(t.equality_formula)
    points = [p for p in product(range(g), repeat=d) if dom(p)]

    for p in points:
        if not eqf(p + p):
            raise EqualityNotEquivalence(
                f"equality formula is not reflexive on {p}"
            )
    uf = _UnionFind(len(points))
    for i in range(len(points)):
        for j in range(i + 1, len(points)):
            forward = eqf(points[i] + points[j])
            backward = eqf(points[j] + points[i])
            if forward != backward:
                raise EqualityNotEquivalence(
                    f"equality formula is not symmetric on "
                    f"{points[i]}, {points[j]}"
                )
            if forward:
                uf.union(i, j)

    classes: dict[int, list[int]] = {}
    for i in range(len(points)):
        classes.setdefault(uf.find(i), []).append(i)
    # Union-find closure must agree with the formula pointwise, otherwise
    # the formula is not transitive.
    for members in classes.values():
        for i in members:
            for j in members:
                if i < j and not eqf(points[i] + points[j]):
                    raise EqualityNotEquivalence(
                        f"equality formula is not transitive: "
                        f"{points[i]} ~ {points[j]} only through others"
                    )

    # Classes ordered by their lexicographically least member (points were
    # generated in lexicographic order, so that is the first member).
    ordered = sorted(classes.values(), key=lambda ms: points[ms[0]])
    class_of = {}
    for ci, members in enumerate(ordered):
        for i in members:
            class_of[i] = ci

    _validate_congruence(t, points, class_of, congruence_budget, seed)

    if representative_rng is None:
        reps = [points[members[0]] for members in ordered]
    else:
        reps = [
            points[representative_rng.choice(members)] for members in ordered
        ]

    relations = {}
    for rel in t.relations:
        fn = compile_formula(rel.formula)
        members = set()
        for combo in product(range(len(reps)), repeat=rel.arity):
            flat = tuple(x for ci in combo for x in reps[ci])
            if fn(flat):
                members.add(combo)
        relations[rel.name] = frozenset(members)

    structure = FiniteStructure(
        Signature(t.signature_symbols()),
        len(reps),
        relations,
        tuple(str(tuple(r)) for r in reps),
    )
    return Sample(structure, tuple(reps), g)


def _validate_congruence(t, points, class_of, budget, seed):
    """Relation formulas must not distinguish equal tuples: evaluated over
    member combinations, the result must be a function of the classes."""
    n_points = len(points)
    if n_points == 0:
        return
    for rel in t.relations:
        fn = compile_formula(rel.formula)
        m = rel.arity
        if n_points**m <= budget:
            seen: dict[tuple, tuple] = {}
            for combo in product(range(n_points), repeat=m):
                flat = tuple(x for i in combo for x in points[i])
                key = tuple(class_of[i] for i in combo)
                val = fn(flat)
                prev = seen.get(key)
                if prev is None:
                    seen[key] = (val, combo)
                elif prev[0] != val:
                    raise EqualityNotCongruence(
                        f"relation {rel.name!r}: equal arguments "
                        f"{[points[i] for i in prev[1]]} vs "
                        f"{[points[i] for i in combo]} disagree"
                    )
        else:
            warnings.warn(
                f"relation {rel.name!r}: congruence spot-checked on "
                f"{CONGRUENCE_SAMPLE} random pairs (grid too large for "
                f"exhaustive check)",
                stacklevel=2,
            )
            rng = random.Random(seed)
            members_by_class: dict[int, list[int]] = {}
            for i, ci in class_of.items():
                members_by_class.setdefault(ci, []).append(i)
            for _ in range(CONGRUENCE_SAMPLE):
                base = [rng.randrange(n_points) for _ in range(m)]
                pos = rng.randrange(m)
                alt = list(base)
                alt[pos] = rng.choice(members_by_class[class_of[base[pos]]])
                flat_a = tuple(x for i in base for x in points[i])
                flat_b = tuple(x for i in alt for x in points[i])
                if fn(flat_a) != fn(flat_b):
                    raise EqualityNotCongruence(
                        f"relation {rel.name!r}: equal arguments "
                        f"{[points[i] for i in base]} vs "
                        f"{[points[i] for i in alt]} disagree"
                    )
