"""The structure on non-empty subsets of a finite structure's domain.

Elements of ``power_structure(B)`` are the 2^m - 1 non-empty subsets of
B's domain, numbered by ascending bitmask (mask 1 = {0} first). A tuple
of subsets (U_1, ..., U_k) is in a relation iff every element of every
U_i extends to a tuple of R^B drawn from U_1 x ... x U_k.
"""

from __future__ import annotations

from itertools import product

from .errors import CapExceeded
from .structures import FiniteStructure, Signature

DEFAULT_SUBSET_CAP_BITS = 16


def subsets_in_canonical_order(m: int):
    """Non-empty subsets of {0..m-1} as frozensets, bitmask ascending."""
    out = []
    for mask in range(1, 1 << m):
        out.append(frozenset(i for i in range(m) if mask >> i & 1))
    return out


def covering_tuple(tuples, subset_tuple) -> bool:
    """Membership rule for the subset structure: each coordinate of each
    subset must be covered by a relation tuple staying inside the subsets."""
    k = len(subset_tuple)
    covered = [set() for _ in range(k)]
    for t in tuples:
        if all(t[i] in subset_tuple[i] for i in range(k)):
            for i in range(k):
                covered[i].add(t[i])
    return all(covered[i] == set(subset_tuple[i]) for i in range(k))


def power_structure(
    b: FiniteStructure, cap_bits: int = DEFAULT_SUBSET_CAP_BITS
) -> FiniteStructure:
    if b.size < 1:
        raise ValueError("power_structure needs a non-empty domain")
    if b.size > cap_bits:
        raise CapExceeded(
            f"power_structure cap: size {b.size} > {cap_bits} "
            f"(2^{b.size} - 1 subsets)"
        )
    subsets = subsets_in_canonical_order(b.size)
    index = {s: i for i, s in enumerate(subsets)}
    relations = {}
    for name, arity in b.signature.symbols:
        tuples = b.relations[name]
        members = set()
        for combo in product(subsets, repeat=arity):
            if covering_tuple(tuples, combo):
                members.add(tuple(index[s] for s in combo))
        relations[name] = frozenset(members)
    labels = tuple("{" + ",".join(map(str, sorted(s))) + "}" for s in subsets)
    return FiniteStructure(
        Signature(b.signature.symbols), len(subsets), relations, labels
    )
