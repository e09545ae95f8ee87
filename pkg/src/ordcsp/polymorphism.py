"""Searching for well-behaved operations that preserve a structure.

Two searches live here:

* ``has_ts_polymorphism(B, n)`` looks for an n-ary totally symmetric
  polymorphism. Such an operation factors through the set of its
  arguments, so it is stored as a ``SubsetFunctionTable`` mapping each
  non-empty subset of size <= n to a domain element.
* ``find_semilattice(B)`` looks for a binary operation table that is
  idempotent, commutative, associative, and preserves every relation.

The n-th power of a relation with r tuples has r^n tuples, so the TS
constraint set is generated up to column sets: an n-tuple of relation
tuples only constrains the table through the k-tuple of value sets seen
in each column. Those signatures are enumerated by breadth-first
extension, one added tuple at a time, which keeps the constraint count
near the number of distinct signatures instead of r^n.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product

from .errors import CapExceeded
from .structures import FiniteStructure

DEFAULT_CONSTRAINT_BUDGET = 10**6
DEFAULT_SEMILATTICE_CAP = 6


@dataclass
class BinaryOpTable:
    """A total binary operation on {0..size-1} as a size x size table."""

    size: int
    table: tuple[tuple[int, ...], ...]

    def apply(self, a: int, b: int) -> int:
        return self.table[a][b]

    def is_idempotent(self) -> bool:
        return all(self.table[x][x] == x for x in range(self.size))

    def is_commutative(self) -> bool:
        return all(
            self.table[x][y] == self.table[y][x]
            for x in range(self.size)
            for y in range(self.size)
        )

    def is_associative(self) -> bool:
        r = range(self.size)
        t = self.table
        return all(t[t[x][y]][z] == t[x][t[y][z]] for x in r for y in r for z in r)

    def to_json_dict(self) -> dict:
        return {"size": self.size, "table": [list(row) for row in self.table]}


@dataclass
class SubsetFunctionTable:
    """A choice function on non-empty subsets of size <= arity.

    Induces the totally symmetric function
    (x_1, ..., x_arity) -> entries[{x_1, ..., x_arity}].
    """

    arity: int
    entries: dict[frozenset[int], int]

    def apply_to_set(self, values) -> int:
        return self.entries[frozenset(values)]

    def to_json_dict(self) -> dict:
        items = sorted(self.entries.items(), key=lambda kv: (len(kv[0]), sorted(kv[0])))
        return {
            "arity": self.arity,
            "entries": [
                {"subset": sorted(s), "value": v} for s, v in items
            ],
        }


def min_fold_table(op: BinaryOpTable, arity: int) -> SubsetFunctionTable:
    """Fold a binary operation over each subset (any order; for a
    semilattice the result is order-independent)."""
    entries = {}
    for size in range(1, arity + 1):
        for combo in combinations(range(op.size), size):
            acc = combo[0]
            for x in combo[1:]:
                acc = op.apply(acc, x)
            entries[frozenset(combo)] = acc
    return SubsetFunctionTable(arity, entries)


def column_signatures(tuples, n: int, budget: int, used: int):
    """All k-tuples of column sets realizable by picking <= n tuples.

    Returns (signatures, updated_used_count); raises CapExceeded if the
    running signature count passes the budget.
    """
    tuples = sorted(tuples)
    if not tuples:
        return set(), used
    frontier = set()
    for t in tuples:
        frontier.add(tuple(frozenset((x,)) for x in t))
    signatures = set(frontier)
    used += len(signatures)
    if used > budget:
        raise CapExceeded(f"TS constraint budget {budget} exceeded")
    for _ in range(n - 1):
        new_frontier = set()
        for sig in frontier:
            for t in tuples:
                ext = tuple(
                    sig[i] | {t[i]} if t[i] not in sig[i] else sig[i]
                    for i in range(len(t))
                )
                if ext not in signatures:
                    signatures.add(ext)
                    new_frontier.add(ext)
        used += len(new_frontier)
        if used > budget:
            raise CapExceeded(f"TS constraint budget {budget} exceeded")
        if not new_frontier:
            break
        frontier = new_frontier
    return signatures, used


def _all_subsets(m: int, n: int):
    for size in range(1, min(m, n) + 1):
        for combo in combinations(range(m), size):
            yield frozenset(combo)


def identity_subset_table(m: int) -> SubsetFunctionTable:
    return SubsetFunctionTable(1, {frozenset((x,)): x for x in range(m)})


def has_ts_polymorphism(
    b: FiniteStructure, n: int, budget: int = DEFAULT_CONSTRAINT_BUDGET
):
    """Search for an n-ary totally symmetric polymorphism of ``b``.

    Returns a SubsetFunctionTable or None. Entries not pinned down by any
    constraint default to the minimum of the subset; singleton entries are
    tried identity-first so idempotent witnesses come out when they exist.
    """
    if n < 1:
        raise ValueError("arity must be positive")
    m = b.size
    if m == 0:
        return SubsetFunctionTable(n, {})
    if n == 1:
        # The identity is always a unary polymorphism.
        return identity_subset_table(m)

    constraints = []  # (signature, tuple set)
    used = 0
    for name, _ in b.signature.symbols:
        tuples = b.relations[name]
        sigs, used = column_signatures(tuples, n, budget, used)
        constraints.extend((sig, tuples) for sig in sorted(sigs, key=_sig_key))

    variables = sorted(
        {s for sig, _ in constraints for s in sig},
        key=lambda s: (len(s), sorted(s)),
    )
    var_index = {s: i for i, s in enumerate(variables)}
    by_var = [[] for _ in variables]
    for ci, (sig, _) in enumerate(constraints):
        for s in set(sig):
            by_var[var_index[s]].append(ci)

    assignment = {}

    def satisfied(ci):
        sig, tuples = constraints[ci]
        image = tuple(assignment.get(s) for s in sig)
        if any(v is None for v in image):
            return True  # not yet decided
        return image in tuples

    def search(i):
        if i == len(variables):
            return True
        s = variables[i]
        if len(s) == 1:
            (x,) = s
            candidates = [x] + [v for v in range(m) if v != x]
        else:
            candidates = list(range(m))
        for value in candidates:
            assignment[s] = value
            if all(satisfied(ci) for ci in by_var[i]):
                if search(i + 1):
                    return True
            del assignment[s]
        return False

    if not search(0):
        return None

    entries = {}
    for s in _all_subsets(m, n):
        entries[s] = assignment.get(s, min(s))
    return SubsetFunctionTable(n, entries)


def _sig_key(sig):
    return tuple((len(s), tuple(sorted(s))) for s in sig)


def is_polymorphism(op, b: FiniteStructure) -> bool:
    """Check whether an operation table preserves every relation of ``b``.

    Accepts a BinaryOpTable (checked over all pairs of relation tuples) or
    a SubsetFunctionTable (the induced totally symmetric function checked
    at the table's declared arity, via column-set signatures).
    """
    if isinstance(op, BinaryOpTable):
        if op.size != b.size:
            raise ValueError(
                f"operation on {op.size} elements, structure has {b.size}"
            )
        for name, _ in b.signature.symbols:
            tuples = b.relations[name]
            for t1, t2 in product(tuples, repeat=2):
                image = tuple(op.apply(x, y) for x, y in zip(t1, t2))
                if image not in tuples:
                    return False
        return True
    if isinstance(op, SubsetFunctionTable):
        needed = set(_all_subsets(b.size, op.arity))
        missing = needed - set(op.entries)
        if missing:
            raise ValueError(
                f"table is missing {len(missing)} subsets of size "
                f"<= {op.arity}"
            )
        for name, _ in b.signature.symbols:
            tuples = b.relations[name]
            sigs, _ = column_signatures(
                tuples, op.arity, DEFAULT_CONSTRAINT_BUDGET, 0
            )
            for sig in sigs:
                image = tuple(op.entries[s] for s in sig)
                if image not in tuples:
                    return False
        return True
    raise TypeError(f"expected an operation table, got {type(op)!r}")


def find_semilattice(
    b: FiniteStructure, size_cap: int = DEFAULT_SEMILATTICE_CAP
):
    """Exhaustive search for a semilattice polymorphism of ``b``.

    The table is filled cell by cell in lexicographic order with the
    diagonal pinned to idempotence and commutativity built in;
    associativity is checked incrementally, the polymorphism condition on
    completed tables. Returns a BinaryOpTable or None.
    """
    m = b.size
    if m > size_cap:
        raise CapExceeded(f"semilattice search cap: size {m} > {size_cap}")
    if m == 0:
        return BinaryOpTable(0, ())

    cells = [(i, j) for i in range(m) for j in range(i + 1, m)]
    value = [[i if i == j else None for j in range(m)] for i in range(m)]

    def get(x, y):
        return value[x][y] if x <= y else value[y][x]

    def put(x, y, v):
        if x <= y:
            value[x][y] = v
        else:
            value[y][x] = v

    rng = range(m)

    def associativity_consistent():
        for x in rng:
            for y in rng:
                xy = get(x, y)
                if xy is None:
                    continue
                for z in rng:
                    yz = get(y, z)
                    if yz is None:
                        continue
                    left = get(xy, z)
                    right = get(x, yz)
                    if left is not None and right is not None and left != right:
                        return False
        return True

    def full_table():
        return BinaryOpTable(
            m, tuple(tuple(get(i, j) for j in rng) for i in rng)
        )

    def search(ci):
        if ci == len(cells):
            op = full_table()
            if is_polymorphism(op, b):
                return op
            return None
        i, j = cells[ci]
        for v in rng:
            put(i, j, v)
            if associativity_consistent():
                found = search(ci + 1)
                if found is not None:
                    return found
        put(i, j, None)
        return None

    return search(0)
