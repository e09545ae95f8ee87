"""Exhaustive homomorphism search.

``hom_exists`` decides whether an instance (or a whole structure) maps
homomorphically into a target structure, by backtracking with forward
checking. The search is complete, so an absent result is authoritative.
"""

from __future__ import annotations

from .errors import SignatureMismatch
from .structures import FiniteStructure, Instance, instance_view


def _constraint_view(a, b: FiniteStructure):
    if isinstance(a, FiniteStructure):
        for name, arity in a.signature.symbols:
            if name not in b.signature:
                raise SignatureMismatch(f"unknown relation symbol {name!r}")
            if b.signature.arity(name) != arity:
                raise SignatureMismatch(
                    f"relation {name!r}: arity {arity} vs "
                    f"{b.signature.arity(name)} in target"
                )
        return instance_view(a)
    if isinstance(a, Instance):
        a.check_against(b.signature)
        return list(a.variables), list(a.constraints)
    raise TypeError(f"expected Instance or FiniteStructure, got {type(a)!r}")


def _filter_constraint(tuples, args, assignment, domains):
    """Per-variable supported values for one constraint, or None if no
    tuple is compatible with the current assignment and domains."""
    supported = {v: set() for v in args if v not in assignment}
    alive = False
    for t in tuples:
        values = {}
        ok = True
        for pos, v in enumerate(args):
            x = t[pos]
            if v in assignment:
                if assignment[v] != x:
                    ok = False
                    break
            else:
                prev = values.get(v)
                if prev is None:
                    if x not in domains[v]:
                        ok = False
                        break
                    values[v] = x
                elif prev != x:
                    ok = False
                    break
        if ok:
            alive = True
            for v, x in values.items():
                supported[v].add(x)
    if not alive:
        return None
    return supported


def hom_exists(a, b: FiniteStructure):
    """Search for a homomorphism from ``a`` into ``b``.

    ``a`` may be an Instance or a FiniteStructure (its elements then act
    as variables). Returns a mapping dict on success, None when no
    homomorphism exists.
    """
    variables, constraints = _constraint_view(a, b)
    if not variables:
        return {}
    relation_tuples = [
        (sorted(b.relations[rel]), tuple(args)) for rel, args in constraints
    ]
    by_var = {v: [] for v in variables}
    for idx, (_, args) in enumerate(relation_tuples):
        for v in set(args):
            by_var[v].append(idx)

    order_index = {v: i for i, v in enumerate(variables)}
    domains = {v: set(range(b.size)) for v in variables}

    def propagate(domains, assignment, dirty):
        # Re-filter constraints touching changed variables to a fixpoint.
        queue = list(dict.fromkeys(dirty))
        queued = set(queue)
        while queue:
            ci = queue.pop()
            queued.discard(ci)
            tuples, args = relation_tuples[ci]
            supported = _filter_constraint(tuples, args, assignment, domains)
            if supported is None:
                return False
            for v, values in supported.items():
                if not values:
                    return False
                if values < domains[v]:
                    domains[v] = values
                    for cj in by_var[v]:
                        if cj != ci and cj not in queued:
                            queue.append(cj)
                            queued.add(cj)
        return True

    assignment = {}

    def search(domains):
        if len(assignment) == len(variables):
            return dict(assignment)
        var = min(
            (v for v in variables if v not in assignment),
            key=lambda v: (len(domains[v]), order_index[v]),
        )
        for value in sorted(domains[var]):
            assignment[var] = value
            trial = {v: set(d) for v, d in domains.items()}
            trial[var] = {value}
            if propagate(trial, assignment, by_var[var]):
                result = search(trial)
                if result is not None:
                    return result
            del assignment[var]
        return None

    if not propagate(domains, assignment, range(len(relation_tuples))):
        return None
    return search(domains)
