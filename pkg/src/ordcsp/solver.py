"""Arc-consistency propagation and the sampling solver.

``ac`` shrinks a per-variable candidate set (the domain map) to the
greatest fixpoint of the projection rule

    h(x_i) := { t[i] : t in R_B, t[j] in h(x_j) for all j }

over all constraints, starting from full domains, and accepts iff every
candidate set stays non-empty. Repeated variables in a constraint
constrain every one of their coordinates through the same set; the rule
does not force equal values across coordinates, which is exactly what
makes the procedure incomplete in general.

Two schedulers are provided: the default worklist (constraints re-queued
when one of their variables shrinks) and a literal round-robin sweep.
Both run to the fixpoint even once a set is empty, and the fixpoint is
unique, so they return identical domain maps.

``solve`` ties the pieces together: sample the template at the instance's
variable count, run ac, and -- for direct templates declaring a
semilattice -- extract and verify a concrete witness by folding min (or
max) over each accepted candidate set.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import SignatureMismatch, VerificationFailed
from .formula import compile_formula
from .sampler import Sample, sample
from .structures import FiniteStructure, Instance
from .template import DIRECT, Template


def _projection_pass(tuples, args, h):
    """One sequential sweep of the projection rule over a constraint's
    coordinates. Returns the variables whose sets shrank."""
    changed = set()
    for i, var in enumerate(args):
        new = set()
        for t in tuples:
            if all(t[p] in h[args[p]] for p in range(len(args))):
                new.add(t[i])
        if new != h[var]:
            h[var] = new
            changed.add(var)
    return changed


def _prepared(instance: Instance, b: FiniteStructure):
    instance.check_against(b.signature)
    return [
        (sorted(b.relations[rel]), tuple(args))
        for rel, args in instance.constraints
    ]


def ac(instance: Instance, b: FiniteStructure):
    """Worklist arc-consistency. Returns (accept, domain map)."""
    constraints = _prepared(instance, b)
    h = {v: set(range(b.size)) for v in instance.variables}
    by_var: dict[str, list[int]] = {v: [] for v in instance.variables}
    for ci, (_, args) in enumerate(constraints):
        for v in set(args):
            by_var[v].append(ci)

    queue = deque(range(len(constraints)))
    queued = set(queue)
    while queue:
        ci = queue.popleft()
        queued.discard(ci)
        tuples, args = constraints[ci]
        changed = _projection_pass(tuples, args, h)
        for v in sorted(changed):
            for cj in by_var[v]:
                if cj not in queued:
                    queue.append(cj)
                    queued.add(cj)
    accept = all(h[v] for v in instance.variables)
    return accept, h


def ac_roundrobin(instance: Instance, b: FiniteStructure, history=None):
    """Reference scheduler: sweep all constraints in declaration order
    until nothing changes. Same fixpoint as ``ac``.

    ``history``, when a list, receives a snapshot of the domain map after
    every sweep (for monotonicity checks)."""
    constraints = _prepared(instance, b)
    h = {v: set(range(b.size)) for v in instance.variables}
    if history is not None:
        history.append({v: frozenset(s) for v, s in h.items()})
    changed = True
    while changed:
        changed = False
        for tuples, args in constraints:
            if _projection_pass(tuples, args, h):
                changed = True
        if history is not None:
            history.append({v: frozenset(s) for v, s in h.items()})
    accept = all(h[v] for v in instance.variables)
    return accept, h


@dataclass
class Verdict:
    """Outcome of a solve run. ``domains`` (sorted candidate lists) is
    present iff accepting; ``witness`` additionally needs a direct
    template with a declared semilattice."""

    accept: bool
    sample_size: int
    domains: dict[str, list[int]] | None = None
    witness: dict[str, int] | None = None

    def to_json_dict(self) -> dict:
        out = {"accept": self.accept, "sample_size": self.sample_size}
        if self.domains is not None:
            out["domains"] = self.domains
        if self.witness is not None:
            out["witness"] = self.witness
        return out


def verify_assignment(t: Template, instance: Instance, assignment) -> bool:
    """Check an assignment of integer points against every constraint's
    defining formula. Direct templates take one integer per variable."""
    for v in instance.variables:
        if v not in assignment:
            raise ValueError(f"assignment is missing variable {v!r}")
    d = t.dimension
    points = {}
    for v, val in assignment.items():
        point = (val,) if isinstance(val, int) else tuple(val)
        if len(point) != d:
            raise ValueError(
                f"variable {v!r}: point {point} has dimension "
                f"{len(point)}, template needs {d}"
            )
        points[v] = point
    for rel_name, args in instance.constraints:
        rel = t.relation(rel_name)
        flat = tuple(x for v in args for x in points[v])
        if not compile_formula(rel.formula)(flat):
            return False
    return True


def extract_witness(t: Template, instance: Instance, domains) -> dict:
    """Fold the declared semilattice operation over each accepted
    candidate set and verify the result. Never returns unverified."""
    if t.kind != DIRECT or t.semilattice is None:
        raise ValueError(
            "witness extraction needs a direct template with a declared "
            "semilattice"
        )
    fold = min if t.semilattice == "min" else max
    witness = {}
    for v in instance.variables:
        if not domains.get(v):
            raise ValueError(f"variable {v!r} has an empty candidate set")
        witness[v] = fold(domains[v])
    if not verify_assignment(t, instance, witness):
        raise VerificationFailed(
            f"the declared {t.semilattice} fold does not satisfy the "
            f"instance; {t.semilattice} does not preserve the template's "
            f"relations"
        )
    return witness


def solve(t: Template, instance: Instance, **sample_kwargs) -> Verdict:
    """Sample at the instance's variable count, propagate, report.

    An instance with no variables is accepted immediately (sample_size 0).
    """
    _check_instance_symbols(t, instance)
    n = len(instance.variables)
    if n == 0:
        verdict = Verdict(True, 0, {})
        if t.kind == DIRECT and t.semilattice is not None:
            verdict.witness = {}
        return verdict
    smp: Sample = sample(t, n, **sample_kwargs)
    accept, h = ac(instance, smp.structure)
    if not accept:
        return Verdict(False, smp.structure.size)
    domains = {v: sorted(h[v]) for v in instance.variables}
    verdict = Verdict(True, smp.structure.size, domains)
    if t.kind == DIRECT and t.semilattice is not None:
        verdict.witness = extract_witness(t, instance, domains)
    return verdict


def _check_instance_symbols(t: Template, instance: Instance):
    names = {rel.name for rel in t.relations}
    for rel_name, args in instance.constraints:
        if rel_name not in names:
            raise SignatureMismatch(
                f"template {t.name!r} has no relation {rel_name!r}"
            )
        rel = t.relation(rel_name)
        if rel.arity != len(args):
            raise SignatureMismatch(
                f"constraint {rel_name!r} has {len(args)} arguments, "
                f"template arity is {rel.arity}"
            )
