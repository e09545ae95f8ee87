"""Finite relational structures and constraint instances.

A ``FiniteStructure`` is a domain ``{0, ..., size-1}`` together with one
named relation (a set of tuples) per signature symbol. An ``Instance`` is
the input side of a constraint problem: named variables plus constraints
``(symbol, variable tuple)`` to be interpreted in some target structure.

Both have a stable JSON form, documented next to ``to_json_dict``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import SchemaError, SignatureMismatch


@dataclass(frozen=True)
class Signature:
    """Ordered relation symbols with arities; names unique, arity >= 1."""

    symbols: tuple[tuple[str, int], ...]

    def __post_init__(self):
        seen = set()
        for name, arity in self.symbols:
            if not isinstance(name, str) or not name:
                raise SchemaError(f"bad relation name {name!r}")
            if name in seen:
                raise SchemaError(f"duplicate relation name {name!r}")
            if not isinstance(arity, int) or arity < 1:
                raise SchemaError(f"relation {name!r} has bad arity {arity!r}")
            seen.add(name)

    def names(self):
        return [name for name, _ in self.symbols]

    def arity(self, name: str) -> int:
        for sym, arity in self.symbols:
            if sym == name:
                return arity
        raise SignatureMismatch(f"unknown relation symbol {name!r}")

    def __contains__(self, name):
        return any(sym == name for sym, _ in self.symbols)


@dataclass
class FiniteStructure:
    """Domain {0..size-1} plus a tuple set per signature symbol.

    Instances are treated as immutable after construction. ``labels``
    optionally gives a display string per element.
    """

    signature: Signature
    size: int
    relations: dict[str, frozenset[tuple[int, ...]]]
    labels: tuple[str, ...] | None = None

    def __post_init__(self):
        if self.size < 0:
            raise SchemaError("size must be non-negative")
        normalized = {}
        for name, arity in self.signature.symbols:
            tuples = frozenset(tuple(t) for t in self.relations.get(name, ()))
            for t in tuples:
                if len(t) != arity:
                    raise SchemaError(
                        f"relation {name!r}: tuple {t} has length {len(t)}, "
                        f"declared arity is {arity}"
                    )
                for x in t:
                    if not isinstance(x, int) or not 0 <= x < self.size:
                        raise SchemaError(
                            f"relation {name!r}: entry {x!r} outside domain "
                            f"[0, {self.size})"
                        )
            normalized[name] = tuples
        extra = set(self.relations) - set(normalized)
        if extra:
            raise SchemaError(f"relations not in signature: {sorted(extra)}")
        self.relations = normalized
        if self.labels is not None:
            self.labels = tuple(str(s) for s in self.labels)
            if len(self.labels) != self.size:
                raise SchemaError("labels must have one entry per element")

    def max_arity(self) -> int:
        return max((a for _, a in self.signature.symbols), default=0)

    def to_json_dict(self) -> dict:
        """JSON form: {"signature": [{"name","arity"}...], "size": m,
        "relations": {name: [[...], ...]}, "labels": [...]?}"""
        out = {
            "signature": [
                {"name": n, "arity": a} for n, a in self.signature.symbols
            ],
            "size": self.size,
            "relations": {
                name: [list(t) for t in sorted(tuples)]
                for name, tuples in self.relations.items()
            },
        }
        if self.labels is not None:
            out["labels"] = list(self.labels)
        return out

    @classmethod
    def from_json_dict(cls, data: dict) -> "FiniteStructure":
        try:
            symbols = tuple(
                (entry["name"], entry["arity"]) for entry in data["signature"]
            )
            size = data["size"]
            relations = {
                name: frozenset(tuple(t) for t in tuples)
                for name, tuples in data.get("relations", {}).items()
            }
            labels = data.get("labels")
        except (KeyError, TypeError) as exc:
            raise SchemaError(f"bad structure JSON: {exc}") from exc
        return cls(
            Signature(symbols),
            size,
            relations,
            tuple(labels) if labels is not None else None,
        )


@dataclass
class Instance:
    """Variables plus constraints; repeated variables in a constraint are
    allowed."""

    variables: tuple[str, ...]
    constraints: tuple[tuple[str, tuple[str, ...]], ...] = field(
        default_factory=tuple
    )

    def __post_init__(self):
        self.variables = tuple(str(v) for v in self.variables)
        if len(set(self.variables)) != len(self.variables):
            raise SchemaError("variable names must be unique")
        known = set(self.variables)
        normalized = []
        for rel, args in self.constraints:
            args = tuple(str(a) for a in args)
            for a in args:
                if a not in known:
                    raise SchemaError(
                        f"constraint {rel!r} uses undeclared variable {a!r}"
                    )
            normalized.append((str(rel), args))
        self.constraints = tuple(normalized)

    def check_against(self, signature: Signature):
        """Raise SignatureMismatch unless every constraint symbol exists in
        the signature with matching arity."""
        for rel, args in self.constraints:
            arity = signature.arity(rel)
            if arity != len(args):
                raise SignatureMismatch(
                    f"constraint {rel!r} has {len(args)} arguments, "
                    f"declared arity is {arity}"
                )

    def to_json_dict(self) -> dict:
        """JSON form: {"variables": [...],
        "constraints": [{"rel": name, "args": [...]}, ...]}"""
        return {
            "variables": list(self.variables),
            "constraints": [
                {"rel": rel, "args": list(args)}
                for rel, args in self.constraints
            ],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "Instance":
        try:
            variables = tuple(data["variables"])
            constraints = tuple(
                (entry["rel"], tuple(entry["args"]))
                for entry in data.get("constraints", [])
            )
        except (KeyError, TypeError) as exc:
            raise SchemaError(f"bad instance JSON: {exc}") from exc
        return cls(variables, constraints)


def instance_view(structure: FiniteStructure):
    """View a structure as (variables, constraints) with its elements as
    variables, for feeding structures to instance-shaped searches."""
    variables = list(range(structure.size))
    constraints = [
        (name, t)
        for name, tuples in structure.relations.items()
        for t in sorted(tuples)
    ]
    return variables, constraints
