"""Command-line front end over the JSON file formats.

One verb per capability::

    preset            write a built-in template
    sample            sample a template at a given size
    solve             decide an instance against a template
    ac                run arc-consistency on (instance, structure)
    hom               exhaustive homomorphism search between two files
    powerset          the structure on non-empty domain subsets
    check-ts          search a totally symmetric polymorphism
    check-semilattice search a semilattice polymorphism
    check-equiv       subset-structure vs totally-symmetric agreement
    walk              shortest alternating closed walk on two relations
    orbits            growth report for a template

JSON goes to --out or stdout; human-readable summaries go to stderr.
Exit codes: 0 accept/found/success, 1 reject/absent, 2 usage or format
error, 3 internal cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import CapExceeded, SchemaError, VerificationFailed
from .hom import hom_exists
from .lab import (
    check_aclwalk_lemma,
    check_set_hom_equiv,
    find_alternating_walk,
    orbit_count,
)
from .polymorphism import find_semilattice, has_ts_polymorphism
from .powerset import DEFAULT_SUBSET_CAP_BITS, power_structure
from .sampler import sample
from .solver import ac, solve
from .structures import FiniteStructure, Instance
from .template import Template, preset

EXIT_ACCEPT = 0
EXIT_REJECT = 1
EXIT_USAGE = 2
EXIT_CAP = 3


def _load_json(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except FileNotFoundError as exc:
        raise SchemaError(f"{path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{path}:{exc.lineno}:{exc.colno}: {exc.msg}") from exc


def load_template(path) -> Template:
    return Template.from_json_dict(_load_json(path))


def load_instance(path) -> Instance:
    return Instance.from_json_dict(_load_json(path))


def load_structure(path) -> FiniteStructure:
    return FiniteStructure.from_json_dict(_load_json(path))


def load_instance_or_structure(path):
    data = _load_json(path)
    if "variables" in data:
        return Instance.from_json_dict(data)
    return FiniteStructure.from_json_dict(data)


def _emit(data: dict, out_path, note=None):
    text = json.dumps(data, indent=2) + "\n"
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if note:
        print(note, file=sys.stderr)


def _cmd_preset(args):
    t = preset(args.name)
    _emit(t.to_json_dict(), args.out, f"preset {args.name!r}")
    return EXIT_ACCEPT


def _cmd_sample(args):
    t = load_template(args.template)
    smp = sample(t, args.size, **_sampler_kwargs(args))
    note = (
        f"sample of {t.name!r} at n={args.size}: "
        f"{smp.structure.size} elements"
    )
    _emit(smp.structure.to_json_dict(), args.out, note)
    if args.sidecar:
        with open(args.sidecar, "w") as fh:
            fh.write(json.dumps(smp.sidecar_json_dict(), indent=2) + "\n")
    return EXIT_ACCEPT


def _cmd_solve(args):
    t = load_template(args.template)
    instance = load_instance(args.instance)
    verdict = solve(t, instance, **_sampler_kwargs(args))
    data = verdict.to_json_dict()
    if not args.witness:
        data.pop("witness", None)
    _emit(data, args.out, "accept" if verdict.accept else "reject")
    return EXIT_ACCEPT if verdict.accept else EXIT_REJECT


def _cmd_ac(args):
    instance = load_instance(args.instance)
    structure = load_structure(args.structure)
    accept, h = ac(instance, structure)
    data = {
        "accept": accept,
        "domains": {v: sorted(h[v]) for v in instance.variables},
    }
    _emit(data, args.out, "accept" if accept else "reject")
    return EXIT_ACCEPT if accept else EXIT_REJECT


def _cmd_hom(args):
    a = load_instance_or_structure(getattr(args, "from"))
    b = load_structure(args.to)
    mapping = hom_exists(a, b)
    data = {
        "exists": mapping is not None,
        "mapping": (
            {str(k): v for k, v in mapping.items()} if mapping else None
        ),
    }
    _emit(data, args.out, "found" if mapping is not None else "absent")
    return EXIT_ACCEPT if mapping is not None else EXIT_REJECT


def _cmd_powerset(args):
    structure = load_structure(args.structure)
    p = power_structure(structure, args.max_subset_bits)
    _emit(p.to_json_dict(), args.out, f"{p.size} subsets")
    return EXIT_ACCEPT


def _cmd_check_ts(args):
    structure = load_structure(args.structure)
    table = has_ts_polymorphism(structure, args.arity, args.budget)
    data = {
        "arity": args.arity,
        "found": table is not None,
        "table": table.to_json_dict() if table else None,
    }
    _emit(data, args.out, "found" if table else "absent")
    return EXIT_ACCEPT if table else EXIT_REJECT


def _cmd_check_semilattice(args):
    structure = load_structure(args.structure)
    table = find_semilattice(structure)
    data = {"found": table is not None}
    if table:
        data["table"] = table.to_json_dict()
    _emit(data, args.out, "found" if table else "absent")
    return EXIT_ACCEPT if table else EXIT_REJECT


def _cmd_check_equiv(args):
    structure = load_structure(args.structure)
    report = check_set_hom_equiv(structure)
    _emit(
        report.to_json_dict(),
        args.out,
        "consistent" if report.consistent else "INCONSISTENT",
    )
    return EXIT_ACCEPT if report.consistent else EXIT_REJECT


def _cmd_walk(args):
    r_struct = load_structure(getattr(args, "from"))
    s_struct = load_structure(args.to)
    r = _single_binary_relation(r_struct, getattr(args, "from"))
    s = _single_binary_relation(s_struct, args.to)
    walk = find_alternating_walk(r, s, args.size)
    data = {"found": walk is not None}
    if walk:
        data["walk"] = walk.to_json_dict()
    _emit(data, args.out, "found" if walk else "absent")
    return EXIT_ACCEPT if walk else EXIT_REJECT


def _cmd_orbits(args):
    t = load_template(args.template)
    report = orbit_count(t, args.size, args.budget)
    _emit(
        report.to_json_dict(),
        args.out,
        f"{report.class_count} classes ({report.exactness})",
    )
    return EXIT_ACCEPT


def _cmd_walk_lemma(args):
    structure = load_structure(args.structure)
    report = check_aclwalk_lemma(structure, args.arity)
    _emit(
        report.to_json_dict(),
        args.out,
        f"{len(report.violations)} violations over {len(report.pairs)} pairs",
    )
    return EXIT_ACCEPT if not report.violations else EXIT_REJECT


def _single_binary_relation(structure, path):
    binary = [
        structure.relations[name]
        for name, arity in structure.signature.symbols
        if arity == 2
    ]
    if len(binary) != 1:
        raise SchemaError(
            f"{path}: expected exactly one binary relation, "
            f"found {len(binary)}"
        )
    return binary[0]


def _sampler_kwargs(args):
    kwargs = {}
    if getattr(args, "seed", None) is not None:
        kwargs["seed"] = args.seed
    return kwargs


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ordcsp",
        description="Sampling + arc-consistency solving for order-definable "
        "templates, with verification tools.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help_text):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(fn=fn)
        p.add_argument("--out", help="write JSON here instead of stdout")
        return p

    p = add("preset", _cmd_preset, "write a built-in template")
    p.add_argument("--name", required=True)

    p = add("sample", _cmd_sample, "sample a template at a given size")
    p.add_argument("--template", required=True)
    p.add_argument("--size", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--sidecar", help="also write representatives here")

    p = add("solve", _cmd_solve, "decide an instance against a template")
    p.add_argument("--template", required=True)
    p.add_argument("--instance", required=True)
    p.add_argument("--witness", action="store_true")
    p.add_argument("--seed", type=int, default=0)

    p = add("ac", _cmd_ac, "arc-consistency on (instance, structure)")
    p.add_argument("--instance", required=True)
    p.add_argument("--structure", required=True)

    p = add("hom", _cmd_hom, "homomorphism search between two files")
    p.add_argument("--from", required=True)
    p.add_argument("--to", required=True)

    p = add("powerset", _cmd_powerset, "structure on non-empty subsets")
    p.add_argument("--structure", required=True)
    p.add_argument(
        "--max-subset-bits", type=int, default=DEFAULT_SUBSET_CAP_BITS
    )

    p = add("check-ts", _cmd_check_ts, "totally symmetric polymorphism")
    p.add_argument("--structure", required=True)
    p.add_argument("--arity", type=int, required=True)
    p.add_argument("--budget", type=int, default=10**6)

    p = add("check-semilattice", _cmd_check_semilattice, "semilattice search")
    p.add_argument("--structure", required=True)

    p = add(
        "check-equiv",
        _cmd_check_equiv,
        "subset-structure hom vs totally symmetric polymorphism",
    )
    p.add_argument("--structure", required=True)

    p = add("walk", _cmd_walk, "shortest alternating closed walk")
    p.add_argument("--from", required=True, help="structure with relation R")
    p.add_argument("--to", required=True, help="structure with relation S")
    p.add_argument("--size", type=int, required=True, help="max half length")

    p = add("walk-lemma", _cmd_walk_lemma, "alternating-walk consequence check")
    p.add_argument("--structure", required=True)
    p.add_argument("--arity", type=int, required=True)

    p = add("orbits", _cmd_orbits, "growth of distinguishable n-subsets")
    p.add_argument("--template", required=True)
    p.add_argument("--size", type=int, required=True)
    p.add_argument("--budget", type=int, default=10**7)

    return parser


def run_cli(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_ACCEPT
    try:
        return args.fn(args)
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (SchemaError, VerificationFailed, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main(argv=None):
    sys.exit(run_cli(argv))


if __name__ == "__main__":
    main()
