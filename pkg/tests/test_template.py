import json

import pytest

from ordcsp import (
    PRESET_NAMES,
    Relation,
    SchemaError,
    Template,
    eq,
    lt,
    preset,
    validate_template,
)
from ordcsp.formula import TRUE, and_


def test_preset_names():
    assert PRESET_NAMES == ("qlt", "ord3", "gamma1", "gamma2", "gamma3")
    with pytest.raises(SchemaError):
        preset("nope")


def test_preset_qlt():
    t = preset("qlt")
    assert t.kind == "direct"
    assert t.dimension == 1
    assert t.semilattice == "min"
    assert [(r.name, r.arity) for r in t.relations] == [("Lt", 2)]


def test_preset_ord3():
    t = preset("ord3")
    assert t.kind == "direct"
    assert len(t.relations) == 1
    assert t.relations[0].arity == 3


def test_preset_gamma1():
    t = preset("gamma1")
    assert t.kind == "interpretation"
    assert t.dimension == 2
    assert len(t.relations) == 9
    assert all(r.arity == 2 for r in t.relations)
    assert t.semilattice is None


def test_preset_gamma2():
    t = preset("gamma2")
    assert [(r.name, r.arity) for r in t.relations] == [("R", 2), ("S", 2)]
    assert t.relation("R").formula == and_(eq(0, 2), lt(1, 3))
    assert t.relation("S").formula == lt(0, 2)


def test_preset_gamma3():
    t = preset("gamma3")
    assert t.domain_formula.free_var_count == 2
    assert [r.name for r in t.relations] == ["M", "Ord"]


@pytest.mark.parametrize("name", PRESET_NAMES)
def test_presets_validate(name):
    assert validate_template(preset(name)) == []


@pytest.mark.parametrize("name", PRESET_NAMES)
def test_preset_json_roundtrip_bit_identical(name):
    t = preset(name)
    text = json.dumps(t.to_json_dict(), indent=2)
    again = Template.from_json_dict(json.loads(text))
    assert json.dumps(again.to_json_dict(), indent=2) == text
    assert again == t


def test_validate_out_of_range_index():
    t = Template(
        name="bad",
        kind="direct",
        dimension=1,
        domain_formula=TRUE,
        equality_formula=eq(0, 1),
        relations=(Relation("R", 2, lt(0, 2)),),
    )
    problems = validate_template(t)
    assert any("index" in p for p in problems)


def test_validate_semilattice_direct_only():
    t = Template(
        name="bad",
        kind="interpretation",
        dimension=2,
        domain_formula=TRUE,
        equality_formula=and_(eq(0, 2), eq(1, 3)),
        relations=(Relation("S", 2, lt(0, 2)),),
        semilattice="min",
    )
    problems = validate_template(t)
    assert any("direct-only" in p for p in problems)


def test_validate_duplicate_relation_names():
    t = Template(
        name="bad",
        kind="direct",
        dimension=1,
        domain_formula=TRUE,
        equality_formula=eq(0, 1),
        relations=(Relation("R", 2, lt(0, 1)), Relation("R", 2, lt(1, 0))),
    )
    assert any("unique" in p for p in validate_template(t))


def test_from_json_rejects_invalid():
    data = preset("gamma2").to_json_dict()
    data["semilattice"] = "min"
    with pytest.raises(SchemaError):
        Template.from_json_dict(data)
    with pytest.raises(SchemaError):
        Template.from_json_dict({"name": "x", "kind": "weird", "relations": []})


def test_direct_defaults():
    data = {
        "name": "tiny",
        "kind": "direct",
        "relations": [{"name": "Lt", "arity": 2, "formula": "(lt 0 1)"}],
    }
    t = Template.from_json_dict(data)
    assert t.dimension == 1
    assert t.domain_formula is TRUE
    assert t.equality_formula == eq(0, 1)
