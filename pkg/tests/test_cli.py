import json

import pytest

from ordcsp.cli import run_cli

from conftest import complete_graph


def run(capsys, *argv):
    code = run_cli(list(argv))
    out = capsys.readouterr().out
    return code, json.loads(out) if out.strip() else None


def write_json(path, data):
    path.write_text(json.dumps(data, indent=2) + "\n")


@pytest.fixture
def qlt_path(tmp_path, capsys):
    path = tmp_path / "qlt.json"
    assert run_cli(["preset", "--name", "qlt", "--out", str(path)]) == 0
    capsys.readouterr()
    return path


def test_preset_to_stdout(capsys):
    code, data = run(capsys, "preset", "--name", "gamma2")
    assert code == 0
    assert data["name"] == "gamma2"
    assert data["kind"] == "interpretation"
    assert data["dimension"] == 2


def test_preset_unknown(capsys):
    assert run_cli(["preset", "--name", "nope"]) == 2
    assert "unknown preset" in capsys.readouterr().err


def test_sample_matches_definition(tmp_path, capsys, qlt_path):
    out = tmp_path / "b.json"
    code = run_cli(
        ["sample", "--template", str(qlt_path), "--size", "3", "--out", str(out)]
    )
    assert code == 0
    data = json.loads(out.read_text())
    assert data["relations"]["Lt"] == [[0, 1], [0, 2], [1, 2]]


def test_sample_sidecar(tmp_path, capsys):
    t = tmp_path / "g3.json"
    run_cli(["preset", "--name", "gamma3", "--out", str(t)])
    out = tmp_path / "b.json"
    side = tmp_path / "b.reps.json"
    code = run_cli(
        [
            "sample",
            "--template",
            str(t),
            "--size",
            "1",
            "--out",
            str(out),
            "--sidecar",
            str(side),
        ]
    )
    assert code == 0
    assert json.loads(side.read_text()) == {
        "representatives": [[0, 1], [1, 0]],
        "base_grid_size": 2,
    }


def test_solve_exit_codes_and_witness(tmp_path, capsys):
    t = tmp_path / "ord3.json"
    run_cli(["preset", "--name", "ord3", "--out", str(t)])
    good = tmp_path / "good.json"
    write_json(
        good,
        {
            "variables": ["x", "y", "z"],
            "constraints": [{"rel": "T", "args": ["x", "y", "z"]}],
        },
    )
    code, data = run(
        capsys, "solve", "--template", str(t), "--instance", str(good),
        "--witness",
    )
    assert code == 0
    assert data["accept"] is True
    assert data["witness"] == {"x": 1, "y": 0, "z": 0}
    # without --witness the key is suppressed
    code, data = run(
        capsys, "solve", "--template", str(t), "--instance", str(good)
    )
    assert "witness" not in data

    bad = tmp_path / "bad.json"
    write_json(
        bad,
        {
            "variables": ["x"],
            "constraints": [{"rel": "T", "args": ["x", "x", "x"]}],
        },
    )
    code, data = run(
        capsys, "solve", "--template", str(t), "--instance", str(bad)
    )
    assert code == 1
    assert data["accept"] is False


def test_ac_and_hom_disagree_on_k4_k3(tmp_path, capsys):
    k3 = tmp_path / "k3.json"
    write_json(k3, complete_graph(3).to_json_dict())
    k4i = tmp_path / "k4.json"
    vs = ["a", "b", "c", "d"]
    write_json(
        k4i,
        {
            "variables": vs,
            "constraints": [
                {"rel": "E", "args": [p, q]} for p in vs for q in vs if p != q
            ],
        },
    )
    code, data = run(
        capsys, "ac", "--instance", str(k4i), "--structure", str(k3)
    )
    assert code == 0 and data["accept"] is True
    code, data = run(capsys, "hom", "--from", str(k4i), "--to", str(k3))
    assert code == 1 and data["exists"] is False


def test_hom_structure_to_structure(tmp_path, capsys):
    k3 = tmp_path / "k3.json"
    write_json(k3, complete_graph(3).to_json_dict())
    code, data = run(capsys, "hom", "--from", str(k3), "--to", str(k3))
    assert code == 0 and data["exists"] is True


def test_powerset(tmp_path, capsys):
    k3 = tmp_path / "k3.json"
    write_json(k3, complete_graph(3).to_json_dict())
    code, data = run(capsys, "powerset", "--structure", str(k3))
    assert code == 0
    assert data["size"] == 7


def test_check_ts_and_semilattice(tmp_path, capsys):
    b = tmp_path / "b.json"
    write_json(
        b,
        {
            "signature": [{"name": "R", "arity": 2}],
            "size": 2,
            "relations": {"R": [[0, 0], [0, 1], [1, 1]]},
        },
    )
    code, data = run(capsys, "check-ts", "--structure", str(b), "--arity", "2")
    assert code == 0 and data["found"] is True
    code, data = run(capsys, "check-semilattice", "--structure", str(b))
    assert code == 0
    assert data["table"]["table"] == [[0, 0], [0, 1]]

    k3 = tmp_path / "k3.json"
    write_json(k3, complete_graph(3).to_json_dict())
    code, data = run(capsys, "check-ts", "--structure", str(k3), "--arity", "2")
    assert code == 1 and data["found"] is False
    code, data = run(capsys, "check-semilattice", "--structure", str(k3))
    assert code == 1


def test_check_equiv(tmp_path, capsys):
    k3 = tmp_path / "k3.json"
    write_json(k3, complete_graph(3).to_json_dict())
    code, data = run(capsys, "check-equiv", "--structure", str(k3))
    assert code == 0
    assert data["consistent"] is True
    assert data["set_hom"] is False


def test_walk(tmp_path, capsys):
    r = tmp_path / "r.json"
    write_json(
        r,
        {
            "signature": [{"name": "R", "arity": 2}],
            "size": 2,
            "relations": {"R": [[0, 1], [1, 0]]},
        },
    )
    code, data = run(
        capsys, "walk", "--from", str(r), "--to", str(r), "--size", "3"
    )
    assert code == 0
    assert data["walk"]["elements"] == [0, 1, 0]


def test_walk_lemma(tmp_path, capsys):
    b = tmp_path / "b.json"
    write_json(
        b,
        {
            "signature": [{"name": "R", "arity": 2}],
            "size": 2,
            "relations": {"R": [[0, 0], [0, 1], [1, 1]]},
        },
    )
    code, data = run(
        capsys, "walk-lemma", "--structure", str(b), "--arity", "2"
    )
    assert code == 0
    assert data["violations"] == 0


def test_orbits(tmp_path, capsys):
    t = tmp_path / "g2.json"
    run_cli(["preset", "--name", "gamma2", "--out", str(t)])
    code, data = run(capsys, "orbits", "--template", str(t), "--size", "4")
    assert code == 0
    assert data == {"n": 4, "class_count": 8, "exactness": "exact"}


def test_orbits_budget_cap(tmp_path, capsys):
    t = tmp_path / "g1.json"
    run_cli(["preset", "--name", "gamma1", "--out", str(t)])
    code = run_cli(
        ["orbits", "--template", str(t), "--size", "5", "--budget", "10"]
    )
    assert code == 3


def test_schema_error_exit(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert run_cli(["solve", "--template", str(bad), "--instance", str(bad)]) == 2
    err = capsys.readouterr().err
    assert "bad.json" in err
    missing = tmp_path / "missing.json"
    assert run_cli(["hom", "--from", str(missing), "--to", str(missing)]) == 2


def test_usage_error_exit():
    assert run_cli(["frobnicate"]) == 2
    assert run_cli(["solve"]) == 2


def test_preset_file_equals_builtin(tmp_path, capsys, qlt_path):
    # Running on the written preset equals running on the builtin.
    inst = tmp_path / "i.json"
    write_json(
        inst,
        {
            "variables": ["x", "y"],
            "constraints": [{"rel": "Lt", "args": ["x", "y"]}],
        },
    )
    code, via_file = run(
        capsys, "solve", "--template", str(qlt_path), "--instance", str(inst),
        "--witness",
    )
    assert code == 0
    from ordcsp import Instance, preset, solve

    direct = solve(preset("qlt"), Instance(("x", "y"), (("Lt", ("x", "y")),)))
    assert via_file == direct.to_json_dict()


def test_determinism(tmp_path, capsys, qlt_path):
    outs = set()
    for _ in range(3):
        code, data = run(
            capsys, "sample", "--template", str(qlt_path), "--size", "4"
        )
        assert code == 0
        outs.add(json.dumps(data, sort_keys=True))
    assert len(outs) == 1
