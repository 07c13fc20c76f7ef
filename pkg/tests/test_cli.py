"""CLI: JSON contracts, exit codes, determinism."""

import json

import pytest

from safecycle.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_classify_bad(capsys):
    code, out = run(
        capsys, "classify", "--colouring-json", '{"k":4,"colours":[1,2,1,3]}'
    )
    assert code == 0
    data = json.loads(out)
    assert data["verdict"] == "bad"
    assert data["condition"] == 2


def test_classify_good(capsys):
    code, out = run(
        capsys, "classify", "--colouring-json", '{"k":5,"colours":[1,2,1,2,1,2]}'
    )
    assert code == 0
    assert json.loads(out)["verdict"] == "good"


def test_classify_neither(capsys):
    code, out = run(
        capsys, "classify", "--colouring-json", '{"k":6,"colours":[1,2,3,4,1,2,3,4]}'
    )
    assert code == 0
    assert json.loads(out)["verdict"] == "neither"


def test_malformed_colouring(capsys):
    code, out = run(capsys, "classify", "--colouring-json", '{"k":4,"colours":[1,1,2]}')
    assert code == 2
    assert "error" in json.loads(out)


def test_witness_roundtrip(capsys):
    code, out = run(
        capsys, "witness", "--colouring-json", '{"k":5,"colours":[1,2,3,1,2,4]}'
    )
    assert code == 0
    data = json.loads(out)
    assert data["kind"] == "two_apex"
    assert data["oracle_extension"] is None
    g = data["gadget"]
    assert len(g["triangles"]) == g["boundary_len"] + 2 * g["internal_count"] - 2


def test_witness_refusal(capsys):
    code, out = run(
        capsys, "witness", "--colouring-json", '{"k":5,"colours":[1,2,1,2,1,2]}'
    )
    assert code == 2
    assert json.loads(out)["refusal"] == "not-bad"


def wheel_json(l):
    edges = sorted([i + 1, (i + 1) % l + 1] for i in range(l))
    edges += sorted([i + 1, l + 1] for i in range(l))
    tris = [sorted((i + 1, (i + 1) % l + 1, l + 1)) for i in range(l)]
    return json.dumps(
        {
            "boundary_len": l,
            "internal_count": 1,
            "edges": sorted(edges),
            "triangles": sorted(tris),
        }
    )


def test_extend_success(capsys):
    code, out = run(
        capsys,
        "extend",
        "--colouring-json",
        '{"k":5,"colours":[1,2,1,2,1,2]}',
        "--graph-json",
        wheel_json(6),
    )
    assert code == 0
    data = json.loads(out)
    assert data["colouring"][:6] == [1, 2, 1, 2, 1, 2]
    assert data["colouring"][6] in (3, 4, 5)


def test_extend_refusal_not_good(capsys):
    code, out = run(
        capsys,
        "extend",
        "--colouring-json",
        '{"k":5,"colours":[1,2,3,1,2,4]}',
        "--graph-json",
        wheel_json(6),
    )
    assert code == 2
    assert json.loads(out)["refusal"] == "not-good"


def test_probe(capsys):
    code, out = run(
        capsys,
        "probe",
        "--colouring-json",
        '{"k":5,"colours":[1,2,3,1,2,4]}',
        "--nmax",
        "2",
    )
    assert code == 0
    data = json.loads(out)
    assert data["outcome"] == "counterexample"
    assert data["meta"]["scanned"] >= 1


def test_enumerate_stream(capsys):
    code, out = run(capsys, "enumerate", "--l", "4", "--n", "0")
    assert code == 0
    lines = [json.loads(line) for line in out.splitlines()]
    assert len(lines) == 2


def test_deterministic_output(capsys):
    args = ("classify", "--colouring-json", '{"k":5,"colours":[1,2,3,1,2,4]}')
    _, first = run(capsys, *args)
    _, second = run(capsys, *args)
    assert first == second


def test_result_payload_has_no_wall_time(capsys):
    _, out = run(
        capsys, "probe", "--colouring-json", '{"k":5,"colours":[1,2,1,2,1,2]}',
        "--nmax", "1",
    )
    data = json.loads(out)
    meta = data.pop("meta")
    assert "wall_time" in meta
    assert "wall_time" not in json.dumps(data)


def test_internal_invariant_exit_code(capsys, monkeypatch):
    import safecycle.cli as cli
    from safecycle.errors import InternalInvariantError

    def boom(c, g):
        raise InternalInvariantError("forced dead end", (("t12", 4, 2, 9),))

    monkeypatch.setattr(cli, "theorem_main_extend", boom)
    code, out = run(
        capsys,
        "extend",
        "--colouring-json",
        '{"k":5,"colours":[1,2,1,2,1,2]}',
        "--graph-json",
        wheel_json(6),
    )
    assert code == 3
    data = json.loads(out)
    assert data["error"]["code"] == "internal-invariant"
    assert data["error"]["trace"]
