import json

from mfwsharp.acceptance import torus35_expected
from mfwsharp.cli import main
from mfwsharp.diagram import parse_braid
from mfwsharp.laurent import LaurentPoly2

TORUS = "3: 1 2 1 2 1 2 1 2 1 2"


def _run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_homfly_torus(capsys):
    code, out, _ = _run(capsys, "homfly", "--format", "braid", TORUS)
    assert code == 0
    assert LaurentPoly2.from_json(json.loads(out)["polynomial"]) == torus35_expected()


def test_homfly_both_engines(capsys):
    code, _, _ = _run(capsys, "homfly", "--engine", "both", "3: 1 -2 1 -2")
    assert code == 0


def test_decompose_unknot_is_not_sharp(capsys):
    code, out, _ = _run(capsys, "decompose", "--format", "braid", "3: 1 2")
    doc = json.loads(out)
    assert code == 1 and doc["verdict"] == "not_sharp" and (doc["deg_a_max"], doc["bound"]) == (0, 4)


def test_decompose_then_verify(capsys, tmp_path):
    code, out, _ = _run(capsys, "decompose", TORUS)
    assert code == 0
    script = tmp_path / "script.json"
    script.write_text(json.dumps(json.loads(out)["script"]))
    code, out, _ = _run(capsys, "verify", TORUS, "--script", str(script))
    assert code == 0 and json.loads(out) == {"verified": True}
    code, out, _ = _run(capsys, "verify", "2: 1 1", "--script", str(script))
    assert code == 1


def test_bounds_and_castle(capsys, tmp_path):
    code, out, _ = _run(capsys, "bounds", "--assert-positive", TORUS)
    assert code == 0 and json.loads(out)["positive_equalities"]["ok"]
    dot = tmp_path / "castle.dot"
    code, out, _ = _run(capsys, "castle", TORUS, "--dot", str(dot))
    assert code == 0 and not json.loads(out)["has_traps"]
    assert dot.read_text().startswith("graph castle")


def test_pd_file_input(capsys, tmp_path):
    pd = tmp_path / "hopf.json"
    pd.write_text(json.dumps(parse_braid("2: 1 1").to_pd()))
    code, out, _ = _run(capsys, "homfly", str(pd), "--output", str(tmp_path / "out.json"))
    assert code == 0 and out == ""
    assert json.loads((tmp_path / "out.json").read_text())["polynomial"]


def test_input_errors(capsys):
    code, out, err = _run(capsys, "homfly", "3: 1 x")
    assert code == 2 and out == "" and err.startswith("error:")
    code, _, _ = _run(capsys, "decompose", "3: 1 -2")
    assert code == 2
    code, _, _ = _run(capsys, "homfly", "--format", "pd", "{not json")
    assert code == 2


def test_output_is_deterministic(capsys):
    first = _run(capsys, "decompose", TORUS)[1]
    assert _run(capsys, "decompose", TORUS)[1] == first
