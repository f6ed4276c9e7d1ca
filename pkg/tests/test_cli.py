import io
import json
import subprocess
import sys

import pytest

from grassmann.cli import main


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def swap_map(tmp_path):
    path = tmp_path / "swap.json"
    path.write_text(json.dumps({"signature": {"n": 3, "field": "q"}, "e1": "e2", "e2": "e1"}))
    return str(path)


@pytest.fixture
def composite_map(tmp_path):
    path = tmp_path / "composite.json"
    path.write_text(
        json.dumps({"signature": {"n": 3, "field": "q"}, "e1": "e2 + e1^e2^e3", "e2": "e1 + 2*e2", "e3": "e3 - e1"})
    )
    return str(path)


def test_eval():
    assert run("eval", "--n", "3", "e2^e1 + e1^e2") == (0, "0\n", "")
    code, out, _ = run("eval", "--n", "3", "3*e1^e2 + 2*e3")
    assert out == "2*e3 + 3*e1^e2\n"


def test_eval_json():
    code, out, _ = run("eval", "--n", "2", "--output", "json", "e2^e1")
    assert code == 0
    assert json.loads(out) == {
        "signature": {"n": 2, "field": "q"},
        "result": "-1*e1^e2",
        "terms": [{"blade": [1, 2], "coeff": "-1"}],
    }


def test_det_all():
    code, out, _ = run("det", "--inline", "1 2; 3 4", "--method", "all")
    assert code == 0
    lines = out.splitlines()
    assert lines[:3] == ["wedge: -2", "leibniz: -2", "cofactor: -2"]
    assert "agree: true" in lines


def test_det_file_and_json(tmp_path):
    path = tmp_path / "m.txt"
    path.write_text("2 0 0\n0 3 0\n1 1 1\n")
    code, out, _ = run("det", "--matrix", str(path), "--method", "cofactor", "--row", "3", "--output", "json")
    data = json.loads(out)
    assert code == 0 and data["result"] == "6" and data["methods"] == {"cofactor": "6"}
    assert data["terms"] == [{"blade": [], "coeff": "6"}]


def test_aut_commands(swap_map, composite_map):
    assert run("aut", "apply", "--map", swap_map, "e1^e2") == (0, "-1*e1^e2\n", "")
    code, out, _ = run("aut", "check", "--map", swap_map)
    assert code == 0 and "automorphism: true" in out
    code, out, _ = run("aut", "decompose", "--map", composite_map)
    assert code == 0 and out.startswith("n_part:")
    code, out, _ = run("aut", "invert", "--map", composite_map, "--output", "json")
    assert code == 0 and json.loads(out)["result"] == "inverse"


def test_center_and_comm():
    code, out, _ = run("center", "--n", "3")
    assert out == "center (n=3, dim=5): 1, e1^e2, e1^e3, e2^e3, e1^e2^e3\n"
    code, out, _ = run("comm", "--n", "3", "--output", "json")
    assert json.loads(out)["blades"] == [[], [1, 2], [1, 3], [2, 3]]


def test_invariant_check_refutes():
    code, out, _ = run("invariant", "check", "--n", "4", "--grades", "0,1")
    assert code == 0
    assert "verdict: refuted" in out and "witness" in out
    code, out, _ = run("invariant", "check", "--n", "4", "--grades", "0,1", "--output", "json")
    data = json.loads(out)
    assert data["verdict"] == "refuted" and data["witness"]["escaping_grade"] >= 2


def test_invariant_check_survives():
    code, out, _ = run("invariant", "check", "--n", "4", "--grades", "0,2,4", "--samples", "40")
    assert code == 0 and "invariant_on_sample" in out


def test_classify_small():
    code, out, _ = run("invariant", "classify", "--n", "2", "--samples", "30")
    assert code == 0 and "anomalies: none" in out


def test_construct():
    code, out, _ = run("construct", "char2-demo")
    assert code == 0
    assert "e1e2 == e2e1: true" in out and "reducible to 0: false" in out
    assert run("construct", "normalize", "--n", "3", "e3 e1 e2") == (0, "1*e1^e2^e3\n", "")
    code, out, _ = run("construct", "normalize", "--n", "3", "--mode", "commutative", "3*e2 e1 e2")
    assert out == "3*x1 x2^2\n"
    code, out, _ = run("construct", "normalize", "--n", "2", "--field", "fp:2", "--mode", "anticommutative_m2", "e1 e1")
    assert out == "1*e1 e1\n"


@pytest.mark.parametrize(
    "argv, code",
    [
        (["invariant", "check", "--n", "3", "--grades", "0,2", "--field", "fp:2"], 1),
        (["aut", "check", "--map", "/nonexistent/map.json"], 2),
        (["eval", "--n", "3", "e1 +"], 2),
        (["eval", "--n", "3", "e0"], 2),
        (["eval", "--n", "0", "1"], 2),
        (["det", "--inline", "1 2; 3"], 2),
        (["det", "--inline", "1 2; 3 4", "--method", "leibniz", "--field", "fp:6"], 2),
        (["invariant", "check", "--n", "3", "--grades", "0,7"], 2),
        (["bogus"], 2),
    ],
)
def test_exit_codes(argv, code, capsys):
    assert run(*argv)[0] == code


def test_domain_error_message(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"signature": {"n": 3}, "e1": "e1 + e2^e3"}))
    code, out, err = run("aut", "check", "--map", str(path))
    assert code == 1 and "2*e1^e2^e3" in err


def test_determinism():
    argv = ["invariant", "classify", "--n", "3", "--samples", "20", "--seed", "5", "--output", "json"]
    assert run(*argv) == run(*argv)


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "grassmann", "eval", "--n", "2", "e1^e2 - 1/2"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0 and proc.stdout == "-1/2 + 1*e1^e2\n"
