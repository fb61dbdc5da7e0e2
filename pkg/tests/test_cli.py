import json

import pytest

from agpc.boolfn import read_bftt
from agpc.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_construct_and_verify_roundtrip(tmp_path, capsys):
    code, out, _ = run(capsys, "construct", "--preset", "example1-tiny", "--out", str(tmp_path),
                       "--format", "json")
    assert code == 0
    info = json.loads(out)
    assert info["variables"] == 12
    bftt = tmp_path / "example1-tiny.bftt"
    cert = tmp_path / "example1-tiny.cert.json"
    assert read_bftt(bftt)[0].n == 12
    code, out, _ = run(capsys, "verify", str(bftt), "--cert", str(cert), "--format", "json")
    assert code == 0 and json.loads(out)["status"] == "PASS"


def test_construct_is_deterministic(tmp_path, capsys):
    a, b = tmp_path / "a", tmp_path / "b"
    run(capsys, "construct", "--preset", "ks-hamming", "--out", str(a), "--verify")
    run(capsys, "construct", "--preset", "ks-hamming", "--out", str(b), "--verify", "--threads", "3")
    for name in ("ks-hamming.bftt", "ks-hamming.cert.json"):
        assert (a / name).read_bytes() == (b / name).read_bytes()
    cert = json.loads((a / "ks-hamming.cert.json").read_text())
    assert cert["claimed"]["l"] == 3 and cert["claimed"]["k"] == 2
    assert cert["meets_claim"] == {"l": True, "k": True, "t": True}


def test_verify_and_function(tmp_path, capsys):
    from agpc.boolfn import TruthTable, write_bftt
    p = tmp_path / "and.bftt"
    write_bftt(p, [TruthTable.from_string("0001")])
    code, out, _ = run(capsys, "verify", str(p), "--l", "2")
    assert code == 0 and "PASS" in out
    code, out, _ = run(capsys, "verify", str(p), "--l", "1", "--k", "1")
    assert code == 5 and "FAIL" in out
    code, out, _ = run(capsys, "inspect", "function", str(p), "--format", "json")
    assert json.loads(out)["outputs"][0]["anf"] == "x1x2"


def test_truncated_bftt(tmp_path, capsys):
    p = tmp_path / "t.bftt"
    p.write_bytes(b"BFTT0001\x03\x00\x00\x00")
    code, _, err = run(capsys, "verify", str(p))
    assert code == 4 and "error" in err


def test_bad_params_exit_2(tmp_path, capsys):
    p = tmp_path / "bad.json"
    p.write_text(json.dumps({"curve": "p1-gf4", "P": ["x", "x+1", "x+2"],
                             "U": [[{"place": "x", "coeff": 1}]], "H": []}))
    code, _, err = run(capsys, "construct", "--params", str(p), "--out", str(tmp_path))
    assert code == 2 and "support_off_P" in err


def test_infeasible_preset_exit_2(tmp_path, capsys):
    code, _, err = run(capsys, "construct", "--preset", "example2(9,1,2,2)", "--out", str(tmp_path))
    assert code == 2


def test_over_budget_exit_3(tmp_path, capsys):
    code, _, err = run(capsys, "construct", "--preset", "corollary2-g1", "--out", str(tmp_path))
    assert code == 3
    assert (tmp_path / "corollary2-g1.cert.json").exists()


def test_usage_errors(capsys):
    assert run(capsys, "nope")[0] == 1
    assert run(capsys, "construct")[0] == 1
    assert run(capsys, "construct", "--preset", "example9")[0] == 1
    assert run(capsys, "verify", "x.bftt", "--budget-enum", "0")[0] == 1


def test_missing_file_exit_4(tmp_path, capsys):
    assert run(capsys, "inspect", "code", str(tmp_path / "none.code"))[0] == 4
    assert run(capsys, "construct", "--params", str(tmp_path / "none.json"))[0] == 4


def test_inspect(tmp_path, capsys):
    code, out, _ = run(capsys, "inspect", "curve", "elliptic-gf4", "--format", "json")
    assert code == 0 and len(json.loads(out)["degree_1"]) == 9
    code, out, _ = run(capsys, "inspect", "field", "2", "--self-dual-basis", "--format", "json")
    data = json.loads(out)
    assert data["self_dual_basis"] == ["2", "3"] and data["trace_gram"] == [[1, 0], [0, 1]]
    c = tmp_path / "h.code"
    c.write_text("1 7 4\n1 0 0 0 1 1 0\n0 1 0 0 0 1 1\n0 0 1 0 1 1 1\n0 0 0 1 1 0 1\n")
    code, out, _ = run(capsys, "inspect", "code", str(c), "--min-distance", "--format", "json")
    assert json.loads(out)["d"] == 3
    code, out, _ = run(capsys, "inspect", "preset", "example1")
    assert code == 0 and "claimed l=5 k=0 t=0" in out
