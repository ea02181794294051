"""Command line behavior: outputs and exit codes."""

import io
import json

import pytest

from agstab.cli import main
from agstab.cones import cyclic_cone


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_betti_json(capsys):
    code, out, _ = run(capsys, "betti", "--dataset", "matroidal", "--order", "8")
    assert code == 0
    payload = json.loads(out)
    assert payload["coefficients"] == [1, 2, 4, 9, 18, 37, 79, 169, 379]
    assert payload["valid_up_to"] == 8


def test_betti_csv(capsys):
    code, out, _ = run(capsys, "betti", "--dataset", "perfect", "--order", "8",
                       "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "k,coefficient,valid"
    assert lines[1:] == [
        "0,1,true", "1,2,true", "2,4,true", "3,9,true", "4,18,true",
        "5,38,true", "6,84,true", "7,193,true", "8,494,true",
    ]


def test_betti_no_lambda_and_display(capsys):
    code, out, _ = run(capsys, "betti", "--dataset", "matroidal", "--order", "6",
                       "--no-lambda")
    assert code == 0
    assert json.loads(out)["includes_lambda"] is False
    code, out, _ = run(capsys, "betti", "--dataset", "matroidal", "--order", "6",
                       "--paper-display")
    assert code == 0
    assert json.loads(out)["coefficients"] == [1, 1, 1, 2, 3, 6, 13]


def test_series_exp_reads_stdin(capsys, monkeypatch):
    payload = json.dumps({"order": 6, "coefficients": ["0", "1", "1", "1", "1", "1", "1"]})
    monkeypatch.setattr("sys.stdin", io.StringIO(payload))
    code, out, _ = run(capsys, "series", "exp", "--order", "6")
    assert code == 0
    assert json.loads(out)["coefficients"] == ["1", "1", "2", "3", "5", "7", "11"]


def test_series_plethysm(capsys, monkeypatch):
    payload = json.dumps({"order": 8, "coefficients": ["1"] + ["1"] * 8})
    monkeypatch.setattr("sys.stdin", io.StringIO(payload))
    code, out, _ = run(capsys, "series", "plethysm", "--degree", "2", "--order", "8")
    assert code == 0
    # h_2 of the one-variable geometric series
    assert json.loads(out)["coefficients"][:4] == ["1", "1", "2", "2"]


def test_series_exp_rejects_garbage(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO("nonsense"))
    code, _, err = run(capsys, "series", "exp", "--order", "4")
    assert code == 2
    assert "error" in err


def test_molien_group_file(capsys, tmp_path):
    path = tmp_path / "s3.json"
    path.write_text(json.dumps({"degree": 3, "generators": [[2, 1, 3], [2, 3, 1]]}))
    code, out, _ = run(capsys, "molien", str(path), "--order", "6")
    assert code == 0
    assert json.loads(out)["coefficients"] == ["1", "1", "2", "3", "4", "5", "7"]


def test_molien_rejects_bad_group_file(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"generators": [[1, 2]]}))
    code, _, err = run(capsys, "molien", str(path))
    assert code == 2


def test_cone_analyze(capsys, tmp_path):
    path = tmp_path / "k3.json"
    path.write_text(json.dumps(cyclic_cone(3).to_json_dict()))
    code, out, _ = run(capsys, "cone", "analyze", str(path), "--order", "6")
    assert code == 0
    payload = json.loads(out)
    assert payload["dimension"] == 3
    assert payload["aut_order"] == 6
    assert payload["components"] == [[1, 2, 3]]


def test_cone_analyze_budget_exit(capsys, tmp_path):
    spec = cyclic_cone(7)
    path = tmp_path / "c7.json"
    path.write_text(json.dumps(spec.to_json_dict()))
    code, _, err = run(capsys, "cone", "analyze", str(path), "--no-declared",
                       "--node-budget", "5")
    assert code == 3


def test_cone_analyze_verification_exit(capsys, tmp_path):
    # a loop generator can never trade places with a path generator
    bad = {
        "name": "claim",
        "ambient": 3,
        "generators": [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 0, -1], [0, 1, -1]],
        "aut_generators": [[1, 2, 4, 3, 5]],
    }
    path = tmp_path / "claim.json"
    path.write_text(json.dumps(bad))
    code, _, err = run(capsys, "cone", "analyze", str(path))
    assert code == 1


def test_verify_suite_output(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "matroidal16")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 9
    assert all(line.startswith("PASS") for line in lines)


def test_verify_rejects_unknown_suite(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--suite", "unknown"])
    assert exc.value.code == 2


def test_validate_dataset(capsys):
    code, out, _ = run(capsys, "validate", "--dataset", "matroidal")
    assert code == 0
    payload = json.loads(out)
    assert payload["ok"] is True
    assert payload["violations"] == []


def test_missing_file_is_input_error(capsys):
    code, _, err = run(capsys, "cone", "analyze", "/nonexistent/cone.json")
    assert code == 2


def test_negative_order_is_input_error(capsys):
    with pytest.raises(SystemExit) as info:
        main(["betti", "--dataset", "matroidal", "--order", "-3"])
    assert info.value.code == 2
    err = capsys.readouterr().err
    assert "order must be non-negative" in err


def test_order_zero_gives_constant_row(capsys):
    code, out, _ = run(capsys, "betti", "--dataset", "matroidal", "--order", "0",
                       "--format", "csv")
    assert code == 0
    assert out.strip().splitlines() == ["k,coefficient,valid", "0,1,true"]
