import csv
import io
import json
import subprocess
import sys
from pathlib import Path

import jsonschema
import pytest

from monodromy.cli import load_schema, main

ROOT = Path(__file__).resolve().parents[1]


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    return code, json.loads(out) if out else None, err


def no_bare_floats(node):
    if isinstance(node, float):
        return False
    if isinstance(node, dict):
        return all(no_bare_floats(v) for v in node.values())
    if isinstance(node, list):
        return all(no_bare_floats(v) for v in node)
    return True


def test_rep_infinite_with_witness(capsys):
    code, rep, _ = run_json(capsys, "rep", "--level", "5", "--word", "s1^-1 s2")
    assert code == 0
    v = rep["results"]["projective_order"]
    assert v["kind"] == "infinite" and "galois_k" in v["witness"]
    assert v["witness"]["value_interval"]["tag"] == "interval"


def test_rep_finite_order_two(capsys):
    code, rep, _ = run_json(capsys, "rep", "--level", "4", "--word", "s1^-1 s2")
    assert code == 0 and rep["results"]["projective_order"]["label"] == "FiniteOrder(2)"


def test_rep_empty_word(capsys):
    code, rep, _ = run_json(capsys, "rep", "--level", "3", "--word", "")
    assert rep["results"]["projective_order"]["label"] == "FiniteOrder(1)"
    assert rep["results"]["gl_order"]["label"] == "FiniteOrder(1)"


def test_rep_braid_alphabet(capsys):
    code, rep, _ = run_json(capsys, "rep", "--level", "2", "--word", "g1 g2 g1", "--alphabet", "braid")
    assert code == 0 and rep["results"]["matrix"]["tag"] == "exact"


def test_parse_error_exit_code(capsys):
    code, out, err = run(capsys, "rep", "--level", "3", "--word", "s1 s9")
    assert code == 2 and "position 3" in err and out == ""


def test_bad_level_exit_code(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["rep", "--level", "0"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["scan", "--levels", "a..b"])
    assert exc.value.code == 2


def test_fusion_weight_out_of_range(capsys):
    code, _, err = run(capsys, "fusion", "--level", "2", "--weights", "3")
    assert code == 2


def test_scan_levels(capsys):
    code, rep, _ = run_json(capsys, "scan", "--levels", "1..10", "--no-timing")
    assert code == 0
    assert rep["results"]["finite_levels"] == [1, 2, 4, 8]
    names = {r["level"]: r["group"]["name"] for r in rep["results"]["rows"]}
    assert [names[l] for l in (1, 2, 4, 8)] == ["Cyclic(3)", "Klein4", "A4", "A5"]


def test_scan_single_levels(capsys):
    _, rep, _ = run_json(capsys, "scan", "--levels", "3..3")
    assert len(rep["results"]["rows"]) == 1
    assert rep["results"]["rows"][0]["sigma_order"]["kind"] == "infinite"
    _, rep, _ = run_json(capsys, "scan", "--level", "1")
    assert rep["results"]["rows"][0]["group"]["name"] == "Cyclic(3)"


def test_scan_cap_exit_code(capsys):
    code, rep, _ = run_json(capsys, "scan", "--level", "8", "--closure-cap", "10")
    assert code == 3 and rep["results"]["rows"][0]["group"]["tag"] == "InfiniteOrCapExceeded"


def test_fivepoint(capsys):
    _, rep, _ = run_json(capsys, "fivepoint", "--level", "5", "--word", "x3 x1")
    assert rep["results"]["sigma_word"] == "s2^-1 s1"
    assert rep["results"]["projective_order"]["kind"] == "infinite"
    _, rep, _ = run_json(capsys, "fivepoint", "--level", "8", "--word", "x3 x1")
    assert rep["results"]["projective_order"]["label"] == "FiniteOrder(3)"
    _, rep, _ = run_json(capsys, "fivepoint", "--level", "5", "--word", "x1 x1^-1")
    assert rep["results"]["projective_order"]["label"] == "FiniteOrder(1)"


def test_fusion_command(capsys):
    code, rep, _ = run_json(capsys, "fusion", "--level", "3", "--genus", "0", "--weights", "1,1,1,1")
    assert code == 0
    r = rep["results"]
    assert (r["dimension"], r["method"], r["agreement"]) == (2, "both", True)


def test_modular_command(capsys):
    code, rep, _ = run_json(capsys, "modular", "--level", "1")
    r = rep["results"]
    assert code == 0 and r["rank"] == 2 and r["relations_ok"] and r["certificate_ok"]
    assert isinstance(r["image_order"], int)


def test_modular_cap_exceeded(capsys):
    code, rep, _ = run_json(capsys, "modular", "--level", "3", "--closure-cap", "50")
    assert code == 3 and rep["results"]["image_order"] == "cap_exceeded"


def test_env_caps(capsys, monkeypatch):
    monkeypatch.setenv("MONODROMY_CLOSURE_CAP", "50")
    monkeypatch.setenv("MONODROMY_PRECISION_BITS", "96")
    code, rep, _ = run_json(capsys, "modular", "--level", "3")
    assert code == 3 and rep["parameters"]["closure_cap"] == 50
    code, rep, _ = run_json(capsys, "rep", "--level", "5", "--word", "s1^-1 s2")
    assert rep["results"]["trace_interval"]["precision"] == 96


def test_lantern_command(capsys):
    _, rep, _ = run_json(capsys, "lantern", "--level", "6")
    assert rep["results"]["is_identity"] and rep["results"]["sigma_word"] == "s3 s2 s1"


ALL_COMMANDS = [
    ("rep", "--level", "5", "--word", "s1^-1 s2"),
    ("rep", "--level", "8", "--word", "s1 s2^2", "--precision-bits", "200"),
    ("scan", "--levels", "1..5", "--no-timing"),
    ("fivepoint", "--level", "7"),
    ("fusion", "--level", "4", "--genus", "2", "--weights", "2,2"),
    ("modular", "--level", "2"),
    ("lantern", "--level", "3"),
]


@pytest.mark.parametrize("argv", ALL_COMMANDS, ids=lambda a: a[0])
def test_reports_validate_and_round_trip(capsys, argv):
    code, out, _ = run(capsys, *argv)
    report = json.loads(out)
    jsonschema.validate(report, load_schema())
    assert no_bare_floats(report)
    assert json.dumps(report, indent=2, sort_keys=True) + "\n" == out


def test_schema_rejects_bare_floats():
    report = {"schema": "monodromy-report/1", "command": "rep", "levels": [1], "parameters": {},
              "results": {"x": 0.5}, "tool_version": "0", "modes": {"exact": True, "numeric": "interval"}}
    with pytest.raises(jsonschema.ValidationError):
        jsonschema.validate(report, load_schema())


@pytest.mark.parametrize("argv", [("scan", "--levels", "1..6"), ("modular", "--level", "2"),
                                  ("rep", "--level", "5", "--word", "s1^-1 s2")])
def test_csv_flattens_scalars(capsys, argv):
    code, out, _ = run(capsys, *argv, "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert rows and not any("matrix" in k for k in rows[0])


def test_pretty_output(capsys):
    code, out, _ = run(capsys, "scan", "--levels", "1..4", "--format", "pretty")
    assert "finite levels: [1, 2, 4]" in out


@pytest.mark.parametrize("argv", [ALL_COMMANDS[0], ALL_COMMANDS[2], ALL_COMMANDS[5]], ids=lambda a: a[0])
def test_output_is_deterministic_across_processes(argv):
    cmd = [sys.executable, "-m", "monodromy.cli", *argv]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b


def test_docs_schema_matches_packaged_schema():
    assert json.loads((ROOT / "docs" / "report.schema.json").read_text()) == load_schema()
