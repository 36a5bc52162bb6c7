from __future__ import annotations

import io
import json
import subprocess
import sys

import pytest

from kenmotsu_lab import catalog
from kenmotsu_lab.checks import Status
from kenmotsu_lab.cli import run_command
from kenmotsu_lab.document import parse_manifold
from kenmotsu_lab.report import Report


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run_command(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def run_json(*argv):
    code, out, err = run(*argv, "--format", "json")
    return code, (json.loads(out) if out else None), err


def statuses(report):
    return {c["name"]: c["status"] for c in report["checks"]}


def test_soliton_model5():
    code, rep, _ = run_json("soliton", "kenmotsu5.json", "--p", "0", "--V", "xi")
    assert code == 0
    q = rep["quantities"]
    assert (q["lambda"], q["mu"], q["classification"]) == ("16/5", "1", "Shrinking")
    assert statuses(rep)["lambda + mu = 2n + p/2 + 1/(2n+1)"] == "pass"


def test_soliton_pressure_two():
    code, rep, _ = run_json("soliton", "kenmotsu5", "--p", "2", "--V", "xi")
    assert code == 0 and rep["quantities"]["lambda"] == "21/5"


def test_soliton_text_output():
    code, out, _ = run("soliton", "kenmotsu5", "--V", "xi")
    assert code == 0
    assert "lambda = 16/5" in out and "result: all checks pass" in out


def test_validate_flat_fails():
    code, rep, _ = run_json("validate", "flat3.json")
    assert code == 1
    assert statuses(rep)["nabla_X xi = X - eta(X) xi"] == "fail"
    assert rep["quantities"]["kenmotsu"] is False


def test_validate_model5():
    code, rep, _ = run_json("validate", "kenmotsu5")
    assert code == 0 and rep["quantities"]["n"] == 2


def test_analyze_quantities():
    code, rep, _ = run_json("analyze", "kenmotsu5")
    assert code == 0
    q = rep["quantities"]
    assert q["scalar_curvature"] == "-20"
    assert q["ricci"][0] == ["-4", "0", "0", "0", "0"]
    assert q["connection"][0][0] == ["0", "0", "0", "0", "-1"]
    assert (q["alpha"], q["beta"], q["is_einstein"]) == ("-4", "0", True)


def test_analyze_flat_reports_failure():
    code, rep, _ = run_json("analyze", "flat3")
    assert code == 1
    assert statuses(rep)["torsion-free"] == "pass"


def test_deform_two_two():
    code, rep, _ = run_json("deform", "kenmotsu5.json", "--a", "2", "--b", "2")
    assert code == 0
    q = rep["quantities"]
    assert q["deformed_ricci_formula"][0][0] == "-2" == q["deformed_ricci_recomputed"][0][0]
    assert q["deformed_ricci_recomputed"][4][4] == "-4"
    assert (q["deformed_alpha"], q["deformed_beta"]) == ("-1", "0")
    assert q["deformed_kenmotsu"] is False


def test_deform_with_potential_reports_closed_form_gap():
    code, rep, _ = run_json("deform", "kenmotsu5", "--a", "2", "--b", "2", "--V", "xi")
    assert code == 1
    s = statuses(rep)
    assert s["deformed defect = closed form"] == "fail"
    assert s["deformed defect = expanded form"] == "pass"
    code, rep, _ = run_json("deform", "kenmotsu5", "--a", "2", "--b", "4", "--V", "xi")
    assert code == 0


def test_gradient_flags():
    code, rep, _ = run_json("soliton", "kenmotsu5", "--V", "0,0,0,0,2", "--gradient")
    assert code == 0
    assert (rep["quantities"]["lambda"], rep["quantities"]["mu"]) == ("11/5", "2")
    code, rep, _ = run_json("soliton", "kenmotsu5", "--V", "1,0,0,0,0", "--gradient")
    assert code == 1
    check = rep["checks"][-1]
    assert check["status"] == "fail" and check["witness"]["index"] == [1, 5]


def test_inconsistent_soliton_exit_one():
    code, rep, _ = run_json("soliton", "kenmotsu5", "--V", "1,0,0,0,0")
    assert code == 1
    assert rep["quantities"]["status"] == "Inconsistent"


def test_non_kenmotsu_soliton_not_applicable():
    code, rep, _ = run_json("soliton", "flat3", "--V", "0,0,0")
    assert code == 0
    assert statuses(rep)["lambda + mu = 2n + p/2 + 1/(2n+1)"] == "n/a"
    assert rep["quantities"]["lambda"] == "1/3"


def test_negative_pressure_syntax():
    code, rep, _ = run_json("soliton", "kenmotsu5", "--p=-1/2", "--V", "xi")
    assert code == 0 and rep["quantities"]["lambda"] == "59/20"


@pytest.mark.parametrize("argv", [
    ["soliton", "kenmotsu5", "--V", "1,2"],
    ["soliton", "kenmotsu5", "--V", "1,x,0,0,0"],
    ["soliton", "kenmotsu5"],
    ["soliton", "kenmotsu5", "--V", "xi", "--p", "0.5"],
    ["deform", "kenmotsu5", "--a", "0", "--b", "1"],
    ["deform", "kenmotsu5", "--a", "1"],
    ["validate", "no-such-file.json"],
    ["frobnicate"],
    [],
])
def test_usage_errors_exit_two(argv, capsys):
    code, _, _ = run(*argv)
    assert code == 2


def test_parse_error_exit_two(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"name": "x", "dim": 5, "brackets": [{"i": 1, "j": 7, "terms": []}], "metric": "identity"}')
    code, _, err = run("validate", str(bad))
    assert code == 2 and "$.brackets[0].j" in err


def test_contact_block_required(tmp_path):
    f = tmp_path / "plain.json"
    f.write_text('{"name": "x", "dim": 3, "brackets": [], "metric": "identity"}')
    assert run("soliton", str(f), "--V", "xi")[0] == 2
    assert run("validate", str(f))[0] == 0


def test_invalid_frame_exit_one(tmp_path):
    f = tmp_path / "jac.json"
    f.write_text(json.dumps({"name": "j", "dim": 3, "metric": "identity", "brackets": [
        {"i": 1, "j": 2, "terms": [{"k": 3, "coef": "1"}]},
        {"i": 1, "j": 3, "terms": [{"k": 1, "coef": "-1"}]}]}))
    code, rep, _ = run_json("analyze", str(f))
    assert code == 1 and statuses(rep)["Jacobi identity"] == "fail"


def test_report_round_trip_and_determinism():
    first = run("soliton", "kenmotsu5", "--V", "xi", "--format", "json")[1]
    second = run("soliton", "kenmotsu5", "--V", "xi", "--format", "json")[1]
    assert first == second
    rep = Report.from_json(json.loads(first))
    assert rep.dumps() == first
    assert rep.exit_code == 0
    assert all(c.status is Status.PASS for _, c in rep.checks)


def test_report_exit_code_from_contents():
    out = run("validate", "flat3", "--format", "json")[1]
    assert Report.from_json(json.loads(out)).exit_code == 1


def test_catalog_listing_and_export(tmp_path):
    code, out, _ = run("catalog")
    assert code == 0
    assert [line.split()[0] for line in out.splitlines()] == ["kenmotsu5", "hyperbolic3", "flat3"]
    code, _, _ = run("catalog", "--export", str(tmp_path))
    assert code == 0
    for name in catalog.names():
        assert parse_manifold((tmp_path / f"{name}.json").read_text()) == catalog.load(name)
    code, rep, _ = run_json("validate", str(tmp_path / "hyperbolic3.json"))
    assert code == 0 and rep["subject"].endswith(f"({tmp_path / 'hyperbolic3.json'})")


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "kenmotsu_lab", "validate", "flat3"],
                          capture_output=True, text=True)
    assert proc.returncode == 1
    assert "FAIL" in proc.stdout
