import csv
import io
import json
import subprocess
import sys

import jsonschema
import pytest

from matconf.cli import report_schema, run

INVOCATIONS = {
    "hvector": ["hvector", "--lambda", "4,3,3,2", "--codim", "2"],
    "ideal": ["ideal", "--uniform", "4,2"],
    "symbolic": ["symbolic", "--uniform", "3,2", "--m", "2"],
    "containment": ["containment", "--uniform", "3,2", "--m", "2", "--r", "2"],
    "waldschmidt": ["waldschmidt", "--uniform", "4,3", "--weights", "1,1,1,2", "--mmax", "6"],
    "resurgence": ["resurgence", "--uniform", "3,2", "--mmax", "4", "--rmax", "3"],
    "betti": ["betti", "--uniform", "4,2", "--symbolic", "2"],
    "hypergraph": ["hypergraph", "--blocks", "2,1;2"],
    "tetrahedral": ["tetrahedral", "--p", "2,1,1,1,1,2"],
    "verify": ["verify", "--scale", "quick"],
}


def call(argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(argv, out, err)
    return code, out.getvalue(), err.getvalue()


@pytest.mark.parametrize("command", sorted(INVOCATIONS))
def test_json_reports_validate(command):
    code, out, _ = call(INVOCATIONS[command] + ["--format", "json"])
    assert code == 0
    jsonschema.validate(json.loads(out), report_schema(command))


@pytest.mark.parametrize("command", sorted(set(INVOCATIONS) - {"verify"}))
def test_repeated_runs_are_byte_identical(command):
    for fmt in ("text", "json", "csv"):
        first = call(INVOCATIONS[command] + ["--format", fmt])
        assert call(INVOCATIONS[command] + ["--format", fmt]) == first


def test_hvector_text_shows_staircase():
    code, out, _ = call(INVOCATIONS["hvector"])
    assert code == 0
    assert "h-vector: 1 2 3 4 5 6 7 8 8 6 3" in out
    assert "degree: 53" in out
    assert any(line.strip().startswith("X:") for line in out.splitlines())


def test_hvector_csv():
    code, out, _ = call(INVOCATIONS["hvector"] + ["--format", "csv"])
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["t", "h"]
    assert [int(h) for _, h in rows[1:]] == [1, 2, 3, 4, 5, 6, 7, 8, 8, 6, 3]


def test_containment_reports_witness():
    code, out, _ = call(INVOCATIONS["containment"] + ["--format", "json"])
    payload = json.loads(out)
    assert payload == {"m": 2, "r": 2, "contained": False, "witness": "1 1 1"}


def test_resurgence_budget_truncates():
    code, out, _ = call(INVOCATIONS["resurgence"] + ["--budget", "3", "--format", "json"])
    assert code == 0
    assert json.loads(out)["truncated"] is True


def test_betti_budget_is_a_domain_error():
    code, out, err = call(["betti", "--uniform", "6,3", "--budget", "5"])
    assert code == 1 and out == ""
    assert json.loads(err)["error"] == "budget exceeded"


def test_domain_errors_exit_one():
    code, _, err = call(["hvector", "--lambda", "1,1", "--codim", "3"])
    assert code == 1
    assert json.loads(err)["error"] == "ValueError"
    assert call(["tetrahedral", "--p", "0,0,0,0,0,0"])[0] == 1
    assert call(["symbolic", "--uniform", "3,4", "--m", "2"])[0] == 1


def test_usage_errors_exit_two():
    assert call(["hvector"])[0] == 2
    assert call(["hvector", "--lambda", "a,b", "--codim", "2"])[0] == 2
    assert call(["nonsense"])[0] == 2
    assert call(["ideal", "--lambda", "2,2"])[0] == 2
    assert call(["hypergraph", "--blocks", "2,1"])[0] == 2


def test_facets_file_input(tmp_path):
    path = tmp_path / "u32.txt"
    path.write_text("s=3\n1\n2\n3\n")
    a = call(["ideal", "--facets", str(path), "--format", "json"])
    b = call(["ideal", "--uniform", "3,2", "--format", "json"])
    assert a == b
    assert call(["ideal", "--facets", str(tmp_path / "missing.txt")])[0] == 1


def test_ideal_file_betti(tmp_path):
    path = tmp_path / "ci.txt"
    path.write_text("vars=2 weights=1,1\n2 0\n0 3\n")
    code, out, _ = call(["betti", "--ideal", str(path), "--format", "json"])
    assert json.loads(out)["entries"] == [[0, 0, 1], [1, 2, 1], [1, 3, 1], [2, 5, 1]]


def test_betti_specialize_preserves_totals():
    plain = json.loads(call(["betti", "--uniform", "4,2", "--format", "json"])[1])
    spec = json.loads(call(["betti", "--uniform", "4,2", "--specialize", "2,1,3,1",
                            "--format", "json"])[1])
    tot = lambda p: [sum(r for i, _, r in p["entries"] if i == k) for k in range(p["pd"] + 1)]
    assert tot(plain) == tot(spec)


def test_verify_quick_passes():
    code, out, _ = call(["verify"])
    assert code == 0
    assert out.strip().endswith("12/12 suites passed")


def test_console_entry_point():
    res = subprocess.run([sys.executable, "-m", "matconf", "tetrahedral", "--p", "1,0,0,0,0,1"],
                         capture_output=True, text=True)
    assert res.returncode == 0
    assert "ACM: false (classifier), false (oracle), agreement: yes" in res.stdout
