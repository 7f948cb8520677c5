import json
import subprocess
import sys

import pytest

from tdaha.cli import main
from tdaha.verify import Config, EmptySuiteError, Report, run_suite


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_info_counts(capsys):
    code, out, _ = run(capsys, "info", "--type", "A", "--rank", "3", "--parabolic", "1,3",
                       "--format", "json")
    assert code == 0
    info = json.loads(out)
    assert info["weyl_order"] == 24
    assert info["n_positive_roots"] == 6
    assert len(info["fixed_points"]) == 6
    assert info["dim"] == 4
    assert info["namikawa_weyl_order"] == 2


def test_info_coweight_omega(capsys):
    code, out, _ = run(capsys, "info", "--type", "A", "--rank", "2", "--lattice", "coweight",
                       "--format", "json")
    assert code == 0
    assert len(json.loads(out)["omega"]) == 3


def test_table_rows(capsys):
    code, out, _ = run(capsys, "table", "peterson", "--max-coweight", "2", "--format", "json")
    assert code == 0
    assert len(json.loads(out)) == 5
    code, out, _ = run(capsys, "table", "stab", "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 3
    assert "-2/1*w1 + -1/1*kk" in lines[1]
    code, out, _ = run(capsys, "table", "act", "--element", "e", "--format", "json")
    rows = json.loads(out)
    assert [(r["u"], r["target"], r["sign"]) for r in rows] == [("e", "e", 1), ("s1", "s1", 1)]


def test_table_abasis_k0_is_group_algebra(capsys):
    code, out, _ = run(capsys, "table", "abasis", "--k0", "--max-length", "2", "--format", "json")
    assert code == 0
    rows = json.loads(out)
    assert rows
    assert all(r["x"] == r["y"] and r["coefficient"] in ("1", "1/1") for r in rows)


def test_output_is_deterministic(capsys):
    a = run(capsys, "table", "confluent", "--type", "B", "--rank", "2", "--format", "csv")[1]
    b = run(capsys, "table", "confluent", "--type", "B", "--rank", "2", "--format", "csv")[1]
    assert a == b and a


def test_verify_exit_codes(capsys, tmp_path):
    out = tmp_path / "r.json"
    code, text, _ = run(capsys, "verify", "stab-axioms", "--out", str(out))
    assert code == 0
    assert "PASS" in text
    data = json.loads(out.read_text())
    assert set(data) >= {"suite", "config", "cases", "summary"}
    assert data["summary"]["pass"] is True
    assert {"input", "expected", "got", "pass"} <= set(data["cases"][0])
    code, text, _ = run(capsys, "verify", "negative")
    assert code == 1
    assert "FAIL" in text


@pytest.mark.parametrize("argv", [
    ["table", "act", "--element", "7"],
    ["info", "--type", "E", "--rank", "4"],
    ["info", "--rank", "0"],
    ["table", "abasis", "--max-length", "99"],
    ["bogus"],
    ["verify", "no-such-suite"],
    ["info", "--parabolic", "x"],
])
def test_usage_errors(capsys, argv):
    assert main(argv) == 2


def test_seeded_reports_are_identical():
    cfg = Config("A", 2, (), pairs=5, seed=7)
    assert run_suite("representation", cfg) == run_suite("representation", cfg)


def test_empty_report_raises():
    with pytest.raises(EmptySuiteError):
        Report("x", Config()).as_dict()


def test_console_script():
    res = subprocess.run([sys.executable, "-m", "tdaha.cli", "info"], capture_output=True, text=True)
    assert res.returncode == 0
    assert "weyl_order: 2" in res.stdout
