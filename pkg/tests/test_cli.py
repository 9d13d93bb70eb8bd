import json
import subprocess
import sys

import pytest

from siegeldim.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_table_text(capsys):
    code, out, _ = run(capsys, "table", "codim")
    assert code == 0 and "15t^6(2-t^2) / (1-t^2)^2" in out


def test_table_json(capsys):
    code, out, _ = run(capsys, "table", "localdim", "--format", "json", "--omega", "I")
    data = json.loads(out)
    assert code == 0 and data["rows"] == ["I"] and data["values"][0][0] == "45"


def test_table_csv_grid(capsys):
    code, out, _ = run(capsys, "table", "Mk", "--group", "Klingen4", "--max-weight", "12",
                       "--format", "csv")
    lines = out.strip().splitlines()
    assert code == 0 and lines[1].split(",")[4] == "4" and lines[1].split(",")[-1] == "36"


def test_series(capsys):
    code, out, _ = run(capsys, "series", "--group", "Sp4Z", "--kind", "M", "--order", "4")
    assert code == 0
    assert out.splitlines() == ["(1+t^35) / ((1-t^4)(1-t^6)(1-t^10)(1-t^12))", "1 0 0 0 1"]


def test_series_combined_slug(capsys):
    code, out, _ = run(capsys, "series", "--omega", "Va", "--kind", "G")
    code2, out2, _ = run(capsys, "series", "--omega", "Va_Vastar", "--kind", "G")
    assert code == code2 == 0 and out == out2


@pytest.mark.parametrize("argv", [
    ["table", "nope"], ["series", "--kind", "M"], ["series", "--group", "X", "--kind", "M"],
    ["series", "--omega", "VIa", "--kind", "G"], ["verify", "bogus"], [],
    ["table", "Mk", "--max-weight", "0"],
])
def test_usage_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and "error" in err


def test_verify_json(capsys):
    code, out, _ = run(capsys, "verify", "s6", "--format", "json")
    data = json.loads(out)
    assert code == 0 and all(c["status"] == "pass" for c in data["checks"])


def test_deterministic(capsys):
    first = run(capsys, "table", "countsG")
    assert run(capsys, "table", "countsG") == first


def test_entry_point():
    proc = subprocess.run([sys.executable, "-m", "siegeldim.cli", "verify", "klingen4"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip().endswith("checks passed")
