import json
import subprocess
import sys
from pathlib import Path

import pytest

from parinv.cli import main

GOLDEN = Path(__file__).parent / "golden"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("blocks", ["2,1,3,2", "3,1,4,1,2,3", "2,4,2", "1,2,2,1"])
def test_diagram_matches_golden(capsys, blocks):
    code, out, _ = run(capsys, "diagram", "--blocks", blocks)
    assert code == 0
    assert out == (GOLDEN / f"diagram_{blocks.replace(',', '-')}.txt").read_text()


def test_diagram_json(capsys):
    code, out, _ = run(capsys, "diagram", "--blocks", "1,2,2,1", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["Phi"] == [[2, 4], [4, 6]]


def test_identities_json_1221(capsys):
    code, out, _ = run(capsys, "check", "identities", "--blocks", "1,2,2,1", "--format", "json")
    reports = json.loads(out)
    assert code == 0
    assert all(r["status"] == "pass" for r in reports)
    assert "D_1221 M2*D=L1*L2-M1*M3*M4" in {r["check"] for r in reports}
    assert {tuple(r) for r in reports} == {("check", "blocks", "status", "witness", "seed", "ms")}


def test_invariance_failure_exits_1(capsys, tmp_path):
    bad = tmp_path / "bad.poly"
    bad.write_text("x[2,4]\n")
    code, out, _ = run(capsys, "check", "invariance", "--blocks", "1,2,2,1", "--poly", str(bad))
    assert code == 1
    assert "m=2" in out and "x[3,4]*t" in out


def test_invariance_of_catalog(capsys):
    code, out, _ = run(capsys, "check", "invariance", "--blocks", "2,1,3,2")
    assert code == 0 and "fail" not in out


def test_independence(capsys):
    code, out, _ = run(capsys, "check", "independence", "--blocks", "1,2,2,1", "--format", "json")
    (report,) = json.loads(out)
    assert code == 0 and report["status"] == "independent"


@pytest.mark.parametrize("argv", [
    ["diagram", "--blocks", "2,,1"],
    ["diagram", "--blocks", "0,3"],
    ["diagram"],
    ["express", "--blocks", "1,2,2,1"],
    ["express", "--blocks", "1,2,2,1", "--name", "Q"],
    ["check", "invariance", "--blocks", "1,2,2,1", "--poly", "/nonexistent/file"],
])
def test_usage_errors_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err.startswith("parinv: error:")


def test_unparsable_poly_exits_2(capsys, tmp_path):
    f = tmp_path / "p.poly"
    f.write_text("x[1,2]*\n")
    code, _, err = run(capsys, "check", "invariance", "--blocks", "1,2,2,1", "--poly", str(f))
    assert code == 2 and "error" in err


def test_unknown_flag_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["diagram", "--blocks", "1,1", "--bogus"])
    assert exc.value.code == 2


def test_scan_11_single_row(capsys):
    code, out, _ = run(capsys, "scan", "--blocks", "1,1", "--format", "json")
    (row,) = json.loads(out)
    assert code == 0
    assert row["spec"] == {"k": 1, "I": [[1]], "J": [[2]]}
    assert row["invariant"] is True and row["new_generator"] is False


def test_scan_1221_flags_D(capsys):
    code, out, _ = run(capsys, "scan", "--blocks", "1,2,2,1", "--format", "json")
    rows = json.loads(out)
    assert code == 0 and all(r["invariant"] for r in rows)
    (d,) = [r for r in rows if r["label"] == "I=1;-;- J=6;-;-"]
    assert d["new_generator"] is True
    assert sum(r["new_generator"] for r in rows) == 1


def test_express_D(capsys):
    code, out, _ = run(capsys, "express", "--blocks", "1,2,2,1", "--name", "D")
    assert code == 0
    assert out.strip() == "D = (-M_1_2*M_2_5*M_5_6 + L_2_4*L_4_6) / (M_3_4)"


def test_express_poly_file(capsys, tmp_path):
    f = tmp_path / "g.poly"
    f.write_text("# two inputs\nx[1,2]\nx[2,4]\n")
    code, out, _ = run(capsys, "express", "--blocks", "1,2,2,1", "--poly", str(f), "--format", "json")
    data = json.loads(out)
    assert code == 1
    assert [d["invariant"] for d in data] == [True, False]


def test_relations_1221(capsys):
    code, out, _ = run(capsys, "relations", "--blocks", "1,2,2,1", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["max_degree"] == 5 and len(data["relations"]) == 1


def test_generators_lists_catalog(capsys):
    code, out, _ = run(capsys, "generators", "--blocks", "1,2,2,1", "--format", "json")
    assert code == 0 and [e["name"] for e in json.loads(out)][-1] == "D"


def test_repeated_runs_are_byte_identical(capsys):
    argv = ["check", "identities", "--blocks", "2,1,3,2", "--format", "json"]
    first = run(capsys, *argv)
    assert run(capsys, *argv) == first


def test_timing_flag_records_ms(capsys):
    _, out, _ = run(capsys, "check", "identities", "--blocks", "1,1", "--format", "json", "--timing")
    assert all(isinstance(r["ms"], int) for r in json.loads(out))


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "parinv", "diagram", "--blocks", "1,1"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and proc.stdout.strip()
