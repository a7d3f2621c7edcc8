import json
import subprocess
import sys

import pytest

from mhpartial.cli import main


@pytest.fixture
def export(tmp_path):
    def go(name, *params):
        out = tmp_path / f"{name}-{len(list(tmp_path.iterdir()))}.json"
        assert main(["gallery", name, "--out", str(out), *params]) == 0
        return out
    return go


def test_verify_partial(export, capsys):
    f = export("A_G", "--group", "Z4", "--subgroup", "0,2")
    assert main(["verify", str(f), "--suite", "partial"]) == 0
    assert "[PASS] partial" in capsys.readouterr().out


def test_verify_all_declared(export):
    f = export("A_G")
    assert main(["verify", str(f)]) == 0


def test_edited_h_fails_with_witness(export, tmp_path, capsys):
    f = export("A_G")
    doc = json.loads(f.read_text())
    doc["multipliers"]["h"]["element"] = [[0, "1"], [1, "1"]]
    f.write_text(json.dumps(doc))
    out = tmp_path / "r.json"
    assert main(["verify", str(f), "--suite", "partial", "--report", "json", "--out", str(out)]) == 1
    rep = json.loads(out.read_text())
    assert rep["report_version"] == 1 and rep["exit"] == 1
    (partial,) = rep["reports"]
    assert partial["status"] == "fail"
    assert any(w["clause"].startswith("(iv)") for w in partial["witnesses"])


def test_malformed_inputs_exit_2(tmp_path, export):
    broken = tmp_path / "broken.json"
    broken.write_text("{")
    assert main(["verify", str(broken)]) == 2
    f = export("A_G")
    doc = json.loads(f.read_text())
    doc["field"] = {"kind": "prime", "p": 4}
    f.write_text(json.dumps(doc))
    assert main(["verify", str(f)]) == 2
    assert main(["verify", str(tmp_path / "missing.json")]) == 2
    assert main(["verify", str(export("A_G")), "--suite", "bogus"]) == 2
    assert main(["verify", str(export("A_Z")), "--window", "x"]) == 2
    assert main(["frobnicate"]) == 2


def test_gallery_errors_exit_2(tmp_path):
    assert main(["gallery", "nonexistent"]) == 2
    assert main(["gallery", "taft", "--p", "7", "--q", "3", "--alpha", "1"]) == 2
    assert main(["gallery", "A_G", "--subgroup"]) == 2


def test_gallery_taft_written(export):
    doc = json.loads(export("taft", "--p", "7", "--q", "2", "--alpha", "1").read_text())
    assert doc["field"] == {"kind": "prime", "p": 7}


def test_reports_byte_stable(export, tmp_path):
    f = export("A_Z")
    outs = []
    for i in range(2):
        out = tmp_path / f"rep{i}.json"
        main(["verify", str(f), "--report", "json", "--seed", "5", "--samples", "40", "--out", str(out)])
        outs.append(out.read_bytes())
    assert outs[0] == outs[1]


def test_window_override(export, tmp_path):
    f = export("A_Z")
    out = tmp_path / "r.json"
    assert main(["verify", str(f), "--suite", "hopf", "--window", "2", "--report", "json", "--out", str(out)]) == 0
    assert "2" in json.loads(out.read_text())["reports"][0]["window"]


def test_smash_proper_subgroup(export, tmp_path):
    f = export("A_G")
    out = tmp_path / "smash.json"
    assert main(["smash", str(f), "--out", str(out)]) == 0
    doc = json.loads(out.read_text())
    dense = doc["algebras"]["S"]["dense"]
    assert dense["labels"] == ["1*(0, 0)", "1*(0, 2)", "1*(1, 0)", "1*(1, 2)"]
    assert main(["verify", str(out), "--suite", "bialgebra"]) == 0


def test_smash_global(export, tmp_path):
    f = export("A_G", "--subgroup", "0,1,2,3")
    out = tmp_path / "smash.json"
    assert main(["smash", str(f), "--out", str(out)]) == 0
    assert len(json.loads(out.read_text())["algebras"]["S"]["dense"]["basis"]) == 8
    assert main(["verify", str(out), "--suite", "bialgebra"]) == 0


def test_smash_noncommutative_exit_1(export, capsys):
    assert main(["smash", str(export("sweedler", "--alpha", "0"))]) == 1
    assert "precondition_failed" in capsys.readouterr().err.lower()


def test_console_entry_point(export):
    f = export("A_G")
    r = subprocess.run([sys.executable, "-m", "mhpartial", "verify", str(f), "--suite", "h_conditions"],
                       capture_output=True, text=True)
    assert r.returncode == 0
    assert "exit: 0" in r.stdout
