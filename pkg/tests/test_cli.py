import csv
import json
import subprocess
import sys

import pytest

from permtri.cli import CSV_HEADER, main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_verify_theorem_applicable_grid(capsys, tmp_path):
    code, out, err = run(capsys, "verify-theorem", "--max-q", "128", "--s", "0", "--r", "1",
                         "--require-applicable", "--workers", "1")
    assert code == 0
    report = json.loads(out)
    qs = sorted({row["p"] ** row["t"] for row in report["rows"]})
    assert qs == [83, 89, 97, 101, 103, 107, 109, 113, 121, 125, 127, 128]
    assert all(row["applicable"] and row["agrees"] for row in report["rows"])
    pps = {(row["p"], row["t"], row["lambdaIndex"]) for row in report["rows"] if row["isPp"]}
    # 1/3 for p = 2 mod 3 and t odd; for p = 2 that is lambda = 1
    assert pps == {(2, 7, 1), (5, 3, 2), (83, 1, 28), (89, 1, 30), (101, 1, 34), (107, 1, 36), (113, 1, 38)}
    assert report["summary"]["disagreements"] == 0 and "disagreements" in err


def test_verify_theorem_below_threshold(capsys):
    code, out, _ = run(capsys, "verify-theorem", "--max-q", "64", "--workers", "1")
    report = json.loads(out)
    assert code == 0
    assert all(not row["applicable"] and row["predicted"] is None for row in report["rows"])
    assert report["summary"]["sporadicPps"] == report["summary"]["ppsFound"] > 0


def test_verify_theorem_r0_grid(capsys):
    code, out, _ = run(capsys, "verify-theorem", "--max-q", "1024", "--s", "0..2", "--r", "0",
                       "--workers", "1", "--format", "csv")
    rows = list(csv.DictReader(out.splitlines()))
    assert code == 0 and rows and all(row["is_pp"] == "false" for row in rows)


def test_reports_written_and_deterministic(capsys, tmp_path):
    main(["verify-theorem", "--max-q", "200", "--s", "0..1", "--r", "1..2", "--workers", "1",
          "--out", str(tmp_path / "one")])
    main(["verify-theorem", "--max-q", "200", "--s", "0..1", "--r", "1..2", "--workers", "2",
          "--out", str(tmp_path / "two.json")])
    capsys.readouterr()
    for ext in ("json", "csv"):
        assert (tmp_path / f"one.{ext}").read_bytes() == (tmp_path / f"two.{ext}").read_bytes()
    lines = (tmp_path / "one.csv").read_text().splitlines()
    assert lines[0] == ",".join(CSV_HEADER) == "p,t,s,r,lambda,d,applicable,is_pp,predicted,agrees"
    keys = [tuple(int(v) for v in line.split(",")[:5]) for line in lines[1:]]
    assert keys == sorted(keys)


def test_check_examples(capsys):
    code, out, _ = run(capsys, "check", "2", "11", "--s", "1", "--r", "1", "--lambda", "1")
    v = json.loads(out)
    assert code == 0 and v["isPp"] and v["predicted"] and v["agrees"]
    code, out, _ = run(capsys, "check", "2", "3", "--s", "0", "--r", "1", "--lambda", "1")
    v = json.loads(out)
    assert v["isPp"] and not v["applicable"] and v["predicted"] is None and "cubic" not in v
    code, out, _ = run(capsys, "check", "5", "1", "--s", "0", "--r", "1", "--lambda", "2")
    v = json.loads(out)
    assert v["isPp"] and not v["applicable"] and v["cubic"] == "splits_over_quadratic_ext_only"
    code, out, _ = run(capsys, "check", "2", "11", "--s", "2", "--r", "2", "--lambda", "1")
    v = json.loads(out)
    assert v["normalized"] == {"s": 1, "r": 1, "lambdaIndex": 1, "m": 1, "d": 5}


def test_bridge_examples(capsys):
    code, out, _ = run(capsys, "bridge", "3", "1", "--s", "1", "--lambda", "2")
    row = json.loads(out)["rows"][0]
    assert code == 0 and row["lhs"] is False and row["rhs"] is False and row["agree"]
    code, out, _ = run(capsys, "bridge", "3", "1", "--s", "1", "--all-lambda")
    report = json.loads(out)
    assert code == 0 and report["allAgree"] and len(report["rows"]) == 3
    code, _, err = run(capsys, "bridge", "2", "1", "--lambda", "1")
    assert code == 2 and "characteristic 2 unsupported in bridge" in err


def test_dickson_examples(capsys):
    code, out, _ = run(capsys, "dickson", "9", "5", "1")
    assert code == 0 and json.loads(out)["zClaim"]
    code, out, _ = run(capsys, "dickson", "49", "5", "1")
    rep = json.loads(out)
    assert code == 0 and not rep["isPp"] and rep["zClaim"]
    code, out, _ = run(capsys, "dickson", "7", "5", "1")
    assert json.loads(out)["isPp"]
    code, out, _ = run(capsys, "dickson", "27", "1", "4")
    rep = json.loads(out)
    assert rep["isPp"] and rep["poly"]["terms"] == [[1, 1]] and rep["histogram"] == {"1": 27}


def test_exit_codes(capsys, monkeypatch):
    assert run(capsys, "check", "4", "1", "--s", "0", "--r", "1", "--lambda", "1")[0] == 2
    assert run(capsys, "verify-theorem", "--max-q", "64", "--s", "2..1")[0] == 2
    with pytest.raises(SystemExit) as exc:
        main(["verify-theorem"])
    assert exc.value.code == 2
    capsys.readouterr()
    monkeypatch.setenv("PERMTRI_CAP", "1000")
    assert run(capsys, "check", "2", "11", "--s", "1", "--r", "1", "--lambda", "1")[0] == 3
    assert run(capsys, "bridge", "3", "2", "--lambda", "1")[0] == 3


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "permtri", "check", "5", "1", "--s", "0", "--r", "1",
                           "--lambda", "2"], capture_output=True, text=True)
    assert proc.returncode == 0 and json.loads(proc.stdout)["isPp"]
