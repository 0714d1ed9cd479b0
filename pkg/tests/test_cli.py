import json
import subprocess
import sys

import pytest

CLI = [sys.executable, "-m", "interlacekit"]


def run_cli(*args, cwd=None):
    return subprocess.run(
        CLI + list(args), capture_output=True, text=True, cwd=cwd
    )


def strip_timing(report_text):
    report = json.loads(report_text)
    report.pop("timing")
    return report


def test_gen_writes_deterministic_files(tmp_path):
    out1 = tmp_path / "a_{i}.json"
    out2 = tmp_path / "b_{i}.json"
    args = ["gen", "--seed", "5", "--trials", "3", "--size-min", "2",
            "--size-max", "4", "--bound", "6"]
    r1 = run_cli(*args, "--out", str(out1))
    r2 = run_cli(*args, "--out", str(out2))
    assert r1.returncode == 0 and r2.returncode == 0
    for i in range(3):
        a = (tmp_path / f"a_{i}.json").read_bytes()
        b = (tmp_path / f"b_{i}.json").read_bytes()
        assert a == b
        doc = json.loads(a)
        assert set(doc) == {"n", "entries"}
        assert 2 <= doc["n"] <= 4


def test_generated_matrices_are_valid_input(tmp_path):
    out = tmp_path / "m_{i}.json"
    assert run_cli("gen", "--seed", "8", "--trials", "2", "--out", str(out)).returncode == 0
    paths = [str(tmp_path / f"m_{i}.json") for i in range(2)]
    result = run_cli("check", "--mode", "cauchy", *paths)
    assert result.returncode == 0
    report = strip_timing(result.stdout)
    records = report["suites"]["cauchy"]["trials"]
    assert [r["path"] for r in records] == paths
    assert all(r["pass"] for r in records)


def test_check_all_is_deterministic_modulo_timing():
    args = ["check", "--mode", "all", "--seed", "17", "--trials", "3",
            "--size-min", "2", "--size-max", "4"]
    r1 = run_cli(*args)
    r2 = run_cli(*args)
    assert r1.returncode == 0 and r2.returncode == 0
    a = strip_timing(r1.stdout)
    b = strip_timing(r2.stdout)
    assert a == b
    assert set(a["suites"]) == {"definition", "pencil", "identity", "cauchy"}
    assert a["failures"] == 0
    assert a["config"]["seed"] == 17


def test_check_single_mode_runs_one_suite():
    result = run_cli("check", "--mode", "identity", "--seed", "2", "--trials", "4")
    assert result.returncode == 0
    report = strip_timing(result.stdout)
    assert list(report["suites"]) == ["identity"]
    trials = report["suites"]["identity"]["trials"]
    assert len(trials) == 4
    assert all(t["report"]["exact_match"] for t in trials)


def test_check_out_flag_writes_file(tmp_path):
    target = tmp_path / "report.json"
    result = run_cli("check", "--mode", "definition", "--seed", "4",
                     "--trials", "2", "--out", str(target))
    assert result.returncode == 0
    assert result.stdout == ""
    report = json.loads(target.read_text())
    assert report["failures"] == 0


def test_pencil_file_mode_reports_witness(tmp_path):
    pair = tmp_path / "pair.json"
    pair.write_text(json.dumps({"f": ["0", "-2", "1"], "g": ["-3", "1"]}))
    result = run_cli("check", "--mode", "pencil", "--seed", "1", str(pair))
    assert result.returncode == 0
    record = strip_timing(result.stdout)["suites"]["pencil"]["trials"][0]
    assert record["pass"]
    assert record["report"]["verdict"] == "Consistent"
    assert record["report"]["pencil"]["witness"] == "-1"
    assert record["report"]["interlace"]["verdict"] == "DoesNotInterlace"


def test_definition_file_mode(tmp_path):
    pair = tmp_path / "pair.json"
    pair.write_text(json.dumps({"f": ["0", "-2", "1"], "g": ["-1", "1"]}))
    result = run_cli("check", "--mode", "definition", str(pair))
    assert result.returncode == 0
    record = strip_timing(result.stdout)["suites"]["definition"]["trials"][0]
    assert record["report"]["verdict"] == "Interlaces"


def test_not_real_rooted_file_fails_with_exit_one(tmp_path):
    pair = tmp_path / "pair.json"
    pair.write_text(json.dumps({"f": ["3", "-3", "1"], "g": ["-1", "1"]}))
    result = run_cli("check", "--mode", "definition", str(pair))
    assert result.returncode == 1
    record = json.loads(result.stdout)["suites"]["definition"]["trials"][0]
    assert record["report"]["verdict"] == "NotRealRooted"
    assert not record["pass"]


def test_malformed_inputs_exit_two(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    result = run_cli("check", "--mode", "cauchy", str(bad))
    assert result.returncode == 2
    assert "bad.json" in result.stderr

    nonherm = tmp_path / "nonherm.json"
    nonherm.write_text(json.dumps(
        {"n": 2, "entries": [[["1", "0"], ["2", "0"]], [["3", "0"], ["1", "0"]]]}
    ))
    result = run_cli("check", "--mode", "cauchy", str(nonherm))
    assert result.returncode == 2
    assert "(0, 1)" in result.stderr

    badden = tmp_path / "badden.json"
    badden.write_text(json.dumps(
        {"n": 1, "entries": [[["1/0", "0"]]]}
    ))
    result = run_cli("check", "--mode", "cauchy", str(badden))
    assert result.returncode == 2

    missing = run_cli("check", "--mode", "cauchy", str(tmp_path / "nope.json"))
    assert missing.returncode == 2


def test_flag_validation_exits_two(tmp_path):
    assert run_cli("check", "--bound", "0").returncode == 2
    assert run_cli("check", "--trials", "0").returncode == 2
    assert run_cli("check", "--size-min", "5", "--size-max", "3").returncode == 2
    assert run_cli("check", "--width", "0").returncode == 2
    assert run_cli("check", "--width", "nope").returncode == 2
    assert run_cli("check", "--mode", "cauchy", "--size-min", "1").returncode == 2
    pair = tmp_path / "p.json"
    pair.write_text(json.dumps({"f": ["0", "1"], "g": ["1"]}))
    assert run_cli("check", "--mode", "all", str(pair)).returncode == 2


def test_pair_degree_gap_exits_two(tmp_path):
    pair = tmp_path / "gap.json"
    pair.write_text(json.dumps({"f": ["1", "0", "0", "1"], "g": ["1", "1"]}))
    result = run_cli("check", "--mode", "pencil", str(pair))
    assert result.returncode == 2
    assert "gap.json" in result.stderr


def test_reports_carry_tool_and_config_blocks():
    result = run_cli("check", "--mode", "definition", "--seed", "40", "--trials", "2")
    report = json.loads(result.stdout)
    assert report["tool"]["name"] == "interlacekit"
    assert "version" in report["tool"]
    assert report["config"]["mode"] == "definition"
    assert "elapsed_seconds" in report["timing"]


def test_gen_rejects_bad_flags():
    assert run_cli("gen", "--trials", "0").returncode == 2
    assert run_cli("gen", "--size-min", "0").returncode == 2


@pytest.mark.parametrize("mode", ["definition", "pencil", "identity", "cauchy"])
def test_every_generated_suite_passes(mode):
    result = run_cli("check", "--mode", mode, "--seed", "23", "--trials", "3",
                     "--size-min", "2", "--size-max", "4")
    assert result.returncode == 0, result.stderr
    report = strip_timing(result.stdout)
    assert report["suites"][mode]["failures"] == 0
