"""CLI contract: flags, exit codes, stdout/stderr split, demo traces."""

import json
import subprocess
import sys

import pytest

from qnetsim.cli import DEMO_TRACES, generate_demo_traces, main
from qnetsim.trace import validate


def run_main(argv, capsys):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_successful_run_prints_summary_json(tmp_path, capsys):
    trace_path = tmp_path / "t.json"
    code, out, err = run_main(
        [
            "--scenario", "teleportation",
            "--backend", "dm",
            "--seed", "7",
            "--trials", "50",
            "--trace-out", str(trace_path),
        ],
        capsys,
    )
    assert code == 0
    summary = json.loads(out)
    assert summary["aggregate"]["x_zero_rate"] == 1.0
    assert summary["trace_path"] == str(trace_path)
    assert validate(trace_path.read_bytes()) == []


def test_unknown_scenario_exits_2_and_lists_choices(capsys):
    code, out, err = run_main(["--scenario", "bogus"], capsys)
    assert code == 2
    for name in ("bell_all_to_all", "teleportation", "ghz4", "cluster5", "cluster_chain"):
        assert name in err


def test_malformed_noise_exits_2(capsys):
    code, out, err = run_main(
        ["--scenario", "ghz4", "--noise", "loss=0.1"], capsys
    )
    assert code == 2


def test_noise_out_of_range_exits_2(capsys):
    code, out, err = run_main(
        ["--scenario", "ghz4", "--noise", "loss:1.5"], capsys
    )
    assert code == 2


def test_runtime_failure_exits_1(capsys):
    code, out, err = run_main(
        ["--scenario", "cluster_chain", "--nodes", "100", "--backend", "ket"],
        capsys,
    )
    assert code == 1
    assert "ket" in err and out == ""


def test_unwritable_trace_path_exits_1(tmp_path, capsys):
    code, out, err = run_main(
        [
            "--scenario", "ghz4",
            "--trace-out", str(tmp_path / "no" / "such" / "dir" / "t.json"),
        ],
        capsys,
    )
    assert code == 1


def test_flags_reflected_in_trace_meta(tmp_path, capsys):
    trace_path = tmp_path / "t.json"
    code, out, _ = run_main(
        [
            "--scenario", "bell_all_to_all",
            "--backend", "stab",
            "--seed", "13",
            "--trials", "2",
            "--noise", "depolarizing:0.1",
            "--noise", "loss:0.05",
            "--qdelay-ns", "42",
            "--cdelay-ns", "1000",
            "--trace-out", str(trace_path),
        ],
        capsys,
    )
    assert code == 0
    meta = json.loads(trace_path.read_bytes())["meta"]
    assert meta["backend"] == "stab"
    assert meta["seed"] == 13
    assert meta["scenario"] == "bell_all_to_all"
    assert meta["config"] == {
        "scenario": "bell_all_to_all",
        "backend": "stab",
        "seed": 13,
        "trials": 2,
        "noise": ["depolarizing:0.1", "loss:0.05"],
        "qdelay_ns": 42,
        "cdelay_ns": 1000,
        "nodes": 5,
        "timeout_mult": 1.0,
    }


def test_console_script_runs_in_subprocess():
    proc = subprocess.run(
        [sys.executable, "-m", "qnetsim.cli", "--scenario", "ghz4", "--trials", "3"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["aggregate"]["all_equal_rate"] == 1.0


# -- demo traces -----------------------------------------------------------------


def test_demo_traces_written_and_valid(tmp_path):
    paths = generate_demo_traces(tmp_path / "demo")
    assert sorted(p.name for p in paths) == sorted(
        f"{name}.json" for name in DEMO_TRACES
    )
    for path in paths:
        assert validate(path.read_bytes()) == [], path.name


def test_demo_traces_byte_identical_across_runs(tmp_path):
    first = {p.name: p.read_bytes() for p in generate_demo_traces(tmp_path / "a")}
    second = {p.name: p.read_bytes() for p in generate_demo_traces(tmp_path / "b")}
    assert first == second


def test_demo_cluster5_final_deliveries_are_crecv(tmp_path):
    (path,) = [
        p for p in generate_demo_traces(tmp_path / "demo") if "cluster5" in p.name
    ]
    events = json.loads(path.read_bytes())["events"]
    deliveries = [
        e for e in events
        if e["type"] in ("qsend", "qrecv", "qlost", "csend", "crecv")
    ]
    assert [e["type"] for e in deliveries[-3:]] == ["crecv"] * 3
    assert all(e["tag"] == "correction" for e in deliveries[-3:])
