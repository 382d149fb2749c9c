import json
import subprocess
import sys

import pytest

from polyheap.cli import main

PY = [sys.executable, "-m", "polyheap.cli"]


def run_cli(args, stdin=""):
    proc = subprocess.run(
        PY + args, input=stdin, capture_output=True, text=True, timeout=120
    )
    return proc.returncode, proc.stdout, proc.stderr


def test_count_examples():
    code, out, _ = run_cli(["count", "--n", "7", "--class", "cat"])
    assert code == 0 and out.strip() == "2513"
    code, out, _ = run_cli(["count", "--n", "0", "--class", "motzkin"])
    assert code == 0 and out.strip() == "1"
    # heap classes use the size <-> length shift
    code, out, _ = run_cli(["count", "--n", "8", "--class", "stacked"])
    assert code == 0 and out.strip() == "2513"
    code, out, _ = run_cli(["count", "--n", "8", "--class", "directed-animal"])
    assert code == 0 and out.strip() == "750"


def test_series_json():
    code, out, _ = run_cli(["series", "--which", "Ecat", "--order", "8", "--json"])
    assert code == 0
    assert json.loads(out) == ["1", "2", "6", "19", "63", "213", "729", "2513"]


def test_enumerate_with_limit():
    code, out, _ = run_cli(
        ["enumerate", "--n", "3", "--class", "cat", "--limit", "5"]
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 5
    assert all("tokens" in json.loads(line) for line in lines)


def test_map_worked_example_and_roundtrip():
    code, out, _ = run_cli(
        ["map", "--input", "-", "--from", "path", "--to", "heap"], stdin="UC"
    )
    assert code == 0
    heap = json.loads(out)
    assert sorted((d["pos"], d["level"]) for d in heap["dimers"]) == [
        (0, 0),
        (1, 1),
        (2, 0),
    ]
    # path -> heap -> path reproduces the token string
    code, out2, _ = run_cli(
        ["map", "--input", "-", "--from", "heap", "--to", "path"], stdin=out
    )
    assert code == 0
    assert json.loads(out2)["tokens"] == "UC"


def test_map_animal_chain():
    code, out, _ = run_cli(
        ["map", "--input", "-", "--from", "path", "--to", "animal"], stdin="UFDC"
    )
    assert code == 0
    code, out2, _ = run_cli(
        ["map", "--input", "-", "--from", "animal", "--to", "path"], stdin=out
    )
    assert code == 0
    assert json.loads(out2)["tokens"] == "UFDC"


def test_sample_deterministic():
    args = ["sample", "--n", "12", "--count", "4", "--seed", "9"]
    code, out1, _ = run_cli(args)
    code2, out2, _ = run_cli(args)
    assert code == code2 == 0
    assert out1 == out2
    assert len(out1.strip().splitlines()) == 4


def test_stats_exact_json_lines():
    code, out, _ = run_cli(["stats", "--n", "40", "--exact"])
    assert code == 0
    reports = [json.loads(line) for line in out.strip().splitlines()]
    assert {r["name"] for r in reports} == {
        "catastrophe_total",
        "down_steps",
        "minimal_dimers",
    }


def test_verify_small_suites_pass():
    code, out, _ = run_cli(["verify", "--suite", "identities", "--max-n", "6"])
    assert code == 0
    assert "FAIL" not in out


def test_render_svg(tmp_path):
    target = tmp_path / "out.svg"
    code, _, _ = run_cli(
        ["render", "--input", "-", "--format", "svg", "--out", str(target)],
        stdin='{"tokens": "UUDC"}',
    )
    assert code == 0
    assert "<svg" in target.read_text()


def test_exit_codes():
    # usage error -> 2
    code, _, _ = run_cli(["count", "--n", "5"])
    assert code == 2
    # validation error -> 1
    code, _, err = run_cli(
        ["map", "--input", "-", "--from", "path", "--to", "heap"], stdin="UXC"
    )
    assert code == 1 and "UnknownToken" in err


def test_main_entry_in_process(capsys):
    assert main(["count", "--n", "3", "--class", "cat"]) == 0
    assert capsys.readouterr().out.strip() == "19"
