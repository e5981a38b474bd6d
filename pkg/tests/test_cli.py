"""Command-line contract: output formats, exit codes, determinism."""

import subprocess
import sys
from pathlib import Path

import pytest

from rns3.cli import main

GOLDEN = Path(__file__).parent / "golden" / "table4.csv"


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_encode(capsys):
    code, out, _ = run(capsys, "encode", "--n", "2", "100")
    assert code == 0
    assert out == "R1=0 R2=10 R3=15\n"


def test_encode_hex_input(capsys):
    code, out, _ = run(capsys, "encode", "--n", "2", "0x64")
    assert code == 0 and out == "R1=0 R2=10 R3=15\n"


def test_encode_out_of_range(capsys):
    code, out, err = run(capsys, "encode", "--n", "2", "1020")
    assert code == 2
    assert "X must be < 1020" in err and out == ""


def test_decode(capsys):
    code, out, _ = run(capsys, "decode", "--n", "2", "0", "10", "15")
    assert code == 0
    assert out == "X=100\n"


def test_decode_trace(capsys):
    code, out, _ = run(capsys, "decode", "--n", "2", "--trace", "0", "10", "15")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "S1'=11100001"
    assert lines[1] == "S2=01010101"
    assert lines[2] == "S31=11100001"
    assert lines[3] == "CSA sum=01010101 carry=11000011"
    assert lines[-1] == "Y=25 X=100"


def test_decode_residue_out_of_range(capsys):
    code, _, err = run(capsys, "decode", "--n", "2", "0", "15", "15")
    assert code == 2
    assert "R2" in err


def test_verify_exhaustive(capsys):
    code, out, _ = run(capsys, "verify", "--n", "2", "--exhaustive")
    assert code == 0
    assert "checked 1020 values, 0 failures" in out
    assert "roundtrip: checked 1020, failed 0" in out


def test_verify_exhaustive_rejected_for_large_n(capsys):
    code, _, err = run(capsys, "verify", "--n", "5", "--exhaustive")
    assert code == 2
    assert "--random" in err


def test_verify_random_deterministic(capsys):
    args = ("verify", "--n", "16", "--random", "--samples", "2000",
            "--seed", "7")
    code1, out1, _ = run(capsys, *args)
    code2, out2, _ = run(capsys, *args)
    assert code1 == code2 == 0
    assert out1 == out2
    assert out1.endswith("checked 2000 values, 0 failures\n")


def test_costs_table4_matches_golden(capsys):
    code, out, _ = run(capsys, "costs", "--table", "4", "--format", "csv")
    assert code == 0
    assert out == GOLDEN.read_text()


def test_costs_table4_via_subprocess():
    proc = subprocess.run(
        [sys.executable, "-m", "rns3", "costs", "--table", "4",
         "--format", "csv"],
        capture_output=True,
    )
    assert proc.returncode == 0
    assert proc.stdout == GOLDEN.read_bytes()


def test_costs_other_tables(capsys):
    for table in ("1", "2", "3"):
        code, out, _ = run(capsys, "costs", "--table", table, "--n", "4")
        assert code == 0 and out
    code, _, err = run(capsys, "costs", "--table", "2")
    assert code == 2 and "--n" in err


def test_costs_unknown_table(capsys):
    code, _, err = run(capsys, "costs", "--table", "9")
    assert code == 2
    assert "unknown table" in err


def test_bench_minimal(capsys):
    code, out, _ = run(capsys, "bench", "--n", "1", "--iters", "1")
    assert code == 0
    assert len(out.splitlines()) == 3
    code, out, _ = run(capsys, "bench", "--n", "16", "--iters", "100")
    assert code == 0
    assert out.startswith("forward_convert:")


def test_usage_errors_exit_2(capsys):
    assert run(capsys, "bench", "--n", "0")[0] == 2
    assert run(capsys, "encode", "--n", "2", "-5")[0] == 2
    assert run(capsys, "encode", "--n", "2", "zzz")[0] == 2
    assert run(capsys, "nonsense")[0] == 2


def test_help_exits_0(capsys):
    assert run(capsys, "--help")[0] == 0
