import io
import subprocess
import sys

import pytest

from qecbench.cli import (
    EXIT_ERROR,
    EXIT_FILE,
    EXIT_OK,
    EXIT_PAULI,
    EXIT_USAGE,
    SEED_ENV,
    run_command,
)


def run(*argv):
    out = io.StringIO()
    status = run_command(list(argv), out)
    return status, out.getvalue()


def test_codes_list():
    status, text = run("codes", "list")
    assert status == EXIT_OK
    lines = text.splitlines()
    assert len(lines) == 5
    assert "five_qubit [[5,1,3]]" in lines
    assert "shor9 [[9,1,3]]" in lines


@pytest.mark.parametrize(
    "name, params",
    [("bit_flip", "[[3,1,1]]"), ("phase_flip", "[[3,1,1]]"), ("shor9", "[[9,1,3]]"),
     ("steane7", "[[7,1,3]]"), ("five_qubit", "[[5,1,3]]")],
)
def test_code_info_parameters(name, params):
    status, text = run("code", "info", name)
    assert status == EXIT_OK
    assert f"parameters: {params}" in text


def test_code_info_degeneracy():
    _, text = run("code", "info", "shor9")
    assert "degenerate (witness ZIIIIIIII, IZIIIIIII)" in text
    _, text = run("code", "info", "steane7")
    assert "non-degenerate" in text


def test_code_info_from_file(tmp_path):
    path = tmp_path / "rep.txt"
    path.write_text("# repetition\nZZI\nIZZ\n")
    status, text = run("code", "info", str(path))
    assert status == EXIT_OK
    assert "name: rep" in text
    assert "[[3,1,1]]" in text


def test_syndrome_outcome_line():
    status, text = run("syndrome", "--code", "bit_flip", "--error", "IXI")
    assert status == EXIT_OK
    first, second = text.splitlines()
    assert first == "(-1,-1) → correct with IXI"
    assert second == "outcomes: (-1,-1)  bits: 11"


def test_syndrome_no_error():
    _, text = run("syndrome", "--code", "bit_flip", "--error", "III")
    assert text.startswith("(+1,+1) → correct with III")


def test_table_dump():
    status, text = run("table", "dump", "--code", "bit_flip", "--channel", "bit_flip")
    assert status == EXIT_OK
    assert text == "00\tIII\n01\tIIX\n10\tXII\n11\tIXI\n"


def test_table_dump_five_qubit():
    _, text = run("table", "dump", "--code", "five_qubit")
    assert len(text.splitlines()) == 16


def test_css_build_hamming(tmp_path):
    path = tmp_path / "h.txt"
    path.write_text("0001111\n0110011\n1010101\n")
    status, text = run("css", "build", "--hx", str(path), "--name", "hamming")
    assert status == EXIT_OK
    assert "parameters: [[7,1,3]]" in text


def test_css_build_incompatible(tmp_path):
    path = tmp_path / "r.txt"
    path.write_text("110\n011\n")
    status, _ = run("css", "build", "--hx", str(path))
    assert status == EXIT_ERROR


def test_kl_check(tmp_path):
    status, text = run("kl-check", "--code", "steane7", "--errors", "weight1")
    assert status == EXIT_OK
    assert "correctable: yes" in text
    path = tmp_path / "e.txt"
    path.write_text("III\nZII\n")
    _, text = run("kl-check", "--code", "bit_flip", "--errors", str(path))
    assert "correctable: no" in text


def test_verify_continuous():
    status, text = run("verify-continuous", "--code", "steane7", "--qubit", "4",
                       "--seed", "3", "--trials", "3")
    assert status == EXIT_OK
    worst = float(text.splitlines()[-1].split()[-1])
    assert worst >= 1 - 1e-8


def test_verify_continuous_qubit_range():
    status, _ = run("verify-continuous", "--code", "steane7", "--qubit", "8", "--seed", "1")
    assert status == EXIT_ERROR


def test_threshold():
    status, text = run("threshold", "--code", "shor9")
    assert status == EXIT_OK
    assert text.startswith("0.0323")
    assert abs(float(run("threshold", "--code", "steane7")[1]) - 0.0579) <= 5e-4


def test_mc_byte_identical(tmp_path):
    argv = ["mc", "--code", "bit_flip", "--channel", "bit_flip", "--p", "0.05,0.1",
            "--trials", "5000", "--seed", "11"]
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    assert run(*argv, "--out", str(a))[0] == EXIT_OK
    assert run(*argv, "--out", str(b))[0] == EXIT_OK
    assert a.read_bytes() == b.read_bytes()
    lines = a.read_text().splitlines()
    assert lines[0] == "code,channel,p,trials,failures,rate,std_error,seed"
    assert len(lines) == 3


def test_mc_env_seed(monkeypatch):
    argv = ["mc", "--code", "steane7", "--channel", "depolarizing", "--p", "0.1",
            "--trials", "2000"]
    monkeypatch.setenv(SEED_ENV, "42")
    from_env = run(*argv)[1]
    explicit = run(*argv, "--seed", "42")[1]
    assert from_env == explicit
    assert from_env.strip().endswith(",42")
    monkeypatch.setenv(SEED_ENV, "not-a-number")
    assert run(*argv)[0] == EXIT_ERROR


def test_exit_codes():
    assert run("frobnicate")[0] == EXIT_USAGE
    assert run("mc", "--code", "bit_flip", "--channel", "bit_flip", "--p", "2")[0] == EXIT_USAGE
    assert run("syndrome", "--code", "bit_flip", "--error", "IQI")[0] == EXIT_PAULI
    assert run("code", "info", "missing/gens.txt")[0] == EXIT_FILE
    assert run("kl-check", "--code", "bit_flip", "--errors", "nope.txt")[0] == EXIT_FILE
    assert run("code", "info", "bogus")[0] == EXIT_ERROR
    assert run("syndrome", "--code", "bit_flip", "--error", "IXIX")[0] == EXIT_ERROR


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "qecbench", "threshold", "--code", "bit_flip"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert proc.stdout.strip() == "0.5000000"
