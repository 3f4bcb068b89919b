import json
import subprocess
import sys
from pathlib import Path

import pytest

from vedicmul.cli import main

GOLDEN = Path(__file__).parent / "golden"


def run(capsys, *argv):
    try:
        code = main(list(argv))
    except SystemExit as exc:
        code = exc.code
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize(
    "argv, expected",
    [
        (["mul", "23", "21"], "483\n"),
        (["mul", "--radix", "2", "10111", "10101"], "111100011\n"),
        (["mul", "--signed", "--", "-23", "21"], "-483\n"),
        (["mul", "--signed", "--", "-23", "-21"], "483\n"),
        (["mul", "--signed", "--", "-23", "0"], "0\n"),
        (["mul", "--radix", "16", "0xff", "ff"], "fe01\n"),
    ],
)
def test_mul(capsys, argv, expected):
    code, out, _ = run(capsys, *argv)
    assert (code, out) == (0, expected)


@pytest.mark.parametrize(
    "argv",
    [["mul", "23"], ["mul", "2g", "1", "--radix", "16"], ["mul", "--", "-23", "21"],
     ["mul", "1", "2", "3"], ["mul", "--radix", "8", "1", "2"]],
)
def test_mul_usage_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err


def test_trace_golden(capsys):
    for argv, name in [(("23", "21"), "trace_23_21.txt"), (("13", "13"), "trace_13_13.txt"),
                       (("7", "1"), "trace_7_1.txt")]:
        code, out, _ = run(capsys, "trace", *argv)
        assert code == 0
        assert out == (GOLDEN / name).read_text(encoding="utf-8")


def test_trace_records(capsys):
    code, out, _ = run(capsys, "trace", "--format", "records", "23", "21")
    assert code == 0
    assert out == (GOLDEN / "trace_23_21.jsonl").read_text(encoding="utf-8")
    recs = [json.loads(line) for line in out.splitlines()]
    assert [r["base_exponent"] for r in recs if r["record"] == "level"] == [4, 2]


def test_trace_signed(capsys):
    code, out, _ = run(capsys, "trace", "--signed", "--", "-23", "21")
    assert code == 0 and out.endswith("-23 × 21 = -483\n")


def test_verify(capsys):
    assert run(capsys, "verify", "--exhaustive-bits", "8") == (0, "65536 pairs OK\n", "")
    code, out, _ = run(capsys, "verify", "--random", "1000", "--max-bits", "2048", "--seed", "7")
    assert (code, out) == (0, "1000 pairs OK\n")


@pytest.mark.parametrize(
    "argv",
    [["verify", "--exhaustive-bits", "40"], ["verify"],
     ["verify", "--exhaustive-bits", "3", "--random", "5"],
     ["verify", "--random", "0"]],
)
def test_verify_usage_errors(capsys, argv):
    code, _, _ = run(capsys, *argv)
    assert code == 2


def test_verify_reports_counterexample(capsys, monkeypatch):
    import vedicmul.cli as cli
    from vedicmul.bitnum import BitNat

    def broken(x, y):
        return BitNat(x.value * y.value + (x.value == 3 and y.value == 5)), None

    monkeypatch.setattr(cli, "nikhilam_mul", broken)
    code, out, _ = run(capsys, "verify", "--exhaustive-bits", "3")
    assert code == 1
    assert out == "MISMATCH 3 × 5: nikhilam=16 oracle=15\n"


def test_mul_agrees_with_verify_oracle(capsys):
    from vedicmul.bitnum import BitNat, schoolbook_mul
    for a, b in [(23, 21), (2**70 + 3, 2**69 - 1), (0, 9)]:
        _, out, _ = run(capsys, "mul", str(a), str(b))
        assert int(out) == schoolbook_mul(BitNat(a), BitNat(b)).value


def test_profile(capsys, tmp_path):
    code, out, _ = run(capsys, "profile", "--lo", "0", "--hi", "1023")
    lines = out.splitlines()
    assert code == 0 and len(lines) == 1025
    assert lines[0] == "n,bit_len,ones,zeros,ratio,recursion_count"
    assert lines[22] == "21,5,3,2,1.5,2"

    dest = tmp_path / "p.csv"
    assert run(capsys, "profile", "--lo", "0", "--hi", "1023", "--jobs", "2",
               "-o", str(dest))[0] == 0
    assert dest.read_bytes() == out.encode("utf-8")


def test_profile_errors(capsys, monkeypatch):
    assert run(capsys, "profile", "--lo", "5", "--hi", "4")[0] == 2
    monkeypatch.setenv("NIKHILAM_CORPUS_CAP", "10")
    code, _, err = run(capsys, "profile", "--lo", "0", "--hi", "10")
    assert code == 2 and "cap of 10" in err
    assert run(capsys, "profile", "--lo", "0", "--hi", "9")[0] == 0
    monkeypatch.setenv("NIKHILAM_CORPUS_CAP", "lots")
    assert run(capsys, "profile", "--lo", "0", "--hi", "9")[0] == 2


def test_census(capsys):
    code, out, _ = run(capsys, "census", "--b-max", "16")
    lines = out.splitlines()
    assert code == 0 and len(lines) == 16
    assert lines[0] == "b,corpus_size,worst_case_depth,worst_case_cardinality"
    for line in lines[1:]:
        b, size, depth, card = map(int, line.split(","))
        assert size == 2 ** (b - 1) and depth == (b + 1) // 2 and card >= 1
    assert run(capsys, "census", "--b-max", "40")[0] == 2
    assert run(capsys, "census", "--b-max", "1")[0] == 2
    first = run(capsys, "census", "--b-max", "40", "--samples", "50", "--seed", "1")
    assert first[0] == 0
    assert run(capsys, "census", "--b-max", "40", "--samples", "50", "--seed", "1") == first


def test_demo_decimal(capsys):
    code, out, _ = run(capsys, "demo-decimal", "--all-paper-cases")
    assert code == 0
    assert out == (GOLDEN / "demo_all_paper_cases.txt").read_text(encoding="utf-8")
    answers = [ln for ln in out.splitlines() if ln.startswith("Hence answer")]
    assert answers == [f"Hence answer = {n}" for n in (9702, 2352, 10302, 9999)]

    code, out, _ = run(capsys, "demo-decimal", "99", "98", "--base", "100")
    assert code == 0 and out.splitlines()[-1] == "Hence answer = 9702"
    code, out, _ = run(capsys, "demo-decimal", "49", "48", "--base", "5x10")
    assert code == 0 and "10 × 5 = 50" in out and out.endswith("Hence answer = 2352\n")


@pytest.mark.parametrize(
    "argv",
    [["demo-decimal", "49", "48", "--base", "12x10"], ["demo-decimal", "49", "48"],
     ["demo-decimal", "49", "48", "--base", "0"], ["demo-decimal", "--all-paper-cases", "1", "2"]],
)
def test_demo_decimal_errors(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "vedicmul", "mul", "23", "21"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "483\n"
    proc = subprocess.run([sys.executable, "-m", "vedicmul", "bogus"],
                          capture_output=True, text=True)
    assert proc.returncode == 2
