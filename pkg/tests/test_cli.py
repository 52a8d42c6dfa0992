"""Command-line behavior: output, exit codes, and the JSON schema."""

import json
import subprocess
import sys

from tamesym import AtomRegistry, parse_gamma, parse_wedge
from tamesym.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_ts_at_place(capsys):
    code, out, _ = run(capsys, "ts", "--place", "t=3", "w[t, 1-t, 1-3/t]")
    assert code == 0
    assert out == "-w[2, 3]\n"


def test_ts_output_reparses(capsys):
    code, out, _ = run(capsys, "ts", "--place", "t=3", "w[t, 1-t, 1-3/t]")
    reg = AtomRegistry()
    w = parse_wedge(out.strip(), reg, field="Q")
    assert not w.is_zero


def test_dd2_is_zero(capsys):
    code, out, _ = run(capsys, "dd2", "m=2; [S: w[x-1, y-2, x-y, 5]]")
    assert code == 0
    assert out.splitlines() == ["m=2; 0", "d-squared-zero: yes"]


def test_json_schema(capsys):
    code, out, _ = run(capsys, "ts", "--format", "json",
                       "--place", "t=3", "w[t, 1-t, 1-3/t]")
    assert code == 0
    payload = json.loads(out)
    assert sorted(payload) == ["certificates", "input", "result", "status",
                               "verb"]
    assert payload["verb"] == "ts"
    assert payload["result"] == "-w[2, 3]"
    assert payload["status"] == "ok"
    assert payload["input"] == {"place": "t=3", "wedge": "w[t, 1-t, 1-3/t]"}


def test_property_violation_exits_one(capsys):
    code, out, _ = run(capsys, "snc", "w[y-x, y-x-1, 3]")
    assert code == 1
    lines = out.splitlines()
    assert lines[0] == "strictly-regular: no"
    assert "tangency at (inf, inf)" in lines[1]
    code, _, _ = run(capsys, "adm", "cyc[t, 1-t, 1-3/t]")
    assert code == 1


def test_parse_error_exits_two(capsys):
    code, out, err = run(capsys, "delta", "oops[")
    assert code == 2
    assert out == ""
    assert "delta:" in err
    code, _, err = run(capsys, "ts", "w[t]")
    assert code == 2
    code, _, err = run(capsys, "ts", "--place", "t=3", "--divisor", "y=x",
                       "w[t]")
    assert code == 2


def test_engine_error_exits_three(capsys):
    code, out, err = run(capsys, "bdry", "cyc[t, 1-t, 1-3/t]")
    assert code == 3
    assert "NotAdmissible" in err


def test_json_error_statuses(capsys):
    code, out, _ = run(capsys, "delta", "--format", "json", "oops[")
    assert code == 2
    assert json.loads(out)["status"] == "parse-error"
    code, out, _ = run(capsys, "bdry", "--format", "json",
                       "cyc[t, 1-t, 1-3/t]")
    assert code == 3
    payload = json.loads(out)
    assert payload["status"] == "engine-error"
    assert "NotAdmissible" in payload["result"]


def test_five_term_verb(capsys):
    code, out, _ = run(capsys, "five-term", "0", "1", "3", "7", "inf")
    assert code == 0
    assert out.splitlines() == ["-{-6}_2 - {-7/2}_2 + {-4/3}_2",
                                "in-delta-kernel: yes"]


def test_h_and_decomp_verbs(capsys):
    code, out, _ = run(capsys, "h", "w[t, 1-t, 1-3/t]")
    assert code == 0
    assert out == "{-2}_2\n"
    reg = AtomRegistry()
    assert parse_gamma(out.strip(), reg, field="Q") is not None
    code, out, _ = run(capsys, "decomp", "w[t, 1-t, 1-3/t]")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "preimage: -{(3*t-3)/(t-3)}_2 ⊗ w[t-3]"
    assert lines[2] == "certificate: yes"


def test_homotopy_check_verb(capsys):
    code, out, _ = run(capsys, "homotopy-check", "w[t, 1-t, 1-3/t]")
    assert code == 0
    assert out.splitlines()[0] == "lower-triangle: yes"
    code, out, _ = run(capsys, "homotopy-check", "--sub",
                       "{(3*t-3)/(t-3)}_2 (x) w[t-3]")
    assert code == 0
    assert out.splitlines()[0] == "upper-triangle: yes"


def test_wcheck_verb(capsys):
    code, out, _ = run(capsys, "wcheck", "cyc[2*(t-1)/(t-3), 5*(t-2)/(t-4)]")
    assert code == 0
    assert out.splitlines()[0] == "commutes: yes"


def test_suite_small_scale_and_stability(capsys):
    code, out1, _ = run(capsys, "suite", "--seed", "7", "--scale", "3")
    assert code == 0
    code, out2, _ = run(capsys, "suite", "--seed", "7", "--scale", "3")
    assert code == 0
    assert out1 == out2
    assert out1.splitlines()[0] == "acceptance suite: seed=7 scale=3"
    assert out1.splitlines()[-1] == "overall: PASS"


def test_console_script_is_installed():
    proc = subprocess.run(
        [sys.executable, "-m", "tamesym", "ts", "--place", "t=3",
         "w[t, 1-t, 1-3/t]"],
        capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout == "-w[2, 3]\n"
