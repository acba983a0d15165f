import io
import os
import subprocess
import sys
from pathlib import Path

import pytest

from weyltype.cli import run

HERE = Path(__file__).parent
DATA = HERE / "data"
GOLDEN = HERE / "golden"

# (name, argv); signature paths are relative to tests/data
GOLDEN_CASES = [
    ("mul_weyl_relation", ["mul", "-s", "w100.sig", "d1", "t1"]),
    ("mul_three_factors", ["mul", "-s", "w110_2z.sig", "d2^2", "x[2]", "t2"]),
    ("mul_sqrt2_coefficients", ["mul", "-s", "sqrt2_a.sig", "(1 + th)*d1", "x[1,1]*t1"]),
    ("bracket_d_t", ["bracket", "-s", "w100.sig", "d1", "t1"]),
    ("bracket_d_x", ["bracket", "-s", "w111.sig", "d2 + d3", "x[1,-2]*t1"]),
    ("classify_scalar_witness", ["classify", "w110_2z.sig", "w110_z.sig"]),
    ("classify_sqrt2_certificate", ["classify", "sqrt2_a.sig", "sqrt2_b.sig", "--radius", "3"]),
    ("classify_undecided", ["classify", "hard_a.sig", "hard_b.sig", "--radius", "0"]),
    ("analyze_not_locally_finite", ["analyze", "-s", "w110_z.sig", "t1*d2", "--steps", "4"]),
    ("analyze_nilpotent", ["analyze", "-s", "w111.sig", "x[1,0] + t1^2 + d1", "--steps", "4"]),
]


def transcript(argv):
    out, err = io.StringIO(), io.StringIO()
    cwd = os.getcwd()
    os.chdir(DATA)
    try:
        code = run(argv, out, err)
    finally:
        os.chdir(cwd)
    return code, out.getvalue(), err.getvalue()


def render(argv):
    code, out, _ = transcript(argv)
    return "$ weyl " + " ".join(f'"{a}"' if " " in a else a for a in argv) + "\n" + out + f"[exit {code}]\n"


@pytest.mark.parametrize("name,argv", GOLDEN_CASES, ids=[c[0] for c in GOLDEN_CASES])
def test_golden(name, argv):
    path = GOLDEN / f"{name}.txt"
    text = render(argv)
    if os.environ.get("WEYL_REGEN_GOLDEN"):
        path.write_text(text, encoding="utf-8")
    assert text == path.read_text(encoding="utf-8")
    assert render(argv) == text


def test_exit_codes():
    assert transcript(["mul", "-s", "w100.sig", "d1", "t1"])[:2] == (0, "t1*d1 + 1\n")
    assert transcript(["mul", "-s", "w100.sig", "d1*"])[0] == 1
    assert transcript(["mul", "-s", "w100.sig", "t7"])[0] == 1
    assert transcript(["frobnicate"])[0] == 1
    assert transcript(["mul", "d1"])[0] == 1
    assert transcript(["mul", "-s", "missing.sig", "d1"])[0] == 2
    assert transcript(["invariants", "-s", "degenerate.sig"])[0] == 2
    assert transcript(["classify", "hard_a.sig", "hard_b.sig", "--radius", "0"])[0] == 3
    assert transcript(["selfcheck", "-s", "w100.sig", "--seed", "zz"])[0] == 1


def test_invariants_and_iso_apply():
    code, out, _ = transcript(["invariants", "-s", "sqrt2_a.sig"])
    assert (code, out) == (0, "rank=2 rank_cap_V2=0 rank_proj3=2\n")
    code, out, _ = transcript(["iso-apply", "w110_2z.sig", "w110_z.sig", "--g", "[[2]]",
                               "t2*d2", "x[2]", "t2"])
    assert (code, out) == (0, "t2*d2\nx[1]\n1/2*t2\n")
    code, _, err = transcript(["iso-apply", "w110_2z.sig", "w110_z.sig", "--g", "[[3]]", "t2"])
    assert code == 1 and "WitnessInvalid" in err


def test_ad_command():
    code, out, _ = transcript(["ad", "-s", "w100.sig", "t1^2*d1", "d1", "--steps", "4"])
    assert code == 0
    assert out.splitlines()[-1] == "NilpotentAt(3)"


def test_selfcheck_is_seeded():
    argv = ["selfcheck", "-s", "w111.sig", "--degree-cap", "3", "--trials", "10", "--seed", "beef"]
    code, out, _ = transcript(argv)
    assert code == 0
    assert out.startswith("# seed=0xbeef\n")
    assert "FAILED" not in out
    assert transcript(argv)[1] == out


def test_unchecked_irreducibility_warning(tmp_path):
    sig = tmp_path / "quartic.sig"
    sig.write_text("l1 = 0\nl2 = 1\nl3 = 0\nminpoly = [1, 0, 0, 0, 1]\ngen = [1]\n")
    code, _, err = transcript(["invariants", "-s", str(sig)])
    assert code == 0 and "unchecked" in err


def test_console_script():
    proc = subprocess.run([sys.executable, "-m", "weyltype.cli", "mul", "-s", str(DATA / "w100.sig"),
                           "d1", "t1"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "t1*d1 + 1\n"
