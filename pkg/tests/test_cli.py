import json
import subprocess
import sys

import pytest

from slicereg import Balloon, Quaternion, balloon_divisors, evaluate
from slicereg.cli import main
from slicereg.parser import parse_poly


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_eval(capsys):
    code, out, _ = run(capsys, "eval", "-n", "2", "(q1-i)*(q2-j)",
                       "--at", '[["0","1","0","0"],["0","0","1","0"]]')
    assert code == 0 and out.strip() == "0+0i+0j+2k"


def test_eval_matches_library(capsys):
    text = "q1^2*q2*(1+2j) - q2*k + 1/3"
    point = [["1", "2", "0", "-1"], ["0", "1/2", "3", "1"]]
    code, out, _ = run(capsys, "eval", text, "--at", json.dumps(point), "--json")
    expected = evaluate(parse_poly(text, 2), [Quaternion.from_json(p) for p in point])
    assert code == 0 and Quaternion.from_json(json.loads(out)) == expected


def test_mul(capsys):
    code, out, _ = run(capsys, "mul", "q1 - i", "q2 - j")
    assert code == 0 and out.strip() == "q1*q2 - q1*j - q2*i + k"


def test_divmod(capsys):
    code, out, _ = run(capsys, "divmod", "-n", "1", "q^2", "--by", "q - i", "-m", "1")
    assert code == 0
    assert out.splitlines() == ["quotient: q + i", "remainder: -1"]


def test_decompose(capsys):
    code, out, _ = run(capsys, "decompose", "(q1-i)*(q2-j)", "--at", '["i", "3+i"]')
    assert code == 0 and json.loads(out)["result"] == "vanishing"
    code, out, _ = run(capsys, "decompose", "(q1-i)*(q2-j)", "--at", '["i", "j"]')
    assert code == 1 and json.loads(out)["witness_value"] == ["0", "0", "0", "2"]


def test_member_balloon_files(capsys, tmp_path):
    b = Balloon((Quaternion(0, 1), Quaternion(1, 1)), (Quaternion(0, 0, 1),))
    p = balloon_divisors(b)[0].poly * parse_poly("q3*k + q1", 3)
    (tmp_path / "balloon.json").write_text(json.dumps(b.to_json()))
    (tmp_path / "poly.json").write_text(json.dumps(p.to_json()))
    code, out, _ = run(capsys, "member", "--balloon", str(tmp_path / "balloon.json"),
                       str(tmp_path / "poly.json"))
    assert code == 0 and json.loads(out)["shape"] == "balloon"


@pytest.mark.parametrize("args,expected", [
    (["q^2+1", "--spheres", '["i"]'], 0),
    (["q1 + q2", "--spheres", '["i", "j"]'], 1),
    (["(q1^2+1)*q2 + q2 - j", "--spheres", '["i"]', "--tail", '["j"]'], 0),
    (["q1 - 1/2*q2 + 1/2", "--arranged", '["i", "1+2i"]'], 0),
    (["q1 - i", "--arranged", '["i", "1+2i"]'], 1),
    (["(q2 - j)*q1", "--slab", "j", "-m", "2"], 0),
    (["q1 - i", "--slab", "1+i", "-m", "2", "-n", "2"], 1),
    (["q1 - i", "--point", '["i"]'], 0),
])
def test_member_kinds(capsys, args, expected):
    code, _, _ = run(capsys, "member", *args)
    assert code == expected


def test_enlarge(capsys):
    code, out, _ = run(capsys, "enlarge", "q^2 + 1", "--at", '["j"]')
    assert code == 0
    assert {"head": [["0", "0", "1", "0"]], "tail": []} in json.loads(out)["balloons"]


def test_slice(capsys):
    code, out, _ = run(capsys, "slice", "q1 - j", "--K", "i", "--L", "j")
    eq = json.loads(out)["equations"][0]
    assert code == 0 and eq["G"]["terms"][0]["coeff"] == ["-1", "0"]


def test_repform(capsys):
    code, out, _ = run(capsys, "repform", "q", "--J", "j", "--K", "i", "--at", '["1+2i"]')
    assert code == 0 and out.strip() == "1+0i+2j+0k"


@pytest.mark.parametrize("argv", [
    ["eval", "q1 +", "--at", '["i"]'],
    ["eval", "q1", "--at", "not json"],
    ["divmod", "q^2", "--by", "2*q", "-m", "1"],
    ["member", "q", "--slab", "i"],
    ["repform", "q", "--J", "j", "--K", "i", "--at", '["j"]'],
])
def test_usage_errors(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2 and err.startswith("slicereg:")


def test_argparse_usage_error(capsys):
    with pytest.raises(SystemExit) as info:
        main(["nonsense"])
    assert info.value.code == 2


def test_selftest_subset(capsys, monkeypatch):
    monkeypatch.setenv("SLICEREG_SEED", "5")
    code, out, _ = run(capsys, "selftest", "--only", "2", "7")
    assert code == 0 and "seed=5" in out and out.count("[PASS]") == 2


def test_console_module():
    proc = subprocess.run([sys.executable, "-m", "slicereg", "mul", "q - i", "q + i"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip() == "q^2 + 1"
