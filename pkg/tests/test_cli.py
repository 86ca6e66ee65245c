import json
import subprocess
import sys

import pytest

from curvegb.cli import main

SMALL = ["--arith", "7,8", "--mn", "6"]
WIDE = ["--arith", "20,21,22,23,24", "--mn", "29"]


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_params(capsys):
    code, out, _ = run(capsys, "params", *SMALL)
    assert code == 0
    assert "u=4 υ=4 w=3 z=3 λ=2 μ=0 ν=2" in out
    code, out, _ = run(capsys, "params", *WIDE)
    assert "u=9 υ=3" in out and "z=7" in out and "μ=2" in out


def test_params_json_is_stable(capsys):
    _, first, _ = run(capsys, "params", *SMALL, "--json")
    _, second, _ = run(capsys, "params", *SMALL, "--json")
    a, b = json.loads(first), json.loads(second)
    assert a["schema"] == 1
    assert a["parameters"]["upsilon"] == 4
    a.pop("elapsed_ms"), b.pop("elapsed_ms")
    assert a == b
    assert first.index('"command"') < first.index('"input"') < first.index('"schema"')


@pytest.mark.parametrize("argv, name", [
    (["--arith", "5,6", "--mn", "11"], "NotMinimallyGenerated"),
    (["--arith", "5,7,8", "--mn", "11"], "NotArithmetic"),
    (["--arith", "5,x", "--mn", "11"], "ParseError"),
    (["--arith", "4,6", "--mn", "8"], "GcdNotOne"),
])
def test_params_input_errors(capsys, argv, name):
    code, _, err = run(capsys, "params", *argv)
    assert code == 2 and name in err


def test_basis(capsys):
    _, out, _ = run(capsys, "basis", "--kind", "omega", *SMALL)
    assert out.split("\n")[:2] == ["x2^4 - x1^3", "x1*x2 - x0^2"]
    _, out, _ = run(capsys, "basis", "--kind", "phi", *SMALL)
    assert "x1^4 - x0^2*x2^3" in out.splitlines()
    _, out, _ = run(capsys, "basis", "--kind", "patil-singh", *WIDE, "--json")
    assert json.loads(out)["basis"]["size"] == 14


def test_check(capsys):
    code, out, _ = run(capsys, "check", "--kind", "omega", "--order", "asc", *SMALL)
    assert code == 1 and out.startswith("NOT_GB") and "x1^4 - x0^2*x2^3" in out
    code, out, _ = run(capsys, "check", "--kind", "phi", "--order", "asc", *SMALL)
    assert code == 0 and out.strip() == "GB MINIMAL"
    code, out, _ = run(capsys, "check", "--kind", "patil-singh", "--order", "desc", *WIDE, "--json")
    report = json.loads(out)
    assert code == 1
    assert set(report["results"][0]["witness"]["pair"]) == {"theta", "xi_1,3"}
    code, out, _ = run(capsys, "check", "--kind", "patil-singh", "--arith", "7,8,9", "--mn", "11")
    assert code == 0 and "NOT_MINIMAL" in out


def test_compare(capsys, tmp_path):
    assert run(capsys, "compare", *SMALL)[1].startswith("EQUAL")
    assert run(capsys, "compare", "--arith", "9,10", "--mn", "8")[0] == 0
    good = tmp_path / "good.txt"
    good.write_text("x1*x2 - x0^2\nx2^4 - x1^3\n")
    code, out, _ = run(capsys, "compare", *SMALL, "--basis-file", str(good))
    assert code == 0
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(["x1^4 - x0^2*x2^3", "x1*x2 - x0^3", "x2^4 - x1^3"]))
    code, out, _ = run(capsys, "compare", *SMALL, "--basis-file", str(bad), "--json")
    report = json.loads(out)
    assert code == 1
    assert report["comparison"]["equal"] is False
    assert report["comparison"]["first_mismatch"]["element"]
    code, _, err = run(capsys, "compare", *SMALL, "--basis-file", str(tmp_path / "missing"))
    assert code == 2


def test_compare_resource_cap(capsys, monkeypatch):
    monkeypatch.setenv("CURVE_GB_MAX_BASIS", "3")
    code, _, err = run(capsys, "compare", *WIDE)
    assert code == 3 and "ResourceLimit" in err
    monkeypatch.setenv("CURVE_GB_MAX_BASIS", "lots")
    assert run(capsys, "compare", *SMALL)[0] == 2


def test_sweep(capsys):
    code, out, _ = run(capsys, "sweep", "--family", "odd-shift", "--m0", "5..25", "--json")
    report = json.loads(out)
    assert code == 0
    assert report["summary"] == {"family": "odd-shift", "instances": 11, "failures": 0}
    code, out, _ = run(capsys, "sweep", "--family", "odd-shift", "--m0", "30..20", "--json")
    assert code == 0 and json.loads(out)["results"] == []
    code, out, _ = run(capsys, "sweep", "--all", "--max-m0", "6", "--max-p", "2", "--max-mn", "12",
                       "--ladder-samples", "20", "--pair-samples", "10", "--verbose")
    assert code == 0 and out.strip().endswith("0 failures")
    assert run(capsys, "sweep")[0] == 2


def test_nf(capsys):
    code, out, _ = run(capsys, "nf", *SMALL, "x1^5", "--engine", "ladder", "--explain")
    assert code == 0 and out.strip() == "x0^4*x2^2 [phi_0, psi_0]"
    _, generic, _ = run(capsys, "nf", *SMALL, "x1^5", "--engine", "generic")
    assert generic.strip() == "x0^4*x2^2"
    assert run(capsys, "nf", *SMALL, "1")[1].strip() == "1"
    code, _, err = run(capsys, "nf", *SMALL, "x2^4", "--engine", "ladder")
    assert code == 2 and "UnsupportedInput" in err
    code, _, err = run(capsys, "nf", *SMALL, "x7")
    assert code == 2 and "ParseError" in err


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "curvegb.cli", "params", *SMALL],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and "u=4" in proc.stdout
