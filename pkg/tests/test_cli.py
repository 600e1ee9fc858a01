import json
import subprocess
import sys

import pytest

from jackkernel.cli import cli_run, parse_partition, UsageError


def run(capsys, *argv):
    code = cli_run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_jack_json(capsys):
    code, out, _ = run(capsys, "jack", "2")
    assert code == 0
    data = json.loads(out)
    assert data["basis"] == "powersum"
    assert data["terms"] == [
        {"partition": [2], "coeff": {"num": "alpha", "den": "1"}},
        {"partition": [1, 1], "coeff": {"num": "1", "den": "1"}},
    ]


def test_jack_specialized(capsys):
    code, out, _ = run(capsys, "jack", "2,1", "--alpha", "1")
    assert code == 0
    coeffs = {tuple(t["partition"]): t["coeff"] for t in json.loads(out)["terms"]}
    assert coeffs[(3,)] == {"num": "-1", "den": "1"}
    assert (2, 1) not in coeffs


def test_character(capsys):
    code, out, _ = run(capsys, "character", "1", "3,1")
    assert code == 0
    assert json.loads(out) == {"ch": {"num": "4", "den": "1"}, "theta": {"num": "4", "den": "1"}}


def test_stanley_check(capsys):
    code, out, _ = run(capsys, "stanley", "2", "--rects", "1", "--check")
    assert code == 0
    data = json.loads(out)
    assert data["lassalle"]["nonnegative"] and data["lassalle"]["integral"]
    assert len(data["lassalle"]["polynomial"]["monomials"]) == 4


def test_moments_and_cumulants(capsys):
    code, out, _ = run(capsys, "moments", "1", "--lmax", "4", "--boolean")
    assert code == 0
    vals = json.loads(out)["values"]
    assert vals["2"] == {"num": "1", "den": "1"}
    code, out, _ = run(capsys, "moments", "2", "--lmax", "3")
    assert json.loads(out)["values"][2] == {"num": "2", "den": "1"}


def test_expand(capsys):
    code, out, _ = run(capsys, "expand", "2,2")
    assert code == 0
    assert [t["partition"] for t in json.loads(out)["terms"]] == [[1], [1, 1]]


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "vanishing", "--max-size", "2")
    assert code == 0
    assert json.loads(out)["passed"] is True


@pytest.mark.parametrize("argv", [
    ["jack", "1,2"],
    ["jack", "a,b"],
    ["jack", "7"],
    ["character", "1"],
    ["expand", "1,2"],
    ["verify", "nope"],
    ["jack", "2", "--alpha", "1/0"],
    ["moments", "2", "--lmax", "-1"],
    [],
])
def test_usage_errors(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2
    assert out == ""
    assert err


def test_output_file_and_determinism(tmp_path, capsys):
    target = tmp_path / "j.json"
    assert cli_run(["-o", str(target), "jack", "3,1"]) == 0
    first = target.read_bytes()
    assert cli_run(["-o", str(target), "jack", "3,1"]) == 0
    assert target.read_bytes() == first
    code, out, _ = run(capsys, "jack", "3,1")
    assert out.encode() == first


def test_unwritable_output(capsys, tmp_path):
    code, _, err = run(capsys, "-o", str(tmp_path / "missing" / "x.json"), "jack", "1")
    assert code == 2 and "cannot write" in err


def test_parse_partition():
    assert parse_partition("3,1,1") == (3, 1, 1)
    assert parse_partition("") == ()
    with pytest.raises(UsageError):
        parse_partition("0,1")


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "jackkernel.cli", "jack", "1,1"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["terms"][0]["partition"] == [2]
