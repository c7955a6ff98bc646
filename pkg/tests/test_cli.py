import io
import json
import subprocess
import sys

import pytest

from zipcones.cli import dispatch


def run(*argv):
    out = io.StringIO()
    code = dispatch(list(argv), out)
    return code, out.getvalue()


def test_cone_gs():
    code, text = run("cone", "--kind", "gl", "--n", "3", "--r", "2", "--s", "1", "--q", "2", "--name", "gs")
    doc = json.loads(text)
    assert code == 0 and doc["schema"] == 1
    assert doc["group"] == {"kind": "gl", "n": 3, "r": 2, "s": 1, "q": 2, "sigma": [1, 2]}
    assert sorted(map(tuple, doc["cone"]["hform"])) == [(-1, 1, 0), (0, 1, -1), (1, 0, -1)]
    assert doc["cone"]["n"] == 3 and "k1 - k3 <= 0" in doc["cone"]["inequalities"]


def test_member_sp6zip():
    code, text = run("member", "--kind", "sp", "--n", "3", "--q", "2", "--name", "sp6zip", "--lambda", "1,-1,-1")
    assert code == 0 and json.loads(text)["member"] is False
    code, text = run("member", "--kind", "sp", "--n", "3", "--q", "2", "--name", "unip", "--lambda", "1,-1,-1")
    assert json.loads(text)["member"] is True


def test_hasse_cone_with_element():
    code, text = run("cone", "--n", "3", "--r", "2", "--name", "hasse", "--w", "[3 1 2]")
    assert code == 0
    assert sorted(map(tuple, json.loads(text)["cone"]["hform"])) == [(0, 1, -1), (1, 0, -1)]


def test_include_reports_certificates_and_counterexamples():
    code, text = run("include", "--n", "3", "--r", "2", "--left", "gs", "--right", "lmin")
    res = json.loads(text)["result"]
    assert code == 0 and res["holds"] and res["certificates"]
    code, text = run("include", "--n", "3", "--r", "2", "--left", "lmin", "--right", "gs")
    res = json.loads(text)["result"]
    assert not res["holds"] and len(res["counterexample"]) == 3


def test_strata_and_path():
    code, text = run("strata", "--n", "4", "--r", "3")
    doc = json.loads(text)
    assert len(doc["min_sets"]) == 4 and len(doc["z_small"]) == 8
    assert doc["z"] == "[4 1 2 3]"
    code, text = run("path", "--n", "4", "--q", "3")
    steps = json.loads(text)["steps"]
    assert [s["ha"] for s in steps if (s["d"], s["i"]) == (2, 1)] == [[0, 1, -3, 0]]
    assert all(s["in_lmin"] for s in steps)


def test_verify_intercone():
    code, text = run("verify", "intercone", "--n", "4", "--qs", "2,3,5")
    doc = json.loads(text)
    assert code == 0 and doc["passed"] and doc["checked"] == 3 * 9
    code, text = run("verify", "intercone", "--n", "4", "--qs", "2", "--literal")
    doc = json.loads(text)
    assert code == 1 and doc["failures"] and all(not f["literal_identity"] for f in doc["failures"])


@pytest.mark.parametrize("suite", ["hasse-reg", "lmin-eq", "minset", "shapes"])
def test_verify_suites(suite):
    code, text = run("verify", suite, "--nmax", "4", "--qs", "2")
    assert code == 0 and json.loads(text)["passed"]


def test_sweep_refuses_small_primes(capsys):
    code, _ = run("sweep", "--n", "3", "--r", "2", "--box", "2", "--max-prime", "7")
    assert code == 2
    assert "p* = 8" in capsys.readouterr().err
    code, text = run("sweep", "--n", "3", "--r", "2", "--box", "2", "--max-prime", "11")
    assert code == 0 and json.loads(text)["result"]["equal"]


def test_slice_csv_and_json():
    argv = ["slice", "--kind", "sp", "--n", "3", "--q", "2", "--name", "sp6zip",
            "--u", "1,0,0", "--v", "0,1,0", "--offset", "0,0,-3", "--box", "2"]
    code, text = run(*argv, "--out", "csv")
    lines = text.splitlines()
    assert code == 0 and lines[0] == "i,j,flag" and len(lines) == 26
    for line in lines[1:]:
        i, j, f = map(int, line.split(","))
        a = (i, j, -3)
        inside = 4 * a[0] + a[1] + 2 * a[2] <= 0 and 2 * a[0] + 4 * a[1] + a[2] <= 0 \
            and a[0] >= a[1] >= a[2]
        assert f == int(inside)
    code, text = run(*argv)
    doc = json.loads(text)
    assert doc["members"] == sum(int(l.split(",")[2]) for l in lines[1:])


def test_usage_errors(capsys):
    assert run("cone", "--n", "3", "--name", "gs")[0] == 2
    assert run("member", "--n", "3", "--r", "2", "--name", "gs", "--lambda", "1,2")[0] == 2
    assert run("cone", "--n", "3", "--r", "2", "--name", "hasse")[0] == 2
    assert run("cone", "--n", "3", "--r", "2", "--name", "sp6zip")[0] == 2
    assert run("cone", "--n", "3", "--r", "2", "--q", "6", "--name", "gs")[0] == 2
    assert run("bogus")[0] == 2
    capsys.readouterr()


def test_output_is_deterministic():
    argv = ["cone", "--kind", "sp", "--n", "3", "--q", "3", "--name", "lmin"]
    assert run(*argv) == run(*argv)
    a = subprocess.run([sys.executable, "-m", "zipcones", *argv], capture_output=True, check=True).stdout
    b = subprocess.run([sys.executable, "-m", "zipcones", *argv], capture_output=True, check=True).stdout
    assert a == b and a.decode() == run(*argv)[1]
