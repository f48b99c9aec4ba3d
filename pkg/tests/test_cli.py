import json
import subprocess
import sys

import pytest

from qtcatalan.cli import EXIT_CAPACITY, EXIT_FAIL, EXIT_OK, EXIT_USAGE, main
from qtcatalan.poly import BivariatePolynomial
from qtcatalan.polynomials import dy_poly_enum

from conftest import DY4_MATRIX


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_poly_dyck_json(capsys):
    code, out, _ = run(capsys, "poly", "dyck", "4", "--format", "json")
    assert code == EXIT_OK
    obj = json.loads(out)
    assert obj == {"n": 4, "rows": "t", "cols": "q", "matrix": DY4_MATRIX}


@pytest.mark.parametrize("kind", ["dyck", "motzkin", "sn", "ncb-rank"])
def test_poly_json_round_trips(capsys, kind):
    code, out, _ = run(capsys, "poly", kind, "5", "--format", "json")
    assert code == EXIT_OK
    p = BivariatePolynomial.from_json(out)
    assert json.loads(out)["matrix"] == p.matrix()


def test_poly_csv(capsys):
    _, out, _ = run(capsys, "poly", "dyck", "2", "--format", "csv")
    assert out == "t\\q,0,1\n0,1,0\n1,0,1\n"


def test_output_is_deterministic(capsys):
    outs = {run(capsys, "poly", "dyck", "6", "--format", "json")[1] for _ in range(3)}
    assert len(outs) == 1


def test_check_corollary_trivial(capsys):
    code, out, _ = run(capsys, "check", "corollary", "1")
    assert code == EXIT_OK and out.startswith("PASS")


def test_check_conjecture_prints_gammas(capsys):
    code, out, _ = run(capsys, "check", "conjecture", "5", "--format", "json")
    assert code == EXIT_OK
    obj = json.loads(out)
    assert obj["passed"]
    assert "q^4 + 2*q^5 + 2*q^6 + 3*q^7 + 4*q^8 + 3*q^9 + q^10" in obj["details"]["gammas"]


@pytest.mark.parametrize("name", ["recurrence", "carlitz", "cf", "corollary", "sbd", "sbd-b", "conjecture"])
def test_every_check_passes_small(capsys, name):
    code, out, _ = run(capsys, "check", name, "4")
    assert code == EXIT_OK, out


def test_failed_check_reports_witness(capsys, monkeypatch):
    from qtcatalan import checks

    monkeypatch.setitem(checks.CHECKS, "recurrence", lambda n: checks.CheckResult("recurrence", n, False, "UUDD"))
    code, out, _ = run(capsys, "check", "recurrence", "2", "--format", "json")
    assert code == EXIT_FAIL
    assert json.loads(out)["witness"] == "UUDD"


def test_gamma(capsys):
    code, out, _ = run(capsys, "gamma", "5", "--format", "json")
    assert code == EXIT_OK
    assert json.loads(out)["gammas"] == [[1], [0, 0, 0, 3, 0, 2, 0, 1], [0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1]]
    _, out, _ = run(capsys, "gamma", "5", "--plain", "--format", "json")
    assert json.loads(out)["gammas"] == [[1], [6], [2]]


def test_convert_path(capsys):
    code, out, _ = run(capsys, "convert", "path", "UUUDUUDDDD", "--format", "json")
    obj = json.loads(out)
    assert code == EXIT_OK
    assert obj["area"] == 8 and obj["bk_perm"] == "35421" and obj["stump_perm"] == "54213"


def test_convert_partition_and_suword(capsys):
    _, out, _ = run(capsys, "convert", "partition", "{1,8}{2,4,7}{3}{5}{6}", "--format", "json")
    assert json.loads(out)["path"] == "UUUUUDDUUDUDDDDD"
    _, out, _ = run(capsys, "convert", "suword", "rblre", "--format", "json")
    assert json.loads(out)["partition"] == "{1,2,6}{3}{4,5}"


def test_convert_perm(capsys):
    _, out, _ = run(capsys, "convert", "perm", "4321", "--format", "json")
    obj = json.loads(out)
    assert obj["in_interval"] and obj["partition"] == "{1,4}{2,3}" and obj["path"] == "UUUUDDDD"


def test_identity(capsys):
    code, out, _ = run(capsys, "identity", "catalan-b", "5", "--format", "json")
    assert code == EXIT_OK and json.loads(out)["enumerated"] == 252


def test_usage_errors(capsys):
    assert run(capsys, "poly", "nope", "3")[0] == EXIT_USAGE
    assert run(capsys, "poly", "dyck", "x")[0] == EXIT_USAGE
    assert run(capsys, "convert", "path", "UDD")[0] == EXIT_USAGE
    assert run(capsys, "convert", "partition", "{1,3}{2,4}")[0] == EXIT_USAGE


def test_capacity_errors(capsys):
    code, _, err = run(capsys, "poly", "sn", "10")
    assert code == EXIT_CAPACITY
    assert json.loads(err)["error"] == "capacity"
    assert run(capsys, "check", "conjecture", "10")[0] == EXIT_CAPACITY


def test_help_lists_caps(capsys):
    code, out, _ = run(capsys, "poly", "--help")
    assert code == EXIT_OK and "dyck n<=14" in out and "sn n<=9" in out
    code, out, _ = run(capsys, "check", "--help")
    assert code == EXIT_OK and "conjecture n<=9" in out


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "qtcatalan", "poly", "dyck", "3", "--format", "json"],
                         capture_output=True, text=True)
    assert res.returncode == 0
    assert BivariatePolynomial.from_json(res.stdout) == dy_poly_enum(3)
