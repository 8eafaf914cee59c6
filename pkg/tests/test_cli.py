import io
import json

import pytest

from umbra_stirling.cli import run_command


def run(*argv):
    buf = io.StringIO()
    code = run_command(list(argv), out=buf)
    return code, buf.getvalue()


def test_table_csv():
    code, out = run("table", "--family", "nwc2", "--seq", "q", "--nmax", "3", "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "n,k=0,k=1,k=2,k=3"
    assert lines[4] == "3,0,1,2 + q,1"


def test_table_json_is_deterministic():
    a = run("table", "--family", "carlitz2", "--seq", "q", "--nmax", "4")
    b = run("table", "--family", "carlitz2", "--seq", "q", "--nmax", "4")
    assert a == b
    assert json.loads(a[1])["family"] == "carlitz2"


def test_dobinski_classical():
    code, out = run("dobinski", "--variant", "classical", "--n", "5", "--terms", "60", "--tol", "1e-9")
    data = json.loads(out)
    assert code == 0
    assert data["status"] == "holds"
    assert data["details"]["oracle"] == "52"


def test_normal_order():
    code, out = run("normal-order", "--seq", "fib", "--n", "4", "--nmax-probe", "12", "--format", "json")
    data = json.loads(out)
    assert code == 0
    assert data["status"] == "inconsistent"
    assert data["checked_range"] == 12


def test_partitions_and_newton():
    code, out = run("partitions", "--n", "4", "--k", "2", "--stat", "inv")
    assert code == 0 and json.loads(out)["polynomials"]["2"] == [3, 2, 2]
    code, out = run("newton-stirling", "--b", "x^3", "--k", "2")
    assert code == 0 and json.loads(out)["value"] == "3"


def test_bell():
    code, out = run("bell", "--family", "prefab", "--seq", "gammaGL@q=2", "--nmax", "2")
    assert json.loads(out)["values"] == ["1", "1", "4"]


def test_informational_check_keeps_exit_zero():
    code, out = run("check", "--id", "conv-recurrences", "--nmax", "4")
    data = json.loads(out)
    assert data["status"] == "fails" and data["informational"]
    assert code == 0


def test_ns_dob_check():
    code, out = run("check", "--id", "ns-dob", "--b", "x^3", "--x", "1", "--terms", "60")
    assert code == 0 and json.loads(out)["status"] == "holds"


def test_usage_errors_exit_two():
    assert run("table", "--seq", "bogus")[0] == 2
    assert run("frobnicate")[0] == 2
    assert run("dobinski", "--variant", "classical")[0] == 2


def test_computational_errors_exit_one():
    code, out = run("check", "--id", "dobinski-rearrangement", "--seq", "fib", "--nmax", "3")
    assert code == 1
    assert json.loads(out)["error"] == "RepeatedNodes"


@pytest.mark.parametrize("threads", ["1", "3"])
def test_quick_suite(monkeypatch, threads):
    monkeypatch.setenv("UMBRA_STIRLING_THREADS", threads)
    code, out = run("suite", "--quick")
    data = json.loads(out)
    assert code == 0
    ids = [r["id"] for r in data["reports"]]
    assert ids == sorted(ids)
    assert all(r["anchor"] for r in data["reports"])
    assert data["summary"]["ok"]
