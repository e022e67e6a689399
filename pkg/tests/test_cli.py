import json

import pytest
from click.testing import CliRunner

from grothlat.algebra import Poly
from grothlat.cli import CAPS, EXIT_BUDGET, EXIT_FAIL, EXIT_PARSE, main, run_check


@pytest.fixture
def run():
    runner = CliRunner()

    def go(*args):
        return runner.invoke(main, list(args))

    return go


def test_compute_text(run):
    r = run("compute", "--family", "G", "--perm", "21", "--n", "2", "--q0", "--route", "lattice")
    assert r.exit_code == 0
    assert r.output.strip() == "x1 + y1 + beta*x1*y1"
    assert run("compute", "--perm", "12", "--q0").output.strip() == "1"


def test_compute_routes_agree(run):
    outs = {route: run("compute", "--perm", "132", "--q0", "--route", route).output
            for route in ("operators", "lattice", "pipedreams")}
    assert len(set(outs.values())) == 1


def test_compute_json_and_latex(run):
    r = run("compute", "--perm", "21", "--q0", "--format", "json")
    p = Poly.from_json(json.loads(r.output))
    assert p.to_text() == "x1 + y1 + beta*x1*y1"
    r = run("compute", "--perm", "21", "--q0", "--format", "latex")
    assert r.exit_code == 0 and "\\beta" in r.output


def test_compute_biaxial_and_h(run):
    a = run("compute", "--family", "biaxial", "--perm-v", "21", "--perm-w", "21")
    b = run("compute", "--family", "biaxial", "--perm-v", "21", "--perm-w", "21", "--route", "lattice")
    assert a.exit_code == 0 and a.output == b.output
    h1 = run("compute", "--family", "H", "--perm", "213", "--q0")
    h2 = run("compute", "--family", "H", "--perm", "213", "--q0", "--route", "lattice")
    assert h1.exit_code == 0 and h1.output == h2.output


@pytest.mark.parametrize("args", [
    ("compute", "--perm", "113"),
    ("compute", "--perm", "21", "--n", "3"),
    ("compute", "--family", "biaxial", "--perm-v", "21"),
    ("compute", "--perm", "21", "--route", "pipedreams"),
    ("compute", "--family", "H", "--perm", "21", "--route", "pipedreams", "--q0"),
    ("states", "--system", "pipedream"),
])
def test_parse_errors(run, args):
    r = run(*args)
    assert r.exit_code == EXIT_PARSE
    assert "error:" in r.output


def test_budget_exit(run):
    r = run("compute", "--perm", "123456789")
    assert r.exit_code == EXIT_BUDGET


def test_verify_single(run):
    r = run("verify", "ybe-row")
    assert r.exit_code == 0
    assert r.output.startswith("PASS ybe-row (n=3)")


def test_verify_cap(run):
    cap = CAPS["routes"][1]
    r = run("verify", "routes", "--n", str(cap + 1))
    assert r.exit_code == EXIT_PARSE


def test_verify_reports_failure(run, monkeypatch):
    from grothlat import cli, identities

    def broken(n):
        res = identities.CheckResult("broken")
        res.record(False, n=n)
        return res

    monkeypatch.setattr(identities, "check_vanishing", broken)
    r = run("verify", "vanishing")
    assert r.exit_code == EXIT_FAIL
    assert r.output.startswith("FAIL vanishing")


def test_verify_is_deterministic(run):
    a = run("verify", "interleaving", "--n", "3")
    b = run("verify", "interleaving", "--n", "3")
    assert a.exit_code == 0 and a.output == b.output


def test_states(run):
    r = run("states", "--perm-w", "4321", "--count")
    assert r.output.strip() == "1"
    r = run("states", "--perm-w", "4321", "--dump")
    assert r.output.splitlines()[0] == "state 1"
    assert "state 2" not in r.output
    assert run("states", "--system", "pipedream", "--perm", "132").output.strip() == "2"
    r = run("states", "--system", "pipedream", "--perm", "132", "--dump")
    assert r.output.count("pipe dream") == 2
    assert run("states", "--system", "modified-rainbow", "--n", "2").output.strip() == "0"
    assert int(run("states", "--system", "cauchy", "--perm-w", "321", "--count").output) > 0


@pytest.mark.parametrize("name", ["base-case", "hudson", "drinfeld", "emptiness", "hecke"])
def test_run_check(name):
    n = CAPS[name][0]
    results = run_check(name, min(n, 2) if name != "drinfeld" else 0)
    assert results and all(results)
