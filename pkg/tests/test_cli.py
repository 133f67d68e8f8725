"""Command-line surface: subcommands, file formats, exit codes, determinism."""

import csv
import json

import pytest

from dirichlet_toolkit import TruncatedDirichletSeries
from dirichlet_toolkit.cli import main


def run(args):
    return main(list(args))


def read_json(path):
    with open(path) as fh:
        return json.load(fh)


# -- build ----------------------------------------------------------------


def test_build_zeta(tmp_path):
    out = tmp_path / "zeta.json"
    assert run(["build", "zeta", "--window", "8", "--out", str(out)]) == 0
    f = TruncatedDirichletSeries.load(out)
    assert f.window == 8 and f.support() == list(range(1, 9))
    assert read_json(out)["provenance"]["argv"][0] == "dirichlet-toolkit"


def test_build_monomial_exact(tmp_path):
    out = tmp_path / "m.json"
    assert run(["build", "monomial", "5", "3/2,-1", "--out", str(out)]) == 0
    doc = read_json(out)
    assert doc["coeffs"]["5"] == ["3/2", "-1"]


def test_build_random_is_seed_deterministic(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for out in (a, b):
        assert run(
            ["build", "random", "--window", "64", "--seed", "7", "--out", str(out)]
        ) == 0
    assert read_json(a)["coeffs"] == read_json(b)["coeffs"]


def test_build_usage_error(tmp_path):
    assert run(["build", "monomial", "5", "--out", str(tmp_path / "x.json")]) == 2


# -- op -------------------------------------------------------------------


def test_op_mul_and_invert(tmp_path):
    z = tmp_path / "zeta.json"
    run(["build", "zeta", "--window", "16", "--out", str(z)])
    mu = tmp_path / "mu.json"
    assert run(["op", "invert", str(z), "--out", str(mu)]) == 0
    prod = tmp_path / "prod.json"
    assert run(["op", "mul", str(z), str(mu), "--out", str(prod)]) == 0
    got = TruncatedDirichletSeries.load(prod)
    assert got == TruncatedDirichletSeries.unit(16)


def test_op_invert_noninvertible_exits_3(tmp_path):
    f = tmp_path / "f.json"
    run(["build", "monomial", "2", "1", "--out", str(f)])
    assert run(["op", "invert", str(f), "--out", str(tmp_path / "g.json")]) == 3


def test_op_lift_drop_round_trip(tmp_path):
    f = tmp_path / "f.json"
    run(["build", "random", "--window", "40", "--seed", "3", "--out", str(f)])
    p = tmp_path / "p.json"
    assert run(["op", "lift", str(f), "--out", str(p)]) == 0
    g = tmp_path / "g.json"
    assert run(["op", "drop", str(p), "--window", "40", "--out", str(g)]) == 0
    assert TruncatedDirichletSeries.load(g) == TruncatedDirichletSeries.load(f)


def test_op_act_and_project(tmp_path):
    f = tmp_path / "f.json"
    run(["build", "monomial", "2", "1", "--window", "10", "--out", str(f)])
    moved = tmp_path / "moved.json"
    assert run(["op", "act", str(f), "--perm", "(1 2)", "--out", str(moved)]) == 0
    assert TruncatedDirichletSeries.load(moved).support() == [3]
    proj = tmp_path / "proj.json"
    assert run(
        ["op", "project", str(f), "--gens", "(1 2)", "--out", str(proj)]
    ) == 0
    doc = read_json(proj)
    assert doc["coeffs"]["2"] == ["1/2", "0"] and doc["coeffs"]["3"] == ["1/2", "0"]


def test_op_restrict(tmp_path):
    f = tmp_path / "f.json"
    run(["build", "zeta", "--window", "10", "--out", str(f)])
    out = tmp_path / "r.json"
    assert run(["op", "restrict", str(f), "--indices", "1", "--out", str(out)]) == 0
    assert TruncatedDirichletSeries.load(out).support() == [1, 2, 4, 8]


def test_op_project_needs_gens(tmp_path):
    f = tmp_path / "f.json"
    run(["build", "zeta", "--window", "4", "--out", str(f)])
    assert run(["op", "project", str(f), "--out", str(tmp_path / "o.json")]) == 2


def test_missing_file_exits_2(tmp_path):
    assert run(["op", "invert", str(tmp_path / "absent.json"), "--out", "x.json"]) == 2


# -- verify ---------------------------------------------------------------


def test_verify_suite_passes(tmp_path, capsys):
    out = tmp_path / "report.json"
    code = run(
        ["verify", "--suite", "lemma6.4", "--trials", "5", "--seed", "1", "--out", str(out)]
    )
    assert code == 0
    doc = read_json(out)
    assert doc["suite"] == "lemma6.4" and doc["failures"] == []


def test_verify_unknown_suite():
    assert run(["verify", "--suite", "nope"]) == 2


# -- analyze --------------------------------------------------------------


def test_analyze_torus_and_line_sup(tmp_path, capsys):
    f = tmp_path / "f.json"
    run(["build", "zeta", "--window", "8", "--out", str(f)])
    out = tmp_path / "t.json"
    assert run(["analyze", "torus-sup", str(f), "--grid", "8", "--out", str(out)]) == 0
    assert read_json(out)["value"] == pytest.approx(8.0, abs=1e-9)
    out2 = tmp_path / "l.json"
    assert run(
        ["analyze", "line-sup", str(f), "--T", "10", "--samples", "2001", "--out", str(out2)]
    ) == 0
    assert read_json(out2)["value"] == pytest.approx(8.0, abs=1e-9)


def test_analyze_seminorm_profile_csv(tmp_path):
    f = tmp_path / "f.json"
    run(["build", "monomial", "2", "1", "--out", str(f)])
    out = tmp_path / "profile.csv"
    assert run(
        ["analyze", "seminorm-profile", str(f), "--r-grid", "0.1:0.9:5", "--out", str(out)]
    ) == 0
    with open(out) as fh:
        rows = list(csv.DictReader(fh))
    assert len(rows) == 5
    assert float(rows[0]["r"]) == pytest.approx(0.1)
    # P_r of the single prime monomial is r itself
    for row in rows:
        assert float(row["value"]) == pytest.approx(float(row["r"]), abs=1e-9)


def test_analyze_perron_and_cauchy(tmp_path):
    f = tmp_path / "f.json"
    run(["build", "monomial", "5", "3", "--window", "10", "--out", str(f)])
    out = tmp_path / "p.json"
    assert run(
        ["analyze", "perron", str(f), "--n", "5", "--kappa", "2", "--R", "2000", "--out", str(out)]
    ) == 0
    doc = read_json(out)
    assert doc["value"][0] == pytest.approx(3.0, abs=1e-3)
    out2 = tmp_path / "c.json"
    assert run(
        ["analyze", "cauchy", str(f), "--n", "5", "--grid", "4", "--r", "0.5", "--out", str(out2)]
    ) == 0
    assert read_json(out2)["value"][0] == pytest.approx(3.0, abs=1e-10)
