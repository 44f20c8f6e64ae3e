import json
import subprocess
import sys

import pytest

from quadmult.notation import get_disc, parse_poly
from quadmult.polyring import UniPoly


def run_cli(*args, check=True):
    result = subprocess.run(
        [sys.executable, "-m", "quadmult", *args],
        capture_output=True,
        text=True,
    )
    if check and result.returncode != 0:
        raise AssertionError(
            f"exit {result.returncode}\nstdout:{result.stdout}\nstderr:{result.stderr}"
        )
    return result


def test_multpoly_text():
    r = run_cli("multpoly", "--map", "fc(-2)", "--n", "1")
    assert r.stdout.strip() == "M_1 = λ^3 - 2*λ^2 - 8*λ"
    r = run_cli("multpoly", "--map", "gab(0,2)", "--n", "2")
    assert r.stdout.strip() == "M_2 = λ - 4"


def test_multpoly_h_period5():
    r = run_cli("multpoly", "--map", "h", "--n", "5", "--format", "json")
    data = json.loads(r.stdout)
    poly = parse_poly(data["results"][0]["text"])
    cubic = UniPoly((-696691, 27399, -309, 1))
    assert poly == cubic * cubic


def test_multpoly_sigma_spec():
    r = run_cli("multpoly", "--map", "sigma(2,0)", "--n", "2")
    assert r.stdout.strip() == "M_2 = λ - 4"
    r = run_cli("multpoly", "--map", "sigma(2,0)", "--n", "5", check=False)
    assert r.returncode == 2


def test_multpoly_degenerate_exit3():
    r = run_cli("multpoly", "--map", "gab(2,1/2)", "--n", "1", check=False)
    assert r.returncode == 3


def test_multpoly_parse_error_exit2():
    r = run_cli("multpoly", "--map", "nope(1)", "--n", "1", check=False)
    assert r.returncode == 2


def test_dynatomic_command():
    r = run_cli("dynatomic", "--map", "fc(0)", "--n", "1")
    assert "Phi_1" in r.stdout
    r = run_cli("dynatomic", "--map", "fc(0)", "--n", "2", "--format", "json")
    data = json.loads(r.stdout)
    assert data["results"][0]["degree"] == 2
    assert data["results"][0]["coefficients"] == ["1", "1", "1"]


def test_triples_counts_and_validation():
    r = run_cli("triples", "--D", "11")
    assert "3" in r.stdout.splitlines()[0]
    r = run_cli("triples", "--D", "19", "--format", "json")
    data = json.loads(r.stdout)
    assert data["count"] == 3
    assert [t["mu"] for t in data["results"]] == [
        ["2", "3", "6"],
        ["2", "4", "4"],
        ["3", "3", "3"],
    ]
    r = run_cli("triples", "--D", "4", check=False)
    assert r.returncode == 2
    r = run_cli("triples", "--D", "-3", check=False)
    assert r.returncode == 2


def test_factor_command():
    r = run_cli("factor", "--poly", "l^2 + 18*l + 89", "--D", "3")
    assert "does not split" in r.stdout
    r = run_cli("factor", "--poly", "l^2 + 1", "--D", "1", "--format", "json")
    data = json.loads(r.stdout)
    assert data["results"][0]["splits"] is True
    assert len(data["results"][0]["factors"]) == 2


def test_classify_generic():
    r = run_cli("classify", "--D", "163", "--format", "json")
    data = json.loads(r.stdout)
    kinds = sorted(s["verdict"]["kind"] for s in data["survivors"])
    assert kinds == ["chebyshev", "power", "power"]


def test_verify_tables_single():
    r = run_cli("verify-tables", "--table", "m4-multiple")
    assert "all rows match" in r.stdout
    assert r.returncode == 0


def test_json_outputs_are_stable():
    a = run_cli("multpoly", "--map", "gab(2,3)", "--n", "3", "--format", "json")
    b = run_cli("multpoly", "--map", "gab(2,3)", "--n", "3", "--format", "json")
    assert a.stdout == b.stdout
    assert "timing_ms" not in json.loads(a.stdout)
    c = run_cli(
        "multpoly", "--map", "gab(2,3)", "--n", "3", "--format", "json", "--timing"
    )
    assert "timing_ms" in json.loads(c.stdout)


def test_csv_format():
    r = run_cli("triples", "--D", "19", "--format", "csv")
    lines = r.stdout.strip().splitlines()
    assert lines[0] == "index,mu,lambda"
    assert len(lines) == 4


def test_multpoly_roundtrip_coefficients():
    from quadmult.notation import parse_quad

    r = run_cli(
        "multpoly", "--map", "gab(-1-i,2*i)", "--n", "3", "--format", "json"
    )
    data = json.loads(r.stdout)
    payload = data["results"][0]
    poly = parse_poly(payload["text"], get_disc(1))
    reparsed = UniPoly([parse_quad(c, get_disc(1)) for c in payload["coefficients"]])
    assert poly == reparsed
    assert poly.degree == payload["degree"] == 2


def test_figure_command(tmp_path):
    out = tmp_path / "fig.svg"
    r = run_cli("figure", "--D", "1", "--out", str(out))
    svg = out.read_text()
    assert svg.startswith("<?xml")
    assert "<svg" in svg and "</svg>" in svg
    assert svg.count("<polygon") == 3  # three highlighted triples
    out2 = tmp_path / "fig2.svg"
    run_cli("figure", "--D", "1", "--out", str(out2))
    assert out2.read_text() == svg  # deterministic

    r = run_cli("figure", "--D", "5", "--out", str(tmp_path / "f5.svg"))
    assert (tmp_path / "f5.svg").read_text().count("<polygon") == 3

    r = run_cli(
        "figure", "--D", "1", "--out", str(tmp_path / "no" / "dir.svg"), check=False
    )
    assert r.returncode == 4
