"""Acceptance suite: one test per criterion, each printing a PASS line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the per-criterion
summary lines alongside the pytest verdicts.
"""

import random
import time
from fractions import Fraction

import pytest

from quadmult.classify import (
    classify_multiple_fixed,
    enumerate_unit_fraction_triples,
    expected_lattes_rows,
    full_classification,
    verify_tables,
)
from quadmult.dynamics import (
    QuadMapSpec,
    clear_multiplier_cache,
    closed_form_multiplier_poly,
    complex_roots,
    conj_poly,
    dynatomic,
    fixed_point_identity_holds,
    lift_of,
    map_from_fixed_multipliers,
    multiplier_poly,
    numeric_cycle_oracle,
    sigma_of,
)
from quadmult.factorize import factor_over_RD
from quadmult.intutil import is_squarefree
from quadmult.notation import get_disc, parse_poly
from quadmult.polyring import UniPoly, compose_chain, nu
from quadmult.quadfield import QuadRat

SQUAREFREE_200 = [d for d in range(1, 201) if is_squarefree(d)]


def _report(n, message):
    print(f"\nACCEPTANCE criterion {n} PASS: {message}")


def test_criterion_1_triple_counts():
    budget = 30.0
    started = time.monotonic()
    special = {1: 23, 2: 9, 3: 27, 7: 14, 11: 3, 15: 5}
    generic_labels = {"(2, 3, 6)", "(2, 4, 4)", "(3, 3, 3)"}
    for d in SQUAREFREE_200:
        triples = enumerate_unit_fraction_triples(get_disc(d))
        if d in special:
            assert len(triples) == special[d], d
        else:
            assert len(triples) == 3, d
            assert {t.label() for t in triples} == generic_labels, d
    elapsed = time.monotonic() - started
    assert elapsed < budget, f"enumeration took {elapsed:.1f}s"
    _report(1, f"triple counts over squarefree D <= 200 in {elapsed:.1f}s")


def test_criterion_2_displayed_polynomials():
    m4 = multiplier_poly(map_from_fixed_multipliers(-5, -2, -1), 4).poly
    assert m4 == parse_poly("l^3 - 159*l^2 + 7419*l - 84221")

    cubic_a = parse_poly("l^3 + 267*l^2 + 20871*l + 414157")
    m5 = multiplier_poly(map_from_fixed_multipliers(-3, -3, -1), 5).poly
    assert m5 == cubic_a * cubic_a

    cubic_h = parse_poly("l^3 - 309*l^2 + 27399*l - 696691")
    m5h = multiplier_poly(QuadMapSpec.h(), 5).poly
    assert m5h == cubic_h * cubic_h

    rng = random.Random(2024)
    for _ in range(10):
        c = Fraction(rng.randint(-40, 40), rng.randint(1, 12))
        assert multiplier_poly(QuadMapSpec.fc(c), 1).poly == UniPoly((0, 4 * c, -2, 1))
        assert multiplier_poly(QuadMapSpec.fc(c), 3).poly == UniPoly(
            (64 * c**3 + 128 * c**2 + 64 * c + 64, -8 * c - 16, 1)
        )
        a = Fraction(rng.randint(-40, 40), rng.randint(1, 12))
        if a == 1:
            a = Fraction(3)
        assert multiplier_poly(QuadMapSpec.gab(a, 1), 3).poly == UniPoly(
            (36 * a**3 + 112 * a**2 + 124 * a + 89, -4 * a**2 - 16 * a - 18, 1)
        )
    _report(2, "all displayed polynomials match exactly")


def test_criterion_3_table_reproduction():
    budget = 300.0
    started = time.monotonic()
    diffs = verify_tables()
    elapsed = time.monotonic() - started
    assert diffs == [], diffs
    assert elapsed < budget, f"verify_tables took {elapsed:.1f}s"
    _report(3, f"41 table rows + 8 special-map rows reproduced in {elapsed:.1f}s")


def test_criterion_4_theorem_reproduction():
    checked = 0
    for d in SQUAREFREE_200:
        if d > 50:
            break
        disc = get_disc(d)
        report = full_classification(disc)
        got_lattes = sorted(
            v.lattes_row.label() for _, _, v in report.survivors if v.kind == "lattes"
        )
        assert got_lattes == sorted(r.label() for r in expected_lattes_rows(disc)), d
        kinds = sorted(v.kind for _, _, v in report.survivors if v.kind != "lattes")
        assert kinds == ["chebyshev", "power", "power"], d
        assert all(
            v.kind == "excluded" for _, v in classify_multiple_fixed(disc)
        ), d
        checked += 1
    _report(4, f"classification exact for all {checked} squarefree D <= 50")


def test_criterion_5_closed_form_cross_check():
    rng = random.Random(5150)
    done = 0
    while done < 100:
        a = Fraction(rng.randint(-12, 12), rng.randint(1, 6))
        b = Fraction(rng.randint(-12, 12), rng.randint(1, 6))
        if a * b == 1:
            continue
        spec = QuadMapSpec.gab(a, b)
        sig = sigma_of(spec)
        for n in (2, 3, 4):
            assert multiplier_poly(spec, n).poly == closed_form_multiplier_poly(sig, n), (
                a,
                b,
                n,
            )
        done += 1
    _report(5, "closed forms equal resultant output for 100 random sigma pairs")


def test_criterion_6_oracle_agreement():
    rng = random.Random(66)
    done = 0
    while done < 50:
        a = Fraction(rng.randint(-6, 6), rng.choice((1, 2))) if rng.random() < 0.7 else rng.randint(-4, 4)
        b = Fraction(rng.randint(-6, 6), rng.choice((1, 2)))
        if a * b == 1 or a == b:
            continue
        lam3 = (a + b - 2) / (a * b - 1)
        if -1 in (a, b, lam3) or 1 in (a, b, lam3):
            # root-of-unity fixed multipliers make some dynatomic roots
            # collapse onto fixed points; the oracle contract targets
            # generic maps
            continue
        spec = QuadMapSpec.gab(a, b)
        for n in (2, 3, 4):
            exact = complex_roots(multiplier_poly(spec, n).poly)
            got = numeric_cycle_oracle(spec, n)
            assert len(exact) == len(got), (a, b, n)
            remaining = list(exact)
            for v in got:
                best = min(range(len(remaining)), key=lambda i: abs(remaining[i] - v))
                assert abs(remaining[best] - v) < 1e-8, (a, b, n, v)
                remaining.pop(best)
        done += 1
    _report(6, "oracle multipliers match exact roots within 1e-8 for 50 maps")


def test_criterion_7_property_suites():
    rng = random.Random(77)
    failures = 0

    # divisor-product identity for the period forms, n <= 5
    for spec in (QuadMapSpec.fc(Fraction(1, 3)), QuadMapSpec.gab(Fraction(2), Fraction(-3))):
        F = lift_of(spec)
        chain = compose_chain(F, 5)
        for n in (1, 2, 3, 4, 5):
            gn, hn = chain[n - 1]
            m = gn.degree + 1
            w = [0] * (m + 1)
            for i, c in enumerate(gn.coeffs):
                w[i] = w[i] + c
            for i, c in enumerate(hn.coeffs):
                w[i + 1] = w[i + 1] - c
            prod = None
            for k in range(1, n + 1):
                if n % k == 0:
                    p = dynatomic(F, k)
                    prod = p if prod is None else prod * p
            failures += 0 if list(prod.coeffs) == w else 1

    # degree laws
    spec = QuadMapSpec.gab(Fraction(1, 2), Fraction(5))
    F = lift_of(spec)
    for n in (1, 2, 3, 4, 5):
        want_phi = 3 if n == 1 else nu(n, 2)
        failures += 0 if dynatomic(F, n).degree == want_phi else 1
        want_m = 3 if n == 1 else nu(n, 2) // n
        failures += 0 if multiplier_poly(spec, n).poly.degree == want_m else 1

    # P-choice independence
    for n in (2, 3, 4):
        p_y = multiplier_poly(spec, n, linear_form="y").poly
        p_xy = multiplier_poly(spec, n, linear_form="x-y").poly
        failures += 0 if p_y == p_xy else 1

    # conjugate-map symmetry
    D7 = get_disc(7)
    a = QuadRat(1, 1, 1, D7)
    b = QuadRat(0, -1, 1, D7)
    for n in (2, 3):
        p = multiplier_poly(QuadMapSpec.gab(a, b), n, linear_form="y").poly
        pc = multiplier_poly(QuadMapSpec.gab(a.conj(), b.conj()), n, linear_form="y").poly
        failures += 0 if pc == conj_poly(p) else 1

    # sigma trace relation and fixed-point identity on enumerated triples
    for d in (1, 2, 3, 7):
        disc = get_disc(d)
        for t in enumerate_unit_fraction_triples(disc):
            lams = t.lambdas
            s1 = lams[0] + lams[1] + lams[2]
            s3 = lams[0] * lams[1] * lams[2]
            failures += 0 if s3 == s1 - 2 else 1
            failures += 0 if fixed_point_identity_holds(*lams) else 1

    # factorization reconstruction on random integral inputs
    for _ in range(60):
        disc = get_disc(rng.choice((1, 2, 3, 7)))
        coeffs = [
            QuadRat(rng.randint(-9, 9), rng.randint(-9, 9), 1, disc)
            for _ in range(rng.randint(1, 3))
        ] + [1]
        poly = UniPoly(coeffs)
        fact = factor_over_RD(poly, disc)
        failures += 0 if fact.expand() == poly else 1

    assert failures == 0
    _report(7, "all property suites passed (100% of generated cases)")


def test_criterion_8_performance():
    clear_multiplier_cache()
    spec = QuadMapSpec.gab(Fraction(5, 7), Fraction(-8, 3))
    started = time.monotonic()
    m5 = multiplier_poly(spec, 5)
    elapsed = time.monotonic() - started
    assert m5.poly.degree == 6 and m5.poly.is_monic
    assert elapsed < 10.0, f"M_5 took {elapsed:.1f}s"
    _report(8, f"cold-cache M_5 for a generic rational map in {elapsed:.2f}s")
