import math
import random
from fractions import Fraction

import pytest

from quadmult.quadfield import (
    Discriminant,
    QuadInt,
    QuadRat,
    enum_norm_divides,
    enum_norm_le,
    inverse_halfplane_points,
    norm,
    sqrt_in_RD,
)

D1 = Discriminant(1)
D2 = Discriminant(2)
D3 = Discriminant(3)
D5 = Discriminant(5)
D7 = Discriminant(7)
D19 = Discriminant(19)


def test_discriminant_validation():
    with pytest.raises(ValueError):
        Discriminant(4)
    with pytest.raises(ValueError):
        Discriminant(12)
    with pytest.raises(ValueError):
        Discriminant(0)
    assert Discriminant(3).half
    assert not Discriminant(2).half


def test_norm_units():
    assert norm(QuadInt(0, 1, D1)) == 1  # i
    assert norm(QuadInt(0, 1, D3)) == 1  # (1+i*sqrt 3)/2
    assert norm(QuadInt(0, -1, D7)) == 2  # (-1-i*sqrt 7)/2


def test_norm_matches_complex_modulus():
    rng = random.Random(7)
    for disc in (D1, D2, D3, D7, D19):
        for _ in range(50):
            z = QuadInt(rng.randint(-9, 9), rng.randint(-9, 9), disc)
            assert norm(z) == pytest.approx(abs(z.to_complex()) ** 2, rel=1e-9)


def test_norm_multiplicative():
    rng = random.Random(1)
    for _ in range(1000):
        disc = random.choice((D1, D2, D3, D7))
        z = QuadInt(rng.randint(-50, 50), rng.randint(-50, 50), disc)
        w = QuadInt(rng.randint(-50, 50), rng.randint(-50, 50), disc)
        assert norm(z * w) == norm(z) * norm(w)


def test_enum_norm_le_examples():
    vals = enum_norm_le(D5, 4)
    assert sorted((z.x, z.y) for z in vals) == [(-2, 0), (-1, 0), (0, 0), (1, 0), (2, 0)]
    assert enum_norm_le(D7, 0) == [QuadInt(0, 0, D7)]
    nine = enum_norm_le(D1, 2)
    assert len(nine) == 9
    assert QuadInt(1, 1, D1) in nine and QuadInt(-1, -1, D1) in nine


def test_enum_norm_le_matches_bruteforce():
    for d in (1, 2, 3, 5, 6, 7, 10, 11, 13, 14, 15, 17, 19, 21, 22, 23, 26, 29, 30):
        disc = Discriminant(d)
        for bound in (0, 1, 5, 17, 100):
            got = {(z.x, z.y) for z in enum_norm_le(disc, bound)}
            want = {
                (x, y)
                for x in range(-25, 26)
                for y in range(-25, 26)
                if norm(QuadInt(x, y, disc)) <= bound
            }
            assert got == want, (d, bound)


def test_enum_norm_le_rational_below_threshold():
    # every element is a plain integer when the ball is small relative to D
    for d in (5, 6, 13, 17, 29):
        disc = Discriminant(d)
        for z in enum_norm_le(disc, d - 1):
            assert z.y == 0
    for d in (7, 11, 19, 23):
        disc = Discriminant(d)
        for z in enum_norm_le(disc, (d - 1) // 4):
            assert z.y == 0


def test_enum_norm_divides():
    vals = enum_norm_divides(D1, 64)
    coords = {(z.x, z.y) for z in vals}
    for pt in [(1, 1), (1, -1), (2, 0), (2, 2), (8, 0), (-8, 0), (0, 8)]:
        assert pt in coords
    assert (3, 0) not in coords  # norm 9 does not divide 64
    assert all(norm(z) != 0 and 64 % norm(z) == 0 for z in vals)

    units = enum_norm_divides(Discriminant(11), 1)
    assert sorted((z.x, z.y) for z in units) == [(-1, 0), (1, 0)]

    vals2 = enum_norm_divides(D2, 81)
    coords2 = {(z.x, z.y) for z in vals2}
    for pt in [(3, 0), (-3, 0), (1, 2), (1, -2), (-1, 2), (-1, -2), (9, 0), (-9, 0)]:
        assert pt in coords2
    assert all(81 % norm(z) == 0 for z in vals2)


def test_sqrt_examples():
    r = sqrt_in_RD(QuadInt(-4, 0, D1))
    assert r == QuadInt(0, 2, D1)  # 2i, canonical sign y > 0
    assert sqrt_in_RD(QuadInt(1024, 0, D3)) == QuadInt(32, 0, D3)
    assert sqrt_in_RD(QuadInt(2, 0, D5)) is None


def test_sqrt_roundtrip_random():
    rng = random.Random(3)
    for _ in range(1000):
        disc = random.choice((D1, D2, D3, D7, D19))
        w = QuadInt(rng.randint(-20, 20), rng.randint(-20, 20), disc)
        r = sqrt_in_RD(w * w)
        assert r is not None
        assert r == w or r == -w
        assert r.y > 0 or (r.y == 0 and r.x >= 0)


def test_sqrt_nonsquares_have_no_root():
    # brute-force cross check on small elements
    for disc in (D1, D3):
        squares = {(w * w).x * 10_000 + (w * w).y for w in enum_norm_le(disc, 100)}
        for z in enum_norm_le(disc, 80):
            got = sqrt_in_RD(z)
            if z.x * 10_000 + z.y not in squares:
                assert got is None
            else:
                assert got is not None and got * got == z


def test_inverse_halfplane_d19():
    pts = inverse_halfplane_points(D19, Fraction(1, 4))
    assert sorted((z.x, z.y) for z in pts) == [(1, 0), (2, 0), (3, 0), (4, 0)]


def test_inverse_halfplane_half():
    pts = inverse_halfplane_points(D1, Fraction(1, 2))
    assert {(z.x, z.y) for z in pts} == {(1, 0), (2, 0), (1, 1), (1, -1)}


def test_inverse_halfplane_third():
    pts = inverse_halfplane_points(D1, Fraction(1, 3))
    assert {(z.x, z.y) for z in pts} == {
        (1, 0),
        (2, 0),
        (3, 0),
        (1, 1),
        (1, -1),
        (2, 1),
        (2, -1),
    }


def test_inverse_halfplane_rejects_nonpositive():
    with pytest.raises(ValueError):
        inverse_halfplane_points(D1, 0)
    with pytest.raises(ValueError):
        inverse_halfplane_points(D1, Fraction(-1, 4))


@pytest.mark.parametrize("d", [1, 2, 3, 7, 11, 15, 19, 30])
@pytest.mark.parametrize("t", [Fraction(1, 3), Fraction(1, 4), Fraction(2, 5)])
def test_inverse_halfplane_matches_direct_filter(d, t):
    disc = Discriminant(d)
    got = {(z.x, z.y) for z in inverse_halfplane_points(disc, t)}
    want = set()
    for x in range(-40, 41):
        for y in range(-40, 41):
            z = QuadInt(x, y, disc)
            n = norm(z)
            if n == 0:
                continue
            if z.re() * t.denominator >= t.numerator * n:
                want.add((x, y))
    assert got == want


def test_quadrat_reduction_and_roundtrip():
    q = QuadRat(2, 4, 6, D1)
    assert (q.x, q.y, q.den) == (1, 2, 3)
    r = QuadRat(4, 8, 4, D1)
    assert r.is_integral
    assert r.to_quadint() == QuadInt(1, 2, D1)
    assert QuadRat(-3, 0, -6, D2) == Fraction(1, 2)


def test_quadrat_field_axioms_random():
    rng = random.Random(11)
    for disc in (D1, D3):
        for _ in range(200):
            a = QuadRat(rng.randint(-9, 9), rng.randint(-9, 9), rng.randint(1, 5), disc)
            b = QuadRat(rng.randint(-9, 9), rng.randint(-9, 9), rng.randint(1, 5), disc)
            assert a * b == b * a
            assert a + b == b + a
            if b:
                assert (a / b) * b == a
            assert a * (a.conj()) == a.norm()


def test_quadrat_rational_unifies_across_rings():
    assert QuadRat.from_fraction(Fraction(3, 2), D1) == QuadRat.from_fraction(
        Fraction(3, 2), D7
    )
    assert hash(QuadRat.from_fraction(2, D2)) == hash(Fraction(2))
    with pytest.raises(ValueError):
        _ = QuadRat(0, 1, 1, D1) + QuadRat(0, 1, 1, D2)


def test_quadrat_mixed_scalar_arithmetic():
    a = QuadRat(1, 1, 2, D7)
    assert a + 1 == QuadRat(3, 1, 2, D7)
    assert 1 - a == QuadRat(1, -1, 2, D7)
    assert Fraction(1, 2) * a == QuadRat(1, 1, 4, D7)
    assert (a * 0) == 0 and not (a * 0)


def test_half_branch_norm_formula():
    # x^2 + xy + (D+1)/4 y^2 on the half branch
    for x in range(-5, 6):
        for y in range(-5, 6):
            assert norm(QuadInt(x, y, D7)) == x * x + x * y + 2 * y * y
            assert norm(QuadInt(x, y, D1)) == x * x + y * y
