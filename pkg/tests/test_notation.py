import random
from fractions import Fraction

import pytest

from quadmult.errors import ParseError
from quadmult.notation import (
    format_poly,
    format_quad,
    get_disc,
    parse_poly,
    parse_quad,
)
from quadmult.polyring import UniPoly
from quadmult.quadfield import QuadRat

D1 = get_disc(1)
D2 = get_disc(2)
D3 = get_disc(3)
D7 = get_disc(7)


@pytest.mark.parametrize(
    "text,x,y,den,d",
    [
        ("-3-2*i", -3, -2, 1, 1),
        ("i", 0, 1, 1, 1),
        ("-i", 0, -1, 1, 1),
        ("1+2*i", 1, 2, 1, 1),
        ("i*sqrt(2)", 0, 1, 1, 2),
        ("-1-2*i*sqrt(2)", -1, -2, 1, 2),
        ("(-1+i*sqrt(7))/2", -1, 1, 1, 7),  # half basis: x = re - im, y = 2 im
        ("(-3-i*sqrt(7))/2", -1, -1, 1, 7),
        ("(1+i*sqrt(3))/2", 0, 1, 1, 3),
        ("5", 5, 0, 1, 1),
        ("-3/4", -3, 0, 4, 1),
        ("(99-3*i*sqrt(3))/2", 51, -3, 1, 3),
        ("(-1-3*i*sqrt(3))/8", 1, -3, 4, 3),
    ],
)
def test_parse_quad(text, x, y, den, d):
    q = parse_quad(text)
    assert (q.x, q.y, q.den, q.disc.D) == (x, y, den, d)


def test_parse_quad_with_spaces():
    assert parse_quad(" ( -3 + i*sqrt(7) ) / 2 ") == parse_quad("(-3+i*sqrt(7))/2")


def test_parse_quad_ring_mismatch():
    with pytest.raises(ParseError):
        parse_quad("i*sqrt(2)", D3)
    with pytest.raises(ParseError):
        parse_quad("i+i*sqrt(5)")
    with pytest.raises(ParseError):
        parse_quad("")
    with pytest.raises(ParseError):
        parse_quad("foo")


def test_format_quad_examples():
    assert format_quad(parse_quad("(-1+i*sqrt(7))/2")) == "(-1+i*sqrt(7))/2"
    assert format_quad(parse_quad("-3-2*i")) == "-3-2*i"
    assert format_quad(parse_quad("-3/4")) == "-3/4"
    assert format_quad(parse_quad("i*sqrt(2)")) == "i*sqrt(2)"
    assert format_quad(QuadRat(0, 0, 1, D1)) == "0"
    assert format_quad(QuadRat(2, 0, 1, D7)) == "2"


def test_quad_roundtrip_random():
    rng = random.Random(2)
    for d in (D1, D2, D3, D7):
        for _ in range(200):
            q = QuadRat(
                rng.randint(-40, 40), rng.randint(-40, 40), rng.randint(1, 12), d
            )
            assert parse_quad(format_quad(q), d) == q
            if q.y:
                assert parse_quad(format_quad(q)) == q


def test_poly_roundtrip():
    p = parse_poly("l^3 - 159*l^2 + 7419*l - 84221")
    assert p == UniPoly((-84221, 7419, -159, 1))
    s = format_poly(p)
    assert s == "λ^3 - 159*λ^2 + 7419*λ - 84221"
    assert parse_poly(s) == p


def test_poly_quad_coefficients():
    p = parse_poly("l^2 + (22+4*i)*l + (121+40*i)")
    q1 = parse_quad("22+4*i")
    q0 = parse_quad("121+40*i")
    assert p == UniPoly((q0, q1, 1))
    assert parse_poly(format_poly(p)) == p


def test_poly_roundtrip_random():
    rng = random.Random(8)
    for d in (D1, D3):
        for _ in range(100):
            coeffs = [
                QuadRat(rng.randint(-20, 20), rng.randint(-20, 20), rng.randint(1, 4), d)
                for _ in range(rng.randint(1, 5))
            ] + [1]
            p = UniPoly(coeffs)
            assert parse_poly(format_poly(p), d) == p


def test_poly_parse_variants():
    assert parse_poly("λ") == UniPoly((0, 1))
    assert parse_poly("-l") == UniPoly((0, -1))
    assert parse_poly("l^2-l") == UniPoly((0, -1, 1))
    assert parse_poly("3") == UniPoly((3,))


def test_poly_parse_bad():
    with pytest.raises(ParseError):
        parse_poly("l^2 + zorp")
    with pytest.raises(ParseError):
        parse_poly("l*2")
