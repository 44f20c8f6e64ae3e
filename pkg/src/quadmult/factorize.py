"""Factor monic polynomials of degree <= 3 (and their perfect squares) over
the integer ring of an imaginary quadratic field.

A monic integral polynomial of degree 2 or 3 with no root in R_D is
irreducible over Q(i*sqrt(D)): any field root of a monic integral polynomial
is an algebraic integer, hence lies in R_D because the ring is integrally
closed.  Root search uses the divisor constraint N(r) | N(p(0)) together
with an exact Fujiwara bound on the root norm.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import UnsupportedDegreeError
from .intutil import divisors, iroot_ceil
from .polyring import UniPoly, poly_nth_root
from .quadfield import Discriminant, QuadInt, QuadRat, _points_with_norm


def _as_quadrat(c, disc: Discriminant) -> QuadRat:
    if isinstance(c, QuadRat):
        if c.y and c.disc != disc:
            raise ValueError("coefficient from a different ring")
        return c if c.y else QuadRat(c.x, 0, c.den, disc)
    if isinstance(c, QuadInt):
        return _as_quadrat(c.to_quadrat(), disc)
    if isinstance(c, (int, Fraction)):
        return QuadRat.from_fraction(c, disc)
    raise TypeError(f"unsupported coefficient {c!r}")


def _coerce_poly(p: UniPoly, disc: Discriminant) -> UniPoly:
    return UniPoly([_as_quadrat(c, disc) for c in p.coeffs])


def _coeff_key(c):
    if isinstance(c, QuadRat):
        return (c.re(), c.im_sqrtd())
    if isinstance(c, QuadInt):
        return (c.re(), c.im_sqrtd())
    return (Fraction(c), Fraction(0))


def factor_sort_key(poly: UniPoly):
    return (poly.degree, tuple(_coeff_key(c) for c in reversed(poly.coeffs)))


@dataclass(frozen=True)
class Factorization:
    """Monic factors with multiplicities; product equals the input exactly."""

    factors: tuple[tuple[UniPoly, int], ...]
    splits: bool

    def expand(self) -> UniPoly:
        out = UniPoly((1,))
        for poly, mult in self.factors:
            out = out * poly**mult
        return out

    def __str__(self):
        from .notation import format_factorization

        return format_factorization(self)


def roots_in_RD(p: UniPoly, disc: Discriminant) -> list[QuadInt]:
    """All roots of a monic integral polynomial lying in R_D, with multiplicity.

    Any such root divides the constant term in R_D, so its norm divides
    N(p(0)); candidates are lattice points at those norms, capped by the
    Fujiwara root bound, and verified by exact evaluation.
    """
    p = _coerce_poly(p, disc)
    if p.is_zero or p.leading != 1:
        raise ValueError("roots_in_RD expects a monic polynomial")
    if any(c.den != 1 for c in p.coeffs):
        raise ValueError("roots_in_RD expects integral coefficients")
    roots: list[QuadInt] = []
    zero = QuadRat(0, 0, 1, disc)
    while p.degree > 0 and p.coeffs[0] == 0:
        roots.append(QuadInt(0, 0, disc))
        p = p.deflate(zero)
    if p.degree == 0:
        return roots

    deg = p.degree
    n0 = int(p.coeffs[0].norm())
    # norm-squared Fujiwara bound: |r| <= 2 max |c_{k-j}|^(1/j)
    bound = 4 * max(
        iroot_ceil(int(p.coeffs[deg - j].norm()), j) for j in range(1, deg + 1)
    )
    candidates = []
    for d in divisors(n0):
        if d <= bound:
            candidates.extend(_points_with_norm(disc, d))
    for r in candidates:
        rq = r.to_quadrat()
        while p.degree > 0 and p(rq) == 0:
            roots.append(r)
            p = p.deflate(rq)
    return roots


def _field_roots(p: UniPoly, disc: Discriminant) -> list[QuadRat]:
    """All roots of a monic polynomial in Q(i*sqrt(D)), with multiplicity.

    Substituting lambda = mu / t for the common denominator t turns p into a
    monic integral polynomial whose R_D-roots are in bijection with the
    field roots of p.
    """
    p = _coerce_poly(p, disc)
    t = 1
    for c in p.coeffs:
        t = t * c.den // math.gcd(t, c.den)
    if t == 1:
        return [r.to_quadrat() for r in roots_in_RD(p, disc)]
    deg = p.degree
    scaled = UniPoly([c * t ** (deg - j) for j, c in enumerate(p.coeffs)])
    return [r.to_quadrat() / t for r in roots_in_RD(scaled, disc)]


def factor_over_RD(p: UniPoly, disc: Discriminant) -> Factorization:
    """Factor a monic polynomial of degree <= 3, a polynomial that splits
    after peeling its field roots, or a perfect square of a cubic.

    Linear factors are peeled off at the field roots first; a rootless
    residual of degree 2 or 3 is one irreducible factor, and a rootless
    residual of degree 4 or 6 is handled when it is the square of a lower
    factorable polynomial.  Factors are sorted by (degree, coefficient
    order) so output is reproducible.
    """
    p = _coerce_poly(p, disc)
    if p.is_zero or p.leading != 1:
        raise ValueError("factor_over_RD expects a monic polynomial")

    counts: dict[UniPoly, int] = {}
    order: list[UniPoly] = []
    for r in _field_roots(p, disc):
        lin = UniPoly((-r, 1))
        if lin not in counts:
            counts[lin] = 0
            order.append(lin)
        counts[lin] += 1
        p = p.deflate(r)
    factors = [(lin, counts[lin]) for lin in order]
    splits = True
    if p.degree in (2, 3):
        factors.append((p, 1))
        splits = False
    elif p.degree > 3:
        if p.degree % 2:
            raise UnsupportedDegreeError(f"cannot factor degree {p.degree} residual")
        try:
            root = poly_nth_root(p, 2)
        except Exception as exc:
            raise UnsupportedDegreeError(
                f"degree {p.degree} residual is not a perfect square"
            ) from exc
        inner = factor_over_RD(root, disc)
        factors.extend((f, 2 * m) for f, m in inner.factors)
        splits = inner.splits
    factors.sort(key=lambda fm: factor_sort_key(fm[0]))
    return Factorization(tuple(factors), splits)


def irreducible_over_Q_cubic(p: UniPoly) -> bool:
    """Rational-root test for a monic integer cubic."""
    coeffs = []
    for c in p.coeffs:
        if isinstance(c, QuadRat):
            c = c.as_fraction()
        if isinstance(c, QuadInt):
            c = c.to_quadrat().as_fraction()
        c = Fraction(c)
        if c.denominator != 1:
            raise ValueError("expected integer coefficients")
        coeffs.append(c.numerator)
    if len(coeffs) != 4 or coeffs[-1] != 1:
        raise ValueError("expected a monic cubic")
    c0 = coeffs[0]
    if c0 == 0:
        return False
    q = UniPoly(coeffs)
    for d in divisors(abs(c0)):
        if q(d) == 0 or q(-d) == 0:
            return False
    return True


def discriminant(p: UniPoly):
    """Polynomial discriminant for degree 2 or 3."""
    if p.degree == 2:
        c, b, a = p.coeffs
        return b * b - 4 * a * c
    if p.degree == 3:
        d, c, b, a = p.coeffs
        return (
            18 * a * b * c * d
            - 4 * b**3 * d
            + b**2 * c**2
            - 4 * a * c**3
            - 27 * a**2 * d**2
        )
    raise UnsupportedDegreeError("discriminant implemented for degrees 2 and 3")
