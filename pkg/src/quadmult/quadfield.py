"""Exact arithmetic in imaginary quadratic integer rings and their fields.

For a positive squarefree D, the ring of integers of Q(i*sqrt(D)) is
Z[alpha] with alpha = i*sqrt(D) when D = 1, 2 (mod 4) and
alpha = (1 + i*sqrt(D))/2 when D = 3 (mod 4).  Elements are stored in
coordinates over the basis (1, alpha); all arithmetic is integer-exact.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .intutil import divisors, is_square, is_squarefree


class Discriminant:
    """The ring parameter D (positive, squarefree)."""

    __slots__ = ("D", "half", "E")

    def __init__(self, D: int):
        if D < 1 or not is_squarefree(D):
            raise ValueError(f"D must be a positive squarefree integer, got {D}")
        self.D = D
        self.half = D % 4 == 3
        # alpha^2 = alpha - E when alpha is a half point, else alpha^2 = -D
        self.E = (D + 1) // 4 if self.half else D

    def __eq__(self, other):
        return isinstance(other, Discriminant) and self.D == other.D

    def __hash__(self):
        return hash(("Discriminant", self.D))

    def __repr__(self):
        return f"Discriminant({self.D})"

    def alpha(self) -> "QuadInt":
        return QuadInt(0, 1, self)

    def alpha_complex(self) -> complex:
        r = math.sqrt(self.D)
        return complex(0.5, r / 2) if self.half else complex(0.0, r)


def _coord_mul(x1, y1, x2, y2, disc: Discriminant):
    # (x1 + y1 a)(x2 + y2 a) with a^2 = a - E (half) or a^2 = -D (whole)
    if disc.half:
        return x1 * x2 - disc.E * y1 * y2, x1 * y2 + y1 * x2 + y1 * y2
    return x1 * x2 - disc.D * y1 * y2, x1 * y2 + y1 * x2


def _coord_norm(x, y, disc: Discriminant):
    if disc.half:
        return x * x + x * y + disc.E * y * y
    return x * x + disc.D * y * y


def _coord_conj(x, y, disc: Discriminant):
    # complex conjugate: conj(a) = 1 - a on the half branch, -a on the whole
    return (x + y, -y) if disc.half else (x, -y)


class QuadInt:
    """x + y*alpha with integer coordinates; an element of R_D."""

    __slots__ = ("x", "y", "disc")

    def __init__(self, x: int, y: int, disc: Discriminant):
        self.x = x
        self.y = y
        self.disc = disc

    def norm(self) -> int:
        return _coord_norm(self.x, self.y, self.disc)

    def conj(self) -> "QuadInt":
        cx, cy = _coord_conj(self.x, self.y, self.disc)
        return QuadInt(cx, cy, self.disc)

    def re(self) -> Fraction:
        return Fraction(2 * self.x + self.y, 2) if self.disc.half else Fraction(self.x)

    def im_sqrtd(self) -> Fraction:
        """Coefficient of i*sqrt(D) in the complex value."""
        return Fraction(self.y, 2) if self.disc.half else Fraction(self.y)

    def to_complex(self) -> complex:
        return self.x + self.y * self.disc.alpha_complex()

    def to_quadrat(self) -> "QuadRat":
        return QuadRat(self.x, self.y, 1, self.disc)

    def _check(self, other: "QuadInt"):
        if self.disc != other.disc and self.y and other.y:
            raise ValueError("mixed rings")

    def __add__(self, other):
        if isinstance(other, int):
            return QuadInt(self.x + other, self.y, self.disc)
        if not isinstance(other, QuadInt):
            return NotImplemented
        self._check(other)
        d = self.disc if self.y else other.disc
        return QuadInt(self.x + other.x, self.y + other.y, d)

    __radd__ = __add__

    def __neg__(self):
        return QuadInt(-self.x, -self.y, self.disc)

    def __sub__(self, other):
        if isinstance(other, int):
            return QuadInt(self.x - other, self.y, self.disc)
        if not isinstance(other, QuadInt):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return QuadInt(self.x * other, self.y * other, self.disc)
        if not isinstance(other, QuadInt):
            return NotImplemented
        self._check(other)
        d = self.disc if self.y else other.disc
        x, y = _coord_mul(self.x, self.y, other.x, other.y, d)
        return QuadInt(x, y, d)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of a ring element")
        out = QuadInt(1, 0, self.disc)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            return self.y == 0 and self.x == other
        if isinstance(other, QuadInt):
            if self.y == 0 and other.y == 0:
                return self.x == other.x
            return self.x == other.x and self.y == other.y and self.disc == other.disc
        if isinstance(other, (Fraction, QuadRat)):
            return self.to_quadrat() == other
        return NotImplemented

    def __hash__(self):
        if self.y == 0:
            return hash(self.x)
        return hash((self.x, self.y, self.disc.D))

    def __repr__(self):
        return f"QuadInt({self.x}, {self.y}, D={self.disc.D})"

    def __str__(self):
        from .notation import format_quad

        return format_quad(self.to_quadrat())


class QuadRat:
    """(x + y*alpha) / den, reduced so that gcd(x, y, den) = 1 and den >= 1."""

    __slots__ = ("x", "y", "den", "disc")

    def __init__(self, x: int, y: int, den: int, disc: Discriminant):
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        if den < 0:
            x, y, den = -x, -y, -den
        g = math.gcd(math.gcd(x, y), den)
        if g > 1:
            x, y, den = x // g, y // g, den // g
        self.x = x
        self.y = y
        self.den = den
        self.disc = disc

    @classmethod
    def from_fraction(cls, q, disc: Discriminant) -> "QuadRat":
        q = Fraction(q)
        return cls(q.numerator, 0, q.denominator, disc)

    @property
    def is_rational(self) -> bool:
        return self.y == 0

    @property
    def is_integral(self) -> bool:
        return self.den == 1

    def as_fraction(self) -> Fraction:
        if self.y:
            raise ValueError(f"{self!r} is not rational")
        return Fraction(self.x, self.den)

    def to_quadint(self) -> QuadInt:
        if self.den != 1:
            raise ValueError(f"{self!r} is not integral")
        return QuadInt(self.x, self.y, self.disc)

    def norm(self) -> Fraction:
        return Fraction(_coord_norm(self.x, self.y, self.disc), self.den**2)

    def conj(self) -> "QuadRat":
        cx, cy = _coord_conj(self.x, self.y, self.disc)
        return QuadRat(cx, cy, self.den, self.disc)

    def re(self) -> Fraction:
        if self.disc.half:
            return Fraction(2 * self.x + self.y, 2 * self.den)
        return Fraction(self.x, self.den)

    def im_sqrtd(self) -> Fraction:
        return Fraction(self.y, 2 * self.den if self.disc.half else self.den)

    def to_complex(self) -> complex:
        return (self.x + self.y * self.disc.alpha_complex()) / self.den

    def _coerce(self, other):
        if isinstance(other, QuadRat):
            return other
        if isinstance(other, QuadInt):
            return other.to_quadrat()
        if isinstance(other, (int, Fraction)):
            return QuadRat.from_fraction(other, self.disc)
        return None

    def _join_disc(self, other: "QuadRat") -> Discriminant:
        if self.y == 0:
            return other.disc
        if other.y == 0 or self.disc == other.disc:
            return self.disc
        raise ValueError(f"mixed rings: D={self.disc.D} and D={other.disc.D}")

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        d = self._join_disc(o)
        return QuadRat(
            self.x * o.den + o.x * self.den,
            self.y * o.den + o.y * self.den,
            self.den * o.den,
            d,
        )

    __radd__ = __add__

    def __neg__(self):
        return QuadRat(-self.x, -self.y, self.den, self.disc)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        d = self._join_disc(o)
        x, y = _coord_mul(self.x, self.y, o.x, o.y, d)
        return QuadRat(x, y, self.den * o.den, d)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        d = self._join_disc(o)
        n = _coord_norm(o.x, o.y, d)
        if n == 0:
            raise ZeroDivisionError("division by zero")
        cx, cy = _coord_conj(o.x, o.y, d)
        x, y = _coord_mul(self.x, self.y, cx, cy, d)
        return QuadRat(x * o.den, y * o.den, self.den * n, d)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, k: int):
        if k < 0:
            return 1 / (self ** (-k))
        out = QuadRat(1, 0, 1, self.disc)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __bool__(self):
        return bool(self.x or self.y)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.y == 0 and Fraction(self.x, self.den) == other
        if isinstance(other, QuadInt):
            other = other.to_quadrat()
        if not isinstance(other, QuadRat):
            return NotImplemented
        if self.y == 0 and other.y == 0:
            return self.x == other.x and self.den == other.den
        return (
            self.disc == other.disc
            and (self.x, self.y, self.den) == (other.x, other.y, other.den)
        )

    def __hash__(self):
        if self.y == 0:
            return hash(Fraction(self.x, self.den))
        return hash((self.x, self.y, self.den, self.disc.D))

    def __repr__(self):
        return f"QuadRat({self.x}, {self.y}, {self.den}, D={self.disc.D})"

    def __str__(self):
        from .notation import format_quad

        return format_quad(self)


def norm(z: QuadInt) -> int:
    """Exact norm |z|^2, a nonnegative rational integer."""
    return z.norm()


def _points_with_norm(disc: Discriminant, n: int) -> list[QuadInt]:
    """All z in R_D with N(z) = n, ordered by (y, x)."""
    if n < 0:
        return []
    if n == 0:
        return [QuadInt(0, 0, disc)]
    out = []
    D = disc.D
    if disc.half:
        # (2x + y)^2 + D y^2 = 4n
        ymax = math.isqrt(4 * n // D)
        for y in range(-ymax, ymax + 1):
            t2 = 4 * n - D * y * y
            if t2 < 0 or not is_square(t2):
                continue
            t = math.isqrt(t2)
            for s in ({t, -t} if t else {0}):
                if (s - y) % 2 == 0:
                    out.append(QuadInt((s - y) // 2, y, disc))
    else:
        ymax = math.isqrt(n // D)
        for y in range(-ymax, ymax + 1):
            t2 = n - D * y * y
            if not is_square(t2):
                continue
            t = math.isqrt(t2)
            for s in ({t, -t} if t else {0}):
                out.append(QuadInt(s, y, disc))
    out.sort(key=lambda z: (z.y, z.x))
    return out


def enum_norm_le(disc: Discriminant, bound: int) -> list[QuadInt]:
    """All z in R_D with N(z) <= bound, complete and duplicate-free.

    Scans the coordinate box |x| <= sqrt(B) (plus sqrt(B/D) on the half
    branch), |y| <= sqrt(B/D) resp. 2*sqrt(B/D), filtering by exact norm.
    """
    if bound < 0:
        return []
    out = []
    D = disc.D
    if disc.half:
        ymax = math.isqrt(4 * bound // D)
        for y in range(-ymax, ymax + 1):
            t2 = 4 * bound - D * y * y  # need (2x + y)^2 <= t2
            t = math.isqrt(t2)
            lo = math.ceil(Fraction(-t - y, 2))
            hi = math.floor(Fraction(t - y, 2))
            for x in range(lo, hi + 1):
                out.append(QuadInt(x, y, disc))
    else:
        ymax = math.isqrt(bound // D)
        for y in range(-ymax, ymax + 1):
            t = math.isqrt(bound - D * y * y)
            for x in range(-t, t + 1):
                out.append(QuadInt(x, y, disc))
    out.sort(key=lambda z: (z.y, z.x))
    return out


def enum_norm_divides(disc: Discriminant, n0: int) -> list[QuadInt]:
    """All nonzero z in R_D whose norm divides n0 (n0 >= 1)."""
    if n0 < 1:
        raise ValueError("n0 must be positive")
    out = []
    for d in divisors(n0):
        out.extend(_points_with_norm(disc, d))
    out.sort(key=lambda z: (z.norm(), z.y, z.x))
    return out


def sqrt_in_RD(z: QuadInt) -> QuadInt | None:
    """A square root of z in R_D, canonical sign, or None.

    Since N(w)^2 = N(z), the norm of z must be a perfect square t^2 and any
    root has norm t; candidates are enumerated at that exact norm.
    The returned root has y > 0, or y = 0 and x >= 0.
    """
    n = z.norm()
    t = math.isqrt(n)
    if t * t != n:
        return None
    for w in _points_with_norm(z.disc, t):
        if w * w == z:
            if w.y > 0 or (w.y == 0 and w.x >= 0):
                return w
            return -w
    return None


def inverse_halfplane_points(disc: Discriminant, t) -> list[QuadInt]:
    """All z in R_D \\ {0} with Re(1/z) >= t, for a rational t > 0.

    The condition inverts to the closed disk |z - 1/(2t)| <= 1/(2t); lattice
    points of the surrounding norm ball are filtered exactly through
    Re(1/z) = Re(z)/N(z).
    """
    t = Fraction(t)
    if t <= 0:
        raise ValueError("t must be positive (the region is unbounded otherwise)")
    bound = t.denominator**2 // t.numerator**2
    out = []
    for z in enum_norm_le(disc, bound):
        n = z.norm()
        if n == 0:
            continue
        # Re(z) * den(t) >= num(t) * N(z), via doubled real parts
        re2 = 2 * z.x + z.y if disc.half else 2 * z.x
        if re2 * t.denominator >= 2 * t.numerator * n:
            out.append(z)
    return out
