"""Dense univariate polynomials and bivariate homogeneous forms.

Coefficients may be int, Fraction, QuadInt or QuadRat; arithmetic is duck
typed over those domains.  Resultants go through fraction-free (Bareiss)
elimination on the Sylvester matrix after clearing denominators row-wise,
with gmpy2 integers when available.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .errors import ExactDivisionError, NotAPerfectPowerError
from .intutil import divisors, factorint
from .quadfield import Discriminant, QuadInt, QuadRat

try:
    from gmpy2 import mpz as _mpz
except ImportError:  # pragma: no cover
    _mpz = int

_SCALARS = (int, Fraction, QuadInt, QuadRat)


def mobius(n: int) -> int:
    if n < 1:
        raise ValueError("mobius expects n >= 1")
    out = 1
    for _, e in factorint(n).items():
        if e >= 2:
            return 0
        out = -out
    return out


def nu(n: int, d: int) -> int:
    """Divisor sum sum_{k | n} mobius(n/k) d^k."""
    if n < 1 or d < 2:
        raise ValueError("nu expects n >= 1 and d >= 2")
    return sum(mobius(n // k) * d**k for k in divisors(n))


def _as_field(c):
    return Fraction(c) if isinstance(c, int) else c


class UniPoly:
    """Dense univariate polynomial, constant term first, no trailing zeros."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def constant(cls, c):
        return cls((c,))

    @classmethod
    def x(cls):
        return cls((0, 1))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __call__(self, v):
        out = 0
        for c in reversed(self.coeffs):
            out = out * v + c
        return out

    def map_coeffs(self, fn) -> "UniPoly":
        return UniPoly([fn(c) for c in self.coeffs])

    def __add__(self, other):
        if isinstance(other, _SCALARS):
            other = UniPoly((other,))
        if not isinstance(other, UniPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return UniPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return UniPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        if isinstance(other, _SCALARS):
            other = UniPoly((other,))
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, _SCALARS):
            return UniPoly([c * other for c in self.coeffs])
        if not isinstance(other, UniPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return UniPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca == 0:
                continue
            for j, cb in enumerate(b):
                out[i + j] = out[i + j] + ca * cb
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative polynomial power")
        out = UniPoly((1,))
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def monic(self) -> "UniPoly":
        lead = _as_field(self.leading)
        return UniPoly([_as_field(c) / lead for c in self.coeffs])

    def derivative(self) -> "UniPoly":
        return UniPoly([i * c for i, c in enumerate(self.coeffs)][1:])

    def divmod(self, other: "UniPoly"):
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = [_as_field(c) for c in self.coeffs]
        lead = _as_field(other.leading)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return UniPoly(), UniPoly(rem)
        quot = [0] * (dq + 1)
        for i in range(dq, -1, -1):
            q = rem[i + other.degree] / lead
            quot[i] = q
            if q != 0:
                for j, b in enumerate(other.coeffs):
                    rem[i + j] = rem[i + j] - q * _as_field(b)
        return UniPoly(quot), UniPoly(rem)

    def deflate(self, root) -> "UniPoly":
        """Exact synthetic division by (x - root)."""
        q, r = self.divmod(UniPoly((-root, 1)))
        if not r.is_zero:
            raise ExactDivisionError(f"{root} is not a root")
        return q

    def __eq__(self, other):
        if isinstance(other, _SCALARS):
            other = UniPoly((other,))
        if not isinstance(other, UniPoly):
            return NotImplemented
        if len(self.coeffs) != len(other.coeffs):
            return False
        return all(a == b for a, b in zip(self.coeffs, other.coeffs))

    def __hash__(self):
        return hash(tuple(_as_field(c) for c in self.coeffs))

    def __repr__(self):
        return f"UniPoly({list(self.coeffs)})"

    def __str__(self):
        from .notation import format_poly

        return format_poly(self)


class HomogForm:
    """Homogeneous bivariate form: coeffs[i] multiplies x^i y^(degree-i)."""

    __slots__ = ("degree", "coeffs")

    def __init__(self, degree: int, coeffs):
        cs = tuple(coeffs)
        if len(cs) != degree + 1:
            raise ValueError(f"degree {degree} form needs {degree + 1} coefficients")
        self.degree = degree
        self.coeffs = cs

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def map_coeffs(self, fn) -> "HomogForm":
        return HomogForm(self.degree, [fn(c) for c in self.coeffs])

    def __add__(self, other):
        if not isinstance(other, HomogForm):
            return NotImplemented
        if self.degree != other.degree:
            raise ValueError("degree mismatch")
        return HomogForm(self.degree, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        return HomogForm(self.degree, [-c for c in self.coeffs])

    def __sub__(self, other):
        if not isinstance(other, HomogForm):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, _SCALARS):
            return HomogForm(self.degree, [c * other for c in self.coeffs])
        if not isinstance(other, HomogForm):
            return NotImplemented
        out = [0] * (self.degree + other.degree + 1)
        for i, ca in enumerate(self.coeffs):
            if ca == 0:
                continue
            for j, cb in enumerate(other.coeffs):
                out[i + j] = out[i + j] + ca * cb
        return HomogForm(self.degree + other.degree, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = HomogForm(0, (1,))
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def dx(self) -> "HomogForm":
        """Formal partial derivative in x, degree drops by one."""
        m = self.degree
        if m == 0:
            return HomogForm(0, (0,))
        return HomogForm(m - 1, [i * self.coeffs[i] for i in range(1, m + 1)])

    def dy(self) -> "HomogForm":
        m = self.degree
        if m == 0:
            return HomogForm(0, (0,))
        return HomogForm(m - 1, [(m - i) * self.coeffs[i] for i in range(m)])

    def eval_scalars(self, a, b):
        out = 0
        pa = 1
        pows_a = []
        for _ in range(self.degree + 1):
            pows_a.append(pa)
            pa = pa * a
        pb = 1
        for i in range(self.degree, -1, -1):
            out = out + self.coeffs[i] * pows_a[i] * pb
            pb = pb * b
        return out

    def eval_forms(self, u: "HomogForm", v: "HomogForm") -> "HomogForm":
        """Substitute forms (u, v) for (x, y)."""
        if u.degree != v.degree:
            raise ValueError("substituted forms must share a degree")
        m = self.degree
        out = HomogForm(m * u.degree, [0] * (m * u.degree + 1))
        pu = [HomogForm(0, (1,))]
        for _ in range(m):
            pu.append(pu[-1] * u)
        pv = [HomogForm(0, (1,))]
        for _ in range(m):
            pv.append(pv[-1] * v)
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            out = out + (pu[i] * pv[m - i]) * c
        return out

    def eval_lambda(self, t) -> "HomogForm":
        """Specialize UniPoly-valued coefficients at lambda = t."""
        return HomogForm(
            self.degree,
            [c(t) if isinstance(c, UniPoly) else c for c in self.coeffs],
        )

    def __eq__(self, other):
        if not isinstance(other, HomogForm):
            return NotImplemented
        return self.degree == other.degree and all(
            a == b for a, b in zip(self.coeffs, other.coeffs)
        )

    def __hash__(self):
        return hash((self.degree, tuple(_as_field(c) for c in self.coeffs)))

    def __repr__(self):
        return f"HomogForm({self.degree}, {list(self.coeffs)})"


class HomogPairMap:
    """Degree-d homogeneous self-map (G, H) of the plane."""

    __slots__ = ("G", "H", "degree")

    def __init__(self, G: HomogForm, H: HomogForm):
        if G.degree != H.degree:
            raise ValueError("lift components must share a degree")
        self.G = G
        self.H = H
        self.degree = G.degree


def partial_derivative(form: HomogForm, var: str) -> HomogForm:
    if var == "x":
        return form.dx()
    if var == "y":
        return form.dy()
    raise ValueError("var must be 'x' or 'y'")


def compose_chain(F: HomogPairMap, n: int) -> list[tuple[HomogForm, HomogForm]]:
    """[(G_1, H_1), ..., (G_n, H_n)] by repeated substitution into F."""
    if n < 1:
        raise ValueError("n must be >= 1")
    chain = [(F.G, F.H)]
    for _ in range(n - 1):
        g, h = chain[-1]
        chain.append((F.G.eval_forms(g, h), F.H.eval_forms(g, h)))
    return chain


def compose_pair(F: HomogPairMap, n: int) -> tuple[HomogForm, HomogForm]:
    return compose_chain(F, n)[-1]


def exact_div(a, b):
    """Exact quotient a / b for UniPoly or HomogForm operands."""
    if isinstance(a, UniPoly) and isinstance(b, UniPoly):
        q, r = a.divmod(b)
        if not r.is_zero:
            raise ExactDivisionError("polynomial division left a remainder")
        return q
    if isinstance(a, HomogForm) and isinstance(b, HomogForm):
        qx = exact_div(UniPoly(a.coeffs), UniPoly(b.coeffs))
        deg = a.degree - b.degree
        if qx.degree > deg:
            # x-polynomials divide but the y-powers do not
            raise ExactDivisionError("form division left a remainder")
        coeffs = list(qx.coeffs) + [0] * (deg - qx.degree)
        return HomogForm(deg, coeffs)
    raise TypeError("exact_div expects two UniPoly or two HomogForm arguments")


def poly_gcd(a: UniPoly, b: UniPoly) -> UniPoly:
    """Monic polynomial gcd over the coefficient field."""
    while not b.is_zero:
        a, b = b, a.divmod(b)[1]
    if a.is_zero:
        return a
    return a.monic()


def squarefree_parts(p: UniPoly) -> list[tuple[UniPoly, int]]:
    """Yun decomposition: [(q_i, i)] with p = lc * prod q_i^i, q_i squarefree."""
    if p.degree < 1:
        return []
    p = p.monic()
    d = p.derivative()
    g = poly_gcd(p, d)
    if g.degree == 0:
        return [(p, 1)]
    out = []
    w = exact_div(p, g)
    y = exact_div(d, g)
    i = 1
    while w.degree > 0:
        z = y - w.derivative()
        q = poly_gcd(w, z)
        if q.degree > 0:
            out.append((q, i))
        w = exact_div(w, q)
        y = exact_div(z, q)
        i += 1
    return out


def poly_nth_root(q: UniPoly, n: int) -> UniPoly:
    """Monic m with m**n == q, by coefficient recursion from the top."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if q.is_zero or q.leading != 1:
        raise NotAPerfectPowerError("input must be monic")
    if q.degree % n:
        raise NotAPerfectPowerError(f"degree {q.degree} not divisible by {n}")
    if n == 1:
        return q
    k = q.degree // n
    coeffs = [0] * k + [1]
    for j in range(k - 1, -1, -1):
        p = UniPoly(coeffs) ** n
        want = _as_field(q.coeffs[(n - 1) * k + j])
        have = _as_field(p.coeffs[(n - 1) * k + j]) if p.degree >= (n - 1) * k + j else Fraction(0)
        coeffs[j] = (want - have) / n
    m = UniPoly(coeffs)
    if m**n != q:
        raise NotAPerfectPowerError("input is not a perfect n-th power")
    return m


# ---------------------------------------------------------------------------
# fraction-free determinants


def _bareiss_int(m, prev=1, sign=1):
    n = len(m)
    if n == 0:
        return _mpz(sign)
    prev = _mpz(prev)
    for k in range(n - 1):
        if not m[k][k]:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return _mpz(0)
        pk = m[k][k]
        rowk = m[k]
        for i in range(k + 1, n):
            row = m[i]
            mik = row[k]
            row[k + 1 :] = [
                (pk * a - mik * b) // prev
                for a, b in zip(row[k + 1 :], rowk[k + 1 :])
            ]
        prev = pk
    return sign * m[-1][-1]


def _bareiss_pair(mx, my, disc: Discriminant, prev=(1, 0), sign=1):
    n = len(mx)
    if n == 0:
        return (_mpz(sign), _mpz(0))
    E = _mpz(disc.E)
    half = disc.half
    px, py = _mpz(prev[0]), _mpz(prev[1])
    for k in range(n - 1):
        if not mx[k][k] and not my[k][k]:
            for i in range(k + 1, n):
                if mx[i][k] or my[i][k]:
                    mx[k], mx[i] = mx[i], mx[k]
                    my[k], my[i] = my[i], my[k]
                    sign = -sign
                    break
            else:
                return (_mpz(0), _mpz(0))
        ax, ay = mx[k][k], my[k][k]
        rkx, rky = mx[k], my[k]
        if half:
            pN = px * px + px * py + E * py * py
        else:
            pN = px * px + E * py * py
        for i in range(k + 1, n):
            rix, riy = mx[i], my[i]
            bx, by = rix[k], riy[k]
            newx, newy = [], []
            if half:
                for cx, cy, dx, dy in zip(rix[k + 1 :], riy[k + 1 :], rkx[k + 1 :], rky[k + 1 :]):
                    tx = ax * cx - E * ay * cy - (bx * dx - E * by * dy)
                    ty = ax * cy + ay * cx + ay * cy - (bx * dy + by * dx + by * dy)
                    if py:
                        newx.append((tx * px + tx * py + E * ty * py) // pN)
                        newy.append((ty * px - tx * py) // pN)
                    else:
                        newx.append(tx // px)
                        newy.append(ty // px)
            else:
                for cx, cy, dx, dy in zip(rix[k + 1 :], riy[k + 1 :], rkx[k + 1 :], rky[k + 1 :]):
                    tx = ax * cx - E * ay * cy - (bx * dx - E * by * dy)
                    ty = ax * cy + ay * cx - (bx * dy + by * dx)
                    if py:
                        newx.append((tx * px + E * ty * py) // pN)
                        newy.append((ty * px - tx * py) // pN)
                    else:
                        newx.append(tx // px)
                        newy.append(ty // px)
            rix[k + 1 :] = newx
            riy[k + 1 :] = newy
        px, py = ax, ay
    return (sign * mx[-1][-1], sign * my[-1][-1])


def _entry_coords(c):
    """(x, y, den) integer coordinates of an int/Fraction/QuadInt/QuadRat."""
    if isinstance(c, int):
        return c, 0, 1
    if isinstance(c, Fraction):
        return c.numerator, 0, c.denominator
    if isinstance(c, QuadInt):
        return c.x, c.y, 1
    if isinstance(c, QuadRat):
        return c.x, c.y, c.den
    raise TypeError(f"unsupported coefficient {c!r}")


def _common_disc(rows) -> Discriminant | None:
    disc = None
    for row in rows:
        for c in row:
            d = None
            if isinstance(c, QuadInt) and c.y:
                d = c.disc
            elif isinstance(c, QuadRat) and c.y:
                d = c.disc
            if d is not None:
                if disc is None:
                    disc = d
                elif disc != d:
                    raise ValueError("mixed rings in one matrix")
    return disc


def _scale_rows(rows):
    """Clear denominators per row; returns coordinate rows and the scale product."""
    xrows, yrows = [], []
    scale = 1
    for row in rows:
        coords = [_entry_coords(c) for c in row]
        lcm = 1
        for _, _, den in coords:
            lcm = lcm * den // math.gcd(lcm, den)
        scale *= lcm
        xrows.append([_mpz(x * (lcm // den)) for x, _, den in coords])
        yrows.append([_mpz(y * (lcm // den)) for _, y, den in coords])
    return xrows, yrows, scale


def _det_exact(rows):
    """Exact determinant over int / Fraction / QuadRat entries."""
    n = len(rows)
    if n == 0:
        return 1
    disc = _common_disc(rows)
    xr, yr, scale = _scale_rows(rows)
    if disc is None:
        det = int(_bareiss_int(xr))
        if scale == 1 and all(isinstance(c, (int, QuadInt)) for row in rows for c in row):
            return det
        out = Fraction(det, scale)
        if any(isinstance(c, (QuadRat, QuadInt)) for row in rows for c in row):
            for row in rows:
                for c in row:
                    if isinstance(c, (QuadRat, QuadInt)):
                        return QuadRat.from_fraction(out, c.disc)
        return out
    dx, dy = _bareiss_pair(xr, yr, disc)
    return QuadRat(int(dx), int(dy), scale, disc)


def _sylvester_rows(a_coeffs, b_coeffs, m, n):
    """Sylvester matrix rows: n shifted rows of A then m shifted rows of B."""
    size = m + n
    rows = []
    arev = list(reversed(a_coeffs))
    brev = list(reversed(b_coeffs))
    for i in range(n):
        rows.append([0] * i + arev + [0] * (size - i - m - 1))
    for i in range(m):
        rows.append([0] * i + brev + [0] * (size - i - n - 1))
    return rows


def homog_resultant(A: HomogForm, B: HomogForm):
    """Homogeneous resultant, Sylvester convention with res(x, y) = 1."""
    if A.is_zero and B.is_zero:
        raise ValueError("resultant of two zero forms is undefined")
    if A.is_zero or B.is_zero:
        return 0
    m, n = A.degree, B.degree
    if m == 0:
        return A.coeffs[0] ** n
    if n == 0:
        return B.coeffs[0] ** m
    return _det_exact(_sylvester_rows(A.coeffs, B.coeffs, m, n))


# ---------------------------------------------------------------------------
# resultants that are linear polynomials in a parameter


def _sample_points():
    yield 0
    k = 1
    while True:
        yield k
        yield -k
        k += 1


def _newton_interpolate(points, values) -> UniPoly:
    coeffs = [_as_field(v) for v in values]
    n = len(points)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coeffs[i] = (coeffs[i] - coeffs[i - 1]) / (points[i] - points[i - j])
    poly = UniPoly((coeffs[-1],))
    for i in range(n - 2, -1, -1):
        poly = poly * UniPoly((-points[i], 1)) + coeffs[i]
    return poly


def _split_lambda(c):
    """Constant and lambda parts of a coefficient with lambda-degree <= 1."""
    if isinstance(c, UniPoly):
        if c.degree > 1:
            raise ValueError("coefficient has lambda-degree > 1")
        c0 = c.coeffs[0] if c.coeffs else 0
        c1 = c.coeffs[1] if c.degree >= 1 else 0
        return c0, c1
    return c, 0


def _phase1_eliminate(xr, yr, na, disc):
    """Bareiss-eliminate the first na pivots, pivoting only on rows < na.

    Every row below the pivot block is updated (for the lambda-resultant the
    const and lambda parts of each matrix row ride as two separate rows; the
    update is linear in the row, so eliminating them independently agrees
    with eliminating any specialization).  Returns (prev pivot, sign), or
    None when no admissible pivot exists.
    """
    total = len(xr)
    half = disc.half if disc is not None else False
    E = _mpz(disc.E) if disc is not None else None
    sign = 1
    px, py = _mpz(1), _mpz(0)
    for k in range(na):
        if not xr[k][k] and not yr[k][k]:
            for i in range(k + 1, na):
                if xr[i][k] or yr[i][k]:
                    xr[k], xr[i] = xr[i], xr[k]
                    yr[k], yr[i] = yr[i], yr[k]
                    sign = -sign
                    break
            else:
                return None
        ax, ay = xr[k][k], yr[k][k]
        rkx, rky = xr[k], yr[k]
        if disc is not None:
            pN = px * px + px * py + E * py * py if half else px * px + E * py * py
        for i in range(k + 1, total):
            rix = xr[i]
            bx = rix[k]
            if disc is None:
                rix[k + 1 :] = [
                    (ax * a - bx * b) // px
                    for a, b in zip(rix[k + 1 :], rkx[k + 1 :])
                ]
                continue
            riy = yr[i]
            by = riy[k]
            newx, newy = [], []
            for cx, cy, dx, dy in zip(
                rix[k + 1 :], riy[k + 1 :], rkx[k + 1 :], rky[k + 1 :]
            ):
                tx = ax * cx - E * ay * cy - (bx * dx - E * by * dy)
                if half:
                    ty = ax * cy + ay * cx + ay * cy - (bx * dy + by * dx + by * dy)
                else:
                    ty = ax * cy + ay * cx - (bx * dy + by * dx)
                if py:
                    if half:
                        newx.append((tx * px + tx * py + E * ty * py) // pN)
                    else:
                        newx.append((tx * px + E * ty * py) // pN)
                    newy.append((ty * px - tx * py) // pN)
                else:
                    newx.append(tx // px)
                    newy.append(ty // px)
            rix[k + 1 :] = newx
            riy[k + 1 :] = newy
        px, py = ax, ay
    return px, py, sign


def resultant_lambda(A: HomogForm, B: HomogForm, deg_bound: int) -> UniPoly:
    """res(A, B) as a polynomial in lambda.

    B carries UniPoly coefficients of lambda-degree <= 1; A is lambda-free.
    The resultant is sampled at deg_bound + 2 integer points (the extra one
    is an internal consistency check) and recovered by exact interpolation;
    each sample is a fraction-free determinant.
    """
    if deg_bound < A.degree:
        raise ValueError("deg_bound must be at least deg A")
    consts = []
    lams = []
    any_lambda = False
    for c in B.coeffs:
        c0, c1 = _split_lambda(c)
        consts.append(c0)
        lams.append(c1)
        if c1 != 0:
            any_lambda = True
    if not any_lambda:
        return UniPoly((homog_resultant(A, HomogForm(B.degree, consts)),))

    m, n = A.degree, B.degree
    gen = _sample_points()
    points = [next(gen) for _ in range(deg_bound + 2)]
    values = _lambda_det_values(A.coeffs, consts, lams, m, n, points)
    poly = _newton_interpolate(points[:-1], values[:-1])
    if poly(points[-1]) != _as_field(values[-1]):
        raise AssertionError("lambda-resultant samples exceed the degree bound")
    return poly


def _row_scale_coords(coord_rows):
    """One common denominator-clearing factor for coordinate tuples."""
    lcm = 1
    for row in coord_rows:
        for _, _, den in row:
            lcm = lcm * den // math.gcd(lcm, den)
    return lcm


def _lambda_det_values(a_coeffs, consts, lams, m, n, points):
    """Determinant samples of the Sylvester matrix with lambda-linear B rows."""
    a_rows = _sylvester_rows(a_coeffs, consts, m, n)[:n]
    b0_rows = _sylvester_rows(a_coeffs, consts, m, n)[n:]
    b1_rows = _sylvester_rows(a_coeffs, lams, m, n)[n:]
    disc = _common_disc(a_rows + b0_rows + b1_rows)

    # clear denominators; the const and lambda parts of one matrix row share
    # a single scale so that specialization commutes with the scaling
    xr, yr = [], []
    scale = 1
    for row in a_rows:
        coords = [_entry_coords(c) for c in row]
        lcm = _row_scale_coords([coords])
        scale *= lcm
        xr.append([_mpz(x * (lcm // den)) for x, _, den in coords])
        yr.append([_mpz(y * (lcm // den)) for _, y, den in coords])
    pend_x, pend_y = [], []
    for r0, r1 in zip(b0_rows, b1_rows):
        c0 = [_entry_coords(c) for c in r0]
        c1 = [_entry_coords(c) for c in r1]
        lcm = _row_scale_coords([c0, c1])
        scale *= lcm
        xr.append([_mpz(x * (lcm // den)) for x, _, den in c0])
        yr.append([_mpz(y * (lcm // den)) for _, y, den in c0])
        pend_x.append([_mpz(x * (lcm // den)) for x, _, den in c1])
        pend_y.append([_mpz(y * (lcm // den)) for _, y, den in c1])
    xr += pend_x
    yr += pend_y

    red = None
    if m + n >= 12:
        work_x = [row[:] for row in xr]
        work_y = [row[:] for row in yr]
        red = _phase1_eliminate(work_x, work_y, n, disc)
    out = []
    if red is not None:
        # per-sample work shrinks to the m x m residual block
        px, py, sign = red
        for t in points:
            rows_x = [
                [x0 + t * x1 for x0, x1 in zip(r0[n:], r1[n:])]
                for r0, r1 in zip(work_x[n : n + m], work_x[n + m :])
            ]
            rows_y = [
                [y0 + t * y1 for y0, y1 in zip(r0[n:], r1[n:])]
                for r0, r1 in zip(work_y[n : n + m], work_y[n + m :])
            ]
            out.append(_finish_det(rows_x, rows_y, disc, (px, py), sign, scale))
        return out
    for t in points:
        rows_x = [row[:] for row in xr[:n]] + [
            [x0 + t * x1 for x0, x1 in zip(r0, r1)]
            for r0, r1 in zip(xr[n : n + m], xr[n + m :])
        ]
        rows_y = [row[:] for row in yr[:n]] + [
            [y0 + t * y1 for y0, y1 in zip(r0, r1)]
            for r0, r1 in zip(yr[n : n + m], yr[n + m :])
        ]
        out.append(_finish_det(rows_x, rows_y, disc, (1, 0), 1, scale))
    return out


def _finish_det(rows_x, rows_y, disc, prev, sign, scale):
    if disc is None:
        det = int(_bareiss_int(rows_x, prev=prev[0], sign=sign))
        return det if scale == 1 else Fraction(det, scale)
    dx, dy = _bareiss_pair(rows_x, rows_y, disc, prev=prev, sign=sign)
    return QuadRat(int(dx), int(dy), scale, disc)
