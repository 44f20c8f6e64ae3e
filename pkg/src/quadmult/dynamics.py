"""Quadratic rational maps: normal forms, dynatomic and multiplier polynomials.

A map is described by a :class:`QuadMapSpec` (one of the normal forms
g_{a,b}(z) = z(z+a)/(bz+1), h(z) = z + 1/z, f_c(z) = z^2 + c, or a raw
degree-2 homogeneous lift).  The n-th multiplier polynomial is recovered
from two homogeneous resultants against the n-th dynatomic form:

    res(Phi_n, P o F^n) * M_n(lambda)^n
        = res(Phi_n, (lambda + d^n) * (P o F^n) - P * T_n)

with T_n the trace form dG_n/dx + dH_n/dy and P a degree-1 form that does
not divide Phi_n.  Results are cached by (sigma1, sigma2, n) since the
coefficients only depend on the fixed-point symmetric functions.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    DegenerateMapError,
    InconsistentTripleError,
    NoAdmissibleLinearFormError,
)
from .polyring import (
    HomogForm,
    HomogPairMap,
    UniPoly,
    compose_chain,
    exact_div,
    homog_resultant,
    mobius,
    nu,
    poly_nth_root,
    resultant_lambda,
)
from .quadfield import QuadInt, QuadRat

_SCALARS = (int, Fraction, QuadInt, QuadRat)


def _coerce_value(v):
    if isinstance(v, QuadInt):
        return v.to_quadrat()
    if isinstance(v, (int, Fraction, QuadRat)):
        return v
    raise TypeError(f"unsupported coefficient {v!r}")


def conj_value(v):
    """Complex conjugate of an exact field element."""
    if isinstance(v, QuadRat):
        return v.conj()
    if isinstance(v, QuadInt):
        return v.conj()
    return v


def conj_poly(p: UniPoly) -> UniPoly:
    return p.map_coeffs(conj_value)


class QuadMapSpec:
    """One quadratic rational map, in a normal form or as a raw lift."""

    __slots__ = ("kind", "a", "b", "c", "F")

    def __init__(self, kind, a=None, b=None, c=None, F=None):
        self.kind = kind
        self.a = a
        self.b = b
        self.c = c
        self.F = F

    @classmethod
    def gab(cls, a, b) -> "QuadMapSpec":
        a = _coerce_value(a)
        b = _coerce_value(b)
        if a * b == 1:
            raise DegenerateMapError("g_{a,b} needs a*b != 1")
        return cls("gab", a=a, b=b)

    @classmethod
    def h(cls) -> "QuadMapSpec":
        return cls("h")

    @classmethod
    def fc(cls, c) -> "QuadMapSpec":
        return cls("fc", c=_coerce_value(c))

    @classmethod
    def raw(cls, F: HomogPairMap) -> "QuadMapSpec":
        if F.degree != 2:
            raise DegenerateMapError("raw lifts must have degree 2")
        if homog_resultant(F.G, F.H) == 0:
            raise DegenerateMapError("lift components share a projective root")
        return cls("raw", F=F)

    def __repr__(self):
        if self.kind == "gab":
            return f"QuadMapSpec.gab({self.a!r}, {self.b!r})"
        if self.kind == "fc":
            return f"QuadMapSpec.fc({self.c!r})"
        if self.kind == "h":
            return "QuadMapSpec.h()"
        return f"QuadMapSpec.raw({self.F!r})"


@dataclass(frozen=True)
class SigmaPair:
    """Elementary symmetric functions of the three fixed-point multipliers."""

    sigma1: object
    sigma2: object

    @property
    def sigma3(self):
        return self.sigma1 - 2


@dataclass(frozen=True)
class MultiplierPoly:
    n: int
    poly: UniPoly
    used_linear_form: str


def _coord_values(vals):
    """(x, y, den) triples plus the shared ring of a coefficient list."""
    out = []
    for v in vals:
        if isinstance(v, int):
            out.append((v, 0, 1, None))
        elif isinstance(v, Fraction):
            out.append((v.numerator, 0, v.denominator, None))
        elif isinstance(v, QuadRat):
            out.append((v.x, v.y, v.den, v.disc if v.y else None))
        else:
            raise TypeError(f"unsupported coefficient {v!r}")
    return out


def _integral_primitive(coeff_lists):
    """Scale several coefficient lists jointly to integral primitive form."""
    coords = [_coord_values(cs) for cs in coeff_lists]
    disc = None
    for cl in coords:
        for _, _, _, d in cl:
            if d is not None:
                disc = d
    lcm = 1
    for cl in coords:
        for _, _, den, _ in cl:
            lcm = lcm * den // math.gcd(lcm, den)
    content = 0
    ints = []
    for cl in coords:
        row = [(x * (lcm // den), y * (lcm // den)) for x, y, den, _ in cl]
        ints.append(row)
        for x, y in row:
            content = math.gcd(content, math.gcd(x, y))
    if content == 0:
        content = 1
    out = []
    for row in ints:
        if disc is None:
            out.append([x // content for x, _ in row])
        else:
            out.append([QuadRat(x // content, y // content, 1, disc) for x, y in row])
    return out


def lift_of(spec: QuadMapSpec) -> HomogPairMap:
    """Integral, content-reduced degree-2 homogeneous lift of the map."""
    if spec.kind == "gab":
        g = [0, spec.a, 1]  # x(x + a y)
        h = [1, spec.b, 0]  # y(b x + y)
    elif spec.kind == "h":
        g = [1, 0, 1]  # x^2 + y^2
        h = [0, 1, 0]  # x y
    elif spec.kind == "fc":
        g = [spec.c, 0, 1]  # x^2 + c y^2
        h = [1, 0, 0]  # y^2
    else:
        g = list(spec.F.G.coeffs)
        h = list(spec.F.H.coeffs)
    gi, hi = _integral_primitive([g, h])
    F = HomogPairMap(HomogForm(2, gi), HomogForm(2, hi))
    if homog_resultant(F.G, F.H) == 0:
        raise DegenerateMapError("lift components share a projective root")
    return F


def _period_forms(chain):
    """W_k = y G_k - x H_k for each prefix of the iterate chain."""
    out = []
    for g, h in chain:
        m = g.degree + 1
        coeffs = [0] * (m + 1)
        for i, c in enumerate(g.coeffs):
            coeffs[i] = coeffs[i] + c
        for i, c in enumerate(h.coeffs):
            coeffs[i + 1] = coeffs[i + 1] - c
        out.append(HomogForm(m, coeffs))
    return out


def dynatomic(F: HomogPairMap, n: int) -> HomogForm:
    """n-th dynatomic form, by the divisor-product inversion of W_k."""
    if n < 1:
        raise ValueError("n must be >= 1")
    chain = compose_chain(F, n)
    w = _period_forms(chain)
    num = None
    den = None
    for k in range(1, n + 1):
        if n % k:
            continue
        mu = mobius(n // k)
        if mu == 1:
            num = w[k - 1] if num is None else num * w[k - 1]
        elif mu == -1:
            den = w[k - 1] if den is None else den * w[k - 1]
    phi = num if den is None else exact_div(num, den)
    want = F.degree + 1 if n == 1 else nu(n, F.degree)
    if phi.degree != want:
        raise AssertionError(f"dynatomic degree {phi.degree}, expected {want}")
    return phi


def trace_form(F: HomogPairMap, n: int) -> HomogForm:
    gn, hn = compose_chain(F, n)[-1]
    return gn.dx() + hn.dy()


def _linear_forms():
    yield "y", HomogForm(1, (1, 0))
    yield "x", HomogForm(1, (0, 1))
    yield "x-y", HomogForm(1, (-1, 1))
    k = 2
    while True:
        yield f"x-{k}y", HomogForm(1, (-k, 1))
        k += 1


_MULT_CACHE: dict = {}


def clear_multiplier_cache():
    _MULT_CACHE.clear()


def _sigma_key(sig: SigmaPair, n: int):
    return (sig.sigma1, sig.sigma2, n)


def multiplier_poly(spec: QuadMapSpec, n: int, linear_form: str | None = None) -> MultiplierPoly:
    """Monic polynomial whose roots are the period-n multipliers.

    Degree 3 for n = 1, else nu(n)/n.  The result depends only on the
    sigma invariants, so periods >= 2 are memoized by (sigma1, sigma2, n);
    a conjugated sigma pair is served by conjugating the cached value.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if n == 1 or linear_form is not None:
        return _multiplier_poly_direct(spec, n, linear_form)
    sig = sigma_of(spec)
    key = _sigma_key(sig, n)
    hit = _MULT_CACHE.get(key)
    if hit is not None:
        return hit
    ckey = (conj_value(sig.sigma1), conj_value(sig.sigma2), n)
    hit = _MULT_CACHE.get(ckey)
    if hit is not None:
        out = MultiplierPoly(n, conj_poly(hit.poly), hit.used_linear_form)
        _MULT_CACHE[key] = out
        return out
    out = _multiplier_poly_direct(spec, n, None)
    _MULT_CACHE[key] = out
    return out


def _multiplier_poly_direct(spec, n, linear_form):
    F = lift_of(spec)
    d = F.degree
    dn = d**n
    chain = compose_chain(F, n)
    gn, hn = chain[-1]
    phi = dynatomic(F, n)
    phi = HomogForm(phi.degree, _integral_primitive([list(phi.coeffs)])[0])
    trace = gn.dx() + hn.dy()

    tried = 0
    for tag, P in _linear_forms():
        if linear_form is not None and tag != linear_form:
            continue
        tried += 1
        if tried > phi.degree + 3:
            break
        if homog_resultant(phi, P) == 0:
            if linear_form is not None:
                raise NoAdmissibleLinearFormError(f"{tag} divides the dynatomic form")
            continue
        pf = P.coeffs[1] * gn + P.coeffs[0] * hn
        pt = P * trace
        denom = homog_resultant(phi, pf)
        if denom == 0:
            raise AssertionError("res(Phi, P o F^n) vanished for admissible P")
        lam_form = HomogForm(
            dn, [UniPoly((dn * a - b, a)) for a, b in zip(pf.coeffs, pt.coeffs)]
        )
        r = resultant_lambda(phi, lam_form, phi.degree)
        if r.degree != phi.degree or r.leading != denom:
            raise AssertionError("lambda-resultant leading term mismatch")
        monic = UniPoly([_field_div(c, denom) for c in r.coeffs])
        m = poly_nth_root(monic, n) if n >= 2 else monic
        return MultiplierPoly(n, m, tag)
    raise NoAdmissibleLinearFormError("no linear form avoids the dynatomic roots")


def _field_div(a, b):
    if isinstance(a, int):
        a = Fraction(a)
    if isinstance(b, int):
        b = Fraction(b)
    return a / b


def sigma_of(spec: QuadMapSpec) -> SigmaPair:
    """(sigma1, sigma2) read off the coefficients of the fixed-point polynomial."""
    m1 = multiplier_poly(spec, 1).poly
    c0 = m1.coeffs[0] if m1.degree >= 0 else 0
    c1 = m1.coeffs[1] if m1.degree >= 1 else 0
    c2 = m1.coeffs[2] if m1.degree >= 2 else 0
    s1 = -c2
    s2 = c1
    if -c0 != s1 - 2:
        raise AssertionError("sigma3 = sigma1 - 2 failed; lift is inconsistent")
    return SigmaPair(s1, s2)


def map_from_fixed_multipliers(l1, l2, l3) -> QuadMapSpec:
    """A normal-form map whose fixed-point multipliers are the given triple."""
    l1, l2, l3 = (_coerce_value(v) for v in (l1, l2, l3))
    s1 = l1 + l2 + l3
    s3 = l1 * l2 * l3
    if s3 != s1 - 2:
        raise InconsistentTripleError(
            "triple violates sigma3 = sigma1 - 2; it is not realized by a quadratic map"
        )
    if l1 == 1 and l2 == 1 and l3 == 1:
        return QuadMapSpec.h()
    for a, b in ((l1, l2), (l1, l3), (l2, l3)):
        if a * b != 1:
            return QuadMapSpec.gab(a, b)
    raise InconsistentTripleError("no pair of multipliers has product != 1")


def closed_form_sigma(sig: SigmaPair, n: int) -> list:
    """Period 2..4 symmetric functions as polynomials in (sigma1, sigma2)."""
    s1 = sig.sigma1 if not isinstance(sig.sigma1, int) else Fraction(sig.sigma1)
    s2 = sig.sigma2 if not isinstance(sig.sigma2, int) else Fraction(sig.sigma2)
    if n == 2:
        return [2 * s1 + s2]
    if n == 3:
        return [
            s1 * (2 * s1 + s2) + 3 * s1 + 2,
            (2 * s1 + s2) * (s1 + s2) ** 2 - s1 * (s1 + 2 * s2) + 12 * s1 + 28,
        ]
    if n == 4:
        return [
            (2 * s1 + s2) * s1**2 + (s1 - s2) * (3 * s1 + s2) + 10 * s1,
            (2 * s1 + s2) * s1**2 * (s1 + s2) ** 2
            + (s1 - s2) * (7 * s1**3 + 9 * s1**2 * s2 + 5 * s1 * s2**2 + s2**3)
            + (26 * s1 - s2) * s1**2
            + 4 * s1 * (16 * s1 - 5 * s2)
            + 4 * (10 * s1 - 13 * s2)
            + 48,
            s2**2 * (s1 + s2) ** 2 * (2 * s1 + s2) ** 2
            + s1 * (2 * s1 + s2) * (s1**3 - 2 * s1**2 * s2 - s1 * s2**2 - 2 * s2**3)
            + s1 * (27 * s1**3 + 30 * s1**2 * s2 + 68 * s1 * s2**2 + 28 * s2**3)
            + 4 * (26 * s1**3 + s1**2 * s2 + 32 * s1 * s2**2 + 15 * s2**3)
            + 8 * (37 * s1**2 - 19 * s1 * s2 - 6 * s2**2)
            + 32 * (20 * s1 + 3 * s2)
            + 304,
        ]
    raise ValueError("closed forms cover n in {2, 3, 4}")


def closed_form_multiplier_poly(sig: SigmaPair, n: int) -> UniPoly:
    """M_n assembled from the closed-form symmetric functions (n <= 4)."""
    if n == 1:
        s1, s2 = sig.sigma1, sig.sigma2
        return UniPoly((-(s1 - 2), s2, -s1, 1))
    vals = closed_form_sigma(sig, n)
    deg = len(vals)
    coeffs = [0] * (deg + 1)
    coeffs[deg] = 1
    for j, v in enumerate(vals, start=1):
        coeffs[deg - j] = v if j % 2 == 0 else -v
    return UniPoly(coeffs)


def fixed_point_identity_holds(l1, l2, l3) -> bool:
    """Exact test of sum 1/(1 - lambda_j) = 1 over the fixed multipliers."""
    vals = [_coerce_value(v) for v in (l1, l2, l3)]
    if any(v == 1 for v in vals):
        raise ZeroDivisionError("identity undefined when a multiplier equals 1")
    total = sum((1 - v) ** -1 if isinstance(v, QuadRat) else Fraction(1) / (1 - v) for v in vals)
    return total == 1


def _mp_value(v, mp):
    """Exact coefficient as an mpmath complex at the current precision."""
    if isinstance(v, QuadInt):
        v = v.to_quadrat()
    if isinstance(v, QuadRat):
        alpha = mp.mpc(0, mp.sqrt(v.disc.D))
        if v.disc.half:
            alpha = (1 + alpha) / 2
        return (v.x + v.y * alpha) / v.den
    f = Fraction(v)
    return mp.mpf(f.numerator) / f.denominator


def _mp_horner(coeffs, z):
    out = 0
    for c in reversed(coeffs):
        out = out * z + c
    return out


def _mp_roots(p: UniPoly, mpmath) -> list:
    """High-precision roots (with multiplicity) at the current mp precision.

    Companion-matrix eigenvalues in double precision seed a Newton iteration
    against the exact coefficients of each squarefree part.
    """
    import numpy as np

    from .polyring import squarefree_parts

    def _c(v):
        if isinstance(v, (QuadRat, QuadInt)):
            return v.to_complex()
        return complex(v)

    out = []
    for part, mult in squarefree_parts(p):
        cs = [_c(c) for c in part.coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        if len(cs) <= 1:
            continue
        mcs = [_mp_value(c, mpmath.mp) for c in part.coeffs[: len(cs)]]
        mds = [i * c for i, c in enumerate(mcs)][1:]
        tol = mpmath.mpf(10) ** (5 - mpmath.mp.dps)
        for z0 in np.roots(list(reversed(cs))):
            z = mpmath.mpc(complex(z0))
            for _ in range(60):
                dv = _mp_horner(mds, z)
                if not dv:
                    break
                step = _mp_horner(mcs, z) / dv
                z = z - step
                if abs(step) < tol * (1 + abs(z)):
                    break
            out.extend([z] * mult)
    return out


def complex_roots(p: UniPoly) -> list[complex]:
    """Floating-point roots of an exact-coefficient polynomial.

    The exact squarefree decomposition is taken first, so repeated roots are
    located as simple roots of a squarefree factor: companion-matrix
    eigenvalues give starting points and Newton polishing against the exact
    coefficients runs at extended precision (double-precision evaluation
    noise otherwise caps accuracy for roots near large-derivative regions).
    """
    import mpmath

    with mpmath.workdps(40):
        return [complex(z) for z in _mp_roots(p, mpmath)]


def numeric_cycle_oracle(spec: QuadMapSpec, n: int) -> list[complex]:
    """Floating-point multipliers of the period-n cycles, one per cycle.

    Roots of the dehomogenized dynatomic polynomial come from companion
    eigenvalues with one Newton polish step; cycles are grouped by iterating
    the map and the multiplier is the chain-rule product along the orbit.
    """
    import numpy as np

    F = lift_of(spec)
    phi = dynatomic(F, n)

    def _c(v):
        if isinstance(v, (QuadRat, QuadInt)):
            return v.to_complex()
        return complex(v)

    roots = np.array(complex_roots(UniPoly(phi.coeffs)))

    def peval(cs, z):
        out = 0j
        for c in reversed(cs):
            out = out * z + c
        return out

    if len(roots) > 1:
        sep = min(
            abs(roots[i] - roots[j])
            for i in range(len(roots))
            for j in range(i + 1, len(roots))
        )
        if sep < 1e-9:
            warnings.warn("dynatomic roots are ill separated; oracle may misgroup")

    g = [_c(c) for c in F.G.coeffs]
    h = [_c(c) for c in F.H.coeffs]
    gd = [i * c for i, c in enumerate(g)][1:]
    hd = [i * c for i, c in enumerate(h)][1:]

    def f(z):
        return peval(g, z) / peval(h, z)

    def fprime(z):
        hh = peval(h, z)
        return (peval(gd, z) * hh - peval(g, z) * peval(hd, z)) / (hh * hh)

    visited = [False] * len(roots)
    out = []
    for i, z in enumerate(roots):
        if visited[i]:
            continue
        mult = 1 + 0j
        w = z
        for _ in range(n):
            # snap to the nearest root, preferring an unvisited copy so that
            # coincident roots (lower-period points inside the dynatomic
            # locus) are consumed instead of spawning duplicate cycles
            dist = np.abs(roots - w)
            j = int(np.argmin(dist))
            free = [k for k in np.argsort(dist) if not visited[k]]
            if free and dist[free[0]] <= dist[j] + 1e-7 * (1 + abs(w)):
                j = int(free[0])
            visited[j] = True
            w = roots[j]
            mult *= fprime(w)
            w = f(w)
        out.append(mult)
    return out
