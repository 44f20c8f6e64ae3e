"""Parse and print exact field elements and polynomials in radical notation.

Elements of Q(i*sqrt(D)) are written like ``-3-2*i``, ``i*sqrt(2)``,
``(-1+3*i*sqrt(3))/8`` or ``5/4``; polynomials in the multiplier variable
look like ``λ^3 - 159*λ^2 + 7419*λ - 84221`` (the plain letter ``l`` is
accepted as well).  Every printed form re-parses to the identical value.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction

from .errors import ParseError
from .polyring import UniPoly
from .quadfield import Discriminant, QuadInt, QuadRat

_RAT = re.compile(r"^(\d+)(?:/(\d+))?$")
_IMAG = re.compile(r"^(?:(\d+)(?:/(\d+))?\*)?i(?:\*sqrt\((\d+)\))?$")

_DISC_CACHE: dict[int, Discriminant] = {}


def get_disc(d: int) -> Discriminant:
    if d not in _DISC_CACHE:
        _DISC_CACHE[d] = Discriminant(d)
    return _DISC_CACHE[d]


def _split_terms(s: str) -> list[str]:
    """Split a parenthesis-free sum into signed terms."""
    terms = []
    cur = ""
    for i, ch in enumerate(s):
        if ch in "+-" and i > 0 and s[i - 1] not in "+-*/^(":
            terms.append(cur)
            cur = ch
        else:
            cur += ch
    terms.append(cur)
    return [t for t in terms if t]


def _parse_sum(s: str, disc: Discriminant | None):
    """Parse a sum of rational and imaginary terms; returns (re, im, D)."""
    re_part = Fraction(0)
    im_part = Fraction(0)
    d_seen: int | None = None
    for term in _split_terms(s):
        sign = 1
        while term and term[0] in "+-":
            if term[0] == "-":
                sign = -sign
            term = term[1:]
        if not term:
            raise ParseError(f"empty term in {s!r}")
        m = _RAT.match(term)
        if m:
            re_part += sign * Fraction(int(m.group(1)), int(m.group(2) or 1))
            continue
        m = _IMAG.match(term)
        if m:
            coef = Fraction(int(m.group(1) or 1), int(m.group(2) or 1))
            d = int(m.group(3) or 1)
            if d_seen is None:
                d_seen = d
            elif d_seen != d:
                raise ParseError(f"mixed radicals in {s!r}")
            im_part += sign * coef
            continue
        raise ParseError(f"cannot parse term {term!r}")
    if im_part == 0:
        d_seen = None
    if d_seen is not None and disc is not None and d_seen != disc.D:
        raise ParseError(f"literal lives in D={d_seen}, expected D={disc.D}")
    return re_part, im_part, d_seen


def parse_quad(s: str, disc: Discriminant | None = None) -> QuadRat:
    """Parse a field element; the ring is inferred from the radical if absent."""
    s = "".join(s.split())
    if not s:
        raise ParseError("empty literal")
    den = 1
    if s.startswith("("):
        depth = 0
        close = -1
        for i, ch in enumerate(s):
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
                if depth == 0:
                    close = i
                    break
        if close < 0:
            raise ParseError(f"unbalanced parentheses in {s!r}")
        rest = s[close + 1 :]
        if rest:
            m = re.match(r"^/(\d+)$", rest)
            if not m:
                raise ParseError(f"cannot parse {s!r}")
            den = int(m.group(1))
        s = s[1:close]
    re_part, im_part, d_seen = _parse_sum(s, disc)
    re_part /= den
    im_part /= den
    if d_seen is None:
        d = disc if disc is not None else get_disc(1)
    else:
        d = disc if disc is not None else get_disc(d_seen)
    # value = re + im * i*sqrt(D); convert onto the (1, alpha) basis
    if d.half:
        x = re_part - im_part
        y = 2 * im_part
    else:
        x = re_part
        y = im_part
    num = x.denominator * y.denominator
    return QuadRat(
        x.numerator * (num // x.denominator),
        y.numerator * (num // y.denominator),
        num,
        d,
    )


def _fmt_fraction(f: Fraction) -> str:
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def _radical_parts(q) -> tuple[int, int, int, int]:
    """(P, Q, S, D) with value = (P + Q i sqrt(D)) / S in lowest terms."""
    if isinstance(q, QuadInt):
        q = q.to_quadrat()
    if isinstance(q, (int, Fraction)):
        f = Fraction(q)
        return f.numerator, 0, f.denominator, 1
    r = q.re()
    i = q.im_sqrtd()
    s = r.denominator * i.denominator // math.gcd(r.denominator, i.denominator)
    return int(r * s), int(i * s), s, q.disc.D


def format_quad(q) -> str:
    """Radical-notation string, e.g. ``(-3+i*sqrt(7))/2`` or ``-1-2*i``."""
    p, qq, s, d = _radical_parts(q)
    if qq == 0:
        return _fmt_fraction(Fraction(p, s))
    terms = []
    if p != 0:
        terms.append(str(p))
    unit = "i" if d == 1 else f"i*sqrt({d})"
    if abs(qq) == 1:
        imag = unit
    else:
        imag = f"{abs(qq)}*{unit}"
    if qq < 0:
        imag = "-" + imag
    elif terms:
        imag = "+" + imag
    terms.append(imag)
    body = "".join(terms)
    return body if s == 1 else f"({body})/{s}"


def _is_atomic(q) -> bool:
    """True when the literal is a single signed term (no parens needed)."""
    p, qq, s, _ = _radical_parts(q)
    if s != 1:
        return False
    return p == 0 or qq == 0


def _abs_value(q):
    p, qq, s, _ = _radical_parts(q)
    if qq == 0:
        return abs(Fraction(p, s))
    return None


VARIABLE = "λ"


def format_poly(p: UniPoly, var: str = VARIABLE) -> str:
    """Human-readable polynomial with coefficients in radical notation."""
    if p.is_zero:
        return "0"
    parts = []
    for k in range(p.degree, -1, -1):
        c = p.coeffs[k]
        if c == 0:
            continue
        if k == 0:
            mon = ""
        elif k == 1:
            mon = var
        else:
            mon = f"{var}^{k}"
        if _is_atomic(c):
            s = format_quad(c)
            neg = s.startswith("-")
            if neg:
                s = s[1:]
            if mon:
                body = mon if s == "1" else f"{s}*{mon}"
            else:
                body = s
            parts.append(("-" if neg else "+", body))
        else:
            s = f"({format_quad(c)})"
            parts.append(("+", f"{s}*{mon}" if mon else s))
    first_sign, first_body = parts[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


def parse_poly(s: str, disc: Discriminant | None = None) -> UniPoly:
    """Parse a polynomial in the multiplier variable (``λ`` or ``l``)."""
    s = "".join(s.split()).replace(VARIABLE, "l")
    if not s:
        raise ParseError("empty polynomial")
    terms = []
    depth = 0
    cur = ""
    for i, ch in enumerate(s):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch in "+-" and depth == 0 and i > 0 and s[i - 1] not in "+-*/^(":
            terms.append(cur)
            cur = ch
        else:
            cur += ch
    terms.append(cur)

    coeffs: dict[int, QuadRat] = {}
    maxdeg = 0
    for term in terms:
        if not term:
            continue
        sign = 1
        while term and term[0] in "+-":
            if term[0] == "-":
                sign = -sign
            term = term[1:]
        m = re.match(r"^(?:(.+)\*)?l(?:\^(\d+))?$", term)
        if m:
            coef_s = m.group(1)
            k = int(m.group(2) or 1)
            if coef_s is None:
                coef = parse_quad("1", disc)
            else:
                if coef_s.startswith("(") and coef_s.endswith(")"):
                    coef_s = coef_s[1:-1]
                coef = parse_quad(coef_s, disc)
        else:
            k = 0
            cs = term
            if cs.startswith("(") and cs.endswith(")"):
                cs = cs[1:-1]
            coef = parse_quad(cs, disc)
        coef = coef * sign
        if k in coeffs:
            coeffs[k] = coeffs[k] + coef
        else:
            coeffs[k] = coef
        maxdeg = max(maxdeg, k)
    out = [0] * (maxdeg + 1)
    for k, c in coeffs.items():
        out[k] = c
    return UniPoly(out)


def format_factorization(f) -> str:
    parts = []
    for poly, mult in f.factors:
        body = f"({format_poly(poly)})"
        if mult > 1:
            body += f"^{mult}"
        parts.append(body)
    return " * ".join(parts) if parts else "1"
