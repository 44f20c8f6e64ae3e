"""Classification of quadratic rational maps with period <= 5 multipliers in R_D.

Three branches cover all conjugacy classes:

* maps with three simple, non-superattracting fixed points: their
  fixed-point multipliers give a unit-fraction triple 1/mu1 + 1/mu2 +
  1/mu3 = 1 in R_D (mu_j = 1 - lambda_j), which is enumerated exactly;
* maps with a superattracting fixed point (the z^2 + c family);
* maps with a multiple fixed point (z + 1/z and the g_{a,1} family).

Every candidate is pushed through multiplier polynomials and exact
factorization until one fails to split over R_D or survives all periods;
survivors must be the power map, the Chebyshev map, or one of the eight
special torus-quotient rows.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import tables
from .dynamics import (
    QuadMapSpec,
    fixed_point_identity_holds,
    map_from_fixed_multipliers,
    multiplier_poly,
)
from .errors import ClassificationError
from .factorize import Factorization, factor_over_RD, factor_sort_key
from .notation import format_quad, get_disc, parse_quad
from .polyring import UniPoly
from .quadfield import Discriminant, QuadInt, QuadRat, enum_norm_divides, inverse_halfplane_points

POWER_TRIPLE = (-2, -2, -2)


@dataclass(frozen=True)
class LattesRow:
    lattice: str
    n: int
    a: QuadRat
    b: QuadRat
    multipliers: tuple[QuadRat, QuadRat, QuadRat]
    D: int

    def label(self) -> str:
        return f"{self.lattice}, n={self.n}, a={format_quad(self.a)}, b={format_quad(self.b)}"


def _load_lattes_rows() -> tuple[LattesRow, ...]:
    out = []
    for lattice, n, a_s, b_s, mults, d in tables.LATTES_ROWS:
        disc = get_disc(d)
        out.append(
            LattesRow(
                lattice=lattice,
                n=n,
                a=parse_quad(a_s, disc),
                b=parse_quad(b_s, disc),
                multipliers=tuple(parse_quad(s, disc) for s in mults),
                D=d,
            )
        )
    return tuple(out)


LATTES_ROWS = _load_lattes_rows()


def _value_key(v: QuadRat):
    return (v.re(), v.im_sqrtd())


def _multiset_key(vals):
    return tuple(sorted((_value_key(v) for v in vals)))


def lattes_recognize(lambda_triple) -> LattesRow | None:
    """Match an unordered fixed-multiplier triple against the special rows."""
    vals = [v.to_quadrat() if isinstance(v, QuadInt) else v for v in lambda_triple]
    for row in LATTES_ROWS:
        if len(vals) != 3:
            break
        if all(v.is_rational for v in vals) != all(m.is_rational for m in row.multipliers):
            continue
        discs = {v.disc.D for v in vals if not v.is_rational}
        if discs and discs != {row.D}:
            continue
        if _multiset_key(vals) == _multiset_key(row.multipliers):
            return row
    return None


@dataclass(frozen=True)
class TripleCandidate:
    """Unordered unit-fraction triple, canonically ordered."""

    mu: tuple[QuadInt, QuadInt, QuadInt]
    disc: Discriminant

    @property
    def lambdas(self) -> tuple[QuadRat, QuadRat, QuadRat]:
        return tuple((1 - m.to_quadrat()) for m in self.mu)

    def label(self) -> str:
        return "(" + ", ".join(format_quad(m) for m in self.mu) + ")"

    def lambda_label(self) -> str:
        return "(" + ", ".join(format_quad(v) for v in self.lambdas) + ")"


def _inv_sort_key(m: QuadInt):
    n = m.norm()
    return (-Fraction(m.re(), 1) / n, -m.im_sqrtd() / n)


def enumerate_unit_fraction_triples(disc: Discriminant) -> list[TripleCandidate]:
    """All unordered triples in R_D \\ {0, 1} with 1/mu1 + 1/mu2 + 1/mu3 = 1.

    With Re(1/mu) sorted decreasingly, the leading element satisfies
    Re(1/mu) >= 1/3 and the middle one Re(1/mu) >= (1 - Re(1/mu_lead))/2,
    so both range over small inverted-half-plane disks; the third element
    is solved from the identity and kept when it lands in the ring.
    """
    one = QuadRat(1, 0, 1, disc)
    third = Fraction(1, 3)
    lead_pts = [z for z in inverse_halfplane_points(disc, third) if z.to_quadrat() != 1]
    seen = {}
    for m3 in lead_pts:
        inv3 = 1 / m3.to_quadrat()
        t2 = max(Fraction(1, 4), (1 - inv3.re()) / 2)
        for m2 in inverse_halfplane_points(disc, t2):
            q2 = m2.to_quadrat()
            if q2 == 1:
                continue
            s = 1 - 1 / q2 - inv3
            if not s:
                continue
            q1 = 1 / s
            if not q1.is_integral or q1 == 1:
                continue
            m1 = q1.to_quadint()
            mus = sorted((m1, m2, m3), key=_inv_sort_key)
            key = tuple((m.x, m.y) for m in mus)
            if key not in seen:
                seen[key] = TripleCandidate(tuple(mus), disc)
    out = sorted(seen.values(), key=lambda t: tuple(_inv_sort_key(m) for m in t.mu))
    for t in out:
        total = sum(1 / m.to_quadrat() for m in t.mu)
        if total != 1:
            raise AssertionError(f"enumerated triple violates the identity: {t}")
    return out


@dataclass(frozen=True)
class ClassificationVerdict:
    kind: str  # "power" | "chebyshev" | "lattes" | "excluded"
    lattes_row: LattesRow | None = None
    period: int | None = None
    witness: Factorization | None = None

    def label(self) -> str:
        if self.kind == "power":
            return "power map"
        if self.kind == "chebyshev":
            return "Chebyshev map"
        if self.kind == "lattes":
            return f"Lattes map ({self.lattes_row.label()})"
        return f"excluded at period {self.period}: {self.witness}"


def _first_split_failure(spec: QuadMapSpec, disc: Discriminant, periods) -> ClassificationVerdict | None:
    """Excluded verdict at the first period whose polynomial fails to split."""
    for n in periods:
        fact = factor_over_RD(multiplier_poly(spec, n).poly, disc)
        if not fact.splits:
            return ClassificationVerdict("excluded", period=n, witness=fact)
    return None


def classify_nondegenerate(disc: Discriminant, n_max: int = 5):
    """Per-triple verdicts for maps with simple non-superattracting fixed points."""
    if n_max < 3:
        raise ValueError("n_max must be at least 3")
    out = []
    for triple in enumerate_unit_fraction_triples(disc):
        lams = triple.lambdas
        spec = map_from_fixed_multipliers(*lams)
        verdict = _first_split_failure(spec, disc, range(2, n_max + 1))
        if verdict is None:
            if _multiset_key(lams) == _multiset_key(
                [QuadRat.from_fraction(v, disc) for v in POWER_TRIPLE]
            ):
                verdict = ClassificationVerdict("power")
            else:
                row = lattes_recognize(lams)
                if row is None:
                    raise ClassificationError(
                        f"survivor {triple.lambda_label()} (D={disc.D}) matches no known map"
                    )
                verdict = ClassificationVerdict("lattes", lattes_row=row)
        out.append((triple, verdict))
    return out


def superattracting_candidates(disc: Discriminant) -> list[QuadRat]:
    """Parameters c with the two discriminant constraints solvable in R_D.

    Besides c = 0, a candidate needs -(4c - 1) = a^2 and -(4c + 7) = b^2
    with a, b in R_D; then (a - b)(a + b) = 8 forces a = (e^2 + 8)/(2 e)
    for a divisor e of 8, so N(e) divides 64.
    """
    cands = {QuadRat.from_fraction(0, disc)}
    for e in enum_norm_divides(disc, 64):
        eq = e.to_quadrat()
        a = (eq * eq + 8) / (2 * eq)
        if a.is_integral:
            c = (1 - a * a) / 4
            cands.add(c)
    return sorted(cands, key=_value_key)


def classify_superattracting(disc: Discriminant):
    """Verdicts for the z^2 + c family with multipliers (period <= 4) in R_D."""
    out = []
    for c in superattracting_candidates(disc):
        spec = QuadMapSpec.fc(c)
        if c == 0 or c == -2:
            verdict = _first_split_failure(spec, disc, (2, 3, 4))
            if verdict is not None:
                raise ClassificationError(
                    f"expected survivor c={format_quad(c)} was excluded (D={disc.D})"
                )
            verdict = ClassificationVerdict("power" if c == 0 else "chebyshev")
        else:
            fact = factor_over_RD(multiplier_poly(spec, 4).poly, disc)
            if fact.splits:
                raise ClassificationError(
                    f"candidate c={format_quad(c)} survived period 4 (D={disc.D})"
                )
            verdict = ClassificationVerdict("excluded", period=4, witness=fact)
        out.append((c, verdict))
    return out


def multiple_fixed_candidates(disc: Discriminant) -> list[QuadRat]:
    """Simple-fixed-point multipliers a compatible with a multiple fixed point.

    The discriminant of the period-3 polynomial of g_{a,1} is
    2^4 (a + 2)(a - 1)^3; requiring it to be a square in R_D gives
    (a - 1)(a + 2) = b^2, hence (2a - 2b + 1)(2a + 2b + 1) = 9 and
    a = (e^2 - 2e + 9)/(4e) with N(e) dividing 81.
    """
    cands = set()
    for e in enum_norm_divides(disc, 81):
        eq = e.to_quadrat()
        a = (eq * eq - 2 * eq + 9) / (4 * eq)
        if a.is_integral and a != 1:
            cands.add(a)
    return sorted(cands, key=_value_key)


def classify_multiple_fixed(disc: Discriminant):
    """Verdicts for maps with a multiple fixed point; every entry is excluded.

    The entry with parameter None is the unique-fixed-point map z + 1/z,
    excluded at period 5; the others are g_{a,1} members excluded at
    period 4.
    """
    out = []
    fact_h = factor_over_RD(multiplier_poly(QuadMapSpec.h(), 5).poly, disc)
    if fact_h.splits:
        raise ClassificationError(f"z + 1/z survived period 5 (D={disc.D})")
    out.append((None, ClassificationVerdict("excluded", period=5, witness=fact_h)))
    for a in multiple_fixed_candidates(disc):
        fact = factor_over_RD(multiplier_poly(QuadMapSpec.gab(a, 1), 4).poly, disc)
        if fact.splits:
            raise ClassificationError(
                f"candidate a={format_quad(a)} survived period 4 (D={disc.D})"
            )
        out.append((a, ClassificationVerdict("excluded", period=4, witness=fact)))
    return out


@dataclass(frozen=True)
class ClassificationReport:
    D: int
    nondegenerate: tuple
    superattracting: tuple
    multiple_fixed: tuple

    @property
    def survivors(self):
        out = []
        for triple, verdict in self.nondegenerate:
            if verdict.kind != "excluded":
                out.append(("nondegenerate", triple.lambda_label(), verdict))
        for c, verdict in self.superattracting:
            if verdict.kind != "excluded":
                out.append(("superattracting", f"c={format_quad(c)}", verdict))
        for a, verdict in self.multiple_fixed:
            if verdict.kind != "excluded":
                label = "h" if a is None else f"a={format_quad(a)}"
                out.append(("multiple-fixed", label, verdict))
        return out


def expected_lattes_rows(disc: Discriminant) -> tuple[LattesRow, ...]:
    return tuple(row for row in LATTES_ROWS if row.D == disc.D)


def full_classification(disc: Discriminant, n_max: int = 5) -> ClassificationReport:
    """All three branches, with the survivor set checked against the theorem."""
    report = ClassificationReport(
        D=disc.D,
        nondegenerate=tuple(classify_nondegenerate(disc, n_max)),
        superattracting=tuple(classify_superattracting(disc)),
        multiple_fixed=tuple(classify_multiple_fixed(disc)),
    )
    got_lattes = sorted(
        (v.lattes_row.label() for _, _, v in report.survivors if v.kind == "lattes")
    )
    want_lattes = sorted(row.label() for row in expected_lattes_rows(disc))
    kinds = sorted(v.kind for _, _, v in report.survivors if v.kind != "lattes")
    if got_lattes != want_lattes or kinds != ["chebyshev", "power", "power"]:
        raise ClassificationError(
            f"survivor set for D={disc.D} does not match the classification"
        )
    return report


# ---------------------------------------------------------------------------
# table verification

TABLE_IDS = (
    "m3-triples",
    "m4-triples",
    "m5-triples",
    "m4-super",
    "m4-multiple",
    "lattes-rows",
)


def _expected_factorization(disc, factors) -> list[tuple[UniPoly, int]]:
    out = []
    for coeff_strings, mult in factors:
        poly = UniPoly([parse_quad(s, disc) for s in coeff_strings])
        out.append((poly, mult))
    out.sort(key=lambda fm: factor_sort_key(fm[0]))
    return out


def _diff_factorization(table, idx, label, got: Factorization, expected):
    got_list = [(p, m) for p, m in got.factors]
    if got_list == expected:
        return []
    exp_str = " * ".join(
        f"({p})" + (f"^{m}" if m > 1 else "") for p, m in expected
    )
    return [
        {
            "table": table,
            "row": idx,
            "label": label,
            "expected": exp_str,
            "computed": str(got),
        }
    ]


def verify_tables(table_ids=None) -> list[dict]:
    """Recompute every stored table row; returns a list of mismatches."""
    ids = tuple(table_ids) if table_ids else TABLE_IDS
    unknown = set(ids) - set(TABLE_IDS)
    if unknown:
        raise ValueError(f"unknown table ids: {sorted(unknown)}")
    diffs = []
    triple_tables = {
        "m3-triples": (tables.M3_ROWS, 3),
        "m4-triples": (tables.M4_ROWS, 4),
        "m5-triples": (tables.M5_ROWS, 5),
    }
    for tid in ids:
        if tid in triple_tables:
            rows, period = triple_tables[tid]
            for idx, (d, triple, factors) in enumerate(rows):
                disc = get_disc(d)
                lams = [parse_quad(s, disc) for s in triple]
                label = f"D={d}, lambda={triple}"
                spec = map_from_fixed_multipliers(*lams)
                fact = factor_over_RD(multiplier_poly(spec, period).poly, disc)
                expected = _expected_factorization(disc, factors)
                diffs += _diff_factorization(tid, idx, label, fact, expected)
                if fact.splits:
                    diffs.append(
                        {"table": tid, "row": idx, "label": label,
                         "expected": "non-split", "computed": "splits"}
                    )
        elif tid == "m4-super":
            for idx, (d, c_str, factors) in enumerate(tables.M4_SUPER_ROWS):
                disc = get_disc(d)
                c = parse_quad(c_str, disc)
                label = f"D={d}, c={c_str}"
                fact = factor_over_RD(
                    multiplier_poly(QuadMapSpec.fc(c), 4).poly, disc
                )
                expected = _expected_factorization(disc, factors)
                diffs += _diff_factorization(tid, idx, label, fact, expected)
        elif tid == "m4-multiple":
            for idx, (d, a_str, factors) in enumerate(tables.M4_MULTIPLE_ROWS):
                disc = get_disc(d)
                a = parse_quad(a_str, disc)
                label = f"D={d}, a={a_str}"
                fact = factor_over_RD(
                    multiplier_poly(QuadMapSpec.gab(a, 1), 4).poly, disc
                )
                expected = _expected_factorization(disc, factors)
                diffs += _diff_factorization(tid, idx, label, fact, expected)
        elif tid == "lattes-rows":
            for idx, row in enumerate(LATTES_ROWS):
                label = row.label()
                lams = row.multipliers
                ok_ring = all(v.is_integral for v in lams)
                ok_norm = row.a.norm() == 2
                try:
                    ok_identity = fixed_point_identity_holds(*lams)
                except ZeroDivisionError:
                    ok_identity = False
                s1 = sum(lams[1:], lams[0])
                s3 = lams[0] * lams[1] * lams[2]
                ok_trace = s3 == s1 - 2
                ok_match = lattes_recognize(lams) == row
                if not (ok_ring and ok_norm and ok_identity and ok_trace and ok_match):
                    diffs.append(
                        {"table": tid, "row": idx, "label": label,
                         "expected": "consistent row",
                         "computed": f"ring={ok_ring} norm={ok_norm} "
                                     f"identity={ok_identity} trace={ok_trace} "
                                     f"match={ok_match}"}
                    )
    return diffs
