"""Command-line frontend.

Subcommands: multpoly, dynatomic, factor, triples, classify, verify-tables,
figure.  Exit codes: 0 success, 1 verification diff, 2 parse/validation
error, 3 degenerate map, 4 I/O error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction

from .classify import (
    TABLE_IDS,
    classify_multiple_fixed,
    classify_nondegenerate,
    classify_superattracting,
    enumerate_unit_fraction_triples,
    full_classification,
    verify_tables,
)
from .dynamics import (
    QuadMapSpec,
    SigmaPair,
    closed_form_multiplier_poly,
    dynatomic,
    lift_of,
    multiplier_poly,
)
from .errors import (
    ClassificationError,
    DegenerateMapError,
    InconsistentTripleError,
    ParseError,
)
from .factorize import factor_over_RD
from .notation import format_poly, format_quad, get_disc, parse_poly, parse_quad
from .quadfield import Discriminant

SCHEMA_VERSION = 1


def _parse_map_spec(text: str):
    """Returns ("map", QuadMapSpec) or ("sigma", SigmaPair)."""
    s = "".join(text.split())
    if s == "h":
        return "map", QuadMapSpec.h()
    for name in ("gab", "fc", "sigma"):
        if s.startswith(name + "(") and s.endswith(")"):
            inner = s[len(name) + 1 : -1]
            args = _split_args(inner)
            if name == "fc":
                if len(args) != 1:
                    raise ParseError("fc takes one parameter")
                return "map", QuadMapSpec.fc(parse_quad(args[0]))
            if len(args) != 2:
                raise ParseError(f"{name} takes two parameters")
            u, v = (parse_quad(a) for a in args)
            if name == "gab":
                return "map", QuadMapSpec.gab(u, v)
            return "sigma", SigmaPair(u, v)
    raise ParseError(f"cannot parse map spec {text!r}")


def _split_args(s: str) -> list[str]:
    args = []
    depth = 0
    cur = ""
    for ch in s:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "," and depth == 0:
            args.append(cur)
            cur = ""
        else:
            cur += ch
    args.append(cur)
    return [a for a in args if a]


def _poly_payload(poly) -> dict:
    return {
        "text": format_poly(poly),
        "degree": poly.degree,
        "coefficients": [format_quad(c) for c in poly.coeffs],
    }


def _factorization_payload(fact) -> dict:
    return {
        "splits": fact.splits,
        "factors": [
            {"poly": format_poly(p), "multiplicity": m} for p, m in fact.factors
        ],
    }


def _form_text(form) -> str:
    terms = []
    m = form.degree
    for i in range(m, -1, -1):
        c = form.coeffs[i]
        if c == 0:
            continue
        mon = []
        if i:
            mon.append("x" if i == 1 else f"x^{i}")
        if m - i:
            mon.append("y" if m - i == 1 else f"y^{m - i}")
        mon_s = "*".join(mon) if mon else "1"
        cs = format_quad(c)
        if cs == "1" and mon:
            body, sign = mon_s, "+"
        elif cs == "-1" and mon:
            body, sign = mon_s, "-"
        else:
            neg = cs.startswith("-") and "+" not in cs[1:] and "-" not in cs[1:]
            if neg:
                cs = cs[1:]
                sign = "-"
            else:
                sign = "+"
                if ("+" in cs[1:]) or ("-" in cs[1:]):
                    cs = f"({cs})"
            body = f"{cs}*{mon_s}" if mon else cs
        terms.append((sign, body))
    if not terms:
        return "0"
    sign, body = terms[0]
    out = ("-" if sign == "-" else "") + body
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


def _verdict_payload(verdict) -> dict:
    out = {"kind": verdict.kind}
    if verdict.kind == "lattes":
        row = verdict.lattes_row
        out["lattice"] = row.lattice
        out["quotient_order"] = row.n
        out["a"] = format_quad(row.a)
        out["b"] = format_quad(row.b)
    if verdict.kind == "excluded":
        out["period"] = verdict.period
        out["witness"] = _factorization_payload(verdict.witness)
    return out


def _emit(args, report: dict, text_lines: list[str]) -> None:
    if args.format == "json":
        payload = json.dumps(report, indent=2) + "\n"
    elif args.format == "csv":
        payload = _to_csv(report)
    else:
        payload = "\n".join(text_lines) + "\n"
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(payload)
    else:
        sys.stdout.write(payload)


def _to_csv(report: dict) -> str:
    rows = report.get("csv", [])
    out = []
    for row in rows:
        out.append(",".join(str(v) for v in row))
    return "\n".join(out) + "\n"


def _report(args, command: str, params: dict, results, started: float) -> dict:
    out = {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "params": params,
        "results": results,
    }
    if getattr(args, "timing", False):
        out["timing_ms"] = round(1000 * (time.monotonic() - started), 3)
    return out


def _cmd_multpoly(args) -> int:
    started = time.monotonic()
    kind, spec = _parse_map_spec(args.map)
    if kind == "sigma":
        if args.n > 4:
            raise ParseError("sigma specs support n <= 4 (no closed form beyond)")
        poly = closed_form_multiplier_poly(spec, args.n)
        used = "closed-form"
    else:
        mp = multiplier_poly(spec, args.n)
        poly = mp.poly
        used = mp.used_linear_form
    payload = _poly_payload(poly)
    payload["used_linear_form"] = used
    report = _report(
        args, "multpoly", {"map": args.map, "n": args.n}, [payload], started
    )
    report["csv"] = [("degree", "coefficient")] + [
        (i, c) for i, c in enumerate(payload["coefficients"])
    ]
    return _finish(args, report, [f"M_{args.n} = {payload['text']}"])


def _cmd_dynatomic(args) -> int:
    started = time.monotonic()
    kind, spec = _parse_map_spec(args.map)
    if kind != "map":
        raise ParseError("dynatomic needs a concrete map, not a sigma pair")
    form = dynatomic(lift_of(spec), args.n)
    text = _form_text(form)
    payload = {
        "degree": form.degree,
        "text": text,
        "coefficients": [format_quad(c) for c in form.coeffs],
    }
    report = _report(
        args, "dynatomic", {"map": args.map, "n": args.n}, [payload], started
    )
    report["csv"] = [("x_power", "coefficient")] + [
        (i, c) for i, c in enumerate(payload["coefficients"])
    ]
    return _finish(args, report, [f"Phi_{args.n} = {text}"])


def _cmd_factor(args) -> int:
    started = time.monotonic()
    disc = _parse_disc(args.D)
    poly = parse_poly(args.poly, disc)
    fact = factor_over_RD(poly, disc)
    payload = _factorization_payload(fact)
    report = _report(
        args, "factor", {"poly": args.poly, "D": disc.D}, [payload], started
    )
    report["csv"] = [("factor", "multiplicity")] + [
        (f["poly"], f["multiplicity"]) for f in payload["factors"]
    ]
    lines = [f"input: {format_poly(poly)}", f"factorization: {fact}"]
    lines.append("splits over R_D" if fact.splits else "does not split over R_D")
    return _finish(args, report, lines)


def _cmd_triples(args) -> int:
    started = time.monotonic()
    disc = _parse_disc(args.D)
    triples = enumerate_unit_fraction_triples(disc)
    results = [
        {
            "mu": [format_quad(m) for m in t.mu],
            "lambda": [format_quad(v) for v in t.lambdas],
        }
        for t in triples
    ]
    report = _report(
        args, "triples", {"D": disc.D}, results, started
    )
    report["count"] = len(triples)
    report["csv"] = [("index", "mu", "lambda")] + [
        (i, " ".join(r["mu"]), " ".join(r["lambda"]))
        for i, r in enumerate(results)
    ]
    lines = [f"unit-fraction triples in R_{disc.D}: {len(triples)}"]
    for i, t in enumerate(triples):
        lines.append(f"  [{i}] mu = {t.label()}   lambda = {t.lambda_label()}")
    return _finish(args, report, lines)


def _cmd_classify(args) -> int:
    started = time.monotonic()
    disc = _parse_disc(args.D)
    report_obj = full_classification(disc, n_max=args.max_n)
    branches = []
    lines = [f"classification over R_{disc.D} (periods up to {args.max_n}):"]
    for triple, verdict in report_obj.nondegenerate:
        branches.append(
            {
                "branch": "nondegenerate",
                "lambda": [format_quad(v) for v in triple.lambdas],
                "verdict": _verdict_payload(verdict),
            }
        )
        lines.append(f"  {triple.lambda_label()}: {verdict.label()}")
    for c, verdict in report_obj.superattracting:
        branches.append(
            {
                "branch": "superattracting",
                "c": format_quad(c),
                "verdict": _verdict_payload(verdict),
            }
        )
        lines.append(f"  c = {format_quad(c)}: {verdict.label()}")
    for a, verdict in report_obj.multiple_fixed:
        label = "z+1/z" if a is None else f"a = {format_quad(a)}"
        branches.append(
            {
                "branch": "multiple-fixed",
                "a": None if a is None else format_quad(a),
                "verdict": _verdict_payload(verdict),
            }
        )
        lines.append(f"  {label}: {verdict.label()}")
    survivors = [
        {"branch": b, "label": lab, "verdict": _verdict_payload(v)}
        for b, lab, v in report_obj.survivors
    ]
    lines.append("survivors:")
    for b, lab, v in report_obj.survivors:
        lines.append(f"  [{b}] {lab}: {v.label()}")
    report = _report(
        args, "classify", {"D": disc.D, "max_n": args.max_n}, branches, started
    )
    report["survivors"] = survivors
    report["csv"] = [("branch", "label", "verdict", "period")] + [
        (
            e["branch"],
            e.get("lambda") or e.get("c") or e.get("a") or "h",
            e["verdict"]["kind"],
            e["verdict"].get("period", ""),
        )
        for e in branches
    ]
    return _finish(args, report, lines)


def _cmd_verify_tables(args) -> int:
    started = time.monotonic()
    ids = [args.table] if args.table else None
    diffs = verify_tables(ids)
    report = _report(
        args,
        "verify-tables",
        {"table": args.table or "all"},
        diffs,
        started,
    )
    report["csv"] = [("table", "row", "expected", "computed")] + [
        (d["table"], d["row"], d["expected"], d["computed"]) for d in diffs
    ]
    checked = ids or list(TABLE_IDS)
    if diffs:
        lines = [f"{len(diffs)} mismatched rows:"]
        for d in diffs:
            lines.append(
                f"  {d['table']} row {d['row']} ({d['label']}): "
                f"expected {d['expected']}, computed {d['computed']}"
            )
        _emit(args, report, lines)
        return 1
    lines = [f"verified tables: {', '.join(checked)}", "all rows match"]
    _emit(args, report, lines)
    return 0


def _cmd_figure(args) -> int:
    from .svgfig import render_figure

    disc = _parse_disc(args.D)
    svg = render_figure(disc)
    try:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(svg)
    except OSError as exc:
        sys.stderr.write(f"cannot write {args.out}: {exc}\n")
        return 4
    sys.stdout.write(f"wrote {args.out}\n")
    return 0


def _finish(args, report, lines) -> int:
    _emit(args, report, lines)
    return 0


def _parse_disc(d: int) -> Discriminant:
    try:
        return get_disc(d)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="quadmult",
        description="Exact multiplier spectra of quadratic rational maps "
        "over imaginary quadratic integer rings.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, out=True):
        sp.add_argument("--format", choices=("text", "json", "csv"), default="text")
        sp.add_argument("--timing", action="store_true", help="include timing in JSON")
        if out:
            sp.add_argument("--out", help="write output to a file")

    sp = sub.add_parser("multpoly", help="n-th multiplier polynomial of a map")
    sp.add_argument("--map", required=True, help='e.g. "fc(-2)", "gab(2,3)", "h", "sigma(1,2)"')
    sp.add_argument("--n", type=int, required=True)
    common(sp)
    sp.set_defaults(fn=_cmd_multpoly)

    sp = sub.add_parser("dynatomic", help="n-th dynatomic form of a map")
    sp.add_argument("--map", required=True)
    sp.add_argument("--n", type=int, required=True)
    common(sp)
    sp.set_defaults(fn=_cmd_dynatomic)

    sp = sub.add_parser("factor", help="factor a monic polynomial over R_D")
    sp.add_argument("--poly", required=True, help='e.g. "l^2 + 18*l + 89"')
    sp.add_argument("--D", type=int, required=True)
    common(sp)
    sp.set_defaults(fn=_cmd_factor)

    sp = sub.add_parser("triples", help="unit-fraction triples in R_D")
    sp.add_argument("--D", type=int, required=True)
    common(sp)
    sp.set_defaults(fn=_cmd_triples)

    sp = sub.add_parser("classify", help="full classification over R_D")
    sp.add_argument("--D", type=int, required=True)
    sp.add_argument("--max-n", type=int, default=5, dest="max_n")
    common(sp)
    sp.set_defaults(fn=_cmd_classify)

    sp = sub.add_parser("verify-tables", help="recompute the stored tables")
    sp.add_argument("--table", choices=TABLE_IDS)
    common(sp)
    sp.set_defaults(fn=_cmd_verify_tables)

    sp = sub.add_parser("figure", help="render the lattice/inversion figure")
    sp.add_argument("--D", type=int, required=True)
    sp.add_argument("--out", required=True)
    sp.add_argument("--format", choices=("text",), default="text")
    sp.set_defaults(fn=_cmd_figure)

    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except ParseError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except (DegenerateMapError, InconsistentTripleError) as exc:
        sys.stderr.write(f"degenerate map: {exc}\n")
        return 3
    except ClassificationError as exc:
        sys.stderr.write(f"verification failure: {exc}\n")
        return 1
    except ValueError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except OSError as exc:
        sys.stderr.write(f"I/O error: {exc}\n")
        return 4


if __name__ == "__main__":
    sys.exit(main())
