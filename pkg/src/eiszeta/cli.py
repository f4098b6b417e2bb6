"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage or schema error.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path
from typing import List, Optional

from . import enumerator as en
from . import formatting as fmt
from . import group as gr
from . import theta as th
from . import verify as vf
from . import zeta as zt
from .errors import EisZetaError, InvariantViolation, SchemaError, UnsupportedDegree
from .exact import as_rational, format_rational

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _emit(text: str):
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _emit_json(doc):
    _emit(json.dumps(doc, indent=2, sort_keys=True))


def _rational_arg(s: str) -> Fraction:
    try:
        return as_rational(s)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not an exact rational: {s!r}")


def _positive(s: str) -> int:
    v = int(s)
    if v < 1:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def _source(args) -> tuple:
    """(ell or None, enumerator) from --ell / --input."""
    if (args.ell is None) == (getattr(args, "input", None) is None):
        raise UsageError("give exactly one of --ell or --input")
    if args.ell is not None:
        return args.ell, en.normalized_eisenstein(args.ell)
    return None, en.read_enumerator(args.input)


# -- subcommands -------------------------------------------------------------

def cmd_eisenstein(args) -> int:
    if args.method == "closed":
        raw = en.eisenstein_closed_form(args.ell)
    else:
        if args.ell < 1:
            raise UsageError("--ell must be positive")
        raw = gr.reynolds_power(gr.h1_group(), args.ell)
    f = en.normalize(raw)
    if args.format == "json":
        doc = {"ell": args.ell, "method": args.method}
        doc.update({"zero": True} if f is en.ZERO_POLYNOMIAL else
                   {"zero": False, "enumerator": en.store_enumerator(f)})
        _emit_json(doc)
    elif f is en.ZERO_POLYNOMIAL:
        _emit("ZERO")
    elif args.format == "latex":
        _emit(fmt.bivariate_latex(f.form))
    else:
        _emit(fmt.bivariate_plain(f.form, approx=args.approx))
    return EXIT_OK


def _zeta_for(args, ell, f) -> zt.ZetaPolynomial:
    if args.method in ("closed", "expanded"):
        if ell is None:
            raise UsageError(f"--method {args.method} requires --ell")
        if args.q != 2:
            raise UsageError(f"--method {args.method} is only defined for q = 2")
        return (zt.zeta_closed_form if args.method == "closed" else zt.zeta_expanded_form)(ell)
    fn = zt.zeta_via_series if args.method == "series" else zt.zeta_via_linear_system
    return fn(f, args.q)


def zeta_report(ell: Optional[int], z: zt.ZetaPolynomial) -> dict:
    numeric = zt.rha_check_numeric(z) if z.poly.degree >= 1 else None
    doc = {
        "ell": ell,
        "q": format_rational(z.q),
        "coefficients": z.poly.to_json(),
        "rha": {
            "structural": zt.rha_check_structural(ell) if ell is not None and z.q == 2 else None,
            "numeric_max_deviation": f"{numeric.max_deviation:.3e}" if numeric else "0",
        },
        "interlace_with_next": _interlace_json(zt.interlace_check(ell)) if ell is not None else None,
        "valuations": zt.p_integrality_report(z).to_json(),
    }
    return doc


def _interlace_json(r: zt.InterlaceReport) -> dict:
    return {
        "next": r.ell + 4,
        "arcs_covered": r.arcs_covered,
        "common_angles": [a.to_json() for a in r.common_angles],
        "per_arc_counts": list(r.per_arc_counts),
        "angle_unit": "pi",
    }


def cmd_zeta(args) -> int:
    ell, f = _source(args)
    z = _zeta_for(args, ell, f)
    status = EXIT_OK
    if args.cross_check:
        others = [zt.zeta_via_linear_system(f, args.q).poly, zt.zeta_via_series(f, args.q).poly]
        if ell is not None and args.q == 2:
            others += [zt.zeta_closed_form(ell).poly, zt.zeta_expanded_form(ell).poly]
        if any(o != z.poly for o in others):
            sys.stderr.write("cross-check FAILED: methods disagree\n")
            status = EXIT_FAIL
    if args.format == "json":
        _emit_json(zeta_report(ell, z))
    elif args.format == "latex":
        _emit(fmt.uni_latex(z.poly))
    else:
        _emit(fmt.uni_plain(z.poly, approx=args.approx))
    return status


def cmd_rha(args) -> int:
    ell, f = _source(args)
    z = zt.zeta_via_series(f, args.q)
    structural = zt.rha_check_structural(ell) if ell is not None and args.q == 2 else None
    report = zt.rha_check_numeric(z, args.tolerance, args.dps)
    ok = report.verdict and structural is not False
    if args.format == "json":
        doc = {
            "ell": ell,
            "q": format_rational(z.q),
            "structural": structural,
            "numeric": {
                "tolerance": args.tolerance,
                "dps": args.dps,
                "max_deviation": f"{report.max_deviation:.3e}",
                "verdict": report.verdict,
            },
        }
        if ell is not None:
            doc["exact_angles"] = [a.to_json() for a in zt.exact_roots(ell).angles]
            doc["modulus"] = "2^(-1/2)"
        _emit_json(doc)
    else:
        if structural is not None:
            _emit(f"structural: {structural}")
        _emit(f"numeric: max | |root| - 1/sqrt(q) | = {report.max_deviation:.3e} "
              f"(tolerance {args.tolerance:g}) -> {report.verdict}")
        if ell is not None:
            _emit("angles: " + ", ".join(str(a) for a in zt.exact_roots(ell).angles))
    return EXIT_OK if ok else EXIT_FAIL


def cmd_interlace(args) -> int:
    r = zt.interlace_check(args.ell)
    if args.format == "json":
        _emit_json(dict(ell=args.ell, **_interlace_json(r)))
    else:
        _emit(f"P_{args.ell} vs P_{args.ell + 4}: arcs covered = {r.arcs_covered}")
        _emit("shared zeros: " + (", ".join(str(a) for a in r.common_angles) or "none"))
        for (a, b), c in zip(r.arcs, r.per_arc_counts):
            _emit(f"  ({a}, {b}): {c}")
    return EXIT_OK if r.arcs_covered else EXIT_FAIL


def cmd_pintegral(args) -> int:
    ell, f = _source(args)
    if args.of == "enumerator":
        from .poly import UniPoly
        poly = UniPoly(f.coeffs)
    else:
        poly = zt.zeta_via_series(f, args.q).poly
    report = zt.p_integrality_report(poly)
    ok = True
    doc = {"ell": ell, "of": args.of, "valuations": report.to_json(),
           "violating": sorted(report.violating)}
    if args.prime is not None:
        v = zt.min_valuation(poly, args.prime)
        ok = v >= 0
        doc["prime"] = {"p": args.prime, "min_valuation": v, "p_integral": ok}
    if args.format == "json":
        _emit_json(doc)
    else:
        _emit("valuations: " + (", ".join(f"v_{p} = {v}" for p, v in report.to_json().items()) or "none"))
        if args.prime is not None:
            _emit(f"{args.prime}-integral: {ok}")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_theta(args) -> int:
    ell, f = _source(args)
    s = th.th_map(f, args.order)
    ok = True
    doc = s.to_json()
    if args.prime is not None:
        ok, bad = th.qseries_p_integrality(s, args.prime)
        doc["p_integral"] = {"p": args.prime, "verdict": ok, "first_violation": bad,
                             "scope": f"verified to u^{args.order} only"}
    if args.format == "json":
        _emit_json(doc)
    else:
        from .poly import UniPoly
        _emit(fmt.uni_plain(UniPoly(s.coeffs), var="u", approx=args.approx) + f" + O(u^{args.order + 1})")
        if args.prime is not None:
            _emit(f"{args.prime}-integral to u^{args.order}: {ok}")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_table(args) -> int:
    if args.which == "eisenstein":
        fs = {ell: en.normalized_eisenstein(ell).form for ell in (8, 12)}
        header, note = fmt.EISENSTEIN_HEADER, fmt.TYPO_NOTE
        latex_rows = [(ell, fmt.bivariate_latex(f)) for ell, f in fs.items()]
        plain_rows = [(ell, fmt.bivariate_plain(f)) for ell, f in fs.items()]
    else:
        ps = {ell: zt.eisenstein_zeta(ell).poly for ell in (8, 12)}
        header, note = fmt.ZETA_HEADER, None
        latex_rows = [(ell, fmt.uni_latex(p)) for ell, p in ps.items()]
        plain_rows = [(ell, fmt.uni_plain(p)) for ell, p in ps.items()]
    if args.format == "latex":
        _emit(fmt.latex_table(header, latex_rows, note))
    elif args.format == "json":
        _emit_json({"which": args.which, "rows": [{"ell": e, "plain": b} for e, b in plain_rows],
                    "note": note})
    else:
        _emit(fmt.plain_table("P(T)" if args.which == "zeta" else "normalized phi_l(x0, x1)",
                              plain_rows, note))
    return EXIT_OK


def cmd_verify(args) -> int:
    report = vf.run_verification(args.max_ell, args.max_prime, args.theta_order,
                                 args.jobs, args.corpus)
    text = vf.dump_report(report)
    if args.report:
        Path(args.report).write_text(text, encoding="utf-8")
    if args.format == "json":
        sys.stdout.write(text)
    else:
        for e in report["entries"]:
            if e["status"] != vf.PASS or args.verbose:
                _emit(f"{e['status']:<18} {e['check']} {json.dumps(e['params'], sort_keys=True)}")
        s = report["summary"]
        _emit(f"overall: {'PASS' if report['overall'] else 'FAIL'} "
              f"({s['PASS']} pass, {s['FAIL']} fail, {s['EXPECTED-EXCLUSION']} expected exclusion, "
              f"{s['VACUOUS']} vacuous)")
    return EXIT_OK if report["overall"] else EXIT_FAIL


# -- parser ------------------------------------------------------------------

def _add_source(p):
    p.add_argument("--ell", type=int, help="weight l of the normalized Eisenstein polynomial")
    p.add_argument("--input", help="enumerator JSON file")
    p.add_argument("--q", type=_rational_arg, default=Fraction(2))


def _add_format(p, choices=("plain", "json", "latex")):
    p.add_argument("--format", choices=choices, default="plain")
    p.add_argument("--approx", action="store_true", help="render coefficients as decimals")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="eiszeta",
                                     description="Eisenstein polynomials of H1 and their zeta polynomials")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eisenstein", help="normalized Eisenstein polynomial")
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--method", choices=("average", "closed"), default="closed")
    _add_format(p)
    p.set_defaults(func=cmd_eisenstein)

    p = sub.add_parser("zeta", help="zeta polynomial P(T)")
    _add_source(p)
    p.add_argument("--method", choices=("series", "linsys", "closed", "expanded"), default="series")
    p.add_argument("--cross-check", action="store_true", help="exit 1 unless all applicable methods agree")
    _add_format(p)
    p.set_defaults(func=cmd_zeta)

    p = sub.add_parser("rha", help="check that every zero of P(T) has modulus 1/sqrt(q)")
    _add_source(p)
    p.add_argument("--tolerance", type=float, default=1e-9)
    p.add_argument("--dps", type=_positive, default=30, help="working precision in decimal digits")
    _add_format(p, ("plain", "json"))
    p.set_defaults(func=cmd_rha)

    p = sub.add_parser("interlace", help="arc coverage of the zeros of P_l by those of P_(l+4)")
    p.add_argument("--ell", type=int, required=True)
    _add_format(p, ("plain", "json"))
    p.set_defaults(func=cmd_interlace)

    p = sub.add_parser("pintegral", help="p-adic valuations of coefficients")
    _add_source(p)
    p.add_argument("--of", choices=("zeta", "enumerator"), default="zeta")
    p.add_argument("--prime", type=int)
    _add_format(p, ("plain", "json"))
    p.set_defaults(func=cmd_pintegral)

    p = sub.add_parser("theta", help="q-expansion of the theta map image")
    _add_source(p)
    p.add_argument("--order", type=int, default=200)
    p.add_argument("--prime", type=int)
    _add_format(p, ("plain", "json"))
    p.set_defaults(func=cmd_theta)

    p = sub.add_parser("table", help="reproduce the l = 8, 12 tables")
    p.add_argument("--which", choices=("eisenstein", "zeta"), required=True)
    p.add_argument("--format", choices=("latex", "plain", "json"), default="latex")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="run the full verification suite")
    p.add_argument("--max-ell", type=_positive, default=60)
    p.add_argument("--max-prime", type=_positive, default=97)
    p.add_argument("--theta-order", type=_positive, default=200)
    p.add_argument("--jobs", type=_positive, default=1)
    p.add_argument("--report", help="write the JSON report to this file")
    p.add_argument("--corpus", help="enumerator corpus directory (default: bundled)")
    p.add_argument("--format", choices=("plain", "json"), default="plain")
    p.add_argument("--verbose", "-v", action="store_true")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (UsageError, UnsupportedDegree, SchemaError, InvariantViolation, ValueError) as exc:
        sys.stderr.write(f"eiszeta: error: {exc}\n")
        return EXIT_USAGE
    except EisZetaError as exc:
        sys.stderr.write(f"eiszeta: {type(exc).__name__}: {exc}\n")
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
