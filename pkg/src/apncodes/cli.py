"""Command-line front end: ``apncodes <command> [options]``.

Exit codes: 0 success, 1 regression mismatch, 2 bad parameters, 3 size cap
exceeded, 4 internal invariant violated.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import apnseq, code as codemod, cyclotomic
from .errors import ApnCodesError, ParameterError
from .galois import Field, auto_params, parse_field_spec
from .polyring import format_poly, minimal_poly_gcd_formula
from .presets import PRESETS, get_preset
from .report import FAMILIES, build_report, family_exponent, load_golden, verify_examples


# -- shared option handling ----------------------------------------------------

def _common(sub: bool) -> argparse.ArgumentParser:
    # Subcommand copies use SUPPRESS so that a flag given before the command
    # name is not overwritten by the subparser's default.
    d = (lambda v: argparse.SUPPRESS) if sub else (lambda v: v)
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--json", action="store_true", default=d(False),
                   help="machine-readable output")
    p.add_argument("--preset", choices=sorted(PRESETS), default=d(None),
                   help="field (and family) of a worked example")
    p.add_argument("--threads", type=int, default=d(1),
                   help="worker threads for exhaustive sweeps")
    return p


def _field_options(p: argparse.ArgumentParser) -> None:
    p.add_argument("--field", help='explicit field, e.g. "p=3,m=2,mod=2,2,1"')
    p.add_argument("--p", type=int, help="characteristic (with --m, picks a field)")
    p.add_argument("--m", type=int, help="extension degree over GF(q)")
    p.add_argument("--s", type=int, default=1, help="q = p^s (default 1)")
    p.add_argument("--auto-field", action="store_true",
                   help="choose the smallest primitive modulus automatically")


def _resolve_params(args, i: int | None = None):
    """Field parameters from --field, --preset, --p/--m, or the Dobbertin i."""
    if args.field:
        return parse_field_spec(args.field)
    if args.preset:
        return get_preset(args.preset).params
    if args.p is not None and args.m is not None:
        return auto_params(args.p, args.m, args.s)
    if i is not None:
        return auto_params(2, 5 * i)
    raise ParameterError("no field given: use --preset, --field or --p/--m")


def _family_and_i(args):
    family = getattr(args, "family", None)
    i = getattr(args, "i", None)
    if args.preset:
        pre = get_preset(args.preset)
        family = family or pre.family
        if family == pre.family and i is None:
            i = pre.i
    if family is None:
        raise ParameterError("no exponent family given: use --family")
    return family, i


def _emit(args, obj, text: str) -> None:
    if args.json:
        print(json.dumps(obj, sort_keys=True))
    else:
        print(text)


# -- commands ------------------------------------------------------------------

def cmd_verify_paper(args) -> int:
    golden = load_golden(args.golden)
    results = verify_examples(golden, workers=args.threads)
    failed = any(problems for _, problems in results)
    if args.json:
        out = []
        for rep, problems in results:
            d = rep.to_dict()
            d["regression"] = {"ok": not problems, "problems": problems}
            out.append(d)
        print(json.dumps(out, sort_keys=True))
    else:
        for rep, problems in results:
            print(rep.to_text())
            print("regression: " + ("ok" if not problems else "MISMATCH"))
            for msg in problems:
                print(f"  {rep.preset}: {msg}")
            print()
        print("all examples reproduced" if not failed else "regression FAILED")
    return 1 if failed else 0


def cmd_report(args) -> int:
    family, i = _family_and_i(args)
    params = _resolve_params(args, i)
    rep = build_report(params, family, i, preset=args.preset,
                       distance=args.distance, workers=args.threads)
    _emit(args, rep.to_dict(), rep.to_text())
    return 0


def cmd_coset(args) -> int:
    if args.leader is not None:
        members = cyclotomic.coset(args.leader, args.q, args.n)
        _emit(args, {"q": args.q, "n": args.n, "leader": min(members), "members": members},
              " ".join(map(str, members)))
        return 0
    table = cyclotomic.build_table(args.q, args.n)
    cosets = {str(j): table.members(j) for j in table.leaders}
    text = "\n".join(f"C_{j} ({table.sizes[j]}): " + " ".join(map(str, table.members(j)))
                     for j in table.leaders)
    _emit(args, {"q": args.q, "n": args.n, "leaders": list(table.leaders),
                 "sizes": {str(j): table.sizes[j] for j in table.leaders},
                 "cosets": cosets}, text)
    return 0


def cmd_seq(args) -> int:
    params = _resolve_params(args)
    field = Field(params)
    e = args.e
    if e is None:
        family, i = _family_and_i(args)
        e, _ = family_exponent(family, params, i)
    seq = apnseq.gen_sequence(field, e)
    obj = {"e": e, "n": seq.n}
    if args.emit == "values":
        obj["values"] = list(seq.values)
        text = " ".join(field.ground.fmt(v) for v in seq.values)
    else:
        poly, span = apnseq.berlekamp_massey(seq)
        obj["span"] = span
        text = str(span)
        if args.emit == "minpoly":
            gcd_poly, _ = minimal_poly_gcd_formula(seq)
            obj["minpoly"] = str(poly)
            obj["coeffs"] = list(poly.coeffs)
            obj["gcd_formula_agrees"] = gcd_poly.coeffs == poly.coeffs
            text = str(poly)
    _emit(args, obj, text)
    return 0


def _rsets_obj(rs):
    m = rs.m
    return {name: sorted(format(y, f"0{m}b") for y in cls)
            for name, cls in rs.classes().items()}


def cmd_rsets(args) -> int:
    rs = apnseq.build_r_sets(args.i)
    obj = {"i": args.i, "m": rs.m, "classes": _rsets_obj(rs),
           "sizes": {k: len(v) for k, v in rs.classes().items()}}
    if args.check:
        odd = set(apnseq.odd_sequences(args.i, workers=args.threads).tolist())
        orbits = {apnseq.rotate_bits(y, j, rs.m) for y in rs.r_all for j in range(rs.m)}
        obj["brute_force_agrees"] = odd == orbits
    lines = [f"{k} ({obj['sizes'][k]}): " + " ".join(v) for k, v in obj["classes"].items()]
    if args.check:
        lines.append(f"brute force agrees: {obj['brute_force_agrees']}")
    _emit(args, obj, "\n".join(lines))
    return 0 if obj.get("brute_force_agrees", True) else 4


def cmd_dobbertin(args) -> int:
    i = args.i
    if i is None and args.preset:
        i = get_preset(args.preset).i
    if i is None:
        raise ParameterError("--i is required")
    if args.emit == "rsets":
        args.i, args.check = i, False
        return cmd_rsets(args)
    prof = apnseq.dobbertin_support(i)
    obj = {"i": i, "e": prof.e, "n": prof.n, "span": prof.span,
           "leaders": list(prof.reduced_support)}
    text = f"span {prof.span}\nleaders " + " ".join(map(str, prof.reduced_support))
    if args.emit == "minpoly":
        params = _resolve_params(args, i)
        poly = apnseq.minimal_poly_dobbertin(Field(params), i)
        obj["minpoly"] = str(poly)
        obj["coeffs"] = list(poly.coeffs)
        text = str(poly)
    _emit(args, obj, text)
    return 0


def cmd_inverse_apn(args) -> int:
    params = _resolve_params(args)
    prof = apnseq.inverse_apn_support(params.q, params.m, params.p)
    obj = {"e": prof.e, "n": prof.n, "span": prof.span,
           "leaders": list(prof.reduced_support)}
    text = f"span {prof.span}\nleaders " + " ".join(map(str, prof.reduced_support))
    if args.emit == "minpoly":
        poly = apnseq.minimal_poly_inverse_apn(Field(params))
        obj["minpoly"] = str(poly)
        obj["coeffs"] = list(poly.coeffs)
        text = str(poly)
    _emit(args, obj, text)
    return 0


def cmd_code(args) -> int:
    args.family = args.source
    family, i = _family_and_i(args)
    params = _resolve_params(args, i)
    field = Field(params)
    _, i = family_exponent(family, params, i)
    g = (apnseq.minimal_poly_inverse_apn(field) if family == "inverse-apn"
         else apnseq.minimal_poly_dobbertin(field, i))
    c = codemod.from_generator(g, field.n, field)
    dc = codemod.dual(c)
    dist = codemod.min_distance(c, args.distance, args.threads)
    bounds = codemod.composite_bounds(c)
    leaders = sorted({int(x) for x in cyclotomic.leader_array(c.q, c.n)[sorted(c.zero_exponents)]})
    obj = {"n": c.n, "k": c.k, "d_lower": dist.lower, "d_upper": dist.upper,
           "generator": list(g.coeffs), "dual": {"n": dc.n, "k": dc.k},
           "defining_set_leaders": leaders, "bounds": bounds}
    if dist.exact is not None:
        obj["d_exact"] = dist.exact
    text = "\n".join([
        f"[{c.n},{c.k},{dist}] ({dist.method})",
        f"generator: {format_poly(g)}",
        f"defining set leaders: {' '.join(map(str, leaders))}",
        "bounds: " + " ".join(f"{k}={'n/a' if v is None else v}" for k, v in bounds.items()),
        f"dual: [{dc.n},{dc.k}]",
    ])
    _emit(args, obj, text)
    return 0


# -- parser ----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="apncodes", parents=[_common(False)], allow_abbrev=False,
        description="Cyclic codes from APN power-function sequences.")
    subs = parser.add_subparsers(dest="command", required=True)
    common = _common(True)

    p = subs.add_parser("verify-paper", parents=[common],
                        help="regenerate the four worked examples and compare")
    p.add_argument("--golden", help="alternative golden-values JSON file")
    p.set_defaults(func=cmd_verify_paper)

    p = subs.add_parser("report", parents=[common], help="full report for one setting")
    _field_options(p)
    p.add_argument("--family", choices=FAMILIES)
    p.add_argument("--i", type=int, help="Dobbertin block parameter (m = 5i)")
    p.add_argument("--distance", default="auto", help="auto | exhaustive | bounds | lw:W")
    p.set_defaults(func=cmd_report)

    p = subs.add_parser("coset", parents=[common], help="q-cyclotomic cosets mod n")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--leader", type=int, help="print only the coset of J")
    p.set_defaults(func=cmd_coset)

    p = subs.add_parser("seq", parents=[common], help="the sequence Tr((1+a^t)^e)")
    _field_options(p)
    p.add_argument("--e", type=int, help="exponent (default: the preset's family)")
    p.add_argument("--family", choices=FAMILIES)
    p.add_argument("--i", type=int)
    p.add_argument("--emit", choices=("values", "span", "minpoly"), default="span")
    p.set_defaults(func=cmd_seq)

    p = subs.add_parser("rsets", parents=[common], help="Dobbertin R-classes")
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--check", action="store_true",
                   help="compare against the brute-force odd-word sweep")
    p.set_defaults(func=cmd_rsets)

    p = subs.add_parser("dobbertin", parents=[common], help="Dobbertin support and polynomial")
    _field_options(p)
    p.add_argument("--i", type=int)
    p.add_argument("--emit", choices=("rsets", "support", "minpoly"), default="support")
    p.set_defaults(func=cmd_dobbertin)

    p = subs.add_parser("inverse-apn", parents=[common], help="inverse-exponent support and polynomial")
    _field_options(p)
    p.add_argument("--emit", choices=("support", "minpoly"), default="support")
    p.set_defaults(func=cmd_inverse_apn)

    p = subs.add_parser("code", parents=[common], help="cyclic code from a minimal polynomial")
    _field_options(p)
    p.add_argument("--from", dest="source", choices=FAMILIES)
    p.add_argument("--i", type=int)
    p.add_argument("--distance", default="auto", help="auto | exhaustive | bounds | lw:W")
    p.set_defaults(func=cmd_code)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ApnCodesError as exc:
        print(f"apncodes: error: {exc}", file=sys.stderr)
        return exc.exit_code
    except OSError as exc:
        print(f"apncodes: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
