"""End-to-end reports: sequence, minimal polynomial, code and cross-checks.

A report builds the sequence s_t = Tr((1 + alpha^t)^e), gets its minimal
polynomial three independent ways (closed form, Berlekamp-Massey, gcd
formula), turns it into the cyclic code it generates, and records distance
information for the code and its dual.  It is marked "verified" only when the
three polynomials agree coefficient for coefficient.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field as dc_field
from importlib import resources

from .apnseq import (berlekamp_massey, dobbertin_exponent, gen_sequence,
                     minimal_poly_dobbertin, minimal_poly_inverse_apn)
from .code import (HT_CAP, Distance, bch_bound, dual, from_generator,
                   hartmann_tzeng_bound, min_distance)
from .errors import ParameterError
from .galois import Field, FieldParams
from .polyring import Poly, minimal_poly_gcd_formula, parse_poly
from .presets import get_preset

FAMILIES = ("inverse-apn", "dobbertin")


@dataclass
class CodeSummary:
    n: int
    k: int
    distance: Distance

    def triple(self) -> str:
        return f"[{self.n},{self.k},{self.distance}]"

    def to_dict(self) -> dict:
        out = {"n": self.n, "k": self.k}
        if self.distance.exact is not None:
            out["d_exact"] = self.distance.exact
        out["d_lower"] = self.distance.lower
        out["d_upper"] = self.distance.upper
        out["d_method"] = self.distance.method
        return out


@dataclass
class Report:
    preset: str | None
    family: str
    params: FieldParams
    e: int
    i: int | None
    span: int
    minpoly: Poly
    code: CodeSummary
    dual: CodeSummary
    bch: int
    ht: int | None
    design_bound: int
    oracles: dict = dc_field(default_factory=dict)

    @property
    def status(self) -> str:
        flags = self.oracles.values()
        return "verified" if flags and all(f is True for f in flags) else "unverified"

    def to_dict(self) -> dict:
        p = self.params
        return {
            "preset": self.preset,
            "family": self.family,
            "p": p.p, "q": p.q, "m": p.m, "e": self.e, "i": self.i,
            "field": p.to_spec(),
            "span": self.span,
            "minpoly": str(self.minpoly),
            "minpoly_coeffs": list(self.minpoly.coeffs),
            "code": self.code.to_dict(),
            "bounds": {"bch": self.bch, "ht": self.ht, "design": self.design_bound},
            "dual": self.dual.to_dict(),
            "oracles": dict(self.oracles),
            "status": self.status,
        }

    def to_text(self) -> str:
        p = self.params
        which = f"i={self.i}, e={self.e}" if self.family == "dobbertin" else f"e={self.e}"
        ht = "n/a" if self.ht is None else str(self.ht)
        flags = " ".join(f"{k}={'ok' if v else ('skipped' if v is None else 'FAIL')}"
                         for k, v in self.oracles.items())
        lines = [
            f"preset:   {self.preset or '-'}",
            f"family:   {self.family} (p={p.p}, q={p.q}, m={p.m}, {which})",
            f"field:    {p.to_spec()}",
            f"span:     {self.span}",
            f"minpoly:  {self.minpoly}",
            f"code:     {self.code.triple()} ({self.code.distance.method})",
            f"bounds:   bch={self.bch} ht={ht} design={self.design_bound}",
            f"dual:     {self.dual.triple()} ({self.dual.distance.method})",
            f"oracles:  {flags}",
            f"status:   {self.status}",
        ]
        return "\n".join(lines)


def family_exponent(family: str, params: FieldParams, i: int | None = None) -> tuple[int, int | None]:
    """Exponent e (and Dobbertin i) for ``family`` over the given field."""
    if family == "inverse-apn":
        return params.q ** params.m - 2, None
    if family == "dobbertin":
        if i is None:
            if params.m % 5:
                raise ParameterError(f"Dobbertin exponent needs m = 5i, got m={params.m}")
            i = params.m // 5
        return dobbertin_exponent(i), i
    raise ParameterError(f"unknown family {family!r}; choose from {FAMILIES}")


def design_bound(family: str, params: FieldParams, i: int | None) -> int:
    """Lower bound on d proved for the family."""
    if family == "inverse-apn":
        p, q = params.p, params.q
        return max(2 * p - 1, q * (p - 1) // p + 1)
    return 2 ** i + 1 + (i % 2)


def closed_form(field: Field, family: str, i: int | None) -> Poly:
    if family == "inverse-apn":
        return minimal_poly_inverse_apn(field)
    return minimal_poly_dobbertin(field, i)


def build_report(params: FieldParams, family: str, i: int | None = None,
                 preset: str | None = None, distance="auto", workers: int = 1) -> Report:
    e, i = family_exponent(family, params, i)
    field = Field(params)
    closed = closed_form(field, family, i)
    seq = gen_sequence(field, e)
    bm, _ = berlekamp_massey(seq)
    gcd_poly, _ = minimal_poly_gcd_formula(seq)
    oracles = {
        "bm_eq_gcd": bm.coeffs == gcd_poly.coeffs,
        "closed_eq_bm": closed.coeffs == bm.coeffs,
        "closed_eq_gcd": closed.coeffs == gcd_poly.coeffs,
    }
    code = from_generator(closed, field.n, field)
    dcode = dual(code)
    ht = hartmann_tzeng_bound(code) if code.n <= HT_CAP else None
    return Report(
        preset=preset, family=family, params=params, e=e, i=i,
        span=closed.degree, minpoly=closed,
        code=CodeSummary(code.n, code.k, min_distance(code, distance, workers)),
        dual=CodeSummary(dcode.n, dcode.k, min_distance(dcode, distance, workers)),
        bch=bch_bound(code), ht=ht, design_bound=design_bound(family, params, i),
        oracles=oracles,
    )


# -- regression against the worked examples ------------------------------------

def load_golden(path=None) -> dict:
    if path is None:
        text = resources.files("apncodes").joinpath("data/golden.json").read_text()
    else:
        with open(path) as fh:
            text = fh.read()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParameterError(f"golden file is not valid JSON: {exc}") from exc


def first_coeff_diff(expected: Poly, got: Poly) -> str | None:
    """Human-readable description of the highest-degree coefficient where the
    two polynomials differ, or None if they are equal."""
    top = max(expected.degree, got.degree)
    for deg in range(top, -1, -1):
        if expected[deg] != got[deg]:
            return f"coefficient of x^{deg}: expected {expected[deg]}, got {got[deg]}"
    return None


def check_against_golden(rep: Report, gold: dict) -> list[str]:
    """Mismatches between a report and its golden entry (empty when equal)."""
    problems = []
    if "generator" in gold:
        try:
            want = parse_poly(gold["generator"], rep.minpoly.ring)
        except ParameterError as exc:
            problems.append(f"golden generator unreadable: {exc}")
        else:
            diff = first_coeff_diff(want, rep.minpoly)
            if diff:
                problems.append(f"generator {diff}")
    for key, got in (("n", rep.code.n), ("k", rep.code.k), ("dual_k", rep.dual.k),
                     ("d", rep.code.distance.exact), ("dual_d", rep.dual.distance.exact)):
        if key in gold and gold[key] != got:
            problems.append(f"{key}: expected {gold[key]}, got {got}")
    if rep.status != "verified":
        problems.append("oracles disagree: " + ", ".join(
            k for k, v in rep.oracles.items() if v is not True))
    return problems


def verify_examples(golden: dict | None = None, workers: int = 1) -> list[tuple[Report, list[str]]]:
    golden = load_golden() if golden is None else golden
    out = []
    for name in ("ex1", "ex2", "ex3", "ex4"):
        pre = get_preset(name)
        rep = build_report(pre.params, pre.family, pre.i, preset=name, workers=workers)
        if name in golden:
            problems = check_against_golden(rep, golden[name])
        else:
            problems = [f"no golden entry for {name}"]
        out.append((rep, problems))
    return out
