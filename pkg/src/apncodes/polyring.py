"""Dense polynomials over a ground field GF(q).

Coefficients are stored ascending as a tuple of ints in the encoding of the
ground ring (a :class:`~apncodes.galois.PrimeField` or a
:class:`~apncodes.galois.Subfield`).  The zero polynomial is the empty tuple.
Text form follows the usual descending-power notation, e.g.
``x^6+2x^5+2x^4+2x^2+x+1``.
"""

from __future__ import annotations

import re

import numpy as np

from .errors import (DivisionByZero, EmptySequence, FieldMismatch,
                     InvariantError, ParameterError, ZeroPolynomial)
from .galois import Field, PrimeField, Subfield

_NUMPY_THRESHOLD = 48


class Poly:
    __slots__ = ("coeffs", "ring")

    def __init__(self, coeffs, ring):
        coeffs = list(coeffs)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        if ring.is_prime_field:
            coeffs = [int(c) % ring.p for c in coeffs]
            while coeffs and coeffs[-1] == 0:
                coeffs.pop()
        self.coeffs = tuple(int(c) for c in coeffs)
        self.ring = ring

    @classmethod
    def monomial(cls, deg, ring, c=1):
        return cls([0] * deg + [c], ring)

    @classmethod
    def x_n_minus_1(cls, n, ring):
        return cls([ring.neg(1)] + [0] * (n - 1) + [1], ring)

    @property
    def degree(self):
        """Degree; -1 stands in for minus infinity on the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lead(self):
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.ring == other.ring and self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == Poly([other], self.ring).coeffs
        return NotImplemented

    def __hash__(self):
        return hash((self.coeffs, self.ring))

    def __repr__(self):
        return f"Poly({format_poly(self)!r}, {self.ring!r})"

    def __str__(self):
        return format_poly(self)

    def _same(self, other):
        if isinstance(other, int):
            return Poly([other], self.ring)
        if not isinstance(other, Poly):
            raise TypeError(f"cannot combine Poly with {type(other).__name__}")
        if other.ring != self.ring:
            raise FieldMismatch(f"{self.ring!r} vs {other.ring!r}")
        return other

    def __add__(self, other):
        return poly_add(self, self._same(other))

    __radd__ = __add__

    def __neg__(self):
        return Poly([self.ring.neg(c) for c in self.coeffs], self.ring)

    def __sub__(self, other):
        return poly_add(self, -self._same(other))

    def __rsub__(self, other):
        return self._same(other) - self

    def __mul__(self, other):
        return poly_mul(self, self._same(other))

    __rmul__ = __mul__

    def __divmod__(self, other):
        return poly_divmod(self, self._same(other))

    def __floordiv__(self, other):
        return poly_divmod(self, self._same(other))[0]

    def __mod__(self, other):
        return poly_divmod(self, self._same(other))[1]

    def scale(self, c):
        return Poly([self.ring.mul(c, a) for a in self.coeffs], self.ring)

    def monic(self):
        if not self.coeffs:
            return self
        return self.scale(self.ring.inv(self.lead))

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = self.ring.add(self.ring.mul(acc, x), c)
        return acc

    def weight(self):
        return sum(1 for c in self.coeffs if c)


def _check(a, b):
    if a.ring != b.ring:
        raise FieldMismatch(f"{a.ring!r} vs {b.ring!r}")
    return a.ring


def poly_add(a: Poly, b: Poly) -> Poly:
    ring = _check(a, b)
    n = max(len(a), len(b))
    return Poly([ring.add(a[i], b[i]) for i in range(n)], ring)


def poly_mul(a: Poly, b: Poly) -> Poly:
    ring = _check(a, b)
    if not a or not b:
        return Poly([], ring)
    if ring.is_prime_field and min(len(a), len(b)) > _NUMPY_THRESHOLD:
        out = np.convolve(np.array(a.coeffs, dtype=np.int64),
                          np.array(b.coeffs, dtype=np.int64)) % ring.p
        return Poly(out.tolist(), ring)
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a.coeffs):
        if ai:
            for j, bj in enumerate(b.coeffs):
                out[i + j] = ring.add(out[i + j], ring.mul(ai, bj))
    return Poly(out, ring)


def poly_divmod(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    ring = _check(a, b)
    if not b:
        raise ZeroPolynomial("polynomial division by zero")
    db = b.degree
    if a.degree < db:
        return Poly([], ring), a
    inv_lead = ring.inv(b.lead)
    if ring.is_prime_field and db > _NUMPY_THRESHOLD:
        p = ring.p
        r = np.array(a.coeffs, dtype=np.int64)
        bb = np.array(b.coeffs, dtype=np.int64)
        quo = np.zeros(a.degree - db + 1, dtype=np.int64)
        for i in range(a.degree, db - 1, -1):
            c = int(r[i]) * inv_lead % p
            if c:
                quo[i - db] = c
                r[i - db:i + 1] = (r[i - db:i + 1] - c * bb) % p
        return Poly(quo.tolist(), ring), Poly(r[:db].tolist(), ring)
    r = list(a.coeffs)
    quo = [0] * (a.degree - db + 1)
    for i in range(a.degree, db - 1, -1):
        c = ring.mul(r[i], inv_lead)
        if c:
            quo[i - db] = c
            for j, bj in enumerate(b.coeffs):
                r[i - db + j] = ring.sub(r[i - db + j], ring.mul(c, bj))
    return Poly(quo, ring), Poly(r[:db], ring)


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd; gcd(0, 0) = 0."""
    _check(a, b)
    while b:
        a, b = b, poly_divmod(a, b)[1]
    return a.monic()


def poly_pow_mod(a: Poly, e: int, mod: Poly) -> Poly:
    result = Poly([1], a.ring) % mod
    base = a % mod
    while e:
        if e & 1:
            result = (result * base) % mod
        base = (base * base) % mod
        e >>= 1
    return result


def reciprocal(a: Poly) -> Poly:
    """Monic reciprocal x^deg(a) a(1/x)."""
    if not a:
        raise ZeroPolynomial("reciprocal of the zero polynomial")
    return Poly(reversed(a.coeffs), a.ring).monic()


# -- minimal polynomials ---------------------------------------------------

def ring_for(field: Field, q: int):
    """Coefficient ring GF(q) for polynomials whose roots live in ``field``."""
    s = field._subfield_degree(q)
    if s == 1:
        return PrimeField(field.p)
    if s == field.s:
        return field.ground
    return Subfield(field, s)


def conjugates(field: Field, gamma: int, q: int) -> list[int]:
    out = [gamma]
    cur = field.pow(gamma, q)
    while cur != gamma:
        out.append(cur)
        cur = field.pow(cur, q)
    return out


def minimal_poly_of_element(field: Field, gamma: int, q: int | None = None) -> Poly:
    """Monic minimal polynomial of ``gamma`` over GF(q), as the product of
    (x - c) over the distinct q-conjugates of gamma."""
    q = field.q if q is None else q
    ring = ring_for(field, q)
    if gamma == 0:
        raise DivisionByZero("minimal polynomial of 0 is requested via gamma^-1")
    prod = [1]
    for c in conjugates(field, gamma, q):
        nc = field.neg(c)
        nxt = [0] * (len(prod) + 1)
        for j, pj in enumerate(prod):
            nxt[j + 1] = field.add(nxt[j + 1], pj)
            nxt[j] = field.add(nxt[j], field.mul(nc, pj))
        prod = nxt
    if not all(field.in_subfield(c, q) for c in prod):
        raise InvariantError("minimal polynomial coefficient outside GF(q)")
    return Poly(prod, ring)


def minimal_poly_gcd_formula(seq, ring=None) -> tuple[Poly, int]:
    """M(x) = (x^n - 1) / gcd(x^n - 1, S(x)) and L = n - deg gcd, where
    S(x) = s_0 + s_1 x + ... + s_{n-1} x^{n-1} over one period.

    ``seq`` is either a :class:`~apncodes.apnseq.Sequence` or a plain list of
    values together with ``ring``.
    """
    values = getattr(seq, "values", seq)
    if ring is None:
        ring = seq.field.ground
    n = len(values)
    if n == 0:
        raise EmptySequence("empty sequence")
    xn1 = Poly.x_n_minus_1(n, ring)
    g = poly_gcd(xn1, Poly(values, ring))
    m, rem = poly_divmod(xn1, g)
    if rem:
        raise InvariantError("gcd does not divide x^n - 1")
    return m.monic(), n - g.degree


# -- evaluation at powers of alpha ----------------------------------------

def eval_at_alpha_powers(poly: Poly, field: Field, exps) -> np.ndarray:
    """Values poly(alpha^i) for each i in ``exps`` (packed field elements)."""
    exps = np.asarray(exps, dtype=np.int64)
    if not field.has_table:
        return np.array([_eval_in_field(poly, field, field.alpha_pow(int(i)))
                         for i in exps], dtype=np.int64)
    xs = field.exp_table[exps % field.n]
    acc = np.zeros(len(exps), dtype=np.int64)
    for c in reversed(poly.coeffs):
        acc = field.mul_arrays(acc, xs)
        if c:
            acc = field.add_arrays(acc, np.full_like(acc, c))
    return acc


def _eval_in_field(poly, field, x):
    acc = 0
    for c in reversed(poly.coeffs):
        acc = field.add(field.mul(acc, x), c)
    return acc


# -- text form -------------------------------------------------------------

def format_poly(a: Poly) -> str:
    if not a:
        return "0"
    terms = []
    for deg in range(a.degree, -1, -1):
        c = a.coeffs[deg]
        if not c:
            continue
        cs = a.ring.fmt(c)
        if deg == 0:
            terms.append(cs)
        else:
            mono = "x" if deg == 1 else f"x^{deg}"
            terms.append(mono if c == 1 else cs + mono)
    return "+".join(terms)


_TERM_RE = re.compile(r"^(\{\d+\}|\d+)?(x(?:\^(\d+))?)?$")


def parse_poly(text: str, ring) -> Poly:
    """Parse descending-power text such as ``x^6+2*x^5+x+1``.

    Coefficients are ints in [0, p) (or ``{v}`` packed subfield elements);
    a leading ``-`` on a term negates it.
    """
    s = text.replace(" ", "").replace("*", "")
    if not s:
        raise ParameterError("empty polynomial text")
    if s == "0":
        return Poly([], ring)
    if not re.fullmatch(r"[+-]?[^+-]+([+-][^+-]+)*", s):
        raise ParameterError(f"malformed polynomial {text!r}")
    coeffs = {}
    for sign, body in re.findall(r"([+-]?)([^+-]+)", s):
        mt = _TERM_RE.match(body)
        if not mt or not (mt.group(1) or mt.group(2)):
            raise ParameterError(f"cannot parse term {body!r} in {text!r}")
        raw = mt.group(1)
        c = 1 if raw is None else int(raw.strip("{}"))
        if ring.is_prime_field and not 0 <= c < ring.p and not raw.startswith("{"):
            raise ParameterError(f"coefficient {c} outside [0, {ring.p})")
        if not ring.contains(c % ring.p if ring.is_prime_field else c):
            raise ParameterError(f"coefficient {c} not in {ring!r}")
        if sign == "-":
            c = ring.neg(c)
        deg = 0 if not mt.group(2) else int(mt.group(3) or 1)
        coeffs[deg] = ring.add(coeffs.get(deg, 0), c)
    top = max(coeffs)
    return Poly([coeffs.get(d, 0) for d in range(top + 1)], ring)
