"""Arithmetic in GF(p^k) with an explicit modulus and primitive element.

Elements are plain Python ints holding the power-basis coefficients packed in
base p: the element c_0 + c_1 x + ... + c_{k-1} x^{k-1} is stored as
``c_0 + c_1 p + ... + c_{k-1} p^{k-1}``.  With this packing the prime subfield
GF(p) is exactly the ints ``0..p-1``, so traces down to GF(p) come out as
ordinary residues.

The field is viewed as the tower GF(p) <= GF(q) <= GF(q^m) with q = p^s and
k = s*m.  Fields with p^k <= 2^20 carry exp/log/Zech tables; larger ones fall
back to schoolbook multiplication and baby-step giant-step logarithms.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .errors import (DivisionByZero, FieldMismatch, InvariantError,
                     NotASubfield, NotIrreducible, NotPrimitive,
                     ParameterError, UnsupportedSize)

TABLE_CAP = 1 << 20
SIZE_CAP = 1 << 32


# -- integer helpers --------------------------------------------------------

def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of n by trial division (n < 2^40 in practice)."""
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1 if f == 2 else 2
    if n > 1:
        out.append(n)
    return out


def multiplicative_order(a: int, n: int) -> int:
    """Smallest t > 0 with a^t = 1 mod n; requires gcd(a, n) = 1."""
    if n == 1:
        return 1
    if math.gcd(a, n) != 1:
        raise ParameterError(f"{a} is not a unit mod {n}")
    t, x = 1, a % n
    while x != 1:
        x = x * a % n
        t += 1
    return t


# -- dense polynomials over GF(p) as ascending lists -----------------------
# Only what construction-time checks need; the general polynomial ring lives
# in polyring.

def _ptrim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmod(a, f, p):
    a = _ptrim(list(a))
    df = len(f) - 1
    inv_lead = pow(f[-1], -1, p)
    while len(a) - 1 >= df:
        c = a[-1] * inv_lead % p
        shift = len(a) - 1 - df
        for j, fj in enumerate(f):
            a[shift + j] = (a[shift + j] - c * fj) % p
        _ptrim(a)
    return a


def _pmulmod(a, b, f, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _pmod(out, f, p)


def _ppowmod(a, e, f, p):
    result = [1]
    base = _pmod(a, f, p)
    while e:
        if e & 1:
            result = _pmulmod(result, base, f, p)
        base = _pmulmod(base, base, f, p)
        e >>= 1
    return result


def _pgcd(a, b, p):
    a, b = _ptrim(list(a)), _ptrim(list(b))
    while b:
        a, b = b, _pmod(a, b, p)
    return a


def is_irreducible(modulus, p: int) -> bool:
    """Rabin's irreducibility test for a polynomial over GF(p).

    ``modulus`` is an ascending coefficient sequence; it need not be monic.
    """
    f = _ptrim([c % p for c in modulus])
    k = len(f) - 1
    if k < 1:
        return False
    if k == 1:
        return True
    x = [0, 1]
    # x^(p^k) = x mod f
    xp = x
    for _ in range(k):
        xp = _ppowmod(xp, p, f, p)
    if _ptrim([(u - v) % p for u, v in _zip_pad(xp, x)]):
        return False
    for r in prime_factors(k):
        xp = x
        for _ in range(k // r):
            xp = _ppowmod(xp, p, f, p)
        diff = _ptrim([(u - v) % p for u, v in _zip_pad(xp, x)])
        if len(_pgcd(f, diff, p)) != 1:
            return False
    return True


def _zip_pad(a, b):
    n = max(len(a), len(b))
    return zip(list(a) + [0] * (n - len(a)), list(b) + [0] * (n - len(b)))


def _x_is_primitive(modulus, p):
    k = len(modulus) - 1
    order = p ** k - 1
    for r in prime_factors(order):
        if _ppowmod([0, 1], order // r, list(modulus), p) == [1]:
            return False
    return True


# -- parameters --------------------------------------------------------------

@dataclass(frozen=True)
class FieldParams:
    """Description of GF(q^m), q = p^s, with modulus over GF(p) and alpha."""

    p: int
    s: int
    m: int
    modulus: tuple
    alpha: tuple = (0, 1)

    def __post_init__(self):
        object.__setattr__(self, "modulus", tuple(int(c) for c in self.modulus))
        object.__setattr__(self, "alpha", tuple(int(c) for c in self.alpha))

    @property
    def q(self) -> int:
        return self.p ** self.s

    @property
    def k(self) -> int:
        return self.s * self.m

    @property
    def order(self) -> int:
        return self.p ** self.k

    @property
    def n(self) -> int:
        return self.q ** self.m - 1

    def to_spec(self) -> str:
        mod = ",".join(map(str, self.modulus))
        alpha = ",".join(map(str, self.alpha))
        return f"p={self.p},s={self.s},m={self.m},mod={mod},alpha={alpha}"


_SPEC_RE = re.compile(r"(p|s|m|mod|alpha)=(.*?)(?=,(?:p|s|m|mod|alpha)=|$)")


def parse_field_spec(text: str) -> FieldParams:
    """Parse ``p=3,s=1,m=2,mod=2,2,1,alpha=0,1`` (ascending coefficients).

    ``s`` defaults to 1 and ``alpha`` to x.
    """
    text = text.replace(" ", "")
    found = {}
    pos = 0
    for mt in _SPEC_RE.finditer(text):
        if mt.start() != pos:
            raise ParameterError(f"malformed field spec near {text[pos:]!r}")
        found[mt.group(1)] = mt.group(2)
        pos = mt.end() + 1
    if pos < len(text) or not {"p", "m", "mod"} <= found.keys():
        raise ParameterError(f"malformed field spec {text!r}")
    try:
        p, m = int(found["p"]), int(found["m"])
        s = int(found.get("s", 1))
        modulus = tuple(int(c) for c in found["mod"].split(","))
        alpha = tuple(int(c) for c in found.get("alpha", "0,1").split(","))
    except ValueError as exc:
        raise ParameterError(f"malformed field spec {text!r}") from exc
    return FieldParams(p, s, m, modulus, alpha)


def auto_params(p: int, m: int, s: int = 1) -> FieldParams:
    """Deterministic default: the smallest monic irreducible of degree s*m over
    GF(p) (ordered by the base-p value of its lower coefficients, i.e.
    lexicographically from the x^(k-1) coefficient down) for which x is
    primitive."""
    if not is_prime(p):
        raise ParameterError(f"p={p} is not prime")
    k = s * m
    if p ** k > SIZE_CAP:
        raise UnsupportedSize(f"GF({p}^{k}) exceeds 2^32")
    for code in range(p ** k):
        low = [(code // p ** j) % p for j in range(k)]
        if low[0] == 0:
            continue
        f = low + [1]
        if is_irreducible(f, p) and _x_is_primitive(f, p):
            return FieldParams(p, s, m, tuple(f), (0, 1))
    raise InvariantError("no primitive polynomial found")  # pragma: no cover


# -- ground fields used as polynomial coefficient rings -----------------------

class PrimeField:
    """GF(p) as ints mod p.  Shares its encoding with the prime subfield of
    every :class:`Field` of characteristic p."""

    is_prime_field = True

    def __init__(self, p: int):
        if not is_prime(p):
            raise ParameterError(f"p={p} is not prime")
        self.p = p
        self.order = p

    def __repr__(self):
        return f"GF({self.p})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def neg(self, a):
        return -a % self.p

    def mul(self, a, b):
        return a * b % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise DivisionByZero("inverse of 0 in GF(%d)" % self.p)
        return pow(a, -1, self.p)

    def contains(self, a):
        return 0 <= a < self.p

    def fmt(self, a):
        return str(a)


class Subfield:
    """GF(q) realized inside a larger :class:`Field` (elements are packed ints
    of the big field that satisfy a^q = a)."""

    is_prime_field = False

    def __init__(self, field: "Field", s: int):
        if field.k % s:
            raise NotASubfield(f"GF({field.p}^{s}) is not a subfield of {field!r}")
        self.field = field
        self.s = s
        self.p = field.p
        self.order = field.p ** s

    def __repr__(self):
        return f"GF({self.order}) in {self.field!r}"

    def __eq__(self, other):
        return (isinstance(other, Subfield) and other.field is self.field
                and other.s == self.s)

    def __hash__(self):
        return hash((id(self.field), self.s))

    def add(self, a, b):
        return self.field.add(a, b)

    def sub(self, a, b):
        return self.field.sub(a, b)

    def neg(self, a):
        return self.field.neg(a)

    def mul(self, a, b):
        return self.field.mul(a, b)

    def inv(self, a):
        return self.field.inv(a)

    def contains(self, a):
        return self.field.in_subfield(a, self.order)

    def fmt(self, a):
        # GF(q) elements are written as packed GF(p^k) values in braces.
        return str(a) if a < self.p else "{%d}" % a


# -- the field -----------------------------------------------------------------

class Field:
    """GF(p^k) with explicit modulus and primitive element alpha.

    >>> F = Field(FieldParams(3, 1, 2, (2, 2, 1)))
    >>> F.mul(F.alpha, F.alpha) == F.elem([1, 1])
    True
    """

    def __init__(self, params: FieldParams, table: bool | None = None):
        p, s, m = params.p, params.s, params.m
        if not is_prime(p) or s < 1 or m < 1:
            raise ParameterError(f"bad field parameters p={p}, s={s}, m={m}")
        k = s * m
        mod = [c % p for c in params.modulus]
        if len(mod) != k + 1 or mod[-1] != 1:
            raise ParameterError(f"modulus must be monic of degree {k}")
        if p ** k > SIZE_CAP:
            raise UnsupportedSize(f"GF({p}^{k}) exceeds 2^32")
        if len(params.alpha) > k or any(not 0 <= c < p for c in params.alpha):
            raise ParameterError("alpha must have k coefficients in [0, p)")
        if not is_irreducible(mod, p):
            raise NotIrreducible(f"modulus {mod} is reducible over GF({p})")

        self.params = params
        self.p, self.s, self.m, self.k = p, s, m, k
        self.q = p ** s
        self.order = p ** k
        self.n = self.order - 1
        self.modulus = tuple(mod)
        self._pw = [p ** j for j in range(k)]
        self._top = p ** (k - 1)
        self.alpha = self.elem(params.alpha)

        if table is None:
            table = self.order <= TABLE_CAP
        elif table and self.order > TABLE_CAP:
            raise UnsupportedSize(f"table mode needs p^k <= 2^20, got {self.order}")
        self.has_table = bool(table)

        for r in prime_factors(self.n):
            if self._pow_slow(self.alpha, self.n // r) == 1:
                raise NotPrimitive("alpha does not generate the multiplicative group")
        if self.alpha == 0 or (self.n > 0 and self._pow_slow(self.alpha, self.n) != 1):
            raise NotPrimitive("alpha does not generate the multiplicative group")
        if self.has_table:
            self._build_tables()

    def __repr__(self):
        return f"Field(GF({self.p}^{self.k}), q={self.q}, m={self.m})"

    @cached_property
    def ground(self):
        """The coefficient ring GF(q) of the sequences and polynomials."""
        return PrimeField(self.p) if self.s == 1 else Subfield(self, self.s)

    # packing

    def elem(self, coeffs) -> int:
        coeffs = list(coeffs)
        if len(coeffs) > self.k:
            raise ParameterError(f"element needs at most {self.k} coefficients")
        return sum((c % self.p) * w for c, w in zip(coeffs, self._pw))

    def coeffs(self, a: int) -> list[int]:
        return [(a // w) % self.p for w in self._pw]

    def to_digits(self, arr) -> np.ndarray:
        arr = np.asarray(arr, dtype=np.int64)
        return (arr[..., None] // np.array(self._pw, dtype=np.int64)) % self.p

    def from_digits(self, digits) -> np.ndarray:
        return (np.asarray(digits, dtype=np.int64) % self.p) @ np.array(self._pw, dtype=np.int64)

    def check(self, a):
        if not (isinstance(a, (int, np.integer)) and 0 <= a < self.order):
            raise FieldMismatch(f"{a!r} is not an element of {self!r}")
        return int(a)

    # schoolbook arithmetic (no tables)

    def _times_x(self, v):
        top = v[-1]
        v = [0] + v[:-1]
        if top:
            v = [(vi - top * mi) % self.p for vi, mi in zip(v, self.modulus)]
        return v

    def _mul_slow(self, a, b):
        if a == 0 or b == 0:
            return 0
        acc = [0] * self.k
        cur = self.coeffs(b)
        for aj in self.coeffs(a):
            if aj:
                acc = [(x + aj * y) % self.p for x, y in zip(acc, cur)]
            cur = self._times_x(cur)
        return self.elem(acc)

    def _pow_slow(self, a, t):
        result, base = 1, a
        while t:
            if t & 1:
                result = self._mul_slow(result, base)
            base = self._mul_slow(base, base)
            t >>= 1
        return result

    def _mul_matrix(self, b):
        # column j holds the digits of b * x^j
        cols, cur = [], self.coeffs(b)
        for _ in range(self.k):
            cols.append(cur)
            cur = self._times_x(cur)
        return np.array(cols, dtype=np.int64).T

    def _build_tables(self):
        n, block = self.n, min(self.n, 1024)
        first = [1]
        for _ in range(block - 1):
            first.append(self._mul_slow(first[-1], self.alpha))
        powers = [np.array(first, dtype=np.int64)]
        step = self._mul_matrix(self._pow_slow(self.alpha, block))
        done = block
        cur = self.to_digits(powers[0])
        while done < n:
            cur = (cur @ step.T) % self.p
            powers.append(self.from_digits(cur))
            done += block
        exp = np.concatenate(powers)[:n]
        log = np.full(self.order, -1, dtype=np.int64)
        log[exp] = np.arange(n, dtype=np.int64)
        if (log[1:] < 0).any():
            raise NotPrimitive("alpha does not generate the multiplicative group")
        plus_one = exp - exp % self.p + (exp % self.p + 1) % self.p
        self.exp_table = exp
        self.log_table = log
        self.zech_table = log[plus_one]
        self._exp = exp.tolist()
        self._log = log.tolist()

    # scalar arithmetic

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if a == 0:
            return b
        if b == 0:
            return a
        if self.has_table:
            la = self._log[a]
            z = self.zech_table[(self._log[b] - la) % self.n]
            return 0 if z < 0 else self._exp[(la + int(z)) % self.n]
        return self.elem([x + y for x, y in zip(self.coeffs(a), self.coeffs(b))])

    def neg(self, a: int) -> int:
        if self.p == 2 or a == 0:
            return a
        return self.elem([-x for x in self.coeffs(a)])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self.has_table:
            return self._exp[(self._log[a] + self._log[b]) % self.n]
        return self._mul_slow(a, b)

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("inverse of 0")
        if self.has_table:
            return self._exp[-self._log[a] % self.n]
        return self._pow_slow(a, self.n - 1)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, t: int) -> int:
        if t < 0:
            return self.pow(self.inv(a), -t)
        if t == 0:
            return 1
        if a == 0:
            return 0
        if self.has_table:
            return self._exp[self._log[a] * t % self.n]
        return self._pow_slow(a, t % self.n or self.n)

    def alpha_pow(self, t: int) -> int:
        """alpha^t for any integer t."""
        if self.has_table:
            return self._exp[t % self.n]
        return self._pow_slow(self.alpha, t % self.n)

    def dlog(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("logarithm of 0")
        if self.has_table:
            return self._log[a]
        return self._bsgs(a)

    def _bsgs(self, a):
        step = math.isqrt(self.n) + 1
        baby, cur = {}, 1
        for j in range(step):
            baby.setdefault(cur, j)
            cur = self._mul_slow(cur, self.alpha)
        giant = self._pow_slow(self.inv(self.alpha), step)
        cur = a
        for i in range(step + 1):
            if cur in baby:
                return (i * step + baby[cur]) % self.n
            cur = self._mul_slow(cur, giant)
        raise NotPrimitive("logarithm not found")  # pragma: no cover

    # vectorized arithmetic on packed arrays (table mode)

    def add_arrays(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.p == 2:
            return a ^ b
        return self.from_digits(self.to_digits(a) + self.to_digits(b))

    def sub_arrays(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.p == 2:
            return a ^ b
        return self.from_digits(self.to_digits(a) - self.to_digits(b))

    def mul_arrays(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if not self.has_table:
            return np.vectorize(self.mul, otypes=[np.int64])(a, b)
        out = self.exp_table[(self.log_table[a] + self.log_table[b]) % self.n]
        return np.where((a == 0) | (b == 0), 0, out)

    # subfields and trace

    def _subfield_degree(self, q: int) -> int:
        s = round(math.log(q, self.p)) if q > 1 else 0
        if s < 1 or self.p ** s != q or self.k % s:
            raise NotASubfield(f"GF({q}) is not a subfield of GF({self.p}^{self.k})")
        return s

    def frobenius(self, a: int, q: int | None = None) -> int:
        return self.pow(a, self.q if q is None else q)

    def in_subfield(self, a: int, q: int | None = None) -> bool:
        q = self.q if q is None else q
        self._subfield_degree(q)
        return self.pow(a, q) == a

    def trace_to_subfield(self, a: int, q: int | None = None) -> int:
        """Relative trace sum_{j<k/s} a^(q^j) down to GF(q), q = p^s.

        The result is a packed element of the subfield; for q = p it is simply
        an int in [0, p).
        """
        q = self.q if q is None else q
        s = self._subfield_degree(q)
        acc, cur = 0, a
        for _ in range(self.k // s):
            acc = self.add(acc, cur)
            cur = self.pow(cur, q)
        if self.pow(acc, q) != acc:
            raise InvariantError("trace left the subfield")
        return acc

    def trace(self, a: int) -> int:
        return self.trace_to_subfield(a, self.q)

    @cached_property
    def _trace_matrix(self):
        # column d holds the digits of Tr(x^d)
        basis = [self.p ** d for d in range(self.k)]
        return self.to_digits([self.trace(b) for b in basis]).T

    def trace_array(self, arr) -> np.ndarray:
        """Vectorized trace to GF(q) (GF(p)-linear, so one matrix product)."""
        digits = self.to_digits(arr)
        return self.from_digits(digits @ self._trace_matrix.T)


def field_new(params: FieldParams, table: bool | None = None) -> Field:
    return Field(params, table=table)


def same_field(a: Field, b: Field):
    if a is not b and a.params != b.params:
        raise FieldMismatch(f"{a!r} vs {b!r}")
