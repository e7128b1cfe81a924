"""Sequences s_t = Tr((1 + alpha^t)^e) and their minimal polynomials.

Three independent routes to the minimal polynomial of such a sequence are
provided and cross-checked throughout the test-suite:

* Berlekamp-Massey on the generated values (:func:`berlekamp_massey`);
* the gcd formula (:func:`apncodes.polyring.minimal_poly_gcd_formula`);
* the closed form assembled from the binomial coefficient profile
  (:func:`coeff_profile`, :func:`minimal_poly_from_profile`) together with
  the explicit supports for the inverse and Dobbertin exponents.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field as dc_field
from functools import lru_cache

import numpy as np

from .cyclotomic import coset, leader_array
from .errors import (EmptySequence, ExponentOutOfRange, FieldMismatch,
                     InvariantError, LengthMismatch, ParameterError,
                     UnsupportedSize)
from .galois import Field, is_prime, prime_factors
from .polyring import Poly, minimal_poly_of_element

DOBBERTIN_MAX_I = 4
BRUTE_FORCE_MAX_I = 3
DU_CAP = 1 << 16
EXPANSION_CAP = 4096
_BM_NUMPY_MIN = 512


@dataclass(frozen=True)
class Sequence:
    values: tuple
    field: Field
    e: int | None = None

    @property
    def n(self):
        return len(self.values)

    @property
    def ring(self):
        return self.field.ground

    def __len__(self):
        return len(self.values)


def gen_sequence(field: Field, e: int) -> Sequence:
    """One period of s_t = Tr((1 + alpha^t)^e), t = 0..n-1, traced to GF(q).

    (1 + alpha^t)^e is a plain power, so the term where 1 + alpha^t = 0
    contributes Tr(0) for e > 0 and Tr(1) for e = 0.
    """
    n = field.n
    if not 0 <= e < n:
        raise ExponentOutOfRange(f"need 0 <= e <= {n - 1}, got {e}")
    if field.has_table:
        z = field.zech_table
        if e == 0:
            powered = np.ones(n, dtype=np.int64)
        else:
            powered = np.where(z >= 0, field.exp_table[(z * e) % n], 0)
        values = field.trace_array(powered)
        return Sequence(tuple(values.tolist()), field, e)
    values = [field.trace(field.pow(field.add(1, field.alpha_pow(t)), e))
              for t in range(n)]
    return Sequence(tuple(values), field, e)


def berlekamp_massey(seq, ring=None, periods: int = 2) -> tuple[Poly, int]:
    """Shortest LFSR of a periodic sequence; returns (monic M(x), L).

    The connection polynomial 1 + c_1 x + ... + c_L x^L (so that
    sum_j c_j s_{t-j} = 0) is normalized to be monic.  The algorithm is fed
    ``periods`` full periods, which pins down the periodic minimal polynomial
    even when L exceeds half the period.
    """
    values = list(getattr(seq, "values", seq))
    if ring is None:
        ring = seq.field.ground
    if not values:
        raise EmptySequence("empty sequence")
    s = values * periods
    if ring.is_prime_field:
        c, ell = _bm_prime(s, ring.p)
    else:
        c, ell = _bm_generic(s, ring)
    c = (c + [0] * (ell + 1))[:ell + 1]
    if ell and c[ell] == 0:
        raise InvariantError("sequence is not purely periodic")
    return Poly(c, ring).monic(), ell


def _bm_prime(s, p):
    if len(s) >= _BM_NUMPY_MIN:
        return _bm_prime_numpy(s, p)
    c, b = [1], [1]
    ell, shift, bd = 0, 1, 1
    for k, sk in enumerate(s):
        d = sk
        for j in range(1, min(ell, len(c) - 1) + 1):
            d += c[j] * s[k - j]
        d %= p
        if d == 0:
            shift += 1
            continue
        coef = d * pow(bd, -1, p) % p
        new = c + [0] * max(0, len(b) + shift - len(c))
        for j, bj in enumerate(b):
            new[j + shift] = (new[j + shift] - coef * bj) % p
        if 2 * ell <= k:
            b, bd, ell, shift = c, d, k + 1 - ell, 1
        else:
            shift += 1
        c = new
    return c, ell


def _bm_prime_numpy(s, p):
    # Same recurrence as the list version; the discrepancy is a dot product
    # against the reversed window and the update is a slice operation.
    N = len(s)
    sr = np.array(s[::-1], dtype=np.int64)   # sr[N-1-k] = s[k]
    c = np.zeros(N + 1, dtype=np.int64)
    b = np.zeros(N + 1, dtype=np.int64)
    c[0] = b[0] = 1
    c_len, b_len = 1, 1
    ell, shift, bd = 0, 1, 1
    for k in range(N):
        lo = N - 1 - k
        d = int(sr[lo:lo + ell + 1] @ c[:ell + 1]) % p
        if d == 0:
            shift += 1
            continue
        coef = d * pow(bd, -1, p) % p
        new_len = max(c_len, b_len + shift)
        if 2 * ell <= k:
            old_c, old_len = c.copy(), c_len
        c[shift:shift + b_len] = (c[shift:shift + b_len] - coef * b[:b_len]) % p
        if 2 * ell <= k:
            b, b_len, bd, ell, shift = old_c, old_len, d, k + 1 - ell, 1
        else:
            shift += 1
        c_len = new_len
    return c[:c_len].tolist(), ell


def _bm_generic(s, ring):
    c, b = [1], [1]
    ell, shift, bd = 0, 1, 1
    for k, sk in enumerate(s):
        d = sk
        for j in range(1, min(ell, len(c) - 1) + 1):
            d = ring.add(d, ring.mul(c[j], s[k - j]))
        if d == 0:
            shift += 1
            continue
        coef = ring.mul(d, ring.inv(bd))
        new = c + [0] * max(0, len(b) + shift - len(c))
        for j, bj in enumerate(b):
            new[j + shift] = ring.sub(new[j + shift], ring.mul(coef, bj))
        if 2 * ell <= k:
            b, bd, ell, shift = c, d, k + 1 - ell, 1
        else:
            shift += 1
        c = new
    return c, ell


# -- binomial coefficients mod p ---------------------------------------------

@lru_cache(maxsize=None)
def _binom_table(p):
    return np.array([[math.comb(a, b) % p for b in range(p)] for a in range(p)],
                    dtype=np.int64)


def lucas_binom(N: int, M: int, p: int) -> int:
    """C(N, M) mod p as the product of digit binomials in base p."""
    if N < 0 or M < 0:
        raise ParameterError("lucas_binom needs N, M >= 0")
    result = 1
    while N or M:
        a, b = N % p, M % p
        if b > a:
            return 0
        result = result * math.comb(a, b) % p
        N //= p
        M //= p
    return result


def lucas_binom_array(N: int, Ms, p: int) -> np.ndarray:
    Ms = np.asarray(Ms, dtype=np.int64)
    if p == 2:
        return ((Ms & ~np.int64(N)) == 0).astype(np.int64)
    table = _binom_table(p)
    out = np.ones(Ms.shape, dtype=np.int64)
    rest = Ms.copy()
    while N or rest.any():
        out = out * table[N % p, rest % p] % p
        N //= p
        rest //= p
    return out


def digit_sum(i, q: int, m: int):
    """Sum of the m base-q digits of i (works on ints and arrays)."""
    total = 0 * i
    for _ in range(m):
        total = total + i % q
        i = i // q
    return total


# -- coefficient profiles ---------------------------------------------------

@dataclass
class CoeffProfile:
    """The expansion coefficients C(i) of s_t = sum_i C(i) alpha^(i t).

    ``coeff`` is an int array over Z_n with values in [0, p); ``support`` is
    its nonzero set and ``reduced_support`` holds one representative per
    q-cyclotomic coset meeting the support.
    """

    e: int
    q: int
    m: int
    p: int
    coeff: np.ndarray = dc_field(repr=False)
    support: tuple = dc_field(repr=False)
    reduced_support: tuple = ()

    @property
    def n(self):
        return self.q ** self.m - 1

    @property
    def span(self):
        return len(self.support)

    def digit_sum(self, i):
        return digit_sum(i, self.q, self.m)


def _check_qmp(q, m, p):
    if p is None:
        p = prime_factors(q)[0] if q > 1 else 0
    if not is_prime(p) or q < p or p ** round(math.log(q, p)) != q:
        raise ParameterError(f"q={q} is not a power of p={p}")
    if m < 1:
        raise ParameterError("m must be positive")
    return p


def _profile(e, q, m, p, coeff, reps=None):
    n = q ** m - 1
    coeff = np.asarray(coeff, dtype=np.int64)
    if n > 1 and not np.array_equal(coeff[(np.arange(n) * q) % n], coeff):
        raise InvariantError("coefficients are not constant on cyclotomic cosets")
    support = np.flatnonzero(coeff)
    if reps is None:
        leaders = leader_array(q, n)
        reps = np.unique(leaders[support])
    return CoeffProfile(e, q, m, p, coeff, tuple(support.tolist()),
                        tuple(int(r) for r in reps))


def coeff_profile(e: int, q: int, m: int, p: int | None = None) -> CoeffProfile:
    """C(i) = sum_{j<m} binom(e, q^j i mod n) mod p, via Lucas' theorem."""
    p = _check_qmp(q, m, p)
    n = q ** m - 1
    if not 0 <= e < n:
        raise ExponentOutOfRange(f"need 0 <= e < {n}, got {e}")
    idx = np.arange(n, dtype=np.int64)
    total = np.zeros(n, dtype=np.int64)
    for j in range(m):
        total += lucas_binom_array(e, idx * pow(q, j, n) % n, p)
    return _profile(e, q, m, p, total % p)


def minimal_poly_from_profile(field: Field, profile: CoeffProfile) -> Poly:
    """Product of the minimal polynomials of alpha^(-i) over the reduced
    support: the closed form for the sequence's minimal polynomial."""
    if (field.q, field.m) != (profile.q, profile.m):
        raise FieldMismatch("profile and field disagree on (q, m)")
    g = Poly([1], field.ground)
    for i in profile.reduced_support:
        g = g * minimal_poly_of_element(field, field.alpha_pow(-i), field.q)
    if g.degree != profile.span:
        raise InvariantError(f"closed form has degree {g.degree}, span {profile.span}")
    return g


def expand_sequence(seq: Sequence, check: bool = True) -> np.ndarray:
    """Coefficients c_i in GF(q^m) with s_t = sum_i c_i alpha^(i t).

    Recovered by inverting the evaluation map directly:
    c_i = n^{-1} sum_t s_t alpha^(-i t) = -sum_t s_t alpha^(-i t), since
    n = -1 in characteristic p.  When ``check`` is set and the sequence knows
    its exponent, the result is compared against :func:`coeff_profile`.
    """
    field = seq.field
    n = seq.n
    if n == 0:
        raise EmptySequence("empty sequence")
    if n > EXPANSION_CAP or not field.has_table:
        raise UnsupportedSize(f"direct expansion limited to n <= {EXPANSION_CAP}")
    vals = np.array(seq.values, dtype=np.int64)
    ts = np.flatnonzero(vals)
    lv = field.log_table[vals[ts]]
    out = np.zeros(n, dtype=np.int64)
    if len(ts):
        rows = max(1, (1 << 22) // (len(ts) * field.k))
        for start in range(0, n, rows):
            i = np.arange(start, min(n, start + rows), dtype=np.int64)
            terms = field.exp_table[(lv[None, :] - i[:, None] * ts[None, :]) % n]
            if field.p == 2:
                sums = np.bitwise_xor.reduce(terms, axis=1)
            else:
                sums = field.from_digits(field.to_digits(terms).sum(axis=1))
            out[start:start + len(i)] = sums
    out = field.sub_arrays(np.zeros(n, dtype=np.int64), out)
    if check and seq.e is not None:
        prof = coeff_profile(seq.e, field.q, field.m, field.p)
        if not np.array_equal(out, prof.coeff):
            raise InvariantError("direct expansion disagrees with the binomial profile")
    return out


# -- inverse exponent e = q^m - 2 ----------------------------------------

def inverse_apn_support(q: int, m: int, p: int | None = None) -> CoeffProfile:
    """Profile of e = q^m - 2 by the digit-sum rule.

    C(i) = binom(q^m - 1, i) (s_q(i) + m) mod p, so i is in the support
    exactly when s_q(i) + m is nonzero mod p.  The support has q^m (1 - 1/p)
    elements.
    """
    p = _check_qmp(q, m, p)
    n = q ** m - 1
    idx = np.arange(n, dtype=np.int64)
    coeff = lucas_binom_array(n, idx, p) * ((digit_sum(idx, q, m) + m) % p) % p
    prof = _profile(n - 1, q, m, p, coeff)
    if prof.span != q ** m - q ** m // p:
        raise InvariantError(f"support size {prof.span} != q^m (1 - 1/p)")
    return prof


def minimal_poly_inverse_apn(field: Field) -> Poly:
    prof = inverse_apn_support(field.q, field.m, field.p)
    return minimal_poly_from_profile(field, prof)


def inverse_apn_span(q: int, m: int, p: int) -> int:
    return q ** m - q ** m // p


# -- Dobbertin exponent --------------------------------------------------------

def dobbertin_exponent(i: int) -> int:
    if i < 1:
        raise ParameterError("i must be >= 1")
    return 2 ** (4 * i) + 2 ** (3 * i) + 2 ** (2 * i) + 2 ** i - 1


def dobbertin_span(i: int) -> int:
    """Linear span of the Dobbertin sequence for block parameter i."""
    m = 5 * i
    if i % 2 == 0:
        return m * (22 * (2 ** i - 1) // 3 - 3 * i)
    return m * (22 * (2 ** i - 2) // 3 - 3 * i + 6) + 1


def dobbertin_rset_size(i: int) -> int:
    if i % 2 == 0:
        return 22 * (2 ** i - 1) // 3 - 3 * i
    return 22 * (2 ** i - 2) // 3 - 3 * i + 7


@dataclass(frozen=True)
class BitSeq:
    """An m-bit word; bit j is the coefficient of 2^j.  The all-ones word is
    excluded."""

    bits: int
    m: int

    def __post_init__(self):
        if self.m < 1 or not 0 <= self.bits < (1 << self.m) - 1:
            raise ParameterError(f"{self.bits} is not a non-all-ones {self.m}-bit word")

    @classmethod
    def from_str(cls, text):
        return cls(int(text, 2), len(text))

    def __str__(self):
        return format(self.bits, f"0{self.m}b")

    @property
    def weight(self):
        return bin(self.bits).count("1")

    def rotate(self, j=1):
        """tau^j, where tau(b_{m-1} ... b_0) = b_0 b_{m-1} ... b_1."""
        return BitSeq(rotate_bits(self.bits, j, self.m), self.m)

    def orbit(self):
        return {rotate_bits(self.bits, j, self.m) for j in range(self.m)}


def rotate_bits(x, j, m):
    j %= m
    mask = (1 << m) - 1
    return ((x >> j) | (x << (m - j))) & mask


def _same_m(x: BitSeq, y: BitSeq):
    if x.m != y.m:
        raise LengthMismatch(f"{x.m}-bit vs {y.m}-bit word")


def is_covered(x: BitSeq, y: BitSeq) -> bool:
    _same_m(x, y)
    return x.bits & ~y.bits == 0


def cover_count(x: BitSeq, e: BitSeq) -> int:
    """Number of rotations tau^j, 0 <= j < m, with tau^j(x) covered by e."""
    _same_m(x, e)
    return sum(1 for j in range(x.m) if rotate_bits(x.bits, j, x.m) & ~e.bits == 0)


def parity(x: BitSeq, e: BitSeq) -> str:
    return "odd" if cover_count(x, e) % 2 else "even"


@dataclass(frozen=True)
class RSets:
    i: int
    r1: frozenset
    r2: frozenset
    r4: frozenset
    r3: frozenset
    r2pair: frozenset
    r1single: frozenset
    r0: frozenset

    @property
    def m(self):
        return 5 * self.i

    def classes(self):
        return {"R^1": self.r1, "R^2": self.r2, "R_4": self.r4, "R_3": self.r3,
                "R_2": self.r2pair, "R_1": self.r1single, "R_0": self.r0}

    @property
    def r_all(self):
        return frozenset().union(*self.classes().values())


def expected_rset_sizes(i: int) -> dict:
    even = i % 2 == 0
    return {"R^1": (2 ** i - 1) // 3 if even else (2 ** i - 2) // 3,
            "R^2": 7 * (2 ** i - i - 1),
            "R_4": i,
            "R_3": 3 * (i - 1),
            "R_2": 2,
            "R_1": 1 if even else 0,
            "R_0": 0 if even else 1}


def build_r_sets(i: int) -> RSets:
    """Explicit rotation-class representatives for the Dobbertin support."""
    if i < 1:
        raise ParameterError("i must be >= 1")
    if i > DOBBERTIN_MAX_I:
        raise UnsupportedSize(f"Dobbertin machinery limited to i <= {DOBBERTIN_MAX_I}")
    m = 5 * i
    high = [2 * i, 3 * i, 4 * i]
    low_words = range(1 << i)

    r1 = set()
    for ell in range(2, i + 1):
        if ell % 2 != i % 2:
            continue
        ends = (1 << (i - 1)) | (1 << (i - ell))
        for free in range(1 << (ell - 2)):
            r1.add(ends | (free << (i - ell + 1)))

    high_subsets = [sum(1 << high[b] for b in range(3) if mask >> b & 1)
                    for mask in range(1, 8)]
    r2 = {hs | lw for hs in high_subsets for lw in low_words if bin(lw).count("1") >= 2}
    all_high = sum(1 << h for h in high)
    r4 = {all_high | (1 << j) for j in range(i)}
    pairs = [(1 << a) | (1 << b) for a, b in ((2 * i, 3 * i), (2 * i, 4 * i), (3 * i, 4 * i))]
    r3 = {pr | (1 << j) for pr in pairs for j in range(1, i)}
    r2pair = {(1 << (4 * i)) | (1 << (3 * i)), (1 << (4 * i)) | (1 << (2 * i))}
    r1single = {1} if i % 2 == 0 else set()
    r0 = {0} if i % 2 else set()

    rs = RSets(i, *(frozenset(x) for x in (r1, r2, r4, r3, r2pair, r1single, r0)))
    sizes = {k: len(v) for k, v in rs.classes().items()}
    if sizes != expected_rset_sizes(i):
        raise InvariantError(f"R-set sizes {sizes} != {expected_rset_sizes(i)}")
    if sum(sizes.values()) != len(rs.r_all):
        raise InvariantError("R-classes are not pairwise disjoint")
    canon = {min(rotate_bits(y, j, m) for j in range(m)) for y in rs.r_all}
    if len(canon) != len(rs.r_all):
        raise InvariantError("two R elements are rotations of one another")
    return rs


def odd_sequences(i: int, workers: int = 1) -> np.ndarray:
    """Brute force: every non-all-ones m-bit word whose number of rotations
    covered by the Dobbertin pattern is odd (sorted int array)."""
    if i > BRUTE_FORCE_MAX_I:
        raise UnsupportedSize(f"brute-force parity limited to i <= {BRUTE_FORCE_MAX_I}")
    m = 5 * i
    e = dobbertin_exponent(i)
    total = (1 << m) - 1

    def sweep(lo, hi):
        xs = np.arange(lo, hi, dtype=np.int64)
        cnt = np.zeros(len(xs), dtype=np.int64)
        for j in range(m):
            cnt += (rotate_bits(xs, j, m) & ~e) == 0
        return xs[cnt % 2 == 1]

    return _partitioned(sweep, total, workers, np.concatenate)


def _partitioned(fn, total, workers, combine):
    workers = max(1, int(workers))
    bounds = np.linspace(0, total, workers + 1).astype(int)
    parts = list(zip(bounds[:-1], bounds[1:]))
    if workers == 1:
        return combine([fn(lo, hi) for lo, hi in parts])
    with ThreadPoolExecutor(workers) as pool:
        return combine(list(pool.map(lambda b: fn(*b), parts)))


def dobbertin_support(i: int) -> CoeffProfile:
    """Support of the Dobbertin profile as the union of rotation orbits of R."""
    rs = build_r_sets(i)
    m = 5 * i
    n = (1 << m) - 1
    coeff = np.zeros(n, dtype=np.int64)
    for y in rs.r_all:
        orbit = {rotate_bits(y, j, m) for j in range(m)}
        if y and len(orbit) != m:
            raise InvariantError(f"orbit of {y} has size {len(orbit)} != {m}")
        coeff[list(orbit)] = 1
    prof = _profile(dobbertin_exponent(i), 2, m, 2, coeff, reps=sorted(rs.r_all))
    if prof.span != dobbertin_span(i):
        raise InvariantError(f"support size {prof.span} != {dobbertin_span(i)}")
    return prof


def minimal_poly_dobbertin(field: Field, i: int) -> Poly:
    """Product of m_{alpha^{-y}} over y in R; for odd i the y = 0 term is the
    (x - 1) factor."""
    if (field.p, field.s, field.m) != (2, 1, 5 * i):
        raise FieldMismatch(f"Dobbertin i={i} needs GF(2^{5 * i}) over GF(2)")
    return minimal_poly_from_profile(field, dobbertin_support(i))


# -- differential uniformity ----------------------------------------------------

def differential_uniformity(field: Field, e: int, workers: int = 1) -> int:
    """max over a != 0 and b of #{x : f(x + a) - f(x) = b} for f(x) = x^e.

    Exhaustive over all (a, x).  2 means APN, 1 means planar.
    """
    r = field.order
    if r > DU_CAP or not field.has_table:
        raise UnsupportedSize(f"brute-force differential uniformity needs p^k <= {DU_CAP}")
    xs = np.arange(r, dtype=np.int64)
    f = np.zeros(r, dtype=np.int64)
    f[1:] = field.exp_table[(field.log_table[1:] * e) % field.n]
    if e == 0:
        f[0] = 1

    def sweep(lo, hi):
        best = 0
        for a in range(max(lo, 1), hi):
            diff = field.sub_arrays(f[field.add_arrays(xs, a)], f)
            best = max(best, int(np.bincount(diff, minlength=r).max()))
        return best

    return _partitioned(sweep, r, workers, max)
