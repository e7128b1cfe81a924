"""Cyclic codes <g(x)> of length n over GF(q), their distances and bounds."""

from __future__ import annotations

import itertools
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .cyclotomic import leader_array
from .errors import (InvariantError, LengthMismatch, NotADivisor,
                     ParameterError, UnsupportedSize)
from .galois import Field
from .polyring import Poly, eval_at_alpha_powers, poly_divmod, reciprocal

EXHAUSTIVE_CAP = 1 << 24
LOW_WEIGHT_CAP = 1 << 26
HT_CAP = 4096
HT_WORK_CAP = 1 << 28   # boolean cells touched before the search gives up
_CHUNK = 1 << 15


@dataclass(frozen=True)
class CyclicCode:
    n: int
    g: Poly
    h: Poly
    field: Field
    zero_exponents: frozenset

    @property
    def ring(self):
        return self.g.ring

    @property
    def q(self):
        return self.g.ring.order

    @property
    def k(self):
        return self.n - self.g.degree

    def __repr__(self):
        return f"CyclicCode([{self.n},{self.k}] over GF({self.q}), g={self.g})"

    @cached_property
    def generator_matrix(self) -> np.ndarray:
        """k x n matrix whose rows are x^j g(x), j < k."""
        rows = np.zeros((self.k, self.n), dtype=np.int64)
        for j in range(self.k):
            rows[j, j:j + len(self.g)] = self.g.coeffs
        return rows


def from_generator(g: Poly, n: int, field: Field) -> CyclicCode:
    """Cyclic code generated by monic g | x^n - 1.

    The defining set is found by evaluating g at beta^i, beta = alpha^(N/n)
    where N is the multiplicative order of the field; so n must divide N.
    """
    if not g or g.lead != 1:
        raise ParameterError("generator polynomial must be monic")
    if field.n % n:
        raise ParameterError(f"n={n} does not divide {field.n}")
    xn1 = Poly.x_n_minus_1(n, g.ring)
    h, rem = poly_divmod(xn1, g)
    if rem:
        raise NotADivisor(f"{g} does not divide x^{n}-1")
    step = field.n // n
    # g has coefficients in GF(q), so g(beta^(qi)) = g(beta^i)^q: one
    # evaluation per q-cyclotomic coset decides membership for the whole coset.
    leader = leader_array(g.ring.order, n)
    reps = np.flatnonzero(leader == np.arange(n))
    values = eval_at_alpha_powers(g, field, reps * step)
    zero_reps = reps[values == 0]
    zeros = frozenset(np.flatnonzero(np.isin(leader, zero_reps)).tolist())
    if len(zeros) != g.degree:
        raise InvariantError("x^n - 1 should be separable: #zeros != deg g")
    return CyclicCode(n, g, h, field, zeros)


def encode(code: CyclicCode, message) -> list[int]:
    """Coefficients of message(x) g(x) mod (x^n - 1), padded to length n."""
    message = list(message)
    if len(message) != code.k:
        raise LengthMismatch(f"message length {len(message)} != k = {code.k}")
    prod = Poly(message, code.ring) * code.g
    word = list(prod.coeffs) + [0] * (code.n - len(prod))
    return word[:code.n]


def is_codeword(code: CyclicCode, word) -> bool:
    if len(word) != code.n:
        raise LengthMismatch(f"word length {len(word)} != n = {code.n}")
    return not (Poly(word, code.ring) % code.g)


def dual(code: CyclicCode) -> CyclicCode:
    """Dual code, generated by the monic reciprocal of h(x)."""
    return from_generator(reciprocal(code.h), code.n, code.field)


def reciprocal_code(code: CyclicCode) -> CyclicCode:
    return from_generator(reciprocal(code.g), code.n, code.field)


# -- exhaustive enumeration ---------------------------------------------------

def _require_prime(code):
    if not code.ring.is_prime_field:
        raise UnsupportedSize("enumeration implemented for prime ground fields only")


def _weights(code: CyclicCode, workers: int = 1) -> np.ndarray:
    """Histogram of codeword weights over all q^k messages."""
    _require_prime(code)
    q, k, n = code.q, code.k, code.n
    total = q ** k
    if total > EXHAUSTIVE_CAP:
        raise UnsupportedSize(f"q^k = {total} exceeds 2^24")
    G = code.generator_matrix
    place = q ** np.arange(k, dtype=np.int64)

    def sweep(lo, hi):
        hist = np.zeros(n + 1, dtype=np.int64)
        for start in range(lo, hi, _CHUNK):
            idx = np.arange(start, min(hi, start + _CHUNK), dtype=np.int64)
            msgs = (idx[:, None] // place) % q
            words = (msgs @ G) % q
            hist += np.bincount(np.count_nonzero(words, axis=1), minlength=n + 1)
        return hist

    workers = max(1, int(workers))
    bounds = np.linspace(0, total, workers + 1).astype(np.int64)
    parts = list(zip(bounds[:-1].tolist(), bounds[1:].tolist()))
    if workers == 1:
        return sum(sweep(lo, hi) for lo, hi in parts)
    with ThreadPoolExecutor(workers) as pool:
        return sum(pool.map(lambda b: sweep(*b), parts))


def weight_distribution(code: CyclicCode, workers: int = 1) -> dict[int, int]:
    hist = _weights(code, workers)
    return {w: int(c) for w, c in enumerate(hist) if c}


# -- low-weight search -----------------------------------------------------------

def low_weight_cost(n: int, q: int, w_max: int) -> int:
    return sum(math.comb(n, w) * (q - 1) ** (w - 1) for w in range(1, w_max + 1))


def low_weight_search(code: CyclicCode, w_max: int) -> int | None:
    """Smallest weight <= w_max of a nonzero codeword, or None.

    By cyclicity a minimum-weight word may be shifted to have c_0 = 1, so the
    search fixes position 0.  Word c is in the code iff sum c_j (x^j mod g) = 0;
    the last position is found by hashing the residues x^j mod g.
    """
    _require_prime(code)
    n, q, r = code.n, code.q, code.g.degree
    if low_weight_cost(n, q, w_max) > LOW_WEIGHT_CAP:
        raise UnsupportedSize(f"low-weight search to w={w_max} exceeds the 2^26 budget")
    if r == 0:
        return 1
    res = np.zeros((n, r), dtype=np.int64)
    cur = np.zeros(r, dtype=np.int64)
    cur[0] = 1
    gl = np.array(code.g.coeffs[:r], dtype=np.int64)
    for j in range(n):
        res[j] = cur
        top = cur[-1]
        cur = np.roll(cur, 1)
        cur[0] = 0
        cur = (cur - top * gl) % q
    lookup = {}
    for j in range(1, n):
        for v in range(1, q):
            lookup.setdefault(((v * res[j]) % q).tobytes(), []).append(j)
    if not res[0].any():
        return 1
    for w in range(2, w_max + 1):
        for rest in itertools.combinations(range(1, n), w - 2):
            for vals in itertools.product(range(1, q), repeat=w - 2):
                acc = res[0].copy()
                for j, v in zip(rest, vals):
                    acc += v * res[j]
                need = ((-acc) % q).tobytes()
                last = max(rest, default=0)
                if any(j > last for j in lookup.get(need, ())):
                    return w
    return None


# -- distance ------------------------------------------------------------------

@dataclass(frozen=True)
class Distance:
    lower: int
    upper: int
    method: str

    @property
    def exact(self):
        return self.lower if self.lower == self.upper else None

    def __str__(self):
        return str(self.lower) if self.exact is not None else f"[{self.lower},{self.upper}]"


def min_distance(code: CyclicCode, strategy="auto", workers: int = 1) -> Distance:
    """Minimum distance, exactly when affordable and as an interval otherwise.

    ``strategy`` is ``"auto"``, ``"exhaustive"``, ``"bounds"`` or
    ``("low_weight", w_max)`` (also accepted as the string ``"lw:W"``).
    """
    n, k = code.n, code.k
    singleton = n - k + 1
    if k == 0:
        return Distance(n + 1, n + 1, "zero-code")
    if isinstance(strategy, str) and strategy.startswith("lw:"):
        strategy = ("low_weight", int(strategy[3:]))
    if strategy == "exhaustive":
        hist = _weights(code, workers)
        d = int(np.flatnonzero(hist[1:])[0]) + 1
        return Distance(d, d, "exhaustive")
    if isinstance(strategy, tuple) and strategy[0] == "low_weight":
        w_max = int(strategy[1])
        d = low_weight_search(code, w_max)
        if d is not None:
            return Distance(d, d, f"low-weight<={w_max}")
        return Distance(max(w_max + 1, _bound(code)), singleton, f"low-weight<={w_max}")
    if strategy not in ("auto", "bounds"):
        raise ParameterError(f"unknown distance strategy {strategy!r}")
    if strategy == "auto" and code.ring.is_prime_field:
        if code.q ** k <= EXHAUSTIVE_CAP:
            return min_distance(code, "exhaustive", workers)
        lower = _bound(code)
        w_max = 0
        while w_max + 1 <= singleton and low_weight_cost(n, code.q, w_max + 1) <= LOW_WEIGHT_CAP:
            w_max += 1
        if w_max >= lower:
            d = low_weight_search(code, w_max)
            if d is not None:
                return Distance(d, d, f"low-weight<={w_max}")
            lower = max(lower, w_max + 1)
        return Distance(lower, singleton, "bounds")
    return Distance(_bound(code), singleton, "bounds")


def _bound(code):
    try:
        return hartmann_tzeng_bound(code)
    except UnsupportedSize:
        return bch_bound(code)


# -- BCH and Hartmann-Tzeng ---------------------------------------------------

def _unit_multipliers(n: int, q: int) -> list[int]:
    """Units a mod n up to the action a -> q a and a -> -a, one per class.

    A defining set is closed under multiplication by q, so progressions with
    step a and q*a (or -a, read backwards) give the same bounds.
    """
    if n == 1:
        return [0]
    units = np.array([a for a in range(1, n) if math.gcd(a, n) == 1], dtype=np.int64)
    lead = leader_array(q, n)
    neg_lead = lead[(-units) % n]
    canon = np.minimum(lead[units], neg_lead)
    return sorted(set(canon.tolist()))


def _run_lengths(member: np.ndarray, step: int) -> np.ndarray:
    """run[b] = number of consecutive b, b+step, ... (mod n) in the set,
    capped at n.  ``step`` must be a unit mod n.

    Walking b0, b0+step, ... visits every residue once, so runs are read off
    one cyclic sequence with a next-zero scan.
    """
    n = len(member)
    if member.all():
        return np.full(n, n, dtype=np.int64)
    order = (np.arange(n, dtype=np.int64) * step) % n
    walk = np.concatenate([member[order], member[order]])
    pos = np.arange(2 * n, dtype=np.int64)
    nxt = np.where(walk, 2 * n, pos)
    nxt = np.minimum.accumulate(nxt[::-1])[::-1]
    run = np.empty(n, dtype=np.int64)
    run[order] = nxt[:n] - pos[:n]
    return run


def _even_weight_lift(code: CyclicCode, bound: int) -> int:
    # Binary code whose generator rows all have even weight is an even-weight
    # code, so an odd lower bound can be raised by one.
    if code.q == 2 and code.g.weight() % 2 == 0 and bound % 2 == 1:
        return bound + 1
    return bound


def _membership(code):
    member = np.zeros(code.n, dtype=bool)
    member[list(code.zero_exponents)] = True
    return member


def bch_bound(code: CyclicCode, lift: bool = True) -> int:
    """delta such that delta - 1 consecutive zeros alpha^(b + j a), gcd(a, n) = 1,
    lie in the defining set; maximized over b and the multiplier a."""
    n = code.n
    if len(code.zero_exponents) == n:
        return n + 1
    member = _membership(code)
    best = 0
    for a in _unit_multipliers(n, code.q):
        best = max(best, int(_run_lengths(member, a).max()))
    bound = best + 1
    return _even_weight_lift(code, bound) if lift else bound


def hartmann_tzeng_search(code: CyclicCode) -> tuple[int, dict]:
    """Best Hartmann-Tzeng bound over the defining set.

    If {b + i1 a + i2 c : 0 <= i1 <= delta - 2, 0 <= i2 <= s} lies in the
    defining set with gcd(a, n) = 1 and gcd(c, n) < delta, then
    d >= delta + s.  Returns (bound, parameters).  s = 0 is the BCH case.

    The search is exhaustive up to ``HT_WORK_CAP`` cell updates.  Past that
    it stops with the best bound found so far, which is still a valid lower
    bound, and sets ``params["truncated"]``.
    """
    n = code.n
    if n > HT_CAP:
        raise UnsupportedSize(f"Hartmann-Tzeng search limited to n <= {HT_CAP}")
    if len(code.zero_exponents) == n:
        return n + 1, {}
    member = _membership(code)
    best, params = 1, {"b": 0, "a": 1, "c": 0, "delta": 1, "s": 0}
    idx = np.arange(n)
    cs = np.arange(1, n)
    gcds = np.gcd(cs, n)
    work = 0
    for a in _unit_multipliers(n, code.q):
        if work > HT_WORK_CAP:
            params = {**params, "truncated": True}
            break
        run = _run_lengths(member, a)
        top = int(run.max())
        if top + 1 > best:
            b = int(np.flatnonzero(run == top)[0])
            best, params = top + 1, {"b": b, "a": a, "c": 0, "delta": top + 1, "s": 0}
        for delta in range(top + 1, 2, -1):
            if work > HT_WORK_CAP:
                params = {**params, "truncated": True}
                break
            ok = run >= delta - 1
            # s + 1 translates need s + 1 distinct starting points in ok
            if delta + int(ok.sum()) - 1 <= best:
                continue
            usable = cs[gcds < delta]
            period = n // gcds[gcds < delta]
            rows = ok[None, :].repeat(len(usable), axis=0)
            s = 0
            while True:
                s += 1
                rows &= (s < period)[:, None]
                if not rows.any():
                    break
                rows &= ok[(idx[None, :] + s * usable[:, None]) % n]
                work += rows.size
                alive = np.flatnonzero(rows.any(axis=1))
                if len(alive) and delta + s > best:
                    c_pos = int(alive[0])
                    b = int(np.flatnonzero(rows[c_pos])[0])
                    best = delta + s
                    params = {"b": b, "a": a, "c": int(usable[c_pos]),
                              "delta": delta, "s": s}
    return best, params


def hartmann_tzeng_bound(code: CyclicCode, lift: bool = True) -> int:
    bound, _ = hartmann_tzeng_search(code)
    bound = max(bound, bch_bound(code, lift=False))
    return _even_weight_lift(code, bound) if lift else bound


def progression_in_defining_set(code: CyclicCode, start: int, step: int, count: int) -> bool:
    """True when alpha^(start + j*step), j < count, are all zeros of the code."""
    return all((start + j * step) % code.n in code.zero_exponents for j in range(count))


def composite_bounds(code: CyclicCode) -> dict:
    """Bounds on the code and on its reciprocal-generator code (which shares
    the weight distribution); the usable lower bound is the max."""
    rc = reciprocal_code(code)
    out = {"bch": bch_bound(code), "bch_reciprocal": bch_bound(rc)}
    try:
        out["ht"] = hartmann_tzeng_bound(code)
        out["ht_reciprocal"] = hartmann_tzeng_bound(rc)
    except UnsupportedSize:
        out["ht"] = out["ht_reciprocal"] = None
    out["lower"] = max(v for v in out.values() if v is not None)
    return out
