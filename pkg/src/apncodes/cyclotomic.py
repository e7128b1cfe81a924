"""q-cyclotomic cosets modulo n."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidModulus


def _check(q: int, n: int) -> None:
    if n < 1:
        raise InvalidModulus(f"modulus must be positive, got {n}")
    # without gcd(q, n) = 1 multiplication by q is not a permutation of Z_n
    # and orbits need not close up
    if math.gcd(q, n) != 1:
        raise InvalidModulus(f"q={q} is not invertible mod n={n}")


def coset(j: int, q: int, n: int) -> list[int]:
    """Orbit of j under i -> q*i mod n, sorted."""
    _check(q, n)
    j %= n
    orbit = [j]
    cur = j * q % n
    while cur != j:
        orbit.append(cur)
        cur = cur * q % n
    return sorted(orbit)


@dataclass(frozen=True)
class CosetTable:
    q: int
    n: int
    leaders: tuple
    coset_of: np.ndarray   # j -> leader of its coset
    sizes: dict

    def members(self, leader: int) -> list[int]:
        return coset(leader, self.q, self.n)

    def __len__(self):
        return len(self.leaders)


def leader_array(q: int, n: int) -> np.ndarray:
    """leader[j] = smallest element of the coset of j, for all j in Z_n.

    Vectorized over j.
    """
    _check(q, n)
    js = np.arange(n, dtype=np.int64)
    best = js.copy()
    mult = q % n
    while mult != 1 % n:
        np.minimum(best, js * mult % n, out=best)
        mult = mult * q % n
    return best


def build_table(q: int, n: int) -> CosetTable:
    """Partition Z_n into q-cyclotomic cosets; leaders are the smallest
    member of each coset."""
    _check(q, n)
    if n > 64:
        leader_of = leader_array(q, n)
        leaders = np.flatnonzero(leader_of == np.arange(n))
        counts = np.bincount(leader_of, minlength=n)
        return CosetTable(q, n, tuple(leaders.tolist()), leader_of,
                          {int(j): int(counts[j]) for j in leaders})
    leader_of = np.full(n, -1, dtype=np.int64)
    leaders, sizes = [], {}
    for j in range(n):
        if leader_of[j] >= 0:
            continue
        size, cur = 0, j
        while True:
            leader_of[cur] = j
            size += 1
            cur = cur * q % n
            if cur == j:
                break
        leaders.append(j)
        sizes[j] = size
    return CosetTable(q, n, tuple(leaders), leader_of, sizes)


def orbit_union(reps, q: int, n: int) -> set[int]:
    out = set()
    for r in reps:
        out.update(coset(r, q, n))
    return out
