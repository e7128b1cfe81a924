"""A short walk through GF(p^k) arithmetic.

Elements are plain ints holding base-p digit vectors, so GF(3^2) lives in 0..8.
"""
import numpy as np

from apncodes import Field, auto_params

F = Field(auto_params(3, 2))
print(F)                      # the field and its primitive modulus
print("order", F.params.order, "cyclic group size", F.n)

a = F.alpha_pow(1)            # alpha itself, the class of x
b = F.alpha_pow(5)
print("alpha^1 * alpha^5 =", F.mul(a, b), "== alpha^6 =", F.alpha_pow(6))
print("inverse of alpha^5 is alpha^3:", F.inv(b) == F.alpha_pow(3))

# the log table turns a power into an index lookup
powers = np.array([F.alpha_pow(t) for t in range(F.n)])
print("alpha^t for t < 8:", powers.tolist())
print("dlog round trip:", all(F.dlog(int(v)) == t for t, v in enumerate(powers)))

# absolute trace down to GF(3), applied elementwise
print("traces:", F.trace_array(powers).tolist())

# GF(3^4) seen over GF(9): the ground ring becomes a subfield view
G = Field(auto_params(3, 2, 2))
print(G.ground, "elements:", [x for x in range(G.params.order) if G.in_subfield(x, 9)])
