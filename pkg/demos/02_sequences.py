"""Power-function sequences and their linear complexity.

s_t = Tr((1 + alpha^t)^e) has period q^m - 1. Berlekamp-Massey
recovers its minimal polynomial, and the gcd construction
(x^n - 1) / gcd(x^n - 1, S(x)) gets the same thing another way.
"""
from apncodes import Field, auto_params, berlekamp_massey, gen_sequence, minimal_poly_gcd_formula

F = Field(auto_params(2, 5))
for e in (1, 3, 7, 29):
    seq = gen_sequence(F, e)
    poly, span = berlekamp_massey(seq)
    gpoly, _ = minimal_poly_gcd_formula(seq)
    print(f"e={e:2d}  span={span:2d}  bm==gcd: {poly == gpoly}")

seq = gen_sequence(F, 29)
print("first period of the inverse-function sequence:")
print("".join(map(str, seq.values)))
