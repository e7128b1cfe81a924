"""The inverse function x^(q^m - 2) and the span law q^m - q^m/p.

The support of the minimal polynomial is read off Lucas digits, so the closed
form never needs to generate the sequence at all.
"""
from apncodes import (Field, auto_params, berlekamp_massey, gen_sequence,
                      inverse_apn_span, inverse_apn_support, minimal_poly_inverse_apn)

for p, s, m in [(2, 1, 4), (3, 1, 2), (3, 1, 3), (5, 1, 2), (3, 2, 2)]:
    q = p ** s
    F = Field(auto_params(p, m, s))
    closed = minimal_poly_inverse_apn(F)
    bm, span = berlekamp_massey(gen_sequence(F, q ** m - 2))
    print(f"p={p} q={q} m={m}: span {span} (law {inverse_apn_span(q, m, p)}), closed form agrees: {closed == bm}")

prof = inverse_apn_support(3, 2)
print("support over GF(9)/GF(3):", sorted(prof.support))
print("M(x) =", minimal_poly_inverse_apn(Field(auto_params(3, 2))))
