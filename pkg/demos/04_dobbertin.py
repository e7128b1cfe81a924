"""Dobbertin's exponent and the R-set bookkeeping.

With m = 5i the exponent is 2^{4i} + 2^{3i} + 2^{2i} + 2^i - 1. A binary word
of length m lands in the support when it is covered by e an odd number of
times (counted over rotations). The R-sets sort those odd words by shape.
"""
from apncodes import BitSeq, build_r_sets, cover_count, dobbertin_exponent, dobbertin_span, odd_sequences

e = BitSeq.from_str(format(dobbertin_exponent(1), "05b"))
print("e for i=1:", e)
for w in ("11000", "10001", "00111"):
    x = BitSeq.from_str(w)
    print(f"  {w}: cover count {cover_count(x, e)}")

for i in (1, 2, 3):
    rs = build_r_sets(i)
    sizes = {name: len(members) for name, members in rs.classes().items()}
    brute = len(odd_sequences(i))
    print(f"i={i}: span {dobbertin_span(i)}, brute-force odd words {brute}, R-set sizes {sizes}")
