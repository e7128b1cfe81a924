"""Cyclic codes generated by the minimal polynomials, with distance bounds.

Small codes get an exact minimum distance by enumerating every codeword.
Bigger ones get an interval: BCH and Hartmann-Tzeng from below, Singleton above.
"""
from apncodes import (Field, auto_params, bch_bound, dual, from_generator,
                      hartmann_tzeng_bound, min_distance, minimal_poly_dobbertin,
                      minimal_poly_inverse_apn, weight_distribution)

F = Field(auto_params(3, 3))
c = from_generator(minimal_poly_inverse_apn(F), F.n, F)
print(c)
print("distance", min_distance(c), "bch", bch_bound(c), "ht", hartmann_tzeng_bound(c))
print("dual", dual(c), "distance", min_distance(dual(c), "lw:5"))

F = Field(auto_params(2, 5))
c = from_generator(minimal_poly_dobbertin(F, 1), F.n, F)
wd = weight_distribution(c)
print("binary [31,15] weight distribution:", dict(sorted(wd.items())))

F = Field(auto_params(2, 10))
c = from_generator(minimal_poly_dobbertin(F, 2), F.n, F)
print("length 1023:", c.n, c.k, "distance interval", min_distance(c))
