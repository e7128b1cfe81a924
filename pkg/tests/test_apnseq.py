import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from apncodes.apnseq import (BitSeq, berlekamp_massey, build_r_sets,
                             coeff_profile, cover_count, differential_uniformity,
                             digit_sum, dobbertin_exponent, dobbertin_span,
                             dobbertin_support, expand_sequence,
                             expected_rset_sizes, gen_sequence,
                             inverse_apn_span, inverse_apn_support, is_covered,
                             lucas_binom, lucas_binom_array,
                             minimal_poly_dobbertin, minimal_poly_from_profile,
                             minimal_poly_inverse_apn, odd_sequences, parity,
                             rotate_bits, Sequence)
from apncodes.errors import (EmptySequence, ExponentOutOfRange, FieldMismatch,
                             InvariantError,
                             LengthMismatch, ParameterError, UnsupportedSize)
from apncodes.galois import Field, FieldParams, PrimeField, auto_params
from apncodes.polyring import Poly, minimal_poly_gcd_formula
from apncodes.presets import PRESETS

GF3 = PrimeField(3)


@pytest.fixture(scope="module")
def fields():
    return {name: Field(pre.params) for name, pre in PRESETS.items()}


# -- sequences -----------------------------------------------------------------

def test_constant_sequence_for_zero_exponent():
    for params in (PRESETS["ex1"].params, PRESETS["ex3"].params):
        F = Field(params)
        seq = gen_sequence(F, 0)
        assert set(seq.values) == {params.m % params.p}


def test_first_term_of_example1_sequence(fields):
    seq = gen_sequence(fields["ex1"], 7)
    assert seq.values[0] == 1
    assert seq.values == (1, 0, 1, 0, 0, 2, 1, 2)


def test_zero_power_convention(fields):
    # 1 + alpha^4 = 0 in GF(9); that term is Tr(0^7) = 0
    F = fields["ex1"]
    assert F.add(1, F.alpha_pow(4)) == 0
    assert gen_sequence(F, 7).values[4] == 0


def test_exponent_range(fields):
    with pytest.raises(ExponentOutOfRange):
        gen_sequence(fields["ex1"], 8)
    with pytest.raises(ExponentOutOfRange):
        gen_sequence(fields["ex1"], -1)


def test_sequence_regenerates_from_definition(fields):
    F = fields["ex2"]
    seq = gen_sequence(F, 25)
    for t in range(F.n):
        assert seq.values[t] == F.trace(F.pow(F.add(1, F.alpha_pow(t)), 25))


# -- Berlekamp-Massey -------------------------------------------------------

def test_bm_examples(fields):
    assert berlekamp_massey([0] * 10, GF3) == (Poly([1], GF3), 0)
    poly, L = berlekamp_massey(gen_sequence(fields["ex1"], 7))
    assert (str(poly), L) == ("x^6+2x^5+2x^4+2x^2+x+1", 6)
    poly, L = berlekamp_massey(gen_sequence(fields["ex3"], 29))
    assert (str(poly), L) == ("x^16+x^14+x^13+x^10+x^9+x^8+x^7+x^6+x^5+x^2+x+1", 16)
    with pytest.raises(EmptySequence):
        berlekamp_massey([], GF3)


def test_bm_needs_two_periods_when_span_exceeds_half():
    # period 7 with span 6: one period is not enough to pin M(x) down
    vals = [1, 0, 0, 0, 0, 0, 0]
    M, L = berlekamp_massey(vals, PrimeField(2))
    assert L == 7 and str(M) == "x^7+1"
    # one period alone yields a connection polynomial with c_L = 0
    with pytest.raises(InvariantError):
        berlekamp_massey(vals, PrimeField(2), periods=1)


def test_bm_over_subfield_ring():
    F = Field(auto_params(3, 2, 2))   # GF(9^2) over GF(9)
    seq = gen_sequence(F, F.q ** F.m - 2)
    bm, L = berlekamp_massey(seq)
    gcd_poly, L2 = minimal_poly_gcd_formula(seq)
    assert L == L2 == inverse_apn_span(9, 2, 3) == 54
    assert bm == gcd_poly


def test_bm_numpy_path_agrees_with_list_path():
    import random
    from apncodes import apnseq
    rng = random.Random(7)
    for p in (2, 3, 5):
        s = [rng.randrange(p) for _ in range(700)]
        c_np, l_np = apnseq._bm_prime_numpy(s, p)
        saved = apnseq._BM_NUMPY_MIN
        apnseq._BM_NUMPY_MIN = 10 ** 9
        try:
            c_py, l_py = apnseq._bm_prime(s, p)
        finally:
            apnseq._BM_NUMPY_MIN = saved
        assert l_np == l_py
        assert (c_np + [0] * 800)[:l_np + 1] == (c_py + [0] * 800)[:l_py + 1]


# -- Lucas and profiles ------------------------------------------------------

def test_lucas_examples():
    assert lucas_binom(10, 0, 3) == 1
    assert lucas_binom(7, 5, 3) == 0
    assert lucas_binom(7, 5, 2) == 1
    assert lucas_binom(3, 5, 7) == 0


@settings(max_examples=300, deadline=None)
@given(st.integers(0, 3000), st.integers(0, 3000), st.sampled_from([2, 3, 5, 7]))
def test_lucas_matches_math_comb(N, M, p):
    assert lucas_binom(N, M, p) == math.comb(N, M) % p
    assert lucas_binom_array(N, [M], p)[0] == math.comb(N, M) % p


def test_digit_sum():
    assert digit_sum(5, 3, 2) == 3
    assert digit_sum(np.array([0, 8, 26]), 3, 3).tolist() == [0, 4, 6]


def test_profile_of_zero_exponent():
    prof = coeff_profile(0, 3, 2)
    assert prof.coeff[0] == 2 % 3
    assert not prof.coeff[1:].any()


def test_profile_examples():
    prof = coeff_profile(7, 3, 2, 3)
    assert set(prof.support) == set(range(8)) - {1, 3}
    assert coeff_profile(29, 2, 5, 2).span == 16


@pytest.mark.parametrize("e,q,m", [(7, 3, 2), (25, 3, 3), (29, 2, 5), (11, 2, 4), (77, 3, 4)])
def test_profile_is_constant_on_cosets(e, q, m):
    prof = coeff_profile(e, q, m)
    n = q ** m - 1
    idx = np.arange(n)
    assert np.array_equal(prof.coeff[(idx * q) % n], prof.coeff)


@pytest.mark.parametrize("name,e", [("ex1", 7), ("ex2", 25), ("ex3", 29), ("ex1", 3), ("ex3", 11)])
def test_direct_expansion_matches_profile(fields, name, e):
    seq = gen_sequence(fields[name], e)
    out = expand_sequence(seq, check=False)
    assert np.array_equal(out, coeff_profile(e, seq.field.q, seq.field.m).coeff)


def test_expansion_edge_cases(fields):
    F = fields["ex1"]
    zero = Sequence((0,) * 8, F)
    assert not expand_sequence(zero).any()
    ones = expand_sequence(Sequence((1,) * 8, F))
    assert ones[0] != 0 and not ones[1:].any()
    out = expand_sequence(gen_sequence(F, 7))
    assert np.count_nonzero(out) == 6


# -- inverse exponent ----------------------------------------------------------

def test_inverse_support_examples():
    prof = inverse_apn_support(3, 2, 3)
    assert set(range(8)) - set(prof.support) == {1, 3}
    assert prof.span == 6
    assert inverse_apn_support(3, 3, 3).span == 18
    assert inverse_apn_support(2, 5, 2).span == 16


@pytest.mark.parametrize("p,q,m", [(2, 2, m) for m in range(2, 12)] +
                         [(3, 3, m) for m in range(2, 8)] +
                         [(5, 5, m) for m in range(2, 6)] +
                         [(2, 4, m) for m in range(2, 7)] +
                         [(3, 9, m) for m in range(2, 4)] + [(5, 25, 2)])
def test_inverse_support_size_law(p, q, m):
    prof = inverse_apn_support(q, m, p)
    assert prof.span == q ** m - q ** m // p
    # the digit-sum rule agrees with the general binomial profile
    assert prof.support == coeff_profile(q ** m - 2, q, m, p).support


def test_inverse_closed_forms_match_examples(fields):
    assert str(minimal_poly_inverse_apn(fields["ex1"])) == "x^6+2x^5+2x^4+2x^2+x+1"
    assert str(minimal_poly_inverse_apn(fields["ex2"])) == (
        "x^18+2x^16+2x^15+x^14+x^12+x^11+x^10+x^9+x^8+x^7+x^6+x^4+2x^3+2x^2+1")


def test_inverse_dimension_identity():
    # n - span = q^m / p - 1
    for p, q, m in [(2, 2, 4), (3, 3, 3), (5, 5, 2), (3, 9, 2)]:
        n = q ** m - 1
        assert n - inverse_apn_span(q, m, p) == q ** m // p - 1


# -- Dobbertin exponent --------------------------------------------------------

def test_dobbertin_exponents():
    assert dobbertin_exponent(1) == 29
    assert str(BitSeq(29, 5)) == "11101"
    assert dobbertin_exponent(2) == 339
    assert str(BitSeq(339, 10)) == "0101010011"
    with pytest.raises(ParameterError):
        dobbertin_exponent(0)


def test_bitseq_rejects_all_ones():
    with pytest.raises(ParameterError):
        BitSeq(31, 5)


def test_cover_relation():
    e = BitSeq.from_str("11101")
    zero = BitSeq(0, 5)
    assert is_covered(zero, e) and is_covered(e, e)
    assert is_covered(BitSeq.from_str("10100"), e)
    assert not is_covered(BitSeq.from_str("01010"), e)
    with pytest.raises(LengthMismatch):
        is_covered(BitSeq(0, 4), e)


def test_cover_counts():
    e = BitSeq.from_str("11101")
    assert cover_count(BitSeq(0, 5), e) == 5
    assert cover_count(BitSeq.from_str("11000"), e) == 3
    # 10001 is a rotation of 11000, so it has the same count (3, odd)
    assert BitSeq.from_str("10001").bits in BitSeq.from_str("11000").orbit()
    assert cover_count(BitSeq.from_str("10001"), e) == 3
    assert parity(BitSeq.from_str("10001"), e) == "odd"
    # 00111: only the rotations onto bits {3,4,0} and {2,3,4} are covered
    assert cover_count(BitSeq.from_str("00111"), e) == 2
    assert parity(BitSeq.from_str("00111"), e) == "even"


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 2 ** 10 - 2), st.integers(0, 9))
def test_cover_count_is_rotation_invariant(bits, j):
    e = BitSeq(dobbertin_exponent(2), 10)
    x = BitSeq(bits, 10)
    assert cover_count(x.rotate(j), e) == cover_count(x, e)
    assert rotate_bits(rotate_bits(bits, j, 10), 10 - j, 10) == bits


def test_r_sets_small_cases():
    rs = build_r_sets(1)
    assert rs.r_all == {29, 24, 20, 0}
    assert rs.r4 == {29} and rs.r2pair == {24, 20} and rs.r0 == {0}
    sizes = {k: len(v) for k, v in build_r_sets(2).classes().items()}
    assert sizes == {"R^1": 1, "R^2": 7, "R_4": 2, "R_3": 3, "R_2": 2, "R_1": 1, "R_0": 0}
    assert len(build_r_sets(2).r_all) == 16
    sizes = {k: len(v) for k, v in build_r_sets(3).classes().items()}
    assert sizes == {"R^1": 2, "R^2": 28, "R_4": 3, "R_3": 6, "R_2": 2, "R_1": 0, "R_0": 1}
    assert len(build_r_sets(3).r_all) == 42


@pytest.mark.parametrize("i", [1, 2, 3, 4])
def test_r_set_invariants(i):
    rs = build_r_sets(i)
    classes = rs.classes()
    assert {k: len(v) for k, v in classes.items()} == expected_rset_sizes(i)
    assert sum(map(len, classes.values())) == len(rs.r_all)
    m = rs.m
    canon = [min(rotate_bits(y, j, m) for j in range(m)) for y in rs.r_all]
    assert len(set(canon)) == len(canon)
    for y in rs.r_all:
        if y:
            assert len({rotate_bits(y, j, m) for j in range(m)}) == m


def test_r_sets_cap():
    with pytest.raises(UnsupportedSize):
        build_r_sets(5)
    with pytest.raises(UnsupportedSize):
        odd_sequences(4)


@pytest.mark.parametrize("i", [1, 2, 3])
def test_odd_words_are_the_r_orbits(i):
    rs = build_r_sets(i)
    m = rs.m
    orbits = {rotate_bits(y, j, m) for y in rs.r_all for j in range(m)}
    assert set(odd_sequences(i).tolist()) == orbits
    assert set(odd_sequences(i, workers=3).tolist()) == orbits


@pytest.mark.parametrize("i", [1, 2, 3])
def test_odd_weight_two_words(i):
    m = 5 * i
    e = BitSeq(dobbertin_exponent(i), m)
    rs = build_r_sets(i)
    odd2 = {x for x in odd_sequences(i).tolist()
            if bin(x).count("1") == 2 and x & ~e.bits == 0 and x not in rs.r1 | rs.r2}
    y1 = (1 << 4 * i) | (1 << 3 * i)
    y2 = (1 << 4 * i) | (1 << 2 * i)
    # tau^j moves bit b to bit b - j
    expected = {rotate_bits(y1, j, m) for j in (0, i, 4 * i)} | \
               {rotate_bits(y2, j, m) for j in (0, 2 * i, 4 * i)}
    assert odd2 == expected
    assert all(parity(BitSeq(x, m), e) == "odd" for x in expected)


@pytest.mark.parametrize("i", [1, 2, 3, 4])
def test_dobbertin_span_law(i):
    prof = dobbertin_support(i)
    assert prof.span == dobbertin_span(i)
    assert prof.reduced_support == tuple(sorted(build_r_sets(i).r_all))


def test_dobbertin_span_values():
    assert [dobbertin_span(i) for i in (1, 2, 3)] == [16, 160, 616]


@pytest.mark.parametrize("i", [1, 2])
def test_dobbertin_support_matches_binomial_profile(i):
    m = 5 * i
    assert dobbertin_support(i).support == coeff_profile(dobbertin_exponent(i), 2, m).support


def test_dobbertin_closed_form_and_oracles(fields):
    g = minimal_poly_dobbertin(fields["ex3"], 1)
    assert str(g) == "x^16+x^14+x^13+x^10+x^9+x^8+x^7+x^6+x^5+x^2+x+1"
    assert g == berlekamp_massey(gen_sequence(fields["ex3"], 29))[0]
    g4 = minimal_poly_dobbertin(fields["ex4"], 2)
    assert g4.degree == 160
    seq = gen_sequence(fields["ex4"], 339)
    assert g4 == berlekamp_massey(seq)[0] == minimal_poly_gcd_formula(seq)[0]
    with pytest.raises(FieldMismatch):
        minimal_poly_dobbertin(fields["ex4"], 1)


def test_closed_form_from_profile_matches_oracles_generic_exponents(fields):
    for name, e in [("ex1", 5), ("ex2", 11), ("ex3", 7), ("ex3", 15)]:
        F = fields[name]
        closed = minimal_poly_from_profile(F, coeff_profile(e, F.q, F.m, F.p))
        seq = gen_sequence(F, e)
        assert closed == berlekamp_massey(seq)[0] == minimal_poly_gcd_formula(seq)[0]


# -- differential uniformity -------------------------------------------------

def test_differential_uniformity_examples(fields):
    assert differential_uniformity(fields["ex3"], 29) == 2
    assert differential_uniformity(fields["ex3"], 30) == 2
    assert differential_uniformity(Field(auto_params(2, 4)), 14) == 4
    assert differential_uniformity(fields["ex3"], 29, workers=4) == 2


def test_differential_uniformity_planar_and_cap():
    # x^2 is planar over odd-characteristic fields
    assert differential_uniformity(Field(auto_params(3, 3)), 2) == 1
    with pytest.raises(UnsupportedSize):
        differential_uniformity(Field(auto_params(2, 17)), 3)
