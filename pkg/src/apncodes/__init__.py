"""Cyclic codes from APN power-function sequences over finite fields."""

from .errors import (ApnCodesError, DivisionByZero, EmptySequence,
                     ExponentOutOfRange, FieldMismatch, InvalidModulus,
                     InvariantError, LengthMismatch, NotADivisor,
                     NotASubfield, NotIrreducible, NotPrimitive,
                     ParameterError, UnsupportedSize, ZeroPolynomial)
from .galois import (Field, FieldParams, PrimeField, Subfield, auto_params,
                     field_new, is_irreducible, parse_field_spec)
from .polyring import (Poly, format_poly, minimal_poly_gcd_formula,
                       minimal_poly_of_element, parse_poly, poly_gcd,
                       reciprocal)
from .cyclotomic import CosetTable, build_table, coset
from .apnseq import (BitSeq, RSets, Sequence, berlekamp_massey, build_r_sets,
                     coeff_profile, cover_count, differential_uniformity,
                     dobbertin_exponent, dobbertin_span, dobbertin_support,
                     expand_sequence, gen_sequence, inverse_apn_span,
                     inverse_apn_support, lucas_binom,
                     minimal_poly_dobbertin, minimal_poly_from_profile,
                     minimal_poly_inverse_apn, odd_sequences, parity)
from .code import (CyclicCode, Distance, bch_bound, dual, encode,
                   from_generator, hartmann_tzeng_bound, is_codeword,
                   low_weight_search, min_distance, reciprocal_code,
                   weight_distribution)
from .presets import PRESETS, Preset, get_preset
from .report import Report, build_report, verify_examples

__version__ = "0.1.0"
