"""Exception hierarchy.

Every error raised by the library derives from :class:`ApnCodesError`.  The
three intermediate classes map onto the command-line exit codes: parameter
problems (2), size caps (3) and internal invariant violations (4).
"""


class ApnCodesError(Exception):
    exit_code = 1


class ParameterError(ApnCodesError, ValueError):
    exit_code = 2


class UnsupportedSize(ApnCodesError):
    exit_code = 3


class InvariantError(ApnCodesError, AssertionError):
    exit_code = 4


class NotIrreducible(ParameterError):
    pass


class NotPrimitive(ParameterError):
    pass


class NotASubfield(ParameterError):
    pass


class FieldMismatch(ParameterError):
    pass


class DivisionByZero(ParameterError, ZeroDivisionError):
    pass


class ZeroPolynomial(DivisionByZero):
    pass


class ExponentOutOfRange(ParameterError):
    pass


class LengthMismatch(ParameterError):
    pass


class EmptySequence(ParameterError):
    pass


class InvalidModulus(ParameterError):
    pass


class NotADivisor(ParameterError):
    pass
