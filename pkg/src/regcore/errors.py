"""Exception types shared across the toolkit.

MathError covers well-posed inputs whose mathematics rejects the request
(infinite colength, exhausted certificates, ...); ParseError covers
malformed input.  The CLI maps MathError to exit code 1 and ParseError
to exit code 2.
"""


class RegcoreError(Exception):
    pass


class ParseError(RegcoreError):
    pass


class MathError(RegcoreError):
    pass


class FieldMismatchError(MathError):
    pass


class NotMPrimaryError(MathError):
    pass


class ZeroIdealError(MathError):
    pass


class TruncationCeilingError(MathError):
    pass


class GenericityError(MathError):
    """Sampled data failed its certificate; resampling limit exhausted."""
