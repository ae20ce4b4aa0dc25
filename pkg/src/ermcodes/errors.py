"""Exception hierarchy shared by all modules."""


class ErmError(Exception):
    """Base class for every error raised by ermcodes."""


class DomainError(ErmError, ValueError):
    """Input outside the mathematical domain of an operation."""


class CharTooSmall(DomainError):
    """The field characteristic does not exceed the degree."""


class SingularBasis(DomainError):
    pass


class SingularMatrix(DomainError):
    pass


class DegreeMismatch(DomainError):
    pass


class DegreeTooHigh(DomainError):
    pass


class LengthMismatch(DomainError):
    pass


class Unsupported(DomainError):
    """No proven closed form exists for the requested parameters."""


class TooLarge(ErmError):
    """An enumeration would exceed the configured budget."""


class NotDecodable(ErmError):
    """No vector within the decoding radius has the given syndrome."""


class DecodingFailure(ErmError):
    pass


class Inconsistent(DecodingFailure):
    pass


class FailedVerification(DecodingFailure):
    pass
