"""Exception hierarchy shared by all modules."""


class SubGRSError(Exception):
    """Base class for every error raised by this package."""


class NonPrimeCharacteristic(SubGRSError, ValueError):
    pass


class ReducibleModulus(SubGRSError, ValueError):
    pass


class FieldMismatch(SubGRSError, TypeError):
    pass


class DivisionByZero(SubGRSError, ZeroDivisionError):
    pass


class NotASquare(SubGRSError, ValueError):
    pass


class ShapeMismatch(SubGRSError, ValueError):
    pass


class DuplicatePoints(SubGRSError, ValueError):
    pass


class ZeroMatrix(SubGRSError, ValueError):
    pass


class TooLarge(SubGRSError, ValueError):
    """A brute-force computation would exceed its work guard."""


class BadDimension(SubGRSError, ValueError):
    pass


class ZeroTwist(SubGRSError, ValueError):
    pass


class OutOfRange(SubGRSError, ValueError):
    pass


class BadIndex(SubGRSError, IndexError):
    pass


class NotADivisor(SubGRSError, ValueError):
    pass


class OddLength(SubGRSError, ValueError):
    pass


class EvenLength(SubGRSError, ValueError):
    pass


class EvenCharacteristic(SubGRSError, ValueError):
    pass


class CharacteristicDividesLength(SubGRSError, ValueError):
    pass


class HypothesisFailed(SubGRSError, ValueError):
    pass


class SpecValidation(SubGRSError, ValueError):
    """Malformed CLI job specification."""
