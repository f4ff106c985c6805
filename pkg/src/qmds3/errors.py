"""Exception types shared across the package."""


class QmdsError(Exception):
    """Base class for all package errors."""


class NotPrime(QmdsError):
    pass


class EvenCharacteristic(QmdsError):
    pass


class TooLarge(QmdsError):
    pass


class DivisionByZero(QmdsError, ZeroDivisionError):
    pass


class BadNormTarget(QmdsError):
    pass


class DimensionMismatch(QmdsError):
    pass


class PartitionDegenerate(QmdsError):
    pass


class LengthOutOfRange(QmdsError):
    pass


class ConstructionFailed(QmdsError):
    pass


class NormTargetZero(QmdsError):
    pass


class ClosingImpossible(QmdsError):
    pass


class InternalError(QmdsError):
    pass


class RankDeficient(QmdsError):
    pass


class TooShort(QmdsError):
    pass


class TooLargeForOracle(QmdsError):
    pass


class TooLargeForExhaustive(QmdsError):
    pass


class NotCertified(QmdsError):
    pass


class MatrixParseError(QmdsError):
    """Malformed matrix file; carries the 1-based line and column of the error."""

    def __init__(self, line, col, message):
        super().__init__(f"line {line}, col {col}: {message}")
        self.line = line
        self.col = col
