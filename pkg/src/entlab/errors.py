"""Exception types raised across the library.

Each operation documents which of these it can raise; the CLI maps any of
them to exit code 1 with the class name in the message.
"""


class EntLabError(Exception):
    """Base class for all library errors."""


# states / core
class DimensionMismatch(EntLabError):
    pass


class ZeroNorm(EntLabError):
    pass


class InvalidPartition(EntLabError):
    pass


class TooLarge(EntLabError):
    pass


# measures
class WrongShape(EntLabError):
    pass


class InvalidAlpha(EntLabError):
    pass


class BellBasisUnsupported(EntLabError):
    pass


class ConvergenceFailure(EntLabError):
    def __init__(self, message, best_residual=None, best_value=None):
        super().__init__(message)
        self.best_residual = best_residual
        self.best_value = best_value


class EmptyEnsemble(EntLabError):
    pass


# ame
class BadK(EntLabError):
    pass


class OddN(EntLabError):
    pass


class NotPrime(EntLabError):
    pass


class UnsupportedCatalogEntry(EntLabError):
    pass


class NotMds(EntLabError):
    pass


# bell
class NOutOfRange(EntLabError):
    pass


class UnsupportedD(EntLabError):
    pass


class SearchTooLarge(EntLabError):
    pass


class ShapeMismatch(EntLabError):
    pass


class DegenerateSpectrum(EntLabError):
    pass


class BadProbabilities(EntLabError):
    pass


# spin
class BadN(EntLabError):
    pass


class TooManyRows(EntLabError):
    pass


class Diverged(EntLabError):
    pass


class NoSolution(EntLabError):
    pass


class NotPowerOfTwo(EntLabError):
    pass


class CriticalPoint(EntLabError):
    pass


class BadDomain(EntLabError):
    pass
