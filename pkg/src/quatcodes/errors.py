"""Exception hierarchy shared by every module of the package."""


class QuatCodeError(Exception):
    """Base class for all errors raised by quatcodes."""


class NotPrime(QuatCodeError, ValueError):
    pass


class PartsNotCoprime(QuatCodeError, ValueError):
    pass


class EqualPrimes(QuatCodeError, ValueError):
    pass


class Unrepresentable(QuatCodeError, ValueError):
    pass


class ModulusMismatch(QuatCodeError, ValueError):
    pass


class NotAUnit(QuatCodeError, ArithmeticError):
    def __init__(self, message: str, gcd: int):
        super().__init__(message)
        self.gcd = gcd


class CandidateNotPrimitive(QuatCodeError, ValueError):
    pass


class NonUnitLeadingCoefficient(QuatCodeError, ArithmeticError):
    pass


class DivisionByZeroPoly(QuatCodeError, ZeroDivisionError):
    pass


class RootCheckFailed(QuatCodeError, ValueError):
    pass


class LengthMismatch(QuatCodeError, ValueError):
    pass


class SyndromeCollision(QuatCodeError, ValueError):
    def __init__(self, message: str, first, second):
        super().__init__(message)
        self.first = first
        self.second = second


class GuardExceeded(QuatCodeError, ValueError):
    pass


class NotFound(QuatCodeError, LookupError):
    pass


class InternalContradiction(QuatCodeError, RuntimeError):
    pass


class ParseError(QuatCodeError, ValueError):
    pass
