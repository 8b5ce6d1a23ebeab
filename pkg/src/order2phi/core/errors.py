class Order2PhiError(Exception):
    """base class for every error raised by order2phi"""


class DomainError(Order2PhiError, ValueError):
    """an input violates the precondition of the operation"""


class NotInvertibleError(Order2PhiError, ArithmeticError):
    def __init__(self, message: str, divisor: int) -> None:
        super().__init__(message)
        self.divisor = divisor


class NotAUnitError(NotInvertibleError):
    """gcd(a, N) > 1; `divisor` is the shared factor, which splits N when it is nontrivial"""


class NoSolutionError(Order2PhiError, ArithmeticError):
    """x^2 - Bx + N has no admissible integer roots"""


class ResourceError(Order2PhiError, RuntimeError):
    """a documented ceiling or budget was exceeded"""
