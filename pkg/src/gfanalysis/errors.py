"""Exception hierarchy shared by every module of the package."""


class GFAnalysisError(Exception):
    """Base class for all domain/math errors raised by gfanalysis."""


class NotPrime(GFAnalysisError, ValueError):
    pass


class ModulusMismatch(GFAnalysisError, ValueError):
    pass


class DivisionByZero(GFAnalysisError, ZeroDivisionError):
    pass


class ZeroHasNoOrder(GFAnalysisError, ValueError):
    pass


class Undefined(GFAnalysisError, ArithmeticError):
    """Raised for forms involving -inf that have no assigned value."""


class NotAField(GFAnalysisError, ArithmeticError):
    """Division attempted on formal Gaussian elements (p = 1 mod 4)."""


class DuplicateNode(GFAnalysisError, ValueError):
    pass


class SingularSystem(GFAnalysisError, ArithmeticError):
    pass


class DomainMismatch(GFAnalysisError, ValueError):
    pass


class NotBijective(GFAnalysisError, ValueError):
    pass


class WrongRing(GFAnalysisError, ValueError):
    pass


class CompositeModulusForTrig(GFAnalysisError, ValueError):
    """Series cos/sin need p = 3 (mod 4) so that j is not already in GF(p)."""


class InvalidBase(GFAnalysisError, ValueError):
    pass


class IndexOutOfRange(GFAnalysisError, IndexError):
    pass


class WrongOrder(GFAnalysisError, ValueError):
    pass


class NotPrimitive(GFAnalysisError, ValueError):
    pass
