"""Analysis over finite fields GF(p): series, derivatives, integrals, transforms."""

from .errors import GFAnalysisError
from .field import (
    MINUS_INF,
    FieldElement,
    MinusInfinity,
    PrimeModulus,
    balanced,
    element_order,
    ext_arith,
    fp_arith,
    is_quadratic_residue,
    pi_const,
)
from .gaussian import GaussianElement, gi_arith
from .interp import (
    DomainDescriptor,
    FullField,
    IndexRing,
    TabulatedFunction,
    compose,
    interpolate,
    invert_function,
    lagrange_interpolate,
    parity_decompose,
    vandermonde_solve,
)
from .poly import Polynomial, Ring, poly_eval

__version__ = "0.1.0"
