"""Exact arithmetic in GF(p) for an odd prime p, plus the -inf extension.

Elements are immutable. Arithmetic between elements of different moduli
raises :class:`ModulusMismatch`; plain Python ints are coerced into the
field of the other operand.

>>> F = PrimeModulus(5)
>>> F(3) + 4
FieldElement(2, p=5)
>>> F(2).inverse()
FieldElement(3, p=5)
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Union

from .errors import (
    DivisionByZero,
    ModulusMismatch,
    NotPrime,
    Undefined,
    ZeroHasNoOrder,
)


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class PrimeModulus:
    """An odd prime p. Calling the modulus builds elements: ``F(3)``."""

    p: int

    def __post_init__(self):
        if isinstance(self.p, bool) or not isinstance(self.p, int):
            raise NotPrime(f"modulus must be an int, got {self.p!r}")
        if self.p < 3 or not _is_prime(self.p):
            raise NotPrime(f"{self.p} is not an odd prime")

    def __call__(self, value: int) -> "FieldElement":
        return FieldElement(value, self)

    def __int__(self) -> int:
        return self.p

    def __str__(self) -> str:
        return f"GF({self.p})"

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(0, self)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(1, self)

    def elements(self) -> Iterator["FieldElement"]:
        for v in range(self.p):
            yield FieldElement(v, self)

    def nonzero(self) -> Iterator["FieldElement"]:
        for v in range(1, self.p):
            yield FieldElement(v, self)


def as_modulus(p: Union[int, PrimeModulus]) -> PrimeModulus:
    return p if isinstance(p, PrimeModulus) else PrimeModulus(p)


class FieldElement:
    """A residue of GF(p), always stored in canonical form 0 <= value < p."""

    __slots__ = ("value", "modulus")

    def __init__(self, value: int, modulus: Union[int, PrimeModulus]):
        modulus = as_modulus(modulus)
        object.__setattr__(self, "modulus", modulus)
        object.__setattr__(self, "value", int(value) % modulus.p)

    def __setattr__(self, name, value):
        raise AttributeError("FieldElement is immutable")

    @property
    def p(self) -> int:
        return self.modulus.p

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.modulus != self.modulus:
                raise ModulusMismatch(
                    f"cannot combine elements of {self.modulus} and {other.modulus}"
                )
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return FieldElement(other, self.modulus)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return FieldElement(self.value + other.value, self.modulus)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return FieldElement(self.value - other.value, self.modulus)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return FieldElement(other.value - self.value, self.modulus)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return FieldElement(self.value * other.value, self.modulus)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __neg__(self) -> "FieldElement":
        return FieldElement(-self.value, self.modulus)

    def __pos__(self) -> "FieldElement":
        return self

    def __pow__(self, exponent: int) -> "FieldElement":
        # 0**0 == 1 by convention
        if exponent < 0:
            return self.inverse() ** (-exponent)
        return FieldElement(pow(self.value, exponent, self.p), self.modulus)

    def inverse(self) -> "FieldElement":
        if self.value == 0:
            raise DivisionByZero(f"0 has no inverse in {self.modulus}")
        return FieldElement(pow(self.value, -1, self.p), self.modulus)

    def __eq__(self, other) -> bool:
        if isinstance(other, FieldElement):
            return self.modulus == other.modulus and self.value == other.value
        if isinstance(other, int) and not isinstance(other, bool):
            return self.value == other % self.p
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.value)

    def __bool__(self) -> bool:
        return self.value != 0

    def __int__(self) -> int:
        return self.value

    def __index__(self) -> int:
        return self.value

    def __repr__(self) -> str:
        return f"FieldElement({self.value}, p={self.p})"

    def __str__(self) -> str:
        return str(self.value)

    def balanced(self) -> int:
        return balanced(self)


class MinusInfinity:
    """The symbol -inf adjoined to GF(p); a singleton (see ``MINUS_INF``).

    Rules: x + (-inf) = -inf, x * (-inf) = -inf, x / (-inf) = 0.
    """

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "MINUS_INF"

    def __str__(self) -> str:
        return "-inf"

    def __add__(self, other):
        return ext_add(self, other)

    def __radd__(self, other):
        return ext_add(other, self)

    def __mul__(self, other):
        return ext_mul(self, other)

    def __rmul__(self, other):
        return ext_mul(other, self)

    def __truediv__(self, other):
        return ext_div(self, other)

    def __rtruediv__(self, other):
        return ext_div(other, self)

    def __reduce__(self):
        return (MinusInfinity, ())


MINUS_INF = MinusInfinity()

ExtendedElement = Union[FieldElement, MinusInfinity]


def is_minus_inf(x) -> bool:
    return isinstance(x, MinusInfinity)


def fp_arith(a: FieldElement, b, op: str) -> FieldElement:
    """Dispatch one of add/sub/mul/div/pow/inv/neg by name.

    ``b`` is ignored for the unary ``inv`` and ``neg``; for ``pow`` it is
    an integer exponent.
    """
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    if op == "pow":
        return a ** int(b)
    if op == "inv":
        return a.inverse()
    if op == "neg":
        return -a
    raise ValueError(f"unknown operation {op!r}")


def _check_ext(x):
    if isinstance(x, (FieldElement, MinusInfinity)):
        return x
    raise TypeError(f"not an extended element: {x!r}")


def ext_add(x: ExtendedElement, y: ExtendedElement) -> ExtendedElement:
    # -inf is absorbing, including -inf + -inf
    x, y = _check_ext(x), _check_ext(y)
    if is_minus_inf(x) or is_minus_inf(y):
        return MINUS_INF
    return x + y


def ext_mul(x: ExtendedElement, y: ExtendedElement) -> ExtendedElement:
    x, y = _check_ext(x), _check_ext(y)
    if is_minus_inf(x) and is_minus_inf(y):
        raise Undefined("(-inf) * (-inf) is undefined")
    if is_minus_inf(x) or is_minus_inf(y):
        return MINUS_INF
    return x * y


def ext_div(x: ExtendedElement, y: ExtendedElement) -> ExtendedElement:
    x, y = _check_ext(x), _check_ext(y)
    if is_minus_inf(y):
        if is_minus_inf(x):
            raise Undefined("(-inf) / (-inf) is undefined")
        return x.modulus.zero
    if is_minus_inf(x):
        if y.value == 0:
            raise DivisionByZero("(-inf) / 0")
        return MINUS_INF
    return x / y


def ext_arith(x: ExtendedElement, y: ExtendedElement, op: str) -> ExtendedElement:
    try:
        fn = {"add": ext_add, "mul": ext_mul, "div": ext_div}[op]
    except KeyError:
        raise ValueError(f"unknown operation {op!r}") from None
    return fn(x, y)


def element_order(a: FieldElement) -> int:
    """Smallest N >= 1 with a**N == 1."""
    if a.value == 0:
        raise ZeroHasNoOrder("0 has no multiplicative order")
    p = a.p
    n, acc = 1, a.value
    while acc != 1:
        acc = acc * a.value % p
        n += 1
    return n


def is_primitive(a: FieldElement) -> bool:
    return a.value != 0 and element_order(a) == a.p - 1


def primitive_root(p: Union[int, PrimeModulus]) -> FieldElement:
    """Smallest generator of the multiplicative group."""
    F = as_modulus(p)
    for g in F.nonzero():
        if is_primitive(g):
            return g
    raise AssertionError("unreachable: GF(p)* is cyclic")


def sqrt(a: FieldElement) -> Union[FieldElement, None]:
    """Smallest square root of ``a``, or None for a non-residue."""
    if a.value == 0:
        return a.modulus.zero
    # Euler's criterion first, then a desk-scale search
    if pow(a.value, (a.p - 1) // 2, a.p) != 1:
        return None
    for y in range(1, a.p):
        if y * y % a.p == a.value:
            return FieldElement(y, a.modulus)
    raise AssertionError("unreachable: Euler's criterion said residue")


def is_quadratic_residue(a: FieldElement) -> tuple[bool, Union[FieldElement, None]]:
    root = sqrt(a)
    return root is not None, root


def balanced(a: FieldElement) -> int:
    """Signed representative in [-(p-1)/2, (p-1)/2]."""
    half = (a.p - 1) // 2
    return a.value - a.p if a.value > half else a.value


def from_balanced(v: int, p: Union[int, PrimeModulus]) -> FieldElement:
    return FieldElement(v, p)


def pi_const(p: Union[int, PrimeModulus]) -> FieldElement:
    """The finite-field 'pi', (p-1)/2."""
    F = as_modulus(p)
    return F((F.p - 1) // 2)
