"""Gaussian integers GI(p) = {a + jb} over GF(p) with j**2 = -1.

For p = 3 (mod 4), -1 is a non-residue and GI(p) is a field. For
p = 1 (mod 4) elements may only be built with ``formal=True``: j is then a
bare symbol obeying j**2 = -1, ring identities hold, and division by a
non-real element is refused.
"""

from __future__ import annotations

from .errors import DivisionByZero, ModulusMismatch, NotAField
from .field import FieldElement, PrimeModulus, as_modulus


def is_field_modulus(p) -> bool:
    return as_modulus(p).p % 4 == 3


class GaussianElement:
    __slots__ = ("re", "im", "formal")

    def __init__(self, re, im=0, modulus=None, formal: bool = False):
        if modulus is None:
            for part in (re, im):
                if isinstance(part, FieldElement):
                    modulus = part.modulus
                    break
            else:
                raise ValueError("modulus is required when both parts are ints")
        modulus = as_modulus(modulus)
        re = _as_fe(re, modulus)
        im = _as_fe(im, modulus)
        if not formal and modulus.p % 4 != 3:
            raise NotAField(
                f"GI({modulus.p}) is not a field (p = 1 mod 4); pass formal=True"
            )
        object.__setattr__(self, "re", re)
        object.__setattr__(self, "im", im)
        object.__setattr__(self, "formal", bool(formal))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianElement is immutable")

    @property
    def modulus(self) -> PrimeModulus:
        return self.re.modulus

    @property
    def p(self) -> int:
        return self.re.p

    @classmethod
    def j(cls, modulus, formal: bool = False) -> "GaussianElement":
        modulus = as_modulus(modulus)
        return cls(modulus.zero, modulus.one, formal=formal)

    def _coerce(self, other):
        if isinstance(other, GaussianElement):
            if other.modulus != self.modulus:
                raise ModulusMismatch(f"{self.modulus} vs {other.modulus}")
            return other
        if isinstance(other, (FieldElement, int)) and not isinstance(other, bool):
            return GaussianElement(_as_fe(other, self.modulus), 0, self.modulus,
                                   formal=self.formal)
        return NotImplemented

    def _make(self, re, im, other=None) -> "GaussianElement":
        formal = self.formal or (other is not None and other.formal)
        return GaussianElement(re, im, self.modulus, formal=formal)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._make(self.re + other.re, self.im + other.im, other)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._make(self.re - other.re, self.im - other.im, other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b, c, d = self.re, self.im, other.re, other.im
        return self._make(a * c - b * d, a * d + b * c, other)

    __rmul__ = __mul__

    def __neg__(self) -> "GaussianElement":
        return self._make(-self.re, -self.im)

    def conj(self) -> "GaussianElement":
        return self._make(self.re, -self.im)

    def norm(self) -> FieldElement:
        return self.re * self.re + self.im * self.im

    def is_real(self) -> bool:
        return self.im.value == 0

    def inverse(self) -> "GaussianElement":
        if self.is_real():
            # scaling by a GF(p) scalar is legal in formal mode too
            if self.re.value == 0:
                raise DivisionByZero("division by 0 in GI")
            return self._make(self.re.inverse(), 0)
        if self.formal:
            raise NotAField(f"division in formal GI({self.p}) is not defined")
        n = self.norm()
        if n.value == 0:
            raise DivisionByZero("division by 0 in GI")
        return self.conj() * n.inverse()

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if other.formal and not other.is_real():
            raise NotAField(f"division in formal GI({self.p}) is not defined")
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other / self

    def __pow__(self, exponent: int) -> "GaussianElement":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = self._make(1, 0)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, GaussianElement):
            return (self.modulus == other.modulus and self.re == other.re
                    and self.im == other.im)
        if isinstance(other, (FieldElement, int)) and not isinstance(other, bool):
            return self.im.value == 0 and self.re == other
        return NotImplemented

    def __hash__(self) -> int:
        if self.im.value == 0:
            return hash(self.re)
        return hash((self.re.value, self.im.value))

    def __bool__(self) -> bool:
        return bool(self.re.value or self.im.value)

    def __repr__(self) -> str:
        tag = ", formal" if self.formal else ""
        return f"GaussianElement({self.re.value}+j{self.im.value}, p={self.p}{tag})"

    def __str__(self) -> str:
        if self.im.value == 0:
            return str(self.re.value)
        if self.re.value == 0:
            return f"j{self.im.value}"
        return f"{self.re.value}+j{self.im.value}"


def _as_fe(x, modulus: PrimeModulus) -> FieldElement:
    if isinstance(x, FieldElement):
        if x.modulus != modulus:
            raise ModulusMismatch(f"{x.modulus} vs {modulus}")
        return x
    return FieldElement(x, modulus)


def gi_arith(x: GaussianElement, y, op: str) -> GaussianElement:
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    if op == "div":
        return x / y
    if op == "conj":
        return x.conj()
    raise ValueError(f"unknown operation {op!r}")
