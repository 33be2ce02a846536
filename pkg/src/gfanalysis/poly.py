"""Dense polynomials over GF(p) (or GI(p)) with a quotient-ring tag.

Coefficients are stored lowest degree first. Three ring conventions:

* ``Ring.PLAIN``: ordinary GF(p)[x], stored exactly as given.
* ``Ring.CYCLIC``: functions on GF(p), reduced with x**p = x so degree <= p-1.
* ``Ring.NEGACYCLIC``: GF(p)[x] mod x**(p-1) + 1, always stored with p-1
  coefficients.
"""

from __future__ import annotations

import enum
from typing import Iterable, Sequence

from .field import FieldElement, PrimeModulus, as_modulus
from .gaussian import GaussianElement


class Ring(enum.Enum):
    PLAIN = "plain"
    CYCLIC = "cyclic"
    NEGACYCLIC = "negacyclic"


def coerce_scalars(values: Iterable, modulus: PrimeModulus) -> tuple:
    """Turn ints into field elements; promote to GI if any value is Gaussian."""
    out = []
    gaussian = False
    formal = False
    for v in values:
        if isinstance(v, GaussianElement):
            if v.modulus != modulus:
                raise ValueError(f"coefficient from {v.modulus}, expected {modulus}")
            gaussian = True
            formal = formal or v.formal
            out.append(v)
        elif isinstance(v, FieldElement):
            if v.modulus != modulus:
                raise ValueError(f"coefficient from {v.modulus}, expected {modulus}")
            out.append(v)
        else:
            out.append(FieldElement(v, modulus))
    if gaussian:
        out = [v if isinstance(v, GaussianElement)
               else GaussianElement(v, 0, modulus, formal=formal) for v in out]
    return tuple(out)


def _reduce(coeffs: list, ring: Ring, modulus: PrimeModulus) -> list:
    p = modulus.p
    if ring is Ring.NEGACYCLIC:
        n = p - 1
        out = [modulus.zero] * n
        for e, c in enumerate(coeffs):
            q, r = divmod(e, n)
            out[r] = out[r] - c if q % 2 else out[r] + c
        return out
    if ring is Ring.CYCLIC and len(coeffs) > p:
        out = [modulus.zero] * p
        for e, c in enumerate(coeffs):
            k = e if e < p else (e - 1) % (p - 1) + 1
            out[k] = out[k] + c
        return out
    return list(coeffs)


class Polynomial:
    __slots__ = ("coeffs", "modulus", "ring", "domain")

    def __init__(self, coeffs: Iterable, modulus, ring: Ring = Ring.PLAIN,
                 domain=None):
        modulus = as_modulus(modulus)
        ring = Ring(ring)
        cs = list(coerce_scalars(coeffs, modulus)) or [modulus.zero]
        cs = _reduce(cs, ring, modulus)
        object.__setattr__(self, "coeffs", tuple(cs))
        object.__setattr__(self, "modulus", modulus)
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "domain", domain)

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    @classmethod
    def x(cls, modulus, ring: Ring = Ring.PLAIN) -> "Polynomial":
        return cls([0, 1], modulus, ring)

    @classmethod
    def monomial(cls, degree: int, coeff, modulus, ring: Ring = Ring.PLAIN):
        return cls([0] * degree + [coeff], modulus, ring)

    @property
    def p(self) -> int:
        return self.modulus.p

    @property
    def degree(self) -> int:
        """Degree ignoring trailing zeros; -1 for the zero polynomial."""
        for i in range(len(self.coeffs) - 1, -1, -1):
            if self.coeffs[i]:
                return i
        return -1

    def is_zero(self) -> bool:
        return self.degree < 0

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __getitem__(self, i: int):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        if i < 0:
            raise IndexError(i)
        return self._zero()

    def _zero(self):
        c0 = self.coeffs[0]
        if isinstance(c0, GaussianElement):
            return GaussianElement(0, 0, self.modulus, formal=c0.formal)
        return self.modulus.zero

    def is_gaussian(self) -> bool:
        return isinstance(self.coeffs[0], GaussianElement)

    def with_ring(self, ring: Ring) -> "Polynomial":
        return Polynomial(self.coeffs, self.modulus, ring, self.domain)

    def trimmed(self) -> "Polynomial":
        n = max(self.degree + 1, 1)
        return Polynomial(self.coeffs[:n], self.modulus, self.ring, self.domain)

    def padded(self, length: int) -> "Polynomial":
        extra = max(0, length - len(self.coeffs))
        zero = self._zero()
        return Polynomial(self.coeffs + (zero,) * extra, self.modulus, self.ring,
                          self.domain)

    def values(self) -> list:
        """Coefficients as plain ints (GF(p) coefficients only)."""
        return [c.value for c in self.coeffs]

    def _same(self, other: "Polynomial"):
        if other.modulus != self.modulus:
            raise ValueError(f"{self.modulus} vs {other.modulus}")

    def _lift(self, other):
        if isinstance(other, Polynomial):
            self._same(other)
            return other
        return Polynomial([other], self.modulus, self.ring)

    def __add__(self, other):
        other = self._lift(other)
        n = max(len(self), len(other))
        return Polynomial([self[i] + other[i] for i in range(n)], self.modulus,
                          self.ring, self.domain)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial([-c for c in self.coeffs], self.modulus, self.ring,
                          self.domain)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return Polynomial([c * other for c in self.coeffs], self.modulus,
                              self.ring, self.domain)
        self._same(other)
        out = [self._zero() + other._zero()] * (len(self) + len(other) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return Polynomial(out, self.modulus, self.ring, self.domain)

    def __rmul__(self, other):
        return self * other

    def __pow__(self, n: int) -> "Polynomial":
        result = Polynomial([1], self.modulus, self.ring)
        for _ in range(n):
            result = result * self
        return result

    def __call__(self, x):
        """Horner evaluation."""
        if isinstance(x, int) and not isinstance(x, bool):
            x = FieldElement(x, self.modulus)
        acc = self._zero()
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def divmod_linear(self, beta) -> tuple["Polynomial", object]:
        """Synthetic division by (x - beta): returns (quotient, remainder)."""
        beta = FieldElement(beta, self.modulus) if isinstance(beta, int) else beta
        n = len(self.coeffs)
        if n == 1:
            return Polynomial([self._zero()], self.modulus, Ring.PLAIN), self.coeffs[0]
        q = [None] * (n - 1)
        acc = self.coeffs[-1]
        for i in range(n - 2, -1, -1):
            q[i] = acc
            acc = self.coeffs[i] + acc * beta
        return Polynomial(q, self.modulus, Ring.PLAIN), acc

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        if self.modulus != other.modulus or self.ring is not other.ring:
            return False
        n = max(len(self), len(other))
        return all(self[i] == other[i] for i in range(n))

    def __hash__(self) -> int:
        return hash((self.modulus.p, self.ring, tuple(self.trimmed().coeffs)))

    def __repr__(self) -> str:
        cs = ", ".join(str(c) for c in self.coeffs)
        ring = "" if self.ring is Ring.PLAIN else f", ring={self.ring.value}"
        return f"Polynomial([{cs}], p={self.p}{ring})"

    def __str__(self) -> str:
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            s = str(c)
            if isinstance(c, GaussianElement) and not c.is_real() and c.re.value:
                s = f"({s})"
            if i == 0:
                terms.append(s)
            else:
                mono = "x" if i == 1 else f"x^{i}"
                terms.append(mono if s == "1" else f"{s}*{mono}")
        return " + ".join(terms) if terms else "0"


def poly_eval(a: Polynomial, x):
    return a(x)


def from_ints(values: Sequence[int], modulus, ring: Ring = Ring.PLAIN) -> Polynomial:
    return Polynomial(values, modulus, ring)
