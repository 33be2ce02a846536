"""Exponentials, trigonometric and hyperbolic functions, logs, and 1/x on GF(p).

Two families of trig functions coexist:

* k-trigonometric functions built from an element alpha of order N,
  cos_k(i) = (alpha^(ik) + alpha^(-ik)) / 2 and
  sin_k(i) = (alpha^(ik) - alpha^(-ik)) / 2j, valued in GI(p);
* series ("e-trigonometric") functions obtained by truncating the real
  MacLaurin series to degree <= p-2 and inverting factorials mod p.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import CompositeModulusForTrig, InvalidBase, Undefined
from .field import (
    MINUS_INF,
    FieldElement,
    MinusInfinity,
    PrimeModulus,
    as_modulus,
    element_order,
    is_primitive,
    sqrt,
)
from .gaussian import GaussianElement
from .interp import FullField, IndexRing, TabulatedFunction
from .poly import Polynomial, Ring


def exp_alpha(alpha: FieldElement, i: int, index_mod: Optional[int] = None) -> FieldElement:
    """alpha**i, with i first reduced mod ``index_mod`` for shortened tables."""
    if index_mod is not None:
        if index_mod < 1:
            raise ValueError("index_mod must be >= 1")
        i %= index_mod
    return alpha ** i


def exp_alpha_table(alpha: FieldElement, n: Optional[int] = None) -> TabulatedFunction:
    """alpha**x over the full field, or over IndexRing(n) when n is given."""
    F = alpha.modulus
    if n is None:
        return TabulatedFunction(FullField(F), [alpha ** x for x in range(F.p)], F)
    return TabulatedFunction(IndexRing(n), [alpha ** i for i in range(n)], F)


@dataclass(frozen=True)
class KTrigTable:
    alpha: FieldElement
    k: int
    order: int
    cos_values: tuple
    sin_values: tuple
    # p = 1 (mod 4): j is a concrete root of -1 in GF(p), not a GI element
    degenerate: bool = False
    formal: bool = False

    def cos_table(self) -> TabulatedFunction:
        return TabulatedFunction(IndexRing(self.order), self.cos_values, self.alpha.modulus)

    def sin_table(self) -> TabulatedFunction:
        return TabulatedFunction(IndexRing(self.order), self.sin_values, self.alpha.modulus)

    def unit_circle(self) -> list:
        """sin_k(i)**2 + cos_k(i)**2 for every i."""
        return [s * s + c * c for c, s in zip(self.cos_values, self.sin_values)]


def k_trig(alpha: FieldElement, k: int, mode: str = "auto") -> KTrigTable:
    """cos_k and sin_k over i = 0..N-1, N the order of alpha.

    ``mode`` matters only when p = 1 (mod 4): "degenerate" (the default for
    "auto") uses a square root of -1 from GF(p) itself, "formal" keeps j as
    a symbol so results are formal GI elements.
    """
    F = alpha.modulus
    n = element_order(alpha)
    if not 0 <= k < n:
        raise ValueError(f"k must lie in [0, {n - 1}]")
    if mode not in ("auto", "degenerate", "formal"):
        raise ValueError(f"unknown mode {mode!r}")
    half = F(2).inverse()
    field_gi = F.p % 4 == 3
    formal = not field_gi and mode == "formal"
    degenerate = not field_gi and not formal
    j_root = sqrt(F(-1)) if degenerate else None

    cos_values, sin_values = [], []
    for i in range(n):
        a = alpha ** (i * k)
        b = a.inverse()
        c = (a + b) * half
        if degenerate:
            cos_values.append(c)
            sin_values.append((a - b) * (half * j_root.inverse()))
        else:
            # 1/(2j) = -j/2
            cos_values.append(GaussianElement(c, 0, F, formal=formal))
            sin_values.append(GaussianElement(0, (b - a) * half, F, formal=formal))
    return KTrigTable(alpha, k, n, tuple(cos_values), tuple(sin_values),
                      degenerate=degenerate, formal=formal)


def _factorial_inverse(k: int, F: PrimeModulus) -> FieldElement:
    acc = F.one
    for t in range(2, k + 1):
        acc = acc * t
    return acc.inverse()


def _series(p, degrees, sign) -> Polynomial:
    F = as_modulus(p)
    coeffs = [F.zero] * (F.p - 1)
    for d in degrees:
        coeffs[d] = _factorial_inverse(d, F) * sign(d)
    return Polynomial(coeffs, F, Ring.NEGACYCLIC)


def _require_trig_modulus(p):
    F = as_modulus(p)
    if F.p % 4 != 3:
        raise CompositeModulusForTrig(
            f"-1 is a square mod {F.p}; series cos/sin need p = 3 (mod 4)")
    return F


def exp_series(p) -> Polynomial:
    F = as_modulus(p)
    return _series(F, range(0, F.p - 1), lambda d: 1)


def cosh_series(p) -> Polynomial:
    F = as_modulus(p)
    return _series(F, range(0, F.p - 2, 2), lambda d: 1)


def sinh_series(p) -> Polynomial:
    F = as_modulus(p)
    return _series(F, range(1, F.p - 1, 2), lambda d: 1)


def cos_series(p) -> Polynomial:
    F = _require_trig_modulus(p)
    return _series(F, range(0, F.p - 2, 2), lambda d: -1 if d % 4 == 2 else 1)


def sin_series(p) -> Polynomial:
    F = _require_trig_modulus(p)
    return _series(F, range(1, F.p - 1, 2), lambda d: -1 if d % 4 == 3 else 1)


def euler_constant(p) -> FieldElement:
    """e = sum_{k=0}^{p-2} 1/k! mod p."""
    F = as_modulus(p)
    total = F.zero
    for k in range(F.p - 1):
        total = total + _factorial_inverse(k, F)
    return total


def exp_table(p) -> TabulatedFunction:
    F = as_modulus(p)
    series = exp_series(F)
    return TabulatedFunction(FullField(F), [series(F(i)) for i in range(F.p)], F)


def log_alpha(alpha: FieldElement, x):
    """Discrete log base a primitive alpha; log(0) = -inf."""
    if not is_primitive(alpha):
        raise InvalidBase(f"{alpha.value} is not a primitive element of GF({alpha.p})")
    if isinstance(x, MinusInfinity):
        raise Undefined("log(-inf) is not defined")
    if isinstance(x, int):
        x = FieldElement(x, alpha.modulus)
    if x.value == 0:
        return MINUS_INF
    return _log_lookup(alpha)[x.value]


def _log_lookup(alpha: FieldElement) -> dict:
    table, acc = {}, 1
    for m in range(alpha.p - 1):
        table[acc] = FieldElement(m, alpha.modulus)
        acc = acc * alpha.value % alpha.p
    return table


def log_table(alpha: FieldElement) -> TabulatedFunction:
    if not is_primitive(alpha):
        raise InvalidBase(f"{alpha.value} is not a primitive element of GF({alpha.p})")
    F = alpha.modulus
    lookup = _log_lookup(alpha)
    values = [MINUS_INF] + [lookup[x] for x in range(1, F.p)]
    return TabulatedFunction(FullField(F), values, F)


def reciprocal_table(p) -> TabulatedFunction:
    """1/x with 1/0 = -inf."""
    F = as_modulus(p)
    values = [MINUS_INF] + [F(x).inverse() for x in range(1, F.p)]
    return TabulatedFunction(FullField(F), values, F)
