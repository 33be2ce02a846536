"""Derivatives over GF(p) and beta-adic (Taylor) expansions.

Three derivative notions live here:

* the classical r-th derivative, which vanishes identically once r >= p;
* the Hasse derivative, with weights C(i, r) mod p instead of falling
  factorials;
* the negacyclic Hasse derivative on GF(p)[x] / (x^(p-1) + 1), where the
  constant term c is first rewritten as -c * x^(p-1) so that constants
  differentiate to c * x^(p-2) and degree p-2 is preserved.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .errors import WrongRing
from .field import FieldElement, as_modulus
from .poly import Polynomial, Ring, coerce_scalars


def binom_mod(n: int, k: int, p: int) -> int:
    """C(n, k) mod p by Lucas' theorem; 0 when k > n or k < 0."""
    if k < 0 or k > n:
        return 0
    result = 1
    while n or k:
        ni, ki = n % p, k % p
        if ki > ni:
            return 0
        result = result * comb(ni, ki) % p
        n //= p
        k //= p
    return result


def falling_factorial(n: int, r: int) -> int:
    out = 1
    for t in range(r):
        out *= n - t
    return out


def _plain_or_cyclic(a: Polynomial):
    if a.ring is Ring.NEGACYCLIC:
        raise WrongRing("use negacyclic_hasse_derivative for the negacyclic ring")


def classical_derivative(a: Polynomial, r: int) -> Polynomial:
    _plain_or_cyclic(a)
    if r < 0:
        raise ValueError("derivative order must be non-negative")
    coeffs = [c * falling_factorial(i, r) for i, c in enumerate(a.coeffs) if i >= r]
    return Polynomial(coeffs or [a[0] * 0], a.modulus, a.ring)


def hasse_derivative(a: Polynomial, r: int) -> Polynomial:
    _plain_or_cyclic(a)
    if r < 0:
        raise ValueError("derivative order must be non-negative")
    p = a.p
    coeffs = [c * binom_mod(i, r, p) for i, c in enumerate(a.coeffs) if i >= r]
    return Polynomial(coeffs or [a[0] * 0], a.modulus, a.ring)


def negacyclic_hasse_derivative(a: Polynomial, r: int = 1) -> Polynomial:
    if a.ring is not Ring.NEGACYCLIC:
        raise WrongRing(f"expected a negacyclic polynomial, got {a.ring.value}")
    if r < 0:
        raise ValueError("derivative order must be non-negative")
    p = a.p
    out = a
    for _ in range(r):
        # 1 = -x^(p-1) in this ring; lift the constant before differentiating
        lifted = [out[0] * 0] + list(out.coeffs[1:]) + [-out[0]]
        coeffs = [c * binom_mod(i, 1, p) for i, c in enumerate(lifted) if i >= 1]
        out = Polynomial(coeffs, a.modulus, Ring.NEGACYCLIC)
    return out


@dataclass(frozen=True)
class AdicExpansion:
    """a(x) = sum_k coeffs[k] * (x - beta)**k."""

    beta: FieldElement
    coeffs: tuple

    def __post_init__(self):
        object.__setattr__(self, "coeffs",
                           coerce_scalars(self.coeffs, self.beta.modulus))

    def values(self) -> list[int]:
        return [c.value for c in self.coeffs]


def taylor_expand(a: Polynomial, beta) -> AdicExpansion:
    """beta-adic expansion by repeated synthetic division by (x - beta).

    The result is cross-checked against b_r = a^[r](beta).
    """
    if a.ring is not Ring.PLAIN:
        raise WrongRing("taylor_expand expects a plain polynomial")
    if not isinstance(beta, FieldElement):
        beta = FieldElement(beta, a.modulus)
    b = []
    rest = a
    for _ in range(len(a)):
        rest, rem = rest.divmod_linear(beta)
        b.append(rem)
    expansion = AdicExpansion(beta, tuple(b))
    via_hasse = hasse_taylor_coefficients(a, beta)
    if list(expansion.coeffs) != via_hasse:
        raise AssertionError(f"deflation {expansion.coeffs} != Hasse {via_hasse}")
    return expansion


def hasse_taylor_coefficients(a: Polynomial, beta) -> list:
    """The coefficients a^[r](beta), r = 0..len(a)-1, straight from the Hasse definition."""
    return [hasse_derivative(a, r)(beta) for r in range(len(a))]


def adic_reconstruct(e: AdicExpansion) -> Polynomial:
    F = e.beta.modulus
    shift = Polynomial([-e.beta, 1], F)
    acc = Polynomial([0], F)
    power = Polynomial([1], F)
    for c in e.coeffs:
        acc = acc + power * c
        power = power * shift
    return acc


def difference_quotient(a: Polynomial, beta) -> Polynomial:
    """(a(x) - a(beta)) / (x - beta) as an exact polynomial quotient."""
    if not isinstance(beta, FieldElement):
        beta = FieldElement(beta, a.modulus)
    q, rem = (a.with_ring(Ring.PLAIN) - a(beta)).divmod_linear(beta)
    assert not rem, "a(x) - a(beta) must vanish at beta"
    return q


def derivative(a: Polynomial, r: int = 1, kind: str = "hasse") -> Polynomial:
    """Dispatch helper used by the CLI: kind in {classical, hasse, negacyclic}."""
    if kind == "classical":
        return classical_derivative(a, r)
    if kind == "hasse":
        return hasse_derivative(a, r)
    if kind == "negacyclic":
        return negacyclic_hasse_derivative(a, r)
    raise ValueError(f"unknown derivative kind {kind!r}")


def factorial_mod(n: int, p) -> FieldElement:
    F = as_modulus(p)
    acc = F.one
    for t in range(2, n + 1):
        acc = acc * t
    return acc
