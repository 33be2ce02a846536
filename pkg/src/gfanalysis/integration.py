"""Definite integrals (sums) of functions over GF(p).

The integral of f from 0 to N is sum_{x=0}^{N} f(x). Everything here has a
direct summation route and a route through the MacLaurin coefficients of f;
the coefficient routes rely on the power sums S_N(i) = sum_{x=0}^{N} x^i,
with 0**0 = 1.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainMismatch, IndexOutOfRange
from .field import FieldElement, as_modulus
from .interp import TabulatedFunction, interpolate, is_bijection
from .poly import Polynomial, Ring


def power_sum(p, n: int) -> FieldElement:
    """sum_{x=0}^{p-1} x^n for 0 <= n <= p-1: p-1 if n == p-1 else 0."""
    F = as_modulus(p)
    if not 0 <= n <= F.p - 1:
        raise IndexOutOfRange(f"n must lie in [0, {F.p - 1}]")
    return F(F.p - 1) if n == F.p - 1 else F.zero


def power_sum_brute(p, n: int, upto: int | None = None) -> FieldElement:
    """Direct sum_{x=0}^{upto} x^n (default upto = p-1), 0**0 = 1."""
    F = as_modulus(p)
    upto = F.p - 1 if upto is None else upto
    return F(sum(pow(x, n, F.p) for x in range(upto + 1)))


@dataclass(frozen=True)
class PowerSumTable:
    p: int
    n_max: int
    rows: tuple  # rows[N][i] = S_N(i)

    def __getitem__(self, key):
        n, i = key
        return self.rows[n][i]

    def ints(self) -> list[list[int]]:
        return [[v.value for v in row] for row in self.rows]


def power_sum_table(p, n_max: int | None = None) -> PowerSumTable:
    F = as_modulus(p)
    n_max = F.p - 1 if n_max is None else n_max
    if not 0 <= n_max <= F.p - 1:
        raise IndexOutOfRange(f"N_max must lie in [0, {F.p - 1}]")
    rows = []
    prev = [F.zero] * F.p
    for n in range(n_max + 1):
        # S_N(i) = S_{N-1}(i) + N^i
        row = tuple(prev[i] + F(n) ** i for i in range(F.p))
        rows.append(row)
        prev = row
    return PowerSumTable(F.p, n_max, tuple(rows))


def _full(f: TabulatedFunction):
    if f.domain.kind != "full":
        raise DomainMismatch("integration needs a full-field function")


def definite_integral(f: TabulatedFunction) -> FieldElement:
    _full(f)
    total = f.modulus.zero
    for v in f.values:
        total = total + v
    return total


def integral_via_coefficient(a: Polynomial) -> FieldElement:
    """(p-1) * a_{p-1}: the integral read off the top MacLaurin coefficient."""
    if a.ring is not Ring.PLAIN:
        raise ValueError("expected a plain polynomial")
    if a.degree > a.p - 1:
        raise ValueError(f"degree {a.degree} exceeds p-1 = {a.p - 1}")
    return a[a.p - 1] * (a.p - 1)


@dataclass(frozen=True)
class InnerProductReport:
    direct: FieldElement
    coefficient_route: FieldElement  # with the (p-1, p-1) aliasing pair
    printed_formula: FieldElement  # (1/(p-1)) sum_i a_i b_{p-1-i}
    aliasing_term: FieldElement  # (p-1) a_{p-1} b_{p-1}

    @property
    def agrees(self) -> bool:
        return self.direct == self.coefficient_route

    @property
    def printed_formula_agrees(self) -> bool:
        return self.direct == self.printed_formula


def inner_product_report(f: TabulatedFunction, g: TabulatedFunction) -> InnerProductReport:
    """sum_k f(k) g(k), directly and through MacLaurin coefficients.

    Expanding both series, sum_k k^(i+j) is -1 exactly when i+j is p-1 or
    2(p-1) (and 0 otherwise, including i+j = 0). The anti-diagonal gives the
    usual convolution; the single pair (p-1, p-1) is the aliasing term.
    """
    _full(f)
    _full(g)
    if f.modulus != g.modulus:
        raise DomainMismatch(f"{f.modulus} vs {g.modulus}")
    F = f.modulus
    p = F.p
    direct = F.zero
    for u, v in zip(f.values, g.values):
        direct = direct + u * v
    a = interpolate(f)
    b = interpolate(g)
    conv = F.zero
    for i in range(p):
        conv = conv + a[i] * b[p - 1 - i]
    printed = conv * F(p - 1).inverse()
    aliasing = a[p - 1] * b[p - 1] * (p - 1)
    return InnerProductReport(direct, printed + aliasing, printed, aliasing)


def inner_product(f: TabulatedFunction, g: TabulatedFunction) -> FieldElement:
    report = inner_product_report(f, g)
    if not report.agrees:
        raise AssertionError(f"coefficient route disagrees with direct sum: {report}")
    return report.coefficient_route


def partial_integral(f: TabulatedFunction, n: int) -> FieldElement:
    """sum_{x=0}^{n} f(x), computed as sum_i a_i S_n(i) and checked directly."""
    _full(f)
    F = f.modulus
    if not 0 <= n <= F.p - 1:
        raise IndexOutOfRange(f"N must lie in [0, {F.p - 1}]")
    a = interpolate(f)
    sums = power_sum_table(F, n).rows[n]
    via_coeffs = F.zero
    for i in range(F.p):
        via_coeffs = via_coeffs + a[i] * sums[i]
    direct = F.zero
    for x in range(n + 1):
        direct = direct + f.values[x]
    if via_coeffs != direct:
        raise AssertionError(f"S_N route {via_coeffs} != direct {direct}")
    return direct


@dataclass(frozen=True)
class InvertibilityReport:
    top_coeff_zero: bool
    is_bijection: bool
    top_coeff: FieldElement


def invertibility_necessary_check(f: TabulatedFunction) -> InvertibilityReport:
    """A bijection must have a vanishing x^(p-1) coefficient; not conversely."""
    _full(f)
    a = interpolate(f)
    top = a[f.p - 1]
    return InvertibilityReport(top.value == 0, is_bijection(f), top)
