"""Finite field Fourier transform (naive O(N^2)) and its link to MacLaurin series.

``ffft`` evaluates a coefficient vector at the powers of alpha:
A_i = sum_j a_j alpha^(ij). When alpha is primitive, the transform of the
MacLaurin coefficients of f is f read at alpha^0, alpha^1, ..., alpha^(p-2),
so the inverse transform of that reordering of f's values recovers the
coefficients, up to the x^(p-1) term folding onto the constant.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import DomainMismatch, NotPrimitive, WrongOrder
from .field import FieldElement, element_order, is_primitive
from .interp import TabulatedFunction, interpolate


@dataclass(frozen=True)
class SpectrumVector:
    alpha: FieldElement
    values: tuple

    @property
    def n(self) -> int:
        return len(self.values)

    def ints(self) -> list[int]:
        return [v.value for v in self.values]


def _check_order(alpha: FieldElement, n: int | None) -> int:
    order = element_order(alpha)
    if n is not None and n != order:
        raise WrongOrder(f"{alpha.value} has order {order}, not {n}")
    return order


def _as_elements(seq: Sequence, alpha: FieldElement) -> list[FieldElement]:
    return [v if isinstance(v, FieldElement) else FieldElement(v, alpha.modulus)
            for v in seq]


def fold(a: Sequence, n: int, modulus) -> list[FieldElement]:
    """Fold a coefficient vector to length n by adding a_j into slot j mod n."""
    out = [FieldElement(0, modulus)] * n
    for j, c in enumerate(a):
        out[j % n] = out[j % n] + c
    return out


def ffft(a: Sequence, alpha: FieldElement, n: int | None = None) -> SpectrumVector:
    n = _check_order(alpha, n)
    a = _as_elements(a, alpha)
    if len(a) > n:
        raise WrongOrder(f"{len(a)} coefficients exceed transform length {n}")
    a = a + [alpha.modulus.zero] * (n - len(a))
    powers = [alpha ** k for k in range(n)]
    spectrum = []
    for i in range(n):
        acc = alpha.modulus.zero
        for j, c in enumerate(a):
            acc = acc + c * powers[i * j % n]
        spectrum.append(acc)
    return SpectrumVector(alpha, tuple(spectrum))


def inverse_ffft(spectrum: SpectrumVector) -> tuple:
    """a_j = N^-1 sum_i A_i alpha^(-ij)."""
    alpha = spectrum.alpha
    n = _check_order(alpha, spectrum.n)
    values = _as_elements(spectrum.values, alpha)
    n_inv = alpha.modulus(n).inverse()
    inv_powers = [alpha ** (-k) for k in range(n)]
    out = []
    for j in range(n):
        acc = alpha.modulus.zero
        for i, v in enumerate(values):
            acc = acc + v * inv_powers[i * j % n]
        out.append(acc * n_inv)
    return tuple(out)


@dataclass(frozen=True)
class Prop4Report:
    coefficients: tuple  # a_0..a_{p-1}, MacLaurin series of f
    permuted_values: tuple  # f(alpha^i), i = 0..p-2
    recovered: tuple  # inverse_ffft(permuted_values)
    f_at_zero: FieldElement  # f(0) has no slot in a length-(p-1) transform
    aliased_constant: FieldElement  # a_0 + a_{p-1}

    @property
    def exact(self) -> bool:
        return tuple(self.recovered) == tuple(self.coefficients[:-1]) and \
            self.coefficients[-1].value == 0

    def mismatched_indices(self) -> list[int]:
        return [j for j, (r, c) in enumerate(zip(self.recovered, self.coefficients))
                if r != c]


def log_permutation(f: TabulatedFunction, alpha: FieldElement) -> tuple:
    """f's nonzero-argument values reordered by discrete log: f(alpha^i)."""
    return tuple(f(alpha ** i) for i in range(alpha.p - 1))


def prop4_bridge(f: TabulatedFunction, alpha: FieldElement) -> Prop4Report:
    if f.domain.kind != "full":
        raise DomainMismatch("prop4_bridge needs a full-field function")
    if not is_primitive(alpha):
        raise NotPrimitive(f"{alpha.value} is not primitive in GF({alpha.p})")
    a = interpolate(f).padded(f.p).coeffs
    permuted = log_permutation(f, alpha)
    recovered = inverse_ffft(SpectrumVector(alpha, permuted))
    # a(alpha^i) sees a_0 + a_{p-1} since alpha^(i(p-1)) = 1
    if recovered[0] != a[0] + a[-1] or tuple(recovered[1:]) != tuple(a[1:-1]):
        raise AssertionError("inverse transform disagrees with the aliasing law")
    return Prop4Report(tuple(a), permuted, recovered, f.values[0], a[0] + a[-1])
