"""Tabulated functions and recovery of their MacLaurin series.

A :class:`TabulatedFunction` is a finite table of values over either the
whole field (``FullField``: x = 0..p-1) or an index ring (``IndexRing``:
i = 0..N-1, indexes reduced mod N). Its MacLaurin series is the unique
interpolating polynomial, found either by Lagrange's formula or by solving
the Vandermonde system; the two routes are kept separate so each can check
the other.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .errors import DomainMismatch, DuplicateNode, NotBijective, SingularSystem
from .field import FieldElement, MinusInfinity, PrimeModulus, as_modulus
from .gaussian import GaussianElement
from .poly import Polynomial, Ring, coerce_scalars


@dataclass(frozen=True)
class DomainDescriptor:
    kind: str  # "full" or "index"
    size: int

    def __post_init__(self):
        if self.kind not in ("full", "index"):
            raise ValueError(f"unknown domain kind {self.kind!r}")
        if self.size < 1:
            raise ValueError("domain size must be positive")

    def reduce(self, i: int) -> int:
        return int(i) % self.size

    def __str__(self) -> str:
        if self.kind == "full":
            return f"FullField({self.size})"
        return f"IndexRing({self.size})"


def FullField(p) -> DomainDescriptor:
    return DomainDescriptor("full", as_modulus(p).p)


def IndexRing(n: int) -> DomainDescriptor:
    return DomainDescriptor("index", int(n))


def _coerce_value(v, modulus: PrimeModulus):
    if isinstance(v, (MinusInfinity, GaussianElement, FieldElement)):
        if not isinstance(v, MinusInfinity) and v.modulus != modulus:
            raise DomainMismatch(f"value from {v.modulus}, expected {modulus}")
        return v
    return FieldElement(v, modulus)


class TabulatedFunction:
    """Values of a function at every point of its domain."""

    __slots__ = ("domain", "values", "modulus")

    def __init__(self, domain: DomainDescriptor, values: Iterable, modulus):
        modulus = as_modulus(modulus)
        if domain.kind == "full" and domain.size != modulus.p:
            raise DomainMismatch(f"{domain} does not match {modulus}")
        vals = tuple(_coerce_value(v, modulus) for v in values)
        if len(vals) != domain.size:
            raise DomainMismatch(
                f"{domain} needs {domain.size} values, got {len(vals)}")
        object.__setattr__(self, "domain", domain)
        object.__setattr__(self, "values", vals)
        object.__setattr__(self, "modulus", modulus)

    def __setattr__(self, name, value):
        raise AttributeError("TabulatedFunction is immutable")

    @classmethod
    def full(cls, values: Sequence, p) -> "TabulatedFunction":
        return cls(FullField(p), values, p)

    @classmethod
    def indexed(cls, values: Sequence, p) -> "TabulatedFunction":
        return cls(IndexRing(len(values)), values, p)

    @classmethod
    def from_callable(cls, fn: Callable, domain: DomainDescriptor, p):
        F = as_modulus(p)
        return cls(domain, [fn(F(i)) for i in range(domain.size)], F)

    @property
    def p(self) -> int:
        return self.modulus.p

    def nodes(self) -> list[FieldElement]:
        return [FieldElement(i, self.modulus) for i in range(self.domain.size)]

    def __call__(self, x):
        return self.values[self.domain.reduce(int(x))]

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TabulatedFunction):
            return NotImplemented
        return (self.domain == other.domain and self.modulus == other.modulus
                and self.values == other.values)

    def __hash__(self) -> int:
        return hash((self.domain, self.modulus, self.values))

    def __repr__(self) -> str:
        vals = " ".join(str(v) for v in self.values)
        return f"TabulatedFunction({self.domain}, [{vals}], p={self.p})"

    def ints(self) -> list[int]:
        return [v.value for v in self.values]


def identity(domain: DomainDescriptor, p) -> TabulatedFunction:
    return TabulatedFunction(domain, range(domain.size), p)


def affine(a: int, b: int, p) -> TabulatedFunction:
    """x -> a*x + b over the full field."""
    F = as_modulus(p)
    return TabulatedFunction.from_callable(lambda x: x * a + b, FullField(F), F)


def _check_interpolable(v):
    if isinstance(v, MinusInfinity):
        raise DomainMismatch("cannot interpolate through -inf")
    return v


def lagrange_interpolate(points: Sequence[tuple], modulus=None) -> Polynomial:
    """Polynomial of degree <= n-1 through the n given (node, value) points."""
    if not points:
        raise ValueError("need at least one point")
    if modulus is None:
        modulus = next(n.modulus for n, _ in points if isinstance(n, FieldElement))
    F = as_modulus(modulus)
    nodes = [n if isinstance(n, FieldElement) else F(n) for n, _ in points]
    values = coerce_scalars([_check_interpolable(v) for _, v in points], F)
    if len({n.value for n in nodes}) != len(nodes):
        raise DuplicateNode("interpolation nodes must be pairwise distinct")
    n = len(nodes)
    if n == 1:
        return Polynomial([values[0]], F)

    # M(x) = prod (x - x_k); each basis numerator is M / (x - x_i)
    master = Polynomial([1], F)
    for xk in nodes:
        master = master * Polynomial([-xk, 1], F)

    zero = values[0] * 0
    acc = [zero] * n
    for xi, yi in zip(nodes, values):
        if not yi:
            continue
        numer, _ = master.divmod_linear(xi)
        denom = F.one
        for xk in nodes:
            if xk != xi:
                denom = denom * (xi - xk)
        scale = yi * denom.inverse()
        for d, c in enumerate(numer.coeffs):
            acc[d] = acc[d] + scale * c
    return Polynomial(acc, F)


def interpolate(f: TabulatedFunction) -> Polynomial:
    """MacLaurin series of ``f`` in its own index variable (Lagrange route)."""
    poly = lagrange_interpolate(list(zip(f.nodes(), f.values)), f.modulus)
    poly = poly.padded(len(f))
    return Polynomial(poly.coeffs[:len(f)], f.modulus, Ring.PLAIN, f.domain)


def vandermonde_solve(f: TabulatedFunction) -> Polynomial:
    """MacLaurin series of ``f`` by Gauss-Jordan elimination.

    Uses a0 = f(0) and solves the (N-1)x(N-1) system V a = f(x) - f(0) over
    x = 1..N-1, with V[x][k] = x**(k+1).
    """
    F = f.modulus
    vals = coerce_scalars([_check_interpolable(v) for v in f.values], F)
    n = len(vals)
    if len({i % F.p for i in range(n)}) != n:
        raise DuplicateNode(f"{f.domain} has repeated nodes in {F}")
    a0 = vals[0]
    if n == 1:
        return Polynomial([a0], F, Ring.PLAIN, f.domain)

    m = n - 1
    rows = [[F(x) ** (k + 1) for k in range(m)] for x in range(1, n)]
    rhs = [vals[x] - a0 for x in range(1, n)]
    for col in range(m):
        pivot = next((r for r in range(col, m) if rows[r][col]), None)
        if pivot is None:
            raise SingularSystem(f"no pivot in column {col}")
        rows[col], rows[pivot] = rows[pivot], rows[col]
        rhs[col], rhs[pivot] = rhs[pivot], rhs[col]
        inv = rows[col][col].inverse()
        rows[col] = [v * inv for v in rows[col]]
        rhs[col] = rhs[col] * inv
        for r in range(m):
            if r != col and rows[r][col]:
                factor = rows[r][col]
                rows[r] = [a - factor * b for a, b in zip(rows[r], rows[col])]
                rhs[r] = rhs[r] - factor * rhs[col]
    return Polynomial([a0] + rhs, F, Ring.PLAIN, f.domain)


def tabulate(a: Polynomial, domain: DomainDescriptor) -> TabulatedFunction:
    """Evaluate ``a`` at every point of ``domain``.

    A polynomial that came from interpolation remembers its domain; asking
    for a different one is refused, because a series in the index variable
    of IndexRing(N) does not describe the function on the full field.
    """
    if a.domain is not None and a.domain != domain:
        raise DomainMismatch(f"polynomial built on {a.domain}, asked for {domain}")
    F = a.modulus
    return TabulatedFunction(domain, [a(F(i)) for i in range(domain.size)], F)


def parity_decompose(f: TabulatedFunction) -> tuple[TabulatedFunction, TabulatedFunction]:
    """Split f into (odd, even) parts: (f(x) -+ f(-x)) / 2."""
    if f.domain.kind != "full":
        raise DomainMismatch("parity needs a full-field domain")
    F = f.modulus
    half = F(2).inverse()
    p = F.p
    odd = [(f.values[x] - f.values[-x % p]) * half for x in range(p)]
    even = [(f.values[x] + f.values[-x % p]) * half for x in range(p)]
    return TabulatedFunction(f.domain, odd, F), TabulatedFunction(f.domain, even, F)


def compose(outer: TabulatedFunction, inner: TabulatedFunction) -> TabulatedFunction:
    """Pointwise outer(inner(x)); inner values are reduced into outer's domain."""
    if outer.modulus != inner.modulus:
        raise DomainMismatch(f"{outer.modulus} vs {inner.modulus}")
    out = []
    for v in inner.values:
        if not isinstance(v, FieldElement):
            raise DomainMismatch(f"inner value {v} is not a field element")
        out.append(outer.values[outer.domain.reduce(v.value)])
    return TabulatedFunction(inner.domain, out, inner.modulus)


def is_bijection(f: TabulatedFunction) -> bool:
    if not all(isinstance(v, FieldElement) for v in f.values):
        return False
    seen = {v.value for v in f.values}
    return len(seen) == len(f) and all(v < f.domain.size for v in seen)


def invert_function(f: TabulatedFunction) -> TabulatedFunction:
    if not is_bijection(f):
        raise NotBijective(f"{f!r} is not a bijection on {f.domain}")
    inv = [0] * len(f)
    for x, v in enumerate(f.values):
        inv[v.value] = x
    return TabulatedFunction(f.domain, inv, f.modulus)
