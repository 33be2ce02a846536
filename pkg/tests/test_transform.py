import itertools

import pytest
from hypothesis import given, settings, strategies as st

from gfanalysis.errors import NotPrimitive, WrongOrder
from gfanalysis.field import PrimeModulus, element_order, primitive_root
from gfanalysis.interp import TabulatedFunction, interpolate
from gfanalysis.transform import (
    SpectrumVector,
    ffft,
    fold,
    inverse_ffft,
    log_permutation,
    prop4_bridge,
)


def ints(seq):
    return [v.value for v in seq]


def evaluation_oracle(coeffs, alpha, p, n):
    return [sum(c * pow(alpha, i * j, p) for j, c in enumerate(coeffs)) % p for i in range(n)]


def test_ffft_example():
    F = PrimeModulus(5)
    spec = ffft([1, 0, 0, 1], F(2))
    assert spec.ints() == [2, 4, 0, 3]
    assert ints(inverse_ffft(spec)) == [1, 0, 0, 1]


def test_flat_and_zero():
    F = PrimeModulus(7)
    assert ffft([5], F(3)).ints() == [5] * 6
    assert ffft([0] * 6, F(3)).ints() == [0] * 6
    assert ints(inverse_ffft(SpectrumVector(F(3), tuple(F(4) for _ in range(6))))) == [4, 0, 0, 0, 0, 0]


def test_wrong_order():
    F = PrimeModulus(7)
    with pytest.raises(WrongOrder):
        ffft([1, 2], F(2), n=6)  # 2 has order 3 mod 7
    with pytest.raises(WrongOrder):
        ffft([1] * 7, F(3))
    with pytest.raises(WrongOrder):
        inverse_ffft(SpectrumVector(F(3), (F(1),) * 4))


def test_delta_transforms_to_geometric_row():
    F = PrimeModulus(13)
    alpha = F(2)
    for j in range(12):
        delta = [0] * 12
        delta[j] = 1
        assert ffft(delta, alpha).ints() == [(alpha ** (i * j)).value for i in range(12)]


@pytest.mark.parametrize("p,alpha", [(5, 2), (7, 3), (13, 2), (13, 4)])
@settings(max_examples=50)
@given(data=st.data())
def test_ffft_linear_round_trip_and_oracle(p, alpha, data):
    F = PrimeModulus(p)
    a_ = F(alpha)
    n = element_order(a_)
    vec = st.lists(st.integers(0, p - 1), min_size=n, max_size=n)
    x, y = data.draw(vec), data.draw(vec)
    k = data.draw(st.integers(0, p - 1))
    X, Y = ffft(x, a_), ffft(y, a_)
    assert X.ints() == evaluation_oracle(x, alpha, p, n)
    assert ffft([(k * u + v) % p for u, v in zip(x, y)], a_).ints() == \
        [(k * u + v) % p for u, v in zip(X.ints(), Y.ints())]
    assert ints(inverse_ffft(X)) == x


def test_aliasing_law_exhaustive_gf5():
    F = PrimeModulus(5)
    alpha = F(2)
    for coeffs in itertools.product(range(5), repeat=5):
        folded = fold([F(c) for c in coeffs], 4, F)
        rec = ints(inverse_ffft(ffft(folded, alpha)))
        assert rec == [(coeffs[0] + coeffs[4]) % 5] + list(coeffs[1:4])


def test_bridge_exact_for_all_bijections_gf5():
    F = PrimeModulus(5)
    for perm in itertools.permutations(range(5)):
        rep = prop4_bridge(TabulatedFunction.full(perm, 5), F(2))
        assert rep.exact
        assert tuple(rep.recovered) == tuple(rep.coefficients[:4])


def test_bridge_two_to_the_x_aliasing():
    F = PrimeModulus(5)
    f = TabulatedFunction.full([1, 2, 4, 3, 1], 5)
    rep = prop4_bridge(f, F(2))
    a = interpolate(f).values()
    assert ints(rep.coefficients) == a
    assert a[4] != 0 and not rep.exact
    assert ints(rep.recovered) == [(a[0] + a[4]) % 5] + a[1:4]
    assert rep.mismatched_indices() == [0]
    assert rep.f_at_zero == 1
    assert ints(log_permutation(f, F(2))) == [2, 4, 1, 3]  # f(1), f(2), f(4), f(3)


def test_bridge_constant():
    rep = prop4_bridge(TabulatedFunction.full([3] * 5, 5), PrimeModulus(5)(2))
    assert rep.exact and ints(rep.recovered) == [3, 0, 0, 0]


def test_bridge_needs_primitive():
    with pytest.raises(NotPrimitive):
        prop4_bridge(TabulatedFunction.full([0, 1, 2, 3, 4], 5), PrimeModulus(5)(4))


@pytest.mark.parametrize("p", [5, 7, 11])
@settings(max_examples=60)
@given(data=st.data())
def test_bridge_exact_iff_top_coefficient_vanishes(p, data):
    vals = data.draw(st.lists(st.integers(0, p - 1), min_size=p, max_size=p))
    f = TabulatedFunction.full(vals, p)
    rep = prop4_bridge(f, primitive_root(p))
    assert rep.exact == (rep.coefficients[-1].value == 0)
