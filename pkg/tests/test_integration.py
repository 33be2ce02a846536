import itertools

import pytest
from hypothesis import given, settings, strategies as st

from gfanalysis.errors import IndexOutOfRange
from gfanalysis.interp import TabulatedFunction, affine, interpolate
from gfanalysis.integration import (
    definite_integral,
    inner_product,
    inner_product_report,
    integral_via_coefficient,
    invertibility_necessary_check,
    partial_integral,
    power_sum,
    power_sum_brute,
    power_sum_table,
)
from gfanalysis.poly import Polynomial

PRINTED_S_TABLE_GF5 = [
    [1, 0, 0, 0, 0],
    [2, 1, 1, 1, 1],
    [3, 3, 0, 4, 2],
    [4, 1, 4, 1, 3],
    [0, 0, 0, 0, 4],
]


def full(values, p):
    return TabulatedFunction.full(values, p)


def values_of(p):
    return st.lists(st.integers(0, p - 1), min_size=p, max_size=p)


def test_power_sum_examples():
    assert power_sum(5, 4) == 4
    assert power_sum(5, 2) == 0
    assert power_sum(5, 0) == 0
    with pytest.raises(IndexOutOfRange):
        power_sum(5, 5)


@pytest.mark.parametrize("p", [3, 5, 7, 11, 13])
def test_power_sum_matches_brute_force(p):
    for n in range(p):
        assert power_sum(p, n) == power_sum_brute(p, n)


def test_power_sum_table_gf5():
    table = power_sum_table(5, 4)
    assert table.ints() == PRINTED_S_TABLE_GF5
    assert table[2, 3] == 4
    for n in range(5):
        for i in range(5):
            assert table[n, i] == power_sum_brute(5, i, upto=n)


def test_power_sum_table_bounds():
    with pytest.raises(IndexOutOfRange):
        power_sum_table(5, 5)
    assert len(power_sum_table(7, 2).rows) == 3


@pytest.mark.parametrize("p", [3, 5, 7, 11])
def test_bottom_row_is_power_sum_closed_form(p):
    last = power_sum_table(p).rows[-1]
    assert [v.value for v in last] == [0] * (p - 1) + [p - 1]


def test_definite_integral_examples():
    assert definite_integral(full([1, 2, 4, 3, 1], 5)) == 1
    assert definite_integral(full([0] * 7, 7)) == 0
    assert definite_integral(affine(1, 0, 5)) == 0


def test_integral_via_coefficient_examples():
    assert integral_via_coefficient(Polynomial([0, 0, 0, 0, 1], 5)) == 4
    assert integral_via_coefficient(Polynomial([3, 1, 4, 1], 5)) == 0


def test_coefficient_integral_exhaustive_gf3():
    for vals in itertools.product(range(3), repeat=3):
        f = full(vals, 3)
        assert integral_via_coefficient(interpolate(f)) == definite_integral(f)


@pytest.mark.parametrize("p", [5, 7, 11, 13])
@settings(max_examples=60)
@given(data=st.data())
def test_coefficient_integral_random(p, data):
    coeffs = data.draw(values_of(p))
    a = Polynomial(coeffs, p)
    brute = sum(a(x).value for x in range(p)) % p
    assert integral_via_coefficient(a) == brute


def test_inner_product_examples():
    x = affine(1, 0, 5)
    assert inner_product(x, x) == 0
    cube = full([v ** 3 for v in range(5)], 5)
    assert inner_product(x, cube) == 4
    rep = inner_product_report(x, cube)
    assert rep.printed_formula == 4 and rep.aliasing_term == 0


def test_inner_product_aliasing_pair():
    # f = g = x^4 over GF(5): sum k^8 = 4, but the anti-diagonal sum is 0
    x4 = full([pow(v, 4, 5) for v in range(5)], 5)
    rep = inner_product_report(x4, x4)
    assert rep.direct == 4
    assert rep.printed_formula == 0
    assert rep.aliasing_term == 4
    assert rep.agrees and not rep.printed_formula_agrees


@pytest.mark.parametrize("p", [5, 7, 11])
@settings(max_examples=60)
@given(data=st.data())
def test_inner_product_routes_random(p, data):
    f = full(data.draw(values_of(p)), p)
    g = full(data.draw(values_of(p)), p)
    rep = inner_product_report(f, g)
    direct = sum(u * v for u, v in zip(f.ints(), g.ints())) % p
    assert rep.direct == direct == rep.coefficient_route
    a, b = interpolate(f), interpolate(g)
    if a[p - 1].value == 0 or b[p - 1].value == 0:
        assert rep.printed_formula_agrees


@pytest.mark.parametrize("p", [5, 7])
@settings(max_examples=40)
@given(data=st.data())
def test_partial_integral(p, data):
    f = full(data.draw(values_of(p)), p)
    n = data.draw(st.integers(0, p - 1))
    assert partial_integral(f, n) == sum(f.ints()[: n + 1]) % p
    assert partial_integral(f, p - 1) == definite_integral(f)


def test_partial_integral_bounds():
    with pytest.raises(IndexOutOfRange):
        partial_integral(affine(1, 0, 5), 5)
    with pytest.raises(IndexOutOfRange):
        partial_integral(affine(1, 0, 5), -1)


def test_invertibility_check_examples():
    rep = invertibility_necessary_check(affine(3, 4, 5))
    assert rep.top_coeff_zero and rep.is_bijection
    assert not invertibility_necessary_check(full([1, 2, 4, 3, 1], 5)).is_bijection


def test_necessary_not_sufficient_witness_exists():
    witnesses = []
    for vals in itertools.product(range(5), repeat=5):
        rep = invertibility_necessary_check(full(vals, 5))
        if rep.top_coeff_zero and not rep.is_bijection:
            witnesses.append(vals)
            break
    assert witnesses, "no non-bijective function with a_4 = 0 found"
    # the constant function is the simplest witness
    rep = invertibility_necessary_check(full([2] * 5, 5))
    assert rep.top_coeff_zero and not rep.is_bijection


@pytest.mark.parametrize("p", [3, 5])
def test_bijections_have_zero_top_coefficient(p):
    for perm in itertools.permutations(range(p)):
        rep = invertibility_necessary_check(full(perm, p))
        assert rep.is_bijection and rep.top_coeff_zero
