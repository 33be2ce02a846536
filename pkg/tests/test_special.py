from fractions import Fraction
from math import factorial

import pytest

from gfanalysis.errors import CompositeModulusForTrig, InvalidBase, NotBijective, Undefined
from gfanalysis.field import MINUS_INF, PrimeModulus, primitive_root
from gfanalysis.gaussian import GaussianElement
from gfanalysis.interp import interpolate, invert_function
from gfanalysis.poly import Polynomial, Ring
from gfanalysis.special import (
    cos_series,
    cosh_series,
    euler_constant,
    exp_alpha,
    exp_alpha_table,
    exp_series,
    exp_table,
    k_trig,
    log_alpha,
    log_table,
    reciprocal_table,
    sin_series,
    sinh_series,
)

COS_ROWS_GF7 = [
    [1, 1, 1, 1, 1, 1],
    [1, 4, 3, 6, 3, 4],
    [1, 3, 3, 1, 3, 3],
    [1, 6, 1, 6, 1, 6],
    [1, 3, 3, 1, 3, 3],
    [1, 4, 3, 6, 3, 4],
]


def rational_series_mod(p, degrees, sign):
    """Oracle: exact rational coefficients sign(d)/d!, then reduced mod p."""
    out = [0] * (p - 1)
    for d in degrees:
        q = Fraction(sign(d), factorial(d))
        out[d] = q.numerator * pow(q.denominator, -1, p) % p
    return out


def test_exp_alpha():
    F = PrimeModulus(5)
    assert [exp_alpha(F(2), i).value for i in range(5)] == [1, 2, 4, 3, 1]
    assert exp_alpha(F(2), 7, index_mod=4) == 3
    assert exp_alpha(F(3), 0) == 1
    assert exp_alpha_table(F(2), 4).ints() == [1, 2, 4, 3]


@pytest.mark.parametrize("k", range(6))
def test_cos_rows_gf7(k):
    t = k_trig(PrimeModulus(7)(3), k)
    assert [c.re.value for c in t.cos_values] == COS_ROWS_GF7[k]
    assert all(c.is_real() for c in t.cos_values)
    assert all(s.re.value == 0 for s in t.sin_values)
    assert not t.degenerate


def test_sin0_is_zero():
    t = k_trig(PrimeModulus(7)(3), 0)
    assert all(not s for s in t.sin_values)


@pytest.mark.parametrize("p", [7, 11])
def test_unit_circle_exhaustive(p):
    F = PrimeModulus(p)
    alpha = F(3) if p == 7 else primitive_root(p)
    n = p - 1
    for k in range(n):
        t = k_trig(alpha, k)
        assert all(v == 1 for v in t.unit_circle())
        # cos_{N-k} = cos_k
        assert t.cos_values == k_trig(alpha, (n - k) % n).cos_values


def test_half_period():
    t = k_trig(PrimeModulus(7)(3), 1)
    for i in range(6):
        assert t.cos_values[(i + 3) % 6] == -t.cos_values[i]


def test_degenerate_and_formal_modes_gf5():
    F = PrimeModulus(5)
    deg = k_trig(F(2), 1)
    assert deg.degenerate and not deg.formal
    assert [s.value for s in deg.sin_values] == [0, 1, 0, 4]  # j = 2
    assert all(v == 1 for v in deg.unit_circle())
    formal = k_trig(F(2), 1, mode="formal")
    assert formal.formal
    assert formal.sin_values == tuple(GaussianElement(0, b, 5, formal=True) for b in (0, 3, 0, 2))
    assert [c.re.value for c in formal.cos_values] == [1, 0, 4, 0]


def test_euler_formula_gf5_as_polynomial_identity():
    t = k_trig(PrimeModulus(5)(2), 1, mode="formal")
    cos_poly = interpolate(t.cos_table())
    sin_poly = interpolate(t.sin_table())
    j = GaussianElement.j(5, formal=True)
    total = cos_poly + sin_poly * j
    assert [c.im.value for c in total] == [0, 0, 0, 0]
    assert [c.re.value for c in total] == [1, 0, 0, 1]  # i^3 + 1
    assert interpolate(exp_alpha_table(PrimeModulus(5)(2), 4)).values() == [1, 0, 0, 1]


def test_series_values():
    assert exp_series(7).values() == [1, 1, 4, 6, 5, 1]
    assert exp_series(7).ring is Ring.NEGACYCLIC
    assert cos_series(7).values() == rational_series_mod(7, [0, 2, 4], lambda d: (-1) ** (d // 2))
    assert cos_series(7).values() == [1, 0, 3, 0, 5, 0]
    assert sin_series(7).values() == [0, 1, 0, 1, 0, 1]
    assert exp_series(5).values() == [1, 1, 3, 1]


@pytest.mark.parametrize("p", [3, 5, 7, 11, 13])
def test_series_against_rational_oracle(p):
    assert exp_series(p).values() == rational_series_mod(p, range(p - 1), lambda d: 1)
    assert cosh_series(p).values() == rational_series_mod(p, range(0, p - 2, 2), lambda d: 1)
    assert sinh_series(p).values() == rational_series_mod(p, range(1, p - 1, 2), lambda d: 1)
    assert sinh_series(p) + cosh_series(p) == exp_series(p)


@pytest.mark.parametrize("p", [3, 7, 11, 19])
def test_trig_series_parity(p):
    c, s = cos_series(p).values(), sin_series(p).values()
    assert all(v == 0 for d, v in enumerate(c) if d % 2)
    assert all(v == 0 for d, v in enumerate(s) if d % 2 == 0)
    assert sin_series(p).values() == rational_series_mod(
        p, range(1, p - 1, 2), lambda d: (-1) ** ((d - 1) // 2))


def test_trig_series_need_p_3_mod_4():
    with pytest.raises(CompositeModulusForTrig):
        cos_series(5)
    with pytest.raises(CompositeModulusForTrig):
        sin_series(13)


def test_euler_constant():
    assert euler_constant(7) == 4
    assert euler_constant(3) == 2
    for p in (3, 5, 7, 11):
        assert euler_constant(p) == exp_series(p)(1)
        assert euler_constant(p) == exp_table(p)(1)


def test_exp_table():
    # direct evaluation of 1 + i + 4i^2 + 6i^3 + 5i^4 + i^5 mod 7
    oracle = [sum(c * i ** k for k, c in enumerate([1, 1, 4, 6, 5, 1])) % 7 for i in range(7)]
    assert exp_table(7).ints() == oracle
    assert exp_table(7).ints()[:6] == [1, 4, 4, 3, 6, 1]
    assert exp_table(7)(0) == 1
    assert exp_table(5).ints() == [sum(c * i ** k for k, c in enumerate([1, 1, 3, 1])) % 5
                                   for i in range(5)]


def test_exp_not_injective_so_no_ln():
    with pytest.raises(NotBijective):
        invert_function(exp_table(7))


def test_e_trig_not_on_unit_circle():
    c, s = cos_series(7), sin_series(7)
    F = PrimeModulus(7)
    assert any(c(F(i)) ** 2 + s(F(i)) ** 2 != 1 for i in range(7))


def test_log_table():
    F = PrimeModulus(5)
    tab = log_table(F(2))
    assert tab.values[0] is MINUS_INF
    assert [v.value for v in tab.values[1:]] == [0, 1, 3, 2]
    assert log_alpha(F(2), 1) == 0
    assert log_alpha(F(2), F(2)) == 1
    assert log_alpha(F(2), 0) is MINUS_INF
    with pytest.raises(InvalidBase):
        log_alpha(F(4), 1)
    with pytest.raises(Undefined):
        log_alpha(F(2), MINUS_INF)


@pytest.mark.parametrize("p", [5, 7, 11, 13])
def test_log_inverts_exp(p):
    g = primitive_root(p)
    for m in range(p - 1):
        assert log_alpha(g, g ** m) == m


def test_reciprocal_table():
    tab = reciprocal_table(5)
    assert tab.values[0] is MINUS_INF
    assert [v.value for v in tab.values[1:]] == [1, 3, 2, 4]
    for p in (7, 11):
        assert reciprocal_table(p)(1) == 1
        assert reciprocal_table(p)(p - 1) == p - 1


def test_series_polynomials_are_negacyclic_length():
    for p in (7, 11):
        for s in (exp_series(p), cos_series(p), sin_series(p)):
            assert len(s) == p - 1 and s.ring is Ring.NEGACYCLIC
    assert Polynomial([1], 7, Ring.NEGACYCLIC).values() == [1, 0, 0, 0, 0, 0]
