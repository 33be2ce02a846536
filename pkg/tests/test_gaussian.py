import itertools

import pytest
from hypothesis import given, strategies as st

from gfanalysis.errors import DivisionByZero, NotAField
from gfanalysis.gaussian import GaussianElement, gi_arith


def G(re, im, p, formal=False):
    return GaussianElement(re, im, p, formal=formal)


def test_j_squared_is_minus_one():
    j = GaussianElement.j(7)
    assert j * j == G(6, 0, 7)


def test_conjugate_product_is_norm():
    # (2+3j)(2-3j) = 4 + 9 = 13 = 6 (mod 7)
    z = G(2, 3, 7)
    assert gi_arith(z, z.conj(), "mul") == G(6, 0, 7)
    assert z.norm() == 6


def test_identity():
    z = G(4, 5, 11)
    assert G(1, 0, 11) * z == z


def test_field_mode_needs_p_3_mod_4():
    with pytest.raises(NotAField):
        G(1, 1, 5)
    assert G(1, 1, 5, formal=True).formal


def test_formal_mode_refuses_division():
    z = G(1, 1, 5, formal=True)
    with pytest.raises(NotAField):
        z / G(0, 1, 5, formal=True)
    # scaling by a GF(p) scalar stays legal
    assert z / 2 == G(3, 3, 5, formal=True)


def test_division_by_zero():
    with pytest.raises(DivisionByZero):
        G(1, 2, 7) / G(0, 0, 7)


@pytest.mark.parametrize("p", [3, 7, 11])
def test_every_nonzero_element_is_invertible(p):
    one = G(1, 0, p)
    for a, b in itertools.product(range(p), repeat=2):
        if a == b == 0:
            continue
        z = G(a, b, p)
        assert z * z.inverse() == one
        assert gi_arith(one, z, "div") == z.inverse()


@pytest.mark.parametrize("p,formal", [(7, False), (11, False), (5, True), (13, True)])
@given(data=st.data())
def test_ring_identities(p, formal, data):
    ints = st.integers(0, p - 1)
    x = G(data.draw(ints), data.draw(ints), p, formal)
    y = G(data.draw(ints), data.draw(ints), p, formal)
    z = G(data.draw(ints), data.draw(ints), p, formal)
    assert (x * y).conj() == x.conj() * y.conj()
    assert (x * y).norm() == x.norm() * y.norm()
    assert x * (y + z) == x * y + x * z
    assert (x * y) * z == x * (y * z)
    assert x - y + y == x
