import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from groupcensus.gf import Field, field, is_prime


def test_gf4_modulus_is_unique_irreducible_quadratic():
    assert field(2, 2).modulus == (1, 1, 1)  # x^2 + x + 1


def test_gf9_modulus_from_exhaustive_scan():
    # independent oracle: scan the 9 monic quadratics over GF(3) for the
    # lex-least one without a root
    found = None
    for c0, c1 in itertools.product(range(3), range(3)):
        if all((x * x + c1 * x + c0) % 3 != 0 for x in range(3)):
            found = (c0, c1, 1)
            break
    assert found == (1, 0, 1)  # x^2 + 1
    assert field(3, 2).modulus == found


def test_prime_field_degenerate_modulus():
    F = field(13, 1)
    assert F.modulus == (0, 1)
    assert F.mul((3,), (5,)) == (2,)  # 15 mod 13


def test_constructor_errors():
    with pytest.raises(ValueError):
        Field(4, 1)
    with pytest.raises(ValueError):
        Field(2, 0)
    with pytest.raises(ValueError):
        Field(2, 21)  # 2^21 over the size cap


def test_mul_examples():
    F7 = field(7)
    assert F7.mul((3,), (5,)) == (1,)
    F9 = field(3, 2)
    x = (0, 1)
    assert F9.mul(x, x) == (2, 0)  # x^2 = -1 = 2
    for i in range(9):
        a = F9.element(i)
        assert F9.mul(a, F9.one) == a


def test_mul_length_mismatch():
    F9 = field(3, 2)
    with pytest.raises(ValueError):
        F9.mul((1,), (0, 1))


def test_inverse_examples():
    F7 = field(7)
    assert F7.inv((3,)) == (5,)
    F9 = field(3, 2)
    assert F9.inv((0, 1)) == (0, 2)  # x * 2x = 2x^2 = 4 = 1
    assert F9.inv(F9.one) == F9.one
    with pytest.raises(ZeroDivisionError):
        F9.inv(F9.zero)


def test_frobenius_examples():
    F9 = field(3, 2)
    assert F9.frobenius((0, 1)) == (0, 2)  # x^3 = 2x
    assert F9.frobenius((2, 0)) == (2, 0)  # prime subfield fixed
    for i in range(9):
        a = F9.element(i)
        assert F9.frobenius(F9.frobenius(a)) == a
    with pytest.raises(ValueError):
        field(3, 1).frobenius((1,))


@pytest.mark.parametrize("p,m", [(2, 1), (3, 1), (7, 1), (2, 4), (3, 2), (5, 2), (2, 8)])
def test_field_axioms_random_triples(p, m):
    F = field(p, m)
    rng = random.Random(20260826)
    for _ in range(200):
        a, b, c = (F.element(rng.randrange(F.order)) for _ in range(3))
        assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
        assert F.add(F.add(a, b), c) == F.add(a, F.add(b, c))
        assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
        assert F.mul(a, b) == F.mul(b, a)
        assert F.add(a, b) == F.add(b, a)
        assert F.add(a, F.neg(a)) == F.zero


@pytest.mark.parametrize("p,m", [(2, 2), (3, 2), (5, 1), (13, 1), (2, 8), (3, 4), (5, 2)])
def test_inverses_exhaustive_small_fields(p, m):
    F = field(p, m)
    assert F.order <= 256
    for i in range(1, F.order):
        a = F.element(i)
        assert F.mul(a, F.inv(a)) == F.one


@pytest.mark.parametrize("p,m", [(2, 2), (3, 2), (7, 1), (2, 8), (3, 4)])
def test_multiplicative_group_cyclic(p, m):
    F = field(p, m)

    def elt_order(a):
        k, x = 1, a
        while x != F.one:
            x = F.mul(x, a)
            k += 1
        return k

    assert any(elt_order(F.element(i)) == F.order - 1 for i in range(1, F.order))


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 80), st.integers(0, 80))
def test_frobenius_is_automorphism_gf81(i, j):
    F = field(3, 4)
    a, b = F.element(i), F.element(j)
    assert F.frobenius(F.add(a, b)) == F.add(F.frobenius(a), F.frobenius(b))
    assert F.frobenius(F.mul(a, b)) == F.mul(F.frobenius(a), F.frobenius(b))


def test_is_prime_small():
    primes = {2, 3, 5, 7, 11, 13}
    for n in range(-2, 15):
        assert is_prime(n) == (n in primes)
