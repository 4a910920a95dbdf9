import numpy as np
import pytest
from hypothesis import given, strategies as st

from flagforge import errors
from flagforge.galois import (FieldElement, FieldSpec, field_make, field_of_order, gf_add, gf_inv,
                              gf_mul, gf_neg, gf_pow, is_irreducible, prime_field, prime_power)

from oracles import schoolbook_mul, smallest_irreducible


def test_prime_field_modulus_is_x():
    assert field_make(2, 1).modulus == (0, 1)


@pytest.mark.parametrize("p,e", [(2, 2), (3, 2), (2, 3), (2, 4), (3, 3), (5, 2)])
def test_modulus_matches_exhaustive_search(p, e):
    assert field_make(p, e).modulus == smallest_irreducible(p, e)


def test_frozen_moduli():
    # values computed with the reducible-product enumeration in oracles.py
    assert field_make(2, 2).modulus == (1, 1, 1)
    assert field_make(3, 2).modulus == (1, 0, 1)
    assert field_make(2, 3).modulus == (1, 1, 0, 1)


def test_field_make_errors():
    with pytest.raises(errors.NotPrime):
        field_make(4, 1)
    with pytest.raises(errors.TooLarge):
        field_make(2, 17)
    with pytest.raises(errors.NotPrime):
        field_of_order(6)
    assert prime_power(9) == (3, 2)
    assert prime_power(7) == (7, 1)


def test_gf4_examples():
    f = field_make(2, 2)
    assert all(gf_mul(a, 1, f) == a for a in range(4))
    assert gf_mul(2, 2, f) == 3
    assert gf_inv(2, f) == 3
    with pytest.raises(errors.DivisionByZero):
        gf_inv(0, f)


@pytest.mark.parametrize("p,e", [(2, 2), (2, 3), (3, 2), (2, 4)])
def test_axioms_exhaustive(p, e):
    f = field_make(p, e)
    for a in range(f.q):
        assert gf_add(a, gf_neg(a, f), f) == 0
        for b in range(f.q):
            assert gf_add(a, b, f) == gf_add(b, a, f)
            assert gf_mul(a, b, f) == gf_mul(b, a, f)
            for c in range(f.q):
                assert gf_mul(gf_mul(a, b, f), c, f) == gf_mul(a, gf_mul(b, c, f), f)
                assert gf_add(gf_add(a, b, f), c, f) == gf_add(a, gf_add(b, c, f), f)
                assert gf_mul(a, gf_add(b, c, f), f) == gf_add(gf_mul(a, b, f), gf_mul(a, c, f), f)


@pytest.mark.parametrize("p,e", [(2, 8), (3, 5), (5, 3), (251, 1), (2, 1)])
def test_inverse_and_fermat(p, e):
    f = field_make(p, e)
    for a in range(1, f.q):
        assert gf_mul(a, gf_inv(a, f), f) == 1
        assert gf_pow(a, f.q - 1, f) == 1


@pytest.mark.parametrize("p,e", [(2, 4), (3, 3), (7, 2)])
def test_mul_matches_schoolbook(p, e):
    f = field_make(p, e)
    for a in range(f.q):
        for b in range(f.q):
            assert gf_mul(a, b, f) == schoolbook_mul(a, b, p, f.modulus)


def test_vectorised_matches_scalar():
    f = field_make(3, 2)
    a, b = np.meshgrid(np.arange(9), np.arange(9))
    fast_add, fast_mul = f.add(a, b), f.mul(a, b)
    for x in range(9):
        for y in range(9):
            assert fast_add[y, x] == f.add(x, y)
            assert fast_mul[y, x] == f.mul(x, y)


@given(st.integers(0, 80), st.integers(0, 80), st.integers(-5, 20))
def test_pow_is_repeated_multiplication(a, b, n):
    f = field_make(3, 4)
    if a == 0 and n < 0:
        with pytest.raises(errors.DivisionByZero):
            f.pow(a, n)
        return
    expected = 1
    base = a if n >= 0 else f.inv(a)
    for _ in range(abs(n)):
        expected = f.mul(expected, base)
    assert f.pow(a, n) == expected


def test_coefficient_encoding():
    f = field_make(3, 2)
    assert f.coeffs(0) == (0, 0)
    assert f.coeffs(1) == (1, 0)
    assert f.coeffs(7) == (1, 2)
    assert all(f.from_coeffs(f.coeffs(a)) == a for a in range(9))


def test_field_element_operators():
    f = field_make(2, 2)
    x = f.element(2)
    assert (x * x).value == 3
    assert (x + 1).value == 3
    assert (x / x).value == 1
    assert x.inverse().value == 3
    assert (x ** 3).value == 1
    assert x.coeffs == (0, 1)
    with pytest.raises(errors.FieldMismatch):
        f.element(4)
    with pytest.raises(errors.FieldMismatch):
        x + field_make(3, 1).element(1)


def test_json_round_trip_and_validation():
    f = field_make(3, 2)
    assert f.to_json() == {"p": 3, "e": 2, "modulus": [1, 0, 1]}
    assert FieldSpec.from_json(f.to_json()) == f
    with pytest.raises(errors.FormatError):
        FieldSpec(2, 2, (1, 0, 1))  # x^2 + 1 = (x + 1)^2 over GF(2)
    with pytest.raises(errors.FormatError):
        FieldSpec.from_json({"p": 2})


def test_irreducibility_helper():
    f2 = prime_field(2)
    assert is_irreducible([1, 1, 1], f2)
    assert not is_irreducible([1, 0, 1], f2)
    assert is_irreducible([1, 1, 0, 1], f2)
