"""Sparse Laurent polynomials and the antisymmetric building blocks."""

import pytest
from hypothesis import given, settings, strategies as st

from pencils.errors import DomainError
from pencils.laurent import LaurentPolynomial, constant_term, lp_mul, p_poly

from oracles import convolve, p_dict

small_poly = st.dictionaries(
    st.integers(min_value=-8, max_value=8),
    st.integers(min_value=-9, max_value=9),
    max_size=6,
)


def test_zero_coefficients_dropped():
    p = LaurentPolynomial({2: 0, -1: 3})
    assert p.support() == [-1]
    assert p.coefficient(2) == 0
    assert p.coefficient(-1) == 3


def test_arithmetic():
    p = LaurentPolynomial({1: 1, -1: -1})
    q = LaurentPolynomial({0: 2})
    assert (p + q).coefficient(0) == 2
    assert (p - p).is_zero()
    assert (3 * p).coefficient(1) == 3
    assert (p * q).coefficient(-1) == -2
    assert (p ** 2).coefficient(0) == -2


def test_pow_negative_raises():
    with pytest.raises(DomainError):
        p_poly(1) ** -1


@given(small_poly, small_poly)
@settings(max_examples=200)
def test_mul_matches_naive_convolution(d1, d2):
    got = lp_mul(LaurentPolynomial(d1), LaurentPolynomial(d2))
    want = convolve(d1, d2)
    assert {e: got.coefficient(e) for e in got.support()} == want


def test_p_poly_values():
    assert p_poly(0).is_zero()
    assert p_poly(1).support() == [-1, 1]
    p2 = p_poly(2)
    assert p2.coefficient(-2) == -2
    assert p2.coefficient(0) == 0
    assert p2.coefficient(2) == 2
    assert {e: p_poly(3).coefficient(e) for e in p_poly(3).support()} == p_dict(3)
    with pytest.raises(DomainError):
        p_poly(-1)


def test_p_poly_antisymmetry():
    for r in range(31):
        p = p_poly(r)
        for e in p.support():
            assert p.coefficient(-e) == -p.coefficient(e), (r, e)


def test_odd_parity_products_have_no_constant_term():
    for r1 in range(7):
        for r2 in range(r1, 7):
            for r3 in range(r2, 7):
                if (r1 + r2 + r3) % 2:
                    assert constant_term(p_poly(r1) * p_poly(r2) * p_poly(r3)) == 0


def test_square_constant_term_two_ways():
    for r in range(21):
        p = p_poly(r)
        direct = constant_term(p * p)
        paired = sum(p.coefficient(e) * p.coefficient(-e) for e in p.support())
        squared = -sum(p.coefficient(e) ** 2 for e in p.support())
        assert direct == paired == squared, r


def test_known_constant_terms():
    assert constant_term(p_poly(1) ** 4) == 6
    assert constant_term(p_poly(2) ** 4) == 96
    assert constant_term(p_poly(3) ** 2) == -20
    assert constant_term(p_poly(2)) == 0


def test_equality_hash():
    assert p_poly(2) == LaurentPolynomial({-2: -2, 2: 2})
    assert hash(p_poly(2)) == hash(LaurentPolynomial({2: 2, -2: -2}))
