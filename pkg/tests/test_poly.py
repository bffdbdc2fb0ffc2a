from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from cyclosol.poly import ONE, X, ZERO, IntPolynomial

coeffs = st.lists(st.integers(-20, 20), max_size=5)
polys = coeffs.map(IntPolynomial)


def test_normalization_strips_trailing_zeros():
    assert IntPolynomial([1, 2, 0, 0]).coefficients == (1, 2)
    assert IntPolynomial([0, 0]) == ZERO
    assert ZERO.degree == float("-inf")


def test_pretty():
    assert (2 * X**2 + 3 * X).pretty() == "2x^2+3x"
    assert (X - 1).pretty() in ("x-1", "-1+x")
    assert ZERO.pretty() == "0"
    assert ONE.pretty() == "1"


def test_fraction_coefficients_round_trip():
    p = IntPolynomial([Fraction(1, 2), 0, -3])
    assert IntPolynomial.from_json(p.to_json()) == p
    assert p.evaluate(2) == Fraction(1, 2) - 12


def test_compose():
    p = X**2 + 1
    assert p.compose(X + 1) == X**2 + 2 * X + 2


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a - a == ZERO


@given(polys, polys, st.integers(-5, 5))
def test_evaluation_is_a_homomorphism(a, b, v):
    assert (a * b).evaluate(v) == a.evaluate(v) * b.evaluate(v)
    assert (a + b).evaluate(v) == a.evaluate(v) + b.evaluate(v)


@given(polys)
def test_json_round_trip(p):
    assert IntPolynomial.from_json(p.to_json()) == p


def test_monomial_and_degree():
    m = IntPolynomial.monomial(3, 5)
    assert m.degree == 3 and m.coefficient(3) == 5
    with pytest.raises(Exception):
        X ** -1
