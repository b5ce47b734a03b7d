import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from g2spec.algebraic import NumericRoot, QuadraticSurd, roots_of_charpoly
from g2spec.exact import gq

q = st.fractions(min_value=-20, max_value=20, max_denominator=6)
radicand = st.sampled_from([2, 3, 5, 33, 37, 57])


def surds():
    return st.builds(QuadraticSurd, q, q, radicand)


@given(surds(), surds())
def test_order_agrees_with_floats(x, y):
    if abs(float(x) - float(y)) > 1e-9:
        assert (x < y) == (float(x) < float(y))


@given(q, q, radicand)
def test_arithmetic_against_floats(a, b, d):
    x = QuadraticSurd(a, b, d)
    y = QuadraticSurd(b, a, d)
    assert math.isclose(float(x * y), float(x) * float(y), rel_tol=1e-12, abs_tol=1e-9)
    assert math.isclose(float(x + y), float(x) + float(y), rel_tol=1e-12, abs_tol=1e-9)
    assert x - x == 0


@given(surds())
def test_conjugate_and_minimal_polynomial(x):
    c = x.conjugate_root()
    assert x + c == 2 * x.a
    p = x.minimal_polynomial()
    val = sum(float(k) * float(x) ** (len(p) - 1 - i) for i, k in enumerate(p))
    assert abs(val) < 1e-6 * max(1.0, float(x) ** 2)


def test_normalisation():
    assert QuadraticSurd(0, 1, 12) == QuadraticSurd(0, 2, 3)
    assert QuadraticSurd(1, 1, 4) == QuadraticSurd(3)
    assert QuadraticSurd.sqrt(Fraction(9, 4)) == QuadraticSurd(Fraction(3, 2))
    assert str(QuadraticSurd(Fraction(-1, 2), Fraction(1, 2), 33)) == "-1/2 + 1/2*sqrt(33)"
    with pytest.raises(ValueError):
        QuadraticSurd.sqrt(-1)


@pytest.mark.parametrize("text", ["-1/2 + 1/2*sqrt(33)", "(1+sqrt(57))/2", "3", "-√37/2"])
def test_parse_round_trip(text):
    x = QuadraticSurd.parse(text)
    assert QuadraticSurd.parse(str(x)) == x


def test_mixed_radicands_compare_exactly():
    assert QuadraticSurd(0, 1, 2) < QuadraticSurd(0, 1, 3)
    assert QuadraticSurd(0, 1, 2) != QuadraticSurd(0, 1, 3)


def test_roots_of_charpoly():
    # (x² − x − 8)(x − 1)² : roots (1 ± √33)/2 and 1 twice
    coeffs = [gq(c) for c in (1, -3, -5, 15, -8)]
    roots = dict(roots_of_charpoly(coeffs))
    assert roots == {
        QuadraticSurd(Fraction(1, 2), Fraction(-1, 2), 33): 1,
        QuadraticSurd(1): 2,
        QuadraticSurd(Fraction(1, 2), Fraction(1, 2), 33): 1,
    }


def test_cubic_factor_falls_back_to_numeric():
    roots = roots_of_charpoly([gq(c) for c in (1, 0, -3, 1)])  # x³ − 3x + 1
    assert all(isinstance(r, NumericRoot) for r, _ in roots)
    assert abs(sum(float(r) for r, _ in roots)) < 1e-12


def test_complex_roots_are_rejected():
    with pytest.raises(ArithmeticError):
        roots_of_charpoly([gq(1), gq(0), gq(1)])
