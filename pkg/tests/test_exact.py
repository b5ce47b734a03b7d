from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from g2spec.exact import (
    I,
    conj,
    dagger,
    dm,
    entries,
    format_scalar,
    gq,
    im_part,
    kron,
    parse_scalar,
    rational_from_any,
    re_part,
    scalar_from_pair,
    scalar_to_pair,
    solve_in_span,
    trace,
)

from conftest import gaussian


@given(gaussian)
def test_scalar_text_round_trip(x):
    assert parse_scalar(format_scalar(x)) == x
    assert scalar_from_pair(scalar_to_pair(x)) == x


@given(gaussian, gaussian)
def test_conjugation_is_multiplicative(x, y):
    assert conj(x * y) == conj(x) * conj(y)
    assert re_part(x * conj(x)) >= 0 and im_part(x * conj(x)) == 0


def test_parse_forms():
    assert parse_scalar("1/3 - 2*i") == gq(Fraction(1, 3)) - 2 * I
    assert parse_scalar("i") == I
    assert parse_scalar("-7") == gq(-7)


def test_rational_from_any():
    assert rational_from_any(0.5) == Fraction(1, 2)
    assert rational_from_any("-3/2") == Fraction(-3, 2)
    assert rational_from_any(-1.5) == Fraction(-3, 2)


def test_matrix_helpers():
    A = dm([[1, I], [0, 2]])
    assert entries(dagger(A)) == [[gq(1), gq(0)], [-I, gq(2)]]
    assert trace(A) == gq(3)
    K = kron(A, dm([[1, 0], [0, -1]]))
    assert K.shape == (4, 4) and trace(K) == gq(0)


def test_solve_in_span():
    vs = [[gq(1), gq(0), gq(1)], [gq(0), gq(1), gq(1)]]
    assert solve_in_span(vs, [gq(2), gq(3), gq(5)]) == [gq(2), gq(3)]
    with pytest.raises(ValueError):
        solve_in_span(vs, [gq(1), gq(1), gq(0)])


@pytest.mark.parametrize("bad", ["1/0", "x"])
def test_parse_rejects_garbage(bad):
    with pytest.raises((ValueError, ZeroDivisionError)):
        parse_scalar(bad)


@given(st.integers(-50, 50), st.integers(1, 9))
def test_rational_exact_for_fractions(p, q):
    assert rational_from_any(Fraction(p, q)) == Fraction(p, q)
