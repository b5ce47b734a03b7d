from fractions import Fraction

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from g2spec import moduli
from g2spec.algebraic import QuadraticSurd
from g2spec.dirac import UncertifiedInterval

rates = st.fractions(min_value=Fraction(-39, 10), max_value=Fraction(-1, 10), max_denominator=20)


def test_certified_spectrum():
    L = moduli.certified_ledger()
    assert dict(L.spectrum) == {QuadraticSurd(-1): 7, QuadraticSurd(0): 2, QuadraticSurd(1): 7}
    assert L.W == [QuadraticSurd(-3), QuadraticSurd(-2), QuadraticSurd(-1)]
    assert L.W_crit == [QuadraticSurd(-4), QuadraticSurd(-3), QuadraticSurd(-2)]
    assert L.is_symmetric()


def test_jumps():
    assert [moduli.k_of(x) for x in (-3, -2, -1)] == [7, 2, 7]
    assert moduli.k_of(-1.5) == 0


def test_virtual_dimension_values():
    assert moduli.virtual_dim(-1.5) == 1
    assert moduli.virtual_dim(Fraction(-1, 2)) == 8
    assert moduli.virtual_dim(Fraction(-19, 10)) == 1


def test_virtual_dimension_errors():
    with pytest.raises(moduli.CriticalWeightError):
        moduli.virtual_dim(-1)
    with pytest.raises(ValueError):
        moduli.virtual_dim(Fraction(1, 2))
    with pytest.raises(ValueError):
        moduli.virtual_dim(-2)


def test_index_change():
    assert moduli.index_change(-1.5, -0.5) == 7
    assert moduli.index_change(-1.5, -1.2) == 0
    assert moduli.index_change(Fraction(-7, 2), -0.5) == 16
    with pytest.raises(ValueError):
        moduli.index_change(-0.5, -1.5)
    with pytest.raises(UncertifiedInterval):
        moduli.index_change(-4.5, -0.5)


@given(rates, rates, rates)
def test_index_change_is_additive(a, b, c):
    a, b, c = sorted((a, b, c))
    crit = {-3, -2, -1}
    assume(not ({a, b, c} & crit))
    assert moduli.index_change(a, c) == moduli.index_change(a, b) + moduli.index_change(b, c)


JUMPS = {-3: 7, -2: 2, -1: 7}


@given(rates, rates)
def test_index_change_against_jump_table(a, b):
    a, b = sorted((a, b))
    assume(a not in JUMPS and b not in JUMPS)
    assert moduli.index_change(a, b) == sum(k for nu, k in JUMPS.items() if a < nu < b)


@given(st.fractions(min_value=Fraction(-199, 100), max_value=Fraction(-1, 100), max_denominator=100))
def test_virtual_dimension_is_piecewise_constant(mu):
    assume(mu != -1)
    assert moduli.virtual_dim(mu) == (1 if mu < -1 else 8)


def test_critical_weights_helper():
    spec = [(QuadraticSurd(1), 7), (QuadraticSurd(0), 2)]
    assert moduli.critical_weights(spec, 3) == [QuadraticSurd(-3), QuadraticSurd(-2)]
    with pytest.raises(ValueError):
        moduli.critical_weights(spec, 4)


def test_laplacian_rates():
    lo, hi = moduli.laplacian_critical_rates(0)
    assert (lo, hi) == (QuadraticSurd(-5), QuadraticSurd(0))
    lo, hi = moduli.laplacian_critical_rates(6)
    assert (lo, hi) == (QuadraticSurd(-6), QuadraticSurd(1))
    assert all(moduli.laplacian_gap_holds(e) for e in range(101))
    with pytest.raises(ValueError):
        moduli.laplacian_critical_rates(-1)


@given(st.integers(0, 10_000))
def test_laplacian_roots_satisfy_the_equation(e):
    for lam in moduli.laplacian_critical_rates(e):
        assert lam * (lam + 5) == e
    assert moduli.laplacian_gap_holds(e)


def test_as_weight():
    assert moduli.as_weight(-0.5) == QuadraticSurd(Fraction(-1, 2))
    assert moduli.as_weight(QuadraticSurd(1)) == QuadraticSurd(1)
