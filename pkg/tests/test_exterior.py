from itertools import combinations

import pytest
from hypothesis import given

from g2spec.exact import I, gq
from g2spec.exterior import (
    STD,
    ExteriorForm,
    apply_J,
    contract,
    contract_form,
    e,
    form_dot,
    form_inner,
    hodge,
    proj_01,
    proj_10,
    right_contract,
    wedge,
)

from conftest import forms, vectors


def test_metric_from_phi():
    # (u⌟φ) ∧ (v⌟φ) ∧ φ = 6 g(u, v) Vol7 fixes the orientation
    for a in range(1, 8):
        for b in range(1, 8):
            lhs = wedge(contract(e(7, a), STD.phi0), contract(e(7, b), STD.phi0), STD.phi0)
            assert lhs == STD.vol7 * (6 if a == b else 0)


def test_phi_psi_pairing():
    assert wedge(STD.phi0, STD.psi0) == STD.vol7 * 7
    assert form_dot(STD.phi0, STD.phi0) == gq(7)


def test_nearly_kahler_algebra():
    # ω³ = 6 Vol6, ω ∧ ReΩ = 0, ReΩ ∧ ImΩ = 4 Vol6
    assert wedge(STD.omega, STD.omega, STD.omega) == STD.vol6 * 6
    assert wedge(STD.omega, STD.Omega_re) == ExteriorForm.zero(6)
    assert wedge(STD.Omega_re, STD.Omega_im) == STD.vol6 * 4
    assert STD.Omega == STD.Omega_re + STD.Omega_im * I


def test_complex_structure():
    for k in (1, 3, 5):
        assert apply_J(e(6, k)) == e(6, k + 1)
        assert apply_J(e(6, k + 1)) == -e(6, k)


@given(vectors(6))
def test_J_squares_to_minus_one(v):
    assert apply_J(apply_J(v)) == -v
    assert proj_10(v) + proj_01(v) == v
    assert proj_10(proj_01(v)) == ExteriorForm.zero(6)


@given(forms(7, 2), forms(7, 1))
def test_wedge_graded_commutative(a, b):
    assert wedge(a, b) == wedge(b, a)
    assert wedge(b, b) == ExteriorForm.zero(7)


@given(forms(7, 3))
def test_hodge_is_an_involution_in_odd_dimension(a):
    assert hodge(hodge(a)) == a


@given(forms(6, 2), forms(6, 2))
def test_hodge_pairing(a, b):
    assert wedge(a, hodge(b)) == STD.vol6 * form_dot(a, b)


@given(forms(7, 2), forms(7, 3), forms(7, 1))
def test_contraction_is_adjoint_to_wedge(A, eta, g):
    assert form_dot(contract_form(A, wedge(A, g) + eta), g) == form_dot(wedge(A, g) + eta, wedge(A, g))
    assert form_dot(contract_form(A, eta), g) == form_dot(eta, wedge(A, g))
    assert form_dot(right_contract(eta, A), g) == form_dot(eta, wedge(g, A))


@given(vectors(7), vectors(7), forms(7, 3))
def test_two_form_contraction_order(u, v, eta):
    assert contract_form(wedge(u, v), eta) == contract(v, contract(u, eta))


@given(forms(7, 3))
def test_string_round_trip(a):
    assert ExteriorForm.from_string(7, a.to_string()) == a


def test_inner_product_is_hermitian():
    a = e(6, 1, 2) * I + e(6, 3, 4)
    assert form_inner(a, a) == gq(2)
    assert form_dot(a, a) == gq(0)


@pytest.mark.parametrize("bad", [(0,), (8,), (2, 1)])
def test_bad_indices(bad):
    with pytest.raises(ValueError):
        ExteriorForm(7, {bad: 1})


def test_dimension_mismatch():
    with pytest.raises(ValueError):
        wedge(e(6, 1), e(7, 2))


def test_basis_sizes():
    assert len(list(combinations(range(1, 8), 3))) == 35
    assert len(list(STD.psi0.items())) == 7
