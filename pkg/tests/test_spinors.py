from hypothesis import given

from g2spec.exact import ZERO, eye, gq
from g2spec.exterior import STD, form_dot, hodge
from g2spec.lie import F, bracket, build_split
from g2spec.spinors import (
    Spinor6,
    Spinor7,
    apply,
    clifford6,
    clifford6_matrix,
    clifford7,
    clifford7_matrix,
    form_action6_matrix,
    form_action7_matrix,
    re_omega_matrix,
    rho_S,
    rho_S_tilde,
    vol_action,
    vol_matrix,
)

from conftest import gaussian, vectors


@given(vectors(6), vectors(6))
def test_clifford_relation_6d(u, v):
    U, V = clifford6_matrix(u), clifford6_matrix(v)
    assert U * V + V * U == eye(8) * (-2 * form_dot(u, v))


@given(vectors(7), vectors(7))
def test_clifford_relation_7d(u, v):
    U, V = clifford7_matrix(u), clifford7_matrix(v)
    assert U * V + V * U == eye(8) * (-2 * form_dot(u, v))


def test_volume_element_squares():
    V = vol_matrix()
    assert V * V == eye(8) * gq(-1)
    assert form_action7_matrix(STD.vol7) * form_action7_matrix(STD.vol7) == eye(8)


def test_vol_matrix_matches_action():
    s = Spinor6.from_coords(list(range(1, 9)))
    assert apply(vol_matrix(), s).coords() == vol_action(s).coords()


def test_six_dimensional_eigenvalues():
    assert form_action6_matrix(STD.Omega_re) == re_omega_matrix()
    diag = [gq(-3)] + [gq(1)] * 6 + [gq(-3)]
    M = form_action6_matrix(hodge(STD.omega))
    assert [M[i, i].element for i in range(8)] == diag


@given(vectors(6), gaussian, gaussian)
def test_clifford_matches_matrix(u, f, h):
    s = Spinor6.from_coords([f, 1, 0, 2, 0, 0, -1, h])
    assert apply(clifford6_matrix(u), s).coords() == clifford6(u, s).coords()


@given(vectors(7))
def test_clifford7_matches_matrix(u):
    s = Spinor7.from_coords([1, 2, 0, -1, 0, 3, 0, 1])
    assert apply(clifford7_matrix(u), s).coords() == clifford7(u, s).coords()


def test_rho_S_is_a_representation():
    d = build_split()
    X, Y = d.basis[1], d.basis[10]
    A, B = rho_S(X), rho_S(Y)
    assert rho_S(bracket(X, Y)) == A * B - B * A
    At, Bt = rho_S_tilde(X), rho_S_tilde(Y)
    assert rho_S_tilde(bracket(X, Y)) == At * Bt - Bt * At


def test_su3_fixes_the_distinguished_spinors():
    d = build_split()
    one = Spinor6.from_coords([1] + [0] * 7)
    for h in d.su3_basis:
        assert all(c == ZERO for c in apply(rho_S(h), one).coords())


@given(vectors(6))
def test_difference_of_spin_reps_is_clifford(u):
    X = F(u)
    s = Spinor6.from_coords([1, 0, 1, 0, 0, 2, 0, -1])
    assert apply(-(rho_S(X) - rho_S_tilde(X)), s).coords() == clifford6(u, s).coords()
