"""The sixteen acceptance criteria, each at its stated tolerance.

Expected values are literals taken from the printed tables or from
independent oracles written out here; nothing is read back from the
verify module.
"""

import random
from fractions import Fraction

import numpy as np
import sympy as sp

from g2spec import dirac, moduli, ode
from g2spec.algebraic import QuadraticSurd
from g2spec.exact import I, entries, eye, gq, zeros
from g2spec.exterior import STD, ExteriorForm, e, form_dot, form_inner, hodge
from g2spec.lie import F, build_split, std_rep
from g2spec.reps import RepLabelG2, RepLabelSU3, branch_g2_to_su3, dim_g2, dim_su3, hom_multiplicity
from g2spec.spinors import Spinor6, apply, clifford6, form_action6_matrix, form_action7_matrix, rho_S, rho_S_tilde

STD10, ADJ, TRIV = RepLabelG2(1, 0), RepLabelG2(0, 1), RepLabelG2(0, 0)


def surd(a, b=0, d=1):
    return QuadraticSurd(Fraction(a), Fraction(b), d)


def diag(M):
    rows = entries(M)
    n = len(rows)
    assert all(not rows[i][j] for i in range(n) for j in range(n) if i != j), "not diagonal"
    return [rows[i][i] for i in range(n)]


def test_01_structure_constants():
    phi0 = (
        e(7, 1, 2, 7) + e(7, 3, 4, 7) + e(7, 5, 6, 7) + e(7, 1, 4, 5) + e(7, 1, 3, 6) + e(7, 2, 3, 5) - e(7, 2, 4, 6)
    )
    assert STD.phi0 == phi0
    assert len(list(STD.phi0.items())) == 7
    assert form_inner(STD.omega, STD.omega) == gq(3)


def test_02_lie_split():
    d = build_split()
    assert (len(d.g2_basis), len(d.su3_basis), len(d.m_basis)) == (14, 8, 6)
    basis6 = [e(6, a) for a in range(1, 7)]
    rng = random.Random(2)
    for _ in range(20):
        u = sum((b * Fraction(rng.randint(-4, 4)) for b in basis6), ExteriorForm.zero(6))
        v = sum((b * Fraction(rng.randint(-4, 4)) for b in basis6), ExteriorForm.zero(6))
        if u and v:
            assert d.B(F(u), F(v)) == form_dot(u, v)


def test_03_spinor_eigenvalues():
    seven = [gq(-7)] + [gq(1)] * 7
    assert diag(form_action7_matrix(STD.phi0)) == seven
    assert diag(form_action7_matrix(STD.psi0)) == seven
    assert diag(form_action6_matrix(STD.Omega_re)) == [gq(4)] + [gq(0)] * 6 + [gq(-4)]
    assert diag(form_action6_matrix(hodge(STD.omega))) == [gq(-3)] + [gq(1)] * 6 + [gq(-3)]


def test_04_phi_psi_identity():
    P, Q, V = (form_action7_matrix(x) for x in (STD.phi0, STD.psi0, STD.vol7))
    assert P * Q == V * gq(7) - P * gq(6)


def test_05_clifford_from_representations():
    rng = random.Random(0)

    def q():
        return Fraction(rng.randint(-9, 9), rng.randint(1, 5))

    for _ in range(100):
        u = ExteriorForm.vector(6, [q() for _ in range(6)])
        s = Spinor6.from_coords([gq(q()) + gq(q()) * I for _ in range(8)])
        X = F(u)
        assert apply(-(rho_S(X) - rho_S_tilde(X)), s).coords() == clifford6(u, s).coords()


def _casimir_oracle(rho, n):
    # Σ G⁻¹_ab ρ(X_a)ρ(X_b) over the non-orthogonal nullspace basis, with the
    # Killing metric written as (2/3)·form_dot
    d = build_split()
    X = d.g2_basis
    G = sp.Matrix(14, 14, lambda a, b: sp.Rational(2, 3) * sp.nsimplify(str(form_dot(X[a].as_form, X[b].as_form))))
    Gi = G.inv()
    acc = zeros(n, n)
    mats = [rho(x) for x in X]
    for a in range(14):
        for b in range(14):
            if Gi[a, b]:
                acc = acc + (mats[a] * mats[b]) * gq(Fraction(str(Gi[a, b])))
    return acc


def test_06_casimir_scalars():
    d = build_split()
    assert _casimir_oracle(std_rep, 7) == eye(7) * gq(-6)
    assert _casimir_oracle(d.ad_rep, 14) == eye(14) * gq(-12)
    assert d.casimir(std_rep) == eye(7) * gq(-6)
    assert d.casimir(d.ad_rep) == eye(14) * gq(-12)


def test_07_branching():
    W = RepLabelSU3
    stated = {
        (1, 0): {W(0, 0): 1, W(1, 0): 1, W(0, 1): 1},
        (0, 1): {W(1, 1): 1, W(1, 0): 1, W(0, 1): 1},
        (1, 1): {W(2, 1): 1, W(1, 2): 1, W(2, 0): 1, W(0, 2): 1, W(1, 1): 2, W(1, 0): 1, W(0, 1): 1},
        (2, 0): {W(2, 0): 1, W(0, 2): 1, W(1, 1): 1, W(1, 0): 1, W(0, 1): 1, W(0, 0): 1},
    }
    for g, want in stated.items():
        assert dict(branch_g2_to_su3(g).parts) == want
    for t in range(7):
        for i in range(t + 1):
            b = branch_g2_to_su3((i, t - i))
            assert sum(m * dim_su3(l) for l, m in b.parts) == dim_g2((i, t - i))


def test_08_hom_multiplicities():
    assert [hom_multiplicity(g) for g in (TRIV, STD10, ADJ)] == [2, 10, 12]


def test_09_dirac_matrices(ref):
    for g in (TRIV, STD10, ADJ):
        D = dirac.assemble_dirac_direct(g)
        assert entries(D.entries) == entries(ref[g].dirac)  # entrywise, no conjugation needed
        for route in (dirac.assemble_dirac_clifford, dirac.assemble_dirac_casimir, dirac.assemble_dirac_difference):
            assert route(g).same_as(D)
    assert ref[STD10].dirac.shape == (10, 10) and ref[ADJ].dirac.shape == (12, 12)


def test_10_lichnerowicz_squares():
    assert diag(dirac.lichnerowicz_square(STD10)) == [gq(x) for x in (6, 6, 6, 6, 6, 6, 1, 1, 6, 6)]
    assert diag(dirac.lichnerowicz_square(ADJ)) == [gq(x) for x in (12, 12, 7, 12, 12, 7, 12, 12, 7, 12, 12, 7)]


def _pm(*pairs):
    out = {}
    for v, m in pairs:
        out[v] = m
        out[-v] = m
    return out


def test_11_eigenvalue_tables(ref):
    expected = {
        TRIV: {surd(0): 2},
        STD10: _pm((surd(1), 1), (surd(Fraction(-1, 2), Fraction(1, 2), 33), 2), (surd(Fraction(1, 2), Fraction(1, 2), 33), 2)),
        ADJ: _pm(
            (surd(Fraction(1, 2), Fraction(1, 2), 57), 2),
            (surd(Fraction(-1, 2), Fraction(1, 2), 57), 2),
            (surd(Fraction(1, 2), Fraction(1, 2), 37), 1),
            (surd(Fraction(-1, 2), Fraction(1, 2), 37), 1),
        ),
    }
    for g, want in expected.items():
        D = dirac.assemble_dirac_direct(g)
        assert dict(dirac.eigenvalues(D)) == want
        # numeric cross-check on the printed matrix itself
        num = np.sort(np.linalg.eigvals(ref[g].dirac.to_Matrix().evalf().__array__().astype(complex)).real)
        exact = np.sort([float(v) for v, m in want.items() for _ in range(m)])
        assert np.max(np.abs(num - exact)) < 1e-9


def test_12_bound_scan():
    equality = []
    for t in range(2, 11):
        for i in range(t + 1):
            g = (i, t - i)
            if RepLabelG2(*g) in dirac.SUPPORTED:
                continue
            c = i * i + 3 * (t - i) ** 2 + 3 * i * (t - i) + 5 * i + 9 * (t - i)
            # √(c − 5) − 1 ≥ 2  ⇔  c ≥ 14
            assert c >= 14
            if c == 14:
                equality.append(g)
            assert (dirac.bound_value(RepLabelG2(*g)) == 2) == (c == 14)
    assert equality == [(2, 0)]
    assert dirac.bound_scan(10).certified


def test_13_virtual_dimensions():
    assert moduli.virtual_dim(Fraction(-3, 2)) == 1
    assert moduli.virtual_dim(Fraction(-1, 2)) == 8


def test_14_laplacian_rates():
    lam = sp.Symbol("lam")
    for ev in range(101):
        roots = sp.solve(lam * (lam + 5) - ev, lam)
        assert not any(-5 < r < 0 for r in roots)
        assert moduli.laplacian_gap_holds(ev)


def test_15_invariant_ode():
    assert ode.closed_form_residual() == 0
    for C in (0.5, 1.0, 2.0):
        tr = ode.integrate(C, 1e-3, 1e3, tol=1e-9)
        assert np.isclose(tr.r[0], 1e-3, rtol=1e-12) and np.isclose(tr.r[-1], 1e3, rtol=1e-12)
        assert np.max(np.abs(tr.f - 1 / (C * tr.r**2 + 1))) <= 1e-8
    assert ode.z3_residual() == 0
    tr = ode.integrate(1.0, 1e-3, 1e3, tol=1e-9)
    assert ode.boundary_diagnostics(tr.r, tr.f).passed


def test_16_spectrum_symmetry():
    for g in (TRIV, STD10, ADJ):
        T = dirac.vol_operator(g)
        D = dirac.assemble_dirac_direct(g).entries
        assert T * D + D * T == zeros(*D.shape)
