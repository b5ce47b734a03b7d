"""Equivariant maps S ⊗ V_γ → (g2)_C and the twisted Dirac operator on them.

A map Ψ is stored as a 14 x (8·dim V_γ) matrix: rows are coordinates in the
split basis I_A of g2, columns run over Spinor6 coordinates (f, v, h) times
the basis of V_γ (e^1..e^7 for the standard representation, I_A for the
adjoint one). Operators on the Hom space act by precomposition, and their
matrices in a basis q_1..q_n have the coordinates of D(q_j) as column j.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np
from sympy import QQ_I
from sympy.polys.matrices import DomainMatrix

from .algebraic import NumericRoot, QuadraticSurd, roots_of_charpoly
from .exact import (
    ZERO,
    conj,
    entries,
    equal,
    eye,
    flatten,
    gq,
    kron,
    sparse_from_dict,
    to_numpy,
    zeros,
)
from .exterior import (
    STD,
    ExteriorForm,
    apply_J,
    contract,
    contract_form,
    form_dot,
    hodge,
    proj_01,
    proj_10,
    right_contract,
    wedge,
)
from .lie import F, LieElement, build_split, std_rep
from .reference import packaged_reference
from .reps import RepLabelG2, RepLabelSU3, casimir_g2, casimir_su3, dim_g2, hom_multiplicity
from .spinors import clifford6_matrix, re_omega_matrix, rho_S, rho_S_tilde, vol_matrix

SUPPORTED = (RepLabelG2(0, 0), RepLabelG2(1, 0), RepLabelG2(0, 1))

# Diagonal conjugation taking the uniform-contraction std matrix to the table one.
STD_UNIFORM_SIGNS = (1, 1, 1, 1, -1, -1, 1, 1, 1, 1)


class UnsupportedRepresentation(ValueError):
    """Only the three labels left open by the eigenvalue bound are modelled."""


class SpanError(ArithmeticError):
    """An operator image left the span of the chosen basis."""


class EquivarianceError(ArithmeticError):
    """A constructed map does not commute with the su(3) action."""


class UncertifiedInterval(ValueError):
    """Requested spectral window is not covered by the bound certificate."""


def _label(gamma) -> RepLabelG2:
    g = gamma if isinstance(gamma, RepLabelG2) else RepLabelG2(*gamma)
    if g not in SUPPORTED:
        raise UnsupportedRepresentation(
            f"{g} is not modelled; the eigenvalue bound already excludes [0, 2) for it"
        )
    return g


# --- the representation V_γ ----------------------------------------------------


@lru_cache(maxsize=None)
def rho_V(gamma: RepLabelG2, a: int) -> DomainMatrix:
    """Matrix of I_a acting on V_γ."""
    data = build_split()
    if gamma == RepLabelG2(0, 0):
        return zeros(1, 1)
    if gamma == RepLabelG2(1, 0):
        return std_rep(data.basis[a])
    return data.ad_matrices[a]


def rep_dim(gamma: RepLabelG2) -> int:
    return dim_g2(gamma)


def _vector_gram(gamma: RepLabelG2) -> list[Fraction]:
    if gamma == RepLabelG2(0, 1):
        return list(build_split().gram)
    return [Fraction(1)] * rep_dim(gamma)


# --- inputs seen by the formulas ---------------------------------------------


@dataclass(frozen=True)
class SpinorPart:
    """(u + a dt) together with the Vol6 coefficient h of a Spinor6 basis vector."""

    u: ExteriorForm
    a: object
    h: object


@dataclass(frozen=True)
class VectorPart:
    """v + b dt, or α + F(v) for the adjoint representation."""

    v: ExteriorForm
    b: object = ZERO
    alpha: ExteriorForm | None = None


def _spinor_inputs() -> list[SpinorPart]:
    out = []
    for k in range(8):
        c = [ZERO] * 8
        c[k] = gq(1)
        out.append(SpinorPart(ExteriorForm.vector(6, c[1:7]), c[0], c[7]))
    return out


def _vector_inputs(gamma: RepLabelG2) -> list[VectorPart]:
    data = build_split()
    zero6 = ExteriorForm.zero(6)
    if gamma == RepLabelG2(0, 0):
        return [VectorPart(zero6)]
    if gamma == RepLabelG2(1, 0):
        out = [VectorPart(ExteriorForm(6, {(k,): 1})) for k in range(1, 7)]
        return out + [VectorPart(zero6, gq(1))]
    out = [VectorPart(ExteriorForm(6, {(k,): 1}), alpha=zero6) for k in range(1, 7)]
    for X in data.su3_basis:
        out.append(VectorPart(zero6, alpha=X.as_form.restrict(6)))
    return out


def _to_column(value) -> list:
    data = build_split()
    if isinstance(value, LieElement):
        value = value.as_form
    if not value:
        return [ZERO] * 14
    return data.coords(value)


def map_from_formula(gamma, formula) -> DomainMatrix:
    """Matrix of (s ⊗ w) ↦ formula(SpinorPart, VectorPart) in the I_A basis."""
    gamma = _label(gamma)
    spins = _spinor_inputs()
    vecs = _vector_inputs(gamma)
    n = len(vecs)
    out = {}
    for si, s in enumerate(spins):
        for wi, w in enumerate(vecs):
            col = _to_column(formula(s, w))
            for r, x in enumerate(col):
                if x:
                    out[(r, si * n + wi)] = x
    return sparse_from_dict(out, (14, 8 * n))


# --- projections and the table formulas ---------------------------------------


def _su3_part(x: ExteriorForm) -> ExteriorForm:
    """x − ⅓<x, ω>ω, the trace-free part of a (1,1)-form."""
    return x - STD.omega * (form_dot(x, STD.omega) / 3)


def _Fc(v: ExteriorForm):
    return F(v) if v else ExteriorForm.zero(7)


def _lift(x: ExteriorForm) -> ExteriorForm:
    return x.lift() if x else ExteriorForm.zero(7)


def _w11_from_2form(x: ExteriorForm) -> ExteriorForm:
    """⅓x − ½*(ω∧x) + ⅙*(ω∧*(ω∧x))."""
    w = hodge(wedge(STD.omega, x))
    return x / 3 - w / 2 + hodge(wedge(STD.omega, w)) / 6


def _uniform_contract(x, y, form):
    return contract_form(wedge(x, y), form)


def _table_contract(x, y, form):
    """(x∧y)⌟form as the standard-representation tables read it: x goes in last."""
    return contract_form(wedge(y, x), form)


def _std_q(k: int, reading: str = "table"):
    P, Q = proj_10, proj_01
    Om, Omb = STD.Omega, STD.Omega_bar
    cc = _table_contract if reading == "table" else _uniform_contract
    table = {
        1: lambda s, w: _Fc(P(w.v) * s.a),
        2: lambda s, w: _Fc(Q(w.v) * s.a),
        3: lambda s, w: _Fc(P(s.u) * w.b),
        4: lambda s, w: _Fc(Q(s.u) * w.b),
        5: lambda s, w: _Fc(cc(P(s.u), P(w.v), Omb)),
        6: lambda s, w: _Fc(cc(Q(s.u), Q(w.v), Om)),
        7: lambda s, w: _lift(_su3_part(wedge(P(s.u), Q(w.v)))),
        8: lambda s, w: _lift(_su3_part(wedge(Q(s.u), P(w.v)))),
    }
    return table[k]


def _adj_q(k: int):
    P, Q = proj_10, proj_01
    Om, Omb = STD.Omega, STD.Omega_bar
    table = {
        1: lambda s, w: _Fc(P(w.v) * s.a),
        2: lambda s, w: _Fc(Q(w.v) * s.a),
        3: lambda s, w: _lift(w.alpha * s.a),
        4: lambda s, w: _Fc(contract(P(s.u), w.alpha)),
        5: lambda s, w: _Fc(contract(Q(s.u), w.alpha)),
        6: lambda s, w: _lift(_su3_part(wedge(P(s.u), Q(w.v)))),
        7: lambda s, w: _Fc(_uniform_contract(Q(s.u), Q(w.v), Om)),
        8: lambda s, w: _Fc(_uniform_contract(P(s.u), P(w.v), Omb)),
        9: lambda s, w: _lift(_su3_part(wedge(Q(s.u), P(w.v)))),
    }
    return table[k]


def _triv_q(k: int):
    table = {
        1: lambda s, w: _Fc(proj_10(s.u)),
        2: lambda s, w: _Fc(proj_01(s.u)),
    }
    return table[k]


def _vol_shifted(formula):
    """formula ∘ (Vol ⊗ 1), with Vol(f, v, h) = (−h, Jv, f)."""

    def g(s: SpinorPart, w: VectorPart):
        Ju = apply_J(s.u) if s.u else s.u
        return formula(SpinorPart(Ju, -gq(s.h), s.a), w)

    return g


# --- maps, tags and bases -----------------------------------------------------


@dataclass(frozen=True)
class Tag:
    """Factorisation S-part ⊗ V-part → target through su(3) irreducibles.

    ``vol`` marks maps precomposed with Vol, whose S-part sits in the second
    trivial summand of S (inert under ρ_S).
    """

    spin: RepLabelSU3
    vec: RepLabelSU3
    target: RepLabelSU3
    vol: bool = False

    def __str__(self):
        s = f"q^{{({self.spin.p},{self.spin.q})({self.vec.p},{self.vec.q})}}_{{({self.target.p},{self.target.q})}}"
        return "Vol·" + s if self.vol else s

    def casimir_shift(self, gamma: RepLabelG2) -> int:
        """Eigenvalue of −Cas_su3(target) − Cas_m(S) − Cas_m(V) on this map."""
        s_g2 = 0 if self.vol else casimir_g2((1, 0))
        return (
            casimir_su3(self.spin)
            + casimir_su3(self.vec)
            - casimir_su3(self.target)
            - s_g2
            - casimir_g2(gamma)
        )


def _tags(spec: str) -> list[Tag]:
    out = []
    for item in spec.split():
        vol = item.startswith("V")
        digits = [int(c) for c in item.lstrip("V") if c.isdigit()]
        a, b, c = (RepLabelSU3(*digits[k : k + 2]) for k in (0, 2, 4))
        out.append(Tag(a, b, c, vol))
    return out


_TAGS = {
    RepLabelG2(0, 0): _tags("100010 010001"),
    RepLabelG2(1, 0): _tags(
        "001010 000101 100010 010001 101001 010110 100111 011011 V001010 V000101"
    ),
    RepLabelG2(0, 1): _tags(
        "001010 000101 001111 101110 011101 100111 010110 101001 011011 V001010 V000101 V001111"
    ),
}


@dataclass(frozen=True, eq=False)
class EquivMap:
    gamma: RepLabelG2
    matrix: DomainMatrix
    name: str
    tag: Tag | None = None

    def is_equivariant(self) -> bool:
        """ad(h)∘Ψ = Ψ∘(ρ_S(h)⊗1 + 1⊗ρ_V(h)) for the eight su(3) generators."""
        data = build_split()
        n = rep_dim(self.gamma)
        for a in range(6, 14):
            lhs = data.ad_matrices[a] * self.matrix
            act = kron(rho_S(data.basis[a]), eye(n)) + kron(eye(8), rho_V(self.gamma, a))
            if not equal(lhs, self.matrix * act):
                return False
        return True

    def __str__(self):
        return f"{self.name} = {self.tag}" if self.tag else self.name


class HomBasis:
    """An ordered basis of Hom(S⊗V_γ, g2)_SU(3) with exact coordinate extraction."""

    def __init__(self, gamma: RepLabelG2, maps: list[EquivMap]):
        self.gamma = gamma
        self.maps = tuple(maps)
        rows = [flatten(m.matrix) for m in self.maps]
        n = len(rows)
        B = DomainMatrix(rows, (n, len(rows[0])), QQ_I)
        _, pivots = B.to_field().rref()
        if len(pivots) != n:
            raise SpanError("basis maps are linearly dependent")
        # coordinates of x: solve c·B[:, pivots] = x[pivots]
        self._pivots = list(pivots)
        square = DomainMatrix([[r[p] for p in pivots] for r in rows], (n, n), QQ_I).to_field()
        self._inverse = square.inv()
        self._rows = rows

    def __len__(self):
        return len(self.maps)

    def __iter__(self):
        return iter(self.maps)

    def __getitem__(self, k):
        return self.maps[k]

    @property
    def names(self) -> tuple:
        return tuple(m.name for m in self.maps)

    def coords(self, matrix: DomainMatrix) -> list:
        target = flatten(matrix)
        rhs = DomainMatrix([[target[p] for p in self._pivots]], (1, len(self._pivots)), self._inverse.domain)
        c = entries(rhs * self._inverse)[0]
        recon = [ZERO] * len(target)
        for ck, row in zip(c, self._rows):
            if ck:
                for i, x in enumerate(row):
                    if x:
                        recon[i] += ck * x
        if any(a != b for a, b in zip(recon, target)):
            raise SpanError("image is not in the span of the basis")
        return [gq(x) for x in c]

    def operator(self, fn) -> DomainMatrix:
        """Matrix of Ψ ↦ fn(Ψ) in this basis."""
        cols = {}
        for j, m in enumerate(self.maps):
            for i, x in enumerate(self.coords(fn(m.matrix))):
                if x:
                    cols[(i, j)] = x
        n = len(self.maps)
        return sparse_from_dict(cols, (n, n))

    def precompose(self, K: DomainMatrix) -> DomainMatrix:
        return self.operator(lambda M: M * K)

    def combine(self, coeffs, name: str) -> EquivMap:
        acc = zeros(*self.maps[0].matrix.shape)
        for c, m in zip(coeffs, self.maps):
            c = gq(c)
            if c:
                acc = acc + m.matrix * c
        return EquivMap(self.gamma, acc, name)


@lru_cache(maxsize=None)
def build_q_basis(gamma, reading: str = "table") -> HomBasis:
    """The q-maps in table order, including the Vol-precomposed extensions.

    ``reading`` only matters for the standard representation: "table" takes
    (x∧y)⌟Ω in the q and p tables with x contracted last, "uniform" uses the
    same left-wedge adjoint as everywhere else in the package.
    """
    gamma = _label(gamma)
    if reading not in ("table", "uniform"):
        raise ValueError("reading is 'table' or 'uniform'")
    tags = _TAGS[gamma]
    if gamma == RepLabelG2(0, 0):
        formulas = [_triv_q(1), _triv_q(2)]
    elif gamma == RepLabelG2(1, 0):
        base = [_std_q(k, reading) for k in range(1, 9)]
        formulas = base + [_vol_shifted(base[0]), _vol_shifted(base[1])]
    else:
        base = [_adj_q(k) for k in range(1, 10)]
        formulas = base + [_vol_shifted(base[k]) for k in range(3)]
    maps = [
        EquivMap(gamma, map_from_formula(gamma, f), f"q{k + 1}", tag)
        for k, (f, tag) in enumerate(zip(formulas, tags))
    ]
    expected = hom_multiplicity(gamma)
    if len(maps) != expected:
        raise SpanError(f"{gamma}: built {len(maps)} maps, reciprocity predicts {expected}")
    for m in maps:
        if not m.is_equivariant():
            raise EquivarianceError(f"{gamma}: {m.name} is not su(3)-equivariant")
    return HomBasis(gamma, maps)


def trace_inner(X: DomainMatrix, Y: DomainMatrix, gamma) -> object:
    """Tr(X† Y) with the Killing metric on g2 and the natural metric on S ⊗ V_γ."""
    gamma = _label(gamma)
    cod = build_split().gram
    dom = _vector_gram(gamma)
    n = len(dom)
    xe, ye = X.to_sparse().rep, Y.to_sparse().rep
    total = ZERO
    for r, row in xe.items():
        yrow = ye.get(r, {})
        for c, x in row.items():
            y = yrow.get(c)
            if y:
                total += conj(x) * y * gq(cod[r] / dom[c % n])
    return total


def trace_norms(gamma, reading: str = "table") -> list:
    basis = build_q_basis(gamma, reading)
    return [trace_inner(m.matrix, m.matrix, gamma) for m in basis]


# --- operators on the Hom space ---------------------------------------------------


def _m_sum(gamma: RepLabelG2, spin_matrix) -> DomainMatrix:
    data = build_split()
    acc = None
    for a in range(6):
        t = kron(spin_matrix(a, data.basis[a]), rho_V(gamma, a))
        acc = t if acc is None else acc + t
    return acc


@lru_cache(maxsize=None)
def dirac_rho_operator(gamma, reading: str = "table") -> DomainMatrix:
    """D^ρ: Ψ ↦ Σ_a Ψ∘(ρ_S(I_a) ⊗ ρ_V(I_a)) over the m directions."""
    gamma = _label(gamma)
    K = _m_sum(gamma, lambda a, X: rho_S(X))
    return build_q_basis(gamma, reading).precompose(K)


@lru_cache(maxsize=None)
def vol_operator(gamma, reading: str = "table") -> DomainMatrix:
    """Ψ ↦ Ψ∘(Vol ⊗ 1) in the q basis."""
    gamma = _label(gamma)
    return build_q_basis(gamma, reading).precompose(kron(vol_matrix(), eye(rep_dim(gamma))))


@lru_cache(maxsize=None)
def re_omega_operator(gamma, reading: str = "table") -> DomainMatrix:
    gamma = _label(gamma)
    return build_q_basis(gamma, reading).precompose(kron(re_omega_matrix(), eye(rep_dim(gamma))))


@lru_cache(maxsize=None)
def casimir_operator(gamma, reading: str = "table") -> DomainMatrix:
    """Ψ ↦ Ψ∘Cas_g2(S ⊗ V_γ), summed with the inverse Killing Gram."""
    gamma = _label(gamma)
    data = build_split()
    n = rep_dim(gamma)
    acc = None
    for a, X in enumerate(data.basis):
        T = kron(rho_S(X), eye(n)) + kron(eye(8), rho_V(gamma, a))
        t = (T * T) * gq(1 / data.gram[a])
        acc = t if acc is None else acc + t
    return build_q_basis(gamma, reading).precompose(acc)


@dataclass(frozen=True)
class DiracMatrix:
    gamma: RepLabelG2
    basis: tuple
    entries: DomainMatrix
    route: str
    operator: str = "D0"

    def rows(self) -> list[list]:
        return entries(self.entries)

    def to_numpy(self) -> np.ndarray:
        return to_numpy(self.entries)

    def same_as(self, other: "DiracMatrix") -> bool:
        return equal(self.entries, other.entries)


def _from_rho(Drho, T, R) -> DomainMatrix:
    # Vol⁻¹ = −Vol, so −Vol⁻¹ D^ρ Vol on the Hom space is T D^ρ T
    return Drho + T * Drho * T - R * gq(Fraction(3, 4))


def assemble_dirac_direct(gamma, reading: str = "table") -> DiracMatrix:
    """D⁰ = D^ρ − Vol⁻¹ D^ρ Vol − ¾ReΩ from the representation ρ_S."""
    gamma = _label(gamma)
    D = _from_rho(
        dirac_rho_operator(gamma, reading), vol_operator(gamma, reading), re_omega_operator(gamma, reading)
    )
    return DiracMatrix(gamma, build_q_basis(gamma, reading).names, D, "direct")


def assemble_dirac_difference(gamma, reading: str = "table") -> DiracMatrix:
    """Same operator, precomposing with Σ (ρ_S − ρ_S̃)(I_a) ⊗ ρ_V(I_a) − ¾ReΩ ⊗ 1."""
    gamma = _label(gamma)
    n = rep_dim(gamma)
    K = _m_sum(gamma, lambda a, X: rho_S(X) - rho_S_tilde(X))
    K = K - kron(re_omega_matrix(), eye(n)) * gq(Fraction(3, 4))
    basis = build_q_basis(gamma, reading)
    return DiracMatrix(gamma, basis.names, basis.precompose(K), "difference")


def assemble_dirac_clifford(gamma, reading: str = "table") -> DiracMatrix:
    """D⁰Ψ = −Σ_a Ψ∘(e^a· ⊗ ρ_V(I_a)) − ¾ Ψ∘(ReΩ ⊗ 1)."""
    gamma = _label(gamma)
    n = rep_dim(gamma)
    vec = [ExteriorForm(6, {(a,): 1}) for a in range(1, 7)]
    K = _m_sum(gamma, lambda a, X: clifford6_matrix(vec[a]))
    K = -K - kron(re_omega_matrix(), eye(n)) * gq(Fraction(3, 4))
    basis = build_q_basis(gamma, reading)
    return DiracMatrix(gamma, basis.names, basis.precompose(K), "clifford")


def assemble_dirac_casimir(gamma) -> DiracMatrix:
    """D^ρ = ½(Cas_g2(S⊗V) + shift) with Cas_g2 rebuilt from the p-relations.

    The Casimir is diagonal on the p-maps (value c_{(i,j)} of the G2 summand
    they factor through) and equals c_γ on the Vol-precomposed maps; the
    shift is the diagonal ``Tag.casimir_shift`` in the q basis.
    """
    gamma = _label(gamma)
    basis = build_q_basis(gamma)
    n = len(basis)
    tags = [m.tag for m in basis]
    plain = [k for k, t in enumerate(tags) if not t.vol]
    cas = {}
    pb = build_p_basis(gamma, solve_with="orthogonality")
    if pb.relations:
        k = len(plain)
        cols = [rel.vector for rel in pb.relations]
        R = DomainMatrix([[c[i] for c in cols] for i in range(k)], (k, k), QQ_I).to_field()
        diag = DomainMatrix.diag([gq(rel.casimir) for rel in pb.relations], R.domain, (k, k))
        block = entries(R * diag * R.inv())
    else:
        # V(1,0) ⊗ V_γ is irreducible, so the Casimir is scalar on the block
        c = gq(casimir_g2(_single_summand(gamma)))
        block = [[c if i == j else ZERO for j in range(len(plain))] for i in range(len(plain))]
    for bi, i in enumerate(plain):
        for bj, j in enumerate(plain):
            if block[bi][bj]:
                cas[(i, j)] = block[bi][bj]
    for k, t in enumerate(tags):
        if t.vol:
            cas[(k, k)] = gq(casimir_g2(gamma))
    C = sparse_from_dict(cas, (n, n))
    shift = sparse_from_dict({(k, k): t.casimir_shift(gamma) for k, t in enumerate(tags)}, (n, n))
    Drho = (C + shift) * gq(Fraction(1, 2))
    D = _from_rho(Drho, vol_operator(gamma), re_omega_operator(gamma))
    return DiracMatrix(gamma, basis.names, D.convert_to(QQ_I), "casimir")


def _single_summand(gamma: RepLabelG2) -> RepLabelG2:
    if gamma != RepLabelG2(0, 0):
        raise ValueError(f"V(1,0) ⊗ {gamma} is reducible")
    return RepLabelG2(1, 0)


def lichnerowicz_square(gamma, reading: str = "table") -> DomainMatrix:
    """(D⁰ + ¼ReΩ)², i.e. the square of D^{1/3}."""
    gamma = _label(gamma)
    D = assemble_dirac_direct(gamma, reading).entries + re_omega_operator(gamma, reading) * gq(Fraction(1, 4))
    return D * D


def lichnerowicz_prediction(gamma) -> list:
    """−c^{g2}_γ + c^{su3}_{target} + 4 per q-map."""
    gamma = _label(gamma)
    return [
        gq(-casimir_g2(gamma) + casimir_su3(m.tag.target) + 4) for m in build_q_basis(gamma)
    ]


# --- p-maps ---------------------------------------------------------------------


@dataclass(frozen=True)
class PRelation:
    name: str
    casimir: int
    vector: tuple  # coefficients on the non-Vol q-maps
    printed: dict
    derived: dict  # q name -> value filled in where the print is illegible
    is_eigenvector: bool


@dataclass(frozen=True)
class PBasis:
    gamma: RepLabelG2
    q_names: tuple
    relations: tuple
    maps: tuple

    def relation(self, name: str) -> PRelation:
        for r in self.relations:
            if r.name == name:
                return r
        raise KeyError(name)


def _herm(x, y, norms):
    return sum((conj(a) * b * w for a, b, w in zip(x, y, norms)), ZERO)


def _solve_linear(eqs: list[tuple]) -> object:
    """Common root of equations a + b·x = 0; raises if none or inconsistent."""
    root = None
    for a, b in eqs:
        if b:
            x = -a / b
            if root is not None and x != root:
                raise ArithmeticError("inconsistent constraints on an illegible coefficient")
            root = x
        elif a:
            raise ArithmeticError("constraint independent of the unknown fails")
    if root is None:
        raise ArithmeticError("illegible coefficient is unconstrained")
    return root


@lru_cache(maxsize=None)
def build_p_basis(gamma, solve_with: str = "casimir") -> PBasis:
    """p-maps from the printed relation lists, checked against the Casimir.

    An illegible coefficient (stored as null) is solved for either as the
    value making the map a Casimir eigenvector (``solve_with="casimir"``),
    or from orthogonality to the fully printed maps in the trace inner
    product (``"orthogonality"``). The other route is then asserted too.
    """
    gamma = _label(gamma)
    basis = build_q_basis(gamma)
    plain = [m for m in basis if not m.tag.vol]
    names = [m.name for m in plain]
    idx = {nm: k for k, nm in enumerate(names)}
    C = entries(casimir_operator(gamma))
    Cb = [[C[i][j] for j in range(len(plain))] for i in range(len(plain))]
    norms = [trace_inner(m.matrix, m.matrix, gamma) for m in plain]
    printed = packaged_reference()[gamma].relations
    complete = [r for r in printed if None not in r.coefficients.values()]

    def as_vector(coeffs, unknown=None, value=ZERO):
        v = [ZERO] * len(plain)
        for q, c in coeffs.items():
            v[idx[q]] = value if q == unknown else c
        return v

    def eigen_residual(v, c):
        return [sum((Cb[i][j] * v[j] for j in range(len(v))), ZERO) - gq(c) * v[i] for i in range(len(v))]

    rels = []
    for r in printed:
        missing = [q for q, c in r.coefficients.items() if c is None]
        derived = {}
        if len(missing) > 1:
            raise ArithmeticError(f"{r.name}: more than one illegible coefficient")
        if missing:
            q = missing[0]
            v0 = as_vector(r.coefficients, q, ZERO)
            v1 = as_vector(r.coefficients, q, gq(1))
            e_q = [b - a for a, b in zip(v0, v1)]
            by_casimir = _solve_linear(list(zip(eigen_residual(v0, r.casimir), eigen_residual(e_q, r.casimir))))
            others = [as_vector(o.coefficients) for o in complete if o.name != r.name]
            ortho_eqs = [(_herm(o, v0, norms), _herm(o, e_q, norms)) for o in others]
            ortho_eqs = [(a, b) for a, b in ortho_eqs if a or b]
            by_ortho = _solve_linear(ortho_eqs)
            if by_casimir != by_ortho:
                raise ArithmeticError(f"{r.name}: Casimir and orthogonality disagree")
            value = by_casimir if solve_with == "casimir" else by_ortho
            derived[q] = value
            vec = as_vector(r.coefficients, q, value)
        else:
            vec = as_vector(r.coefficients)
        ok = not any(eigen_residual(vec, r.casimir))
        rels.append(PRelation(r.name, r.casimir, tuple(vec), dict(r.coefficients), derived, ok))
    sub = HomBasis(gamma, plain) if plain else None
    maps = tuple(sub.combine(rel.vector, rel.name) for rel in rels) if rels else ()
    return PBasis(gamma, tuple(names), tuple(rels), maps)


def std_p_formula_maps() -> dict:
    """The printed projection formulas for the standard representation, evaluated."""
    P, Q, J, S = proj_10, proj_01, apply_J, STD
    cc = _table_contract

    def cross(s, w):
        return cc(s.u, w.v, S.Omega_im) + J(s.u) * w.b - J(w.v) * s.a

    def lam2(s, w):
        return (s.u * w.b - w.v * s.a) * Fraction(2, 3) - cc(s.u, w.v, S.Omega_re) / 3

    def sym(s, w):
        return right_contract(wedge(J(s.u), S.omega) * w.b + wedge(S.omega, J(w.v)) * s.a, S.omega)

    def w11(s, w):
        y = hodge(wedge(contract(s.u, S.Omega_im), contract(w.v, S.Omega_im)))
        return _lift(_su3_part(y))

    formulas = {
        "p1": lambda s, w: _Fc(P(cross(s, w))),
        "p2": lambda s, w: _Fc(Q(cross(s, w))),
        "p3": lambda s, w: _Fc(P(lam2(s, w))),
        "p4": lambda s, w: _Fc(Q(lam2(s, w))),
        "p5": lambda s, w: _lift(_w11_from_2form(wedge(s.u, w.v))),
        "p6": lambda s, w: _Fc(P(sym(s, w))),
        "p7": lambda s, w: _Fc(Q(sym(s, w))),
        "p8": w11,
    }
    g = RepLabelG2(1, 0)
    return {k: EquivMap(g, map_from_formula(g, f), k) for k, f in formulas.items()}


def schur_scalars() -> dict:
    """λ with (printed formula map) = λ·(map of the printed relation), per std p-map."""
    g = RepLabelG2(1, 0)
    pb = build_p_basis(g)
    out = {}
    for name, fm in std_p_formula_maps().items():
        target = pb.maps[[r.name for r in pb.relations].index(name)]
        lam = HomBasis(g, [target]).coords(fm.matrix)[0]
        if not lam:
            raise ArithmeticError(f"{name}: formula map vanishes")
        out[name] = lam
    return out


def orthogonal_completion(gamma, block: tuple, known: tuple) -> list[list]:
    """Basis of the part of span(block) trace-orthogonal to the ``known`` p-maps."""
    gamma = _label(gamma)
    basis = build_q_basis(gamma)
    plain = [m for m in basis if not m.tag.vol]
    norms = [trace_inner(m.matrix, m.matrix, gamma) for m in plain]
    names = [m.name for m in plain]
    pb = build_p_basis(gamma)
    cols = [names.index(q) for q in block]
    rows = []
    for k in known:
        vec = pb.relation(k).vector
        rows.append([conj(vec[c]) * norms[c] for c in cols])
    M = DomainMatrix(rows, (len(rows), len(cols)), QQ_I).to_field()
    null = M.nullspace()
    return entries(null)


# --- spectra ---------------------------------------------------------------------


def eigenvalues(D: DiracMatrix) -> list:
    """Exact eigenvalues with multiplicity from the characteristic polynomial."""
    coeffs = D.entries.to_field().charpoly()
    return roots_of_charpoly(coeffs)


def numeric_eigenvalues(D: DiracMatrix) -> tuple:
    """Sorted real parts from LAPACK and the largest stray imaginary part."""
    w = np.linalg.eigvals(D.to_numpy())
    return np.sort(w.real), float(np.max(np.abs(w.imag))) if len(w) else 0.0


def numeric_cross_check(D: DiracMatrix, tol: float = 1e-9) -> bool:
    exact = sorted(float(v) for v, m in eigenvalues(D) for _ in range(m))
    num, imag = numeric_eigenvalues(D)
    return imag <= tol and len(exact) == len(num) and all(abs(a - b) <= tol for a, b in zip(exact, num))


def is_symmetric_spectrum(spec: list) -> bool:
    """m(λ) = m(−λ) for an exact spectrum."""
    mult = dict(spec)
    return all(mult.get(-v) == k for v, k in mult.items())


def diagonal_conjugation(A: DomainMatrix, B: DomainMatrix):
    """Signs s ∈ {±1}^n with diag(s)·A·diag(s) = B, or None."""
    a, b = entries(A), entries(B)
    n = len(a)
    s = [0] * n
    for start in range(n):
        if s[start]:
            continue
        s[start] = 1
        stack = [start]
        while stack:
            i = stack.pop()
            for j in range(n):
                x, y = a[i][j], b[i][j]
                if bool(x) != bool(y):
                    return None
                if not x:
                    continue
                if y == x:
                    sign = 1
                elif y == -x:
                    sign = -1
                else:
                    return None
                want = s[i] * sign
                if s[j] == 0:
                    s[j] = want
                    stack.append(j)
                elif s[j] != want:
                    return None
    D = DomainMatrix.diag([gq(x) for x in s], A.domain, (n, n))
    return tuple(s) if equal(D * A * D, B) else None


# --- the bound certificate ---------------------------------------------------------


@dataclass(frozen=True)
class BoundEntry:
    gamma: RepLabelG2
    casimir: int
    bound: QuadraticSurd  # √(−c − 5) − 1


@dataclass(frozen=True)
class BoundReport:
    max_level: int
    entries: tuple
    exceptional: tuple
    equality: tuple
    violations: tuple
    monotone: bool

    @property
    def certified(self) -> bool:
        return not self.violations and self.monotone


def bound_value(gamma: RepLabelG2) -> QuadraticSurd:
    c = casimir_g2(gamma)
    return QuadraticSurd.sqrt(-c - 5) - 1


def bound_scan(max_level: int) -> BoundReport:
    """Check √(−c_γ − 5) − 1 ≥ 2 for every γ with i + j ≤ max_level outside SUPPORTED.

    −c(i, j) = i² + 3j² + 3ij + 5i + 9j has nonnegative coefficients, so it
    increases strictly in each index and the bound persists past max_level;
    the scan also checks this on the grid.
    """
    if max_level < 2:
        raise ValueError("max_level must be at least 2")
    rows, eq, bad = [], [], []
    two = QuadraticSurd(2)
    monotone = True
    for total in range(max_level + 1):
        for i in range(total + 1):
            g = RepLabelG2(i, total - i)
            c = casimir_g2(g)
            for step in (RepLabelG2(i + 1, g.j), RepLabelG2(i, g.j + 1)):
                if -casimir_g2(step) <= -c:
                    monotone = False
            if g in SUPPORTED:
                continue
            b = bound_value(g)
            rows.append(BoundEntry(g, c, b))
            if b == two:
                eq.append(g)
            elif b < two:
                bad.append(g)
    return BoundReport(max_level, tuple(rows), SUPPORTED, tuple(eq), tuple(bad), monotone)


# --- aggregation ---------------------------------------------------------------


def _threads() -> int:
    raw = os.environ.get("G2SPEC_THREADS", "")
    try:
        return max(1, int(raw))
    except ValueError:
        return min(3, os.cpu_count() or 1)


@dataclass(frozen=True)
class GammaResult:
    gamma: RepLabelG2
    dirac: DiracMatrix
    spectrum: tuple


def _compute(gamma: RepLabelG2) -> GammaResult:
    D = assemble_dirac_direct(gamma)
    return GammaResult(gamma, D, tuple(eigenvalues(D)))


@lru_cache(maxsize=1)
def compute_all() -> tuple:
    """Dirac matrices and spectra for the three supported labels, in label order."""
    build_split()
    n = _threads()
    if n == 1:
        return tuple(_compute(g) for g in SUPPORTED)
    with ThreadPoolExecutor(max_workers=n) as pool:
        return tuple(pool.map(_compute, SUPPORTED))


CERTIFIED = (Fraction(0), Fraction(2))


def spectrum_in_interval(lo, hi) -> list:
    """Eigenvalues in [lo, hi) of the full link operator, with total multiplicity.

    Only windows inside [0, 2) are answered: for every other label the
    bound certificate puts the nonnegative spectrum at or above 2.
    """
    lo_q = QuadraticSurd(Fraction(lo)) if not isinstance(lo, QuadraticSurd) else lo
    hi_q = QuadraticSurd(Fraction(hi)) if not isinstance(hi, QuadraticSurd) else hi
    if lo_q < QuadraticSurd(CERTIFIED[0]) or QuadraticSurd(CERTIFIED[1]) < hi_q or not lo_q < hi_q:
        raise UncertifiedInterval(f"[{lo_q}, {hi_q}) is not inside the certified window [0, 2)")
    report = bound_scan(2)
    if not report.certified:
        raise UncertifiedInterval("bound certificate failed")
    totals: dict = {}
    for res in compute_all():
        for v, m in res.spectrum:
            if isinstance(v, NumericRoot):
                raise UncertifiedInterval("numeric eigenvalue in an exact ledger")
            if lo_q <= v and v < hi_q:
                totals[v] = totals.get(v, 0) + m * rep_dim(res.gamma)
    return sorted(totals.items(), key=lambda t: float(t[0]))
