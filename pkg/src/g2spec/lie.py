"""The Lie algebra g2 as 2-forms on R^7, and its split su(3) + m.

An element is identified with the endomorphism ``v -> v⌟α`` of the space of
1-forms; brackets are commutators of these 7x7 matrices, so the standard
representation is a homomorphism by construction.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from itertools import combinations

from sympy import QQ_I
from sympy.polys.matrices import DomainMatrix

from .exact import ZERO, gq, re_part, scalar_to_pair, sparse_from_dict, trace
from .exterior import STD, ExteriorForm, contract, e, form_dot, hodge, wedge

PAIRS7 = list(combinations(range(1, 8), 2))


class MembershipError(ValueError):
    """A 2-form expected in g2 (or su(3)) is not."""


@dataclass(frozen=True, eq=False)
class LieElement:
    as_form: ExteriorForm

    def __post_init__(self):
        f = self.as_form
        if f.dim != 7 or (f and f.grade != 2):
            raise ValueError("a Lie element is a 2-form on R^7")

    @cached_property
    def as_matrix(self) -> DomainMatrix:
        """Matrix M with M[j, k] the e^j coefficient of e^k ⌟ α (0-based)."""
        out = {}
        for (a, b), c in self.as_form.items():
            out[(b - 1, a - 1)] = c
            out[(a - 1, b - 1)] = -c
        return sparse_from_dict(out, (7, 7))

    def in_g2(self) -> bool:
        return not wedge(self.as_form, STD.psi0)

    def __add__(self, other):
        return LieElement(self.as_form + other.as_form)

    def __sub__(self, other):
        return LieElement(self.as_form - other.as_form)

    def __mul__(self, c):
        return LieElement(self.as_form * c)

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, LieElement) and self.as_form == other.as_form

    def __hash__(self):
        return hash(self.as_form)


def form_from_matrix(M: DomainMatrix) -> ExteriorForm:
    """Inverse of ``LieElement.as_matrix`` on antisymmetric matrices."""
    rows = M.to_sparse().rep
    terms = {}
    for a, b in PAIRS7:
        c = rows.get(b - 1, {}).get(a - 1, ZERO)
        back = rows.get(a - 1, {}).get(b - 1, ZERO)
        if c + back:
            raise ValueError("matrix is not antisymmetric")
        if c:
            terms[(a, b)] = c
    return ExteriorForm(7, terms)


def std_rep(X: LieElement) -> DomainMatrix:
    return X.as_matrix


def bracket(X: LieElement, Y: LieElement) -> LieElement:
    A, B = X.as_matrix, Y.as_matrix
    Z = LieElement(form_from_matrix(A * B - B * A))
    if not Z.in_g2() and X.in_g2() and Y.in_g2():
        raise MembershipError("bracket left g2; the psi0 convention is inconsistent")
    return Z


def F(v: ExteriorForm) -> LieElement:
    """F(v) = v∧dt + ½ v⌟ReΩ for a grade-1 form v on R^6."""
    if v.dim != 6:
        raise ValueError("F takes a 1-form on R^6")
    return LieElement(wedge(v.lift(), STD.dt) + contract(v, STD.Omega_re).lift() / 2)


def _rational_nullspace(rows: list[list], ncols: int) -> list[list]:
    M = DomainMatrix([[gq(x) for x in r] for r in rows], (len(rows), ncols), QQ_I)
    null = M.to_field().nullspace().to_Matrix()
    return [[gq(x) for x in null.row(i)] for i in range(null.rows)]


def build_g2_basis() -> list[LieElement]:
    """A basis of the kernel of α ↦ α∧ψ0 on 2-forms of R^7."""
    images = [wedge(ExteriorForm(7, {p: 1}), STD.psi0) for p in PAIRS7]
    sixes = list(combinations(range(1, 8), 6))
    rows = [[img.coefficient(s) for img in images] for s in sixes]
    vecs = _rational_nullspace(rows, len(PAIRS7))
    basis = [LieElement(ExteriorForm(7, dict(zip(PAIRS7, v)))) for v in vecs]
    if len(basis) != 14:
        raise MembershipError(f"expected a 14-dimensional kernel, got {len(basis)}")
    return basis


def _su3_raw_basis() -> list[ExteriorForm]:
    pairs6 = list(combinations(range(1, 7), 2))
    # *6(α∧ω) + α = 0
    images = []
    for p in pairs6:
        a = ExteriorForm(6, {p: 1})
        images.append(hodge(wedge(a, STD.omega)) + a)
    rows = [[img.coefficient(q) for img in images] for q in pairs6]
    vecs = _rational_nullspace(rows, len(pairs6))
    return [ExteriorForm(6, dict(zip(pairs6, v))) for v in vecs]


def _gram_schmidt(forms: list[ExteriorForm]) -> list[ExteriorForm]:
    """Unnormalised orthogonalisation for form_dot on real rational forms."""
    out: list[ExteriorForm] = []
    for f in forms:
        g = f
        for b in out:
            g = g - b * (form_dot(b, f) / form_dot(b, b))
        out.append(g)
    return out


@dataclass(frozen=True, eq=False)
class LieData:
    """The concrete split g2 = m + su(3) with its Killing metric.

    ``basis`` lists I_1..I_6 = F(e^1)..F(e^6) followed by an orthogonal but
    unnormalised su(3) basis; ``gram`` is diagonal with B(I_A, I_A).
    """

    g2_basis: tuple
    m_basis: tuple
    su3_basis: tuple
    basis: tuple
    gram: tuple  # B(I_A, I_A) as Fractions

    @property
    def h_basis(self) -> tuple:
        return self.su3_basis

    @cached_property
    def _dual(self):
        # α ↦ coordinates uses the form inner product, orthogonal on `basis`
        return [(b.as_form, form_dot(b.as_form, b.as_form)) for b in self.basis]

    def coords(self, X: LieElement | ExteriorForm) -> list:
        """Coordinates of a complex 2-form in the basis I_A; raises if outside g2."""
        f = X.as_form if isinstance(X, LieElement) else X
        if f.dim == 6:
            f = f.lift()
        c = [form_dot(b, f) / n for b, n in self._dual]
        recon = ExteriorForm.zero(7)
        for ci, (b, _) in zip(c, self._dual):
            if ci:
                recon = recon + b * ci
        if recon != f:
            raise MembershipError("form is not in the complexified g2")
        return c

    def element(self, coords) -> LieElement:
        acc = ExteriorForm.zero(7)
        for c, b in zip(coords, self.basis):
            c = gq(c)
            if c:
                acc = acc + b.as_form * c
        return LieElement(acc)

    def B(self, X: LieElement, Y: LieElement):
        """Killing metric; equals (2/3)·form_dot on g2."""
        cx, cy = self.coords(X), self.coords(Y)
        return sum((a * b * gq(g) for a, b, g in zip(cx, cy, self.gram)), ZERO)

    @cached_property
    def ad_matrices(self) -> tuple:
        return tuple(self.ad_rep(X) for X in self.basis)

    def ad_rep(self, X: LieElement) -> DomainMatrix:
        cols = {}
        for k, Y in enumerate(self.basis):
            for r, v in enumerate(self.coords(bracket(X, Y))):
                if v:
                    cols[(r, k)] = v
        return sparse_from_dict(cols, (14, 14))

    def casimir(self, rho, indices=None) -> DomainMatrix:
        """Σ_A ρ(I_A)² / B(I_A, I_A) over the chosen basis indices (default all)."""
        idx = range(14) if indices is None else indices
        acc = None
        for a in idx:
            R = rho(self.basis[a])
            term = (R * R) * gq(1 / self.gram[a]) if not isinstance(R, int) else R
            acc = term if acc is None else acc + term
        return acc

    def to_json(self) -> str:
        """Deterministic dump of the basis and Gram data, for golden tests."""
        payload = {
            "basis": [b.as_form.to_string() for b in self.basis],
            "m_indices": list(range(6)),
            "su3_indices": list(range(6, 14)),
            "killing_gram_diagonal": [str(g) for g in self.gram],
            "form_gram_diagonal": [str(re_part(form_dot(b.as_form, b.as_form))) for b in self.basis],
        }
        return json.dumps(payload, indent=2, sort_keys=True)


def _killing_from_ad(ad: list) -> list[list]:
    return [[-trace(a * b) / 12 for b in ad] for a in ad]


@lru_cache(maxsize=1)
def build_split() -> LieData:
    g2 = build_g2_basis()
    m = [F(e(6, a)) for a in range(1, 7)]
    su3_forms = _gram_schmidt(_su3_raw_basis())
    if len(su3_forms) != 8:
        raise MembershipError("su(3) should be 8-dimensional")
    su3 = [LieElement(f.lift()) for f in su3_forms]
    for X in m + su3:
        if not X.in_g2():
            raise MembershipError("split basis element fails the g2 membership test")
    basis = tuple(m + su3)
    provisional = LieData(tuple(g2), tuple(m), tuple(su3), basis, tuple([Fraction(1)] * 14))
    ad = [provisional.ad_rep(X) for X in basis]
    K = _killing_from_ad(ad)
    for a in range(14):
        for b in range(14):
            if a != b and K[a][b]:
                raise MembershipError("Killing metric is not diagonal on the split basis")
    gram = tuple(re_part(K[a][a]) for a in range(14))
    data = LieData(tuple(g2), tuple(m), tuple(su3), basis, gram)
    # closure [su(3), m] ⊆ m
    for h in su3:
        for x in m:
            c = data.coords(bracket(h, x))
            if any(c[6:]):
                raise MembershipError("[su(3), m] is not contained in m")
    return data


def gram_pairs(data: LieData) -> list:
    return [scalar_to_pair(gq(g)) for g in data.gram]
