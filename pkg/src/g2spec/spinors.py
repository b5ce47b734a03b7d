"""Spinor coordinate models in dimensions 6 and 7.

A 7d spinor (f + v)·s7 is stored as (f, v) with v a 1-form on R^7. A 6d
spinor (f + v + h Vol6)·s6 is stored as (f, v, h). Both have 8 complex
coordinates, ordered f, v_1.., (h).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from sympy.polys.matrices import DomainMatrix

from .exact import ZERO, gq, sparse_from_dict
from .exterior import (
    STD,
    ExteriorForm,
    apply_J,
    contract_form,
    form_dot,
    hodge,
    wedge,
)
from .lie import LieElement, std_rep


@dataclass(frozen=True)
class Spinor6:
    f: object
    v: ExteriorForm
    h: object

    @classmethod
    def from_coords(cls, c) -> "Spinor6":
        c = [gq(x) for x in c]
        return cls(c[0], ExteriorForm.vector(6, c[1:7]), c[7])

    def coords(self) -> list:
        return [gq(self.f), *(self.v.coords() if self.v else [ZERO] * 6), gq(self.h)]

    def __add__(self, o):
        return Spinor6(gq(self.f) + gq(o.f), self.v + o.v, gq(self.h) + gq(o.h))

    def scale(self, c) -> "Spinor6":
        c = gq(c)
        return Spinor6(c * gq(self.f), self.v * c, c * gq(self.h))


@dataclass(frozen=True)
class Spinor7:
    f: object
    v: ExteriorForm

    @classmethod
    def from_coords(cls, c) -> "Spinor7":
        c = [gq(x) for x in c]
        return cls(c[0], ExteriorForm.vector(7, c[1:8]))

    def coords(self) -> list:
        return [gq(self.f), *(self.v.coords() if self.v else [ZERO] * 7)]

    def __add__(self, o):
        return Spinor7(gq(self.f) + gq(o.f), self.v + o.v)

    def scale(self, c) -> "Spinor7":
        c = gq(c)
        return Spinor7(c * gq(self.f), self.v * c)


def _grade1(u: ExteriorForm, dim: int) -> None:
    if u.dim != dim or (u and u.grade != 1):
        raise ValueError(f"expected a 1-form on R^{dim}")


def clifford6(u: ExteriorForm, s: Spinor6) -> Spinor6:
    """u·(f + v + h Vol) = −<u,v> + f u − h Ju − (u∧v)⌟ReΩ + <u∧v, ω> Vol."""
    _grade1(u, 6)
    uv = wedge(u, s.v)
    return Spinor6(
        -form_dot(u, s.v),
        u * s.f - apply_J(u) * s.h - contract_form(uv, STD.Omega_re),
        form_dot(uv, STD.omega),
    )


def clifford7(u: ExteriorForm, s: Spinor7) -> Spinor7:
    """u·(f + v) = −<u,v> + f u + *(u∧v∧ψ0)."""
    _grade1(u, 7)
    return Spinor7(-form_dot(u, s.v), u * s.f + hodge(wedge(u, s.v, STD.psi0)))


def _form_action(a: ExteriorForm, s, mult, dim: int):
    if a.dim != dim:
        raise ValueError(f"expected a form on R^{dim}")
    total = s.scale(0)
    for idx, c in a.items():
        t = s
        # e^{i1..ik}·s = e^{i1}·(e^{i2}·(...(e^{ik}·s)))
        for k in reversed(idx):
            t = mult(ExteriorForm(dim, {(k,): 1}), t)
        total = total + t.scale(c)
    return total


def form_action6(a: ExteriorForm, s: Spinor6) -> Spinor6:
    return _form_action(a, s, clifford6, 6)


def form_action7(a: ExteriorForm, s: Spinor7) -> Spinor7:
    return _form_action(a, s, clifford7, 7)


def operator_matrix(fn, cls) -> DomainMatrix:
    """8x8 matrix of a linear map on spinor coordinates (columns are images)."""
    out = {}
    for j in range(8):
        unit = [0] * 8
        unit[j] = 1
        for i, x in enumerate(fn(cls.from_coords(unit)).coords()):
            if x:
                out[(i, j)] = x
    return sparse_from_dict(out, (8, 8))


def clifford6_matrix(u: ExteriorForm) -> DomainMatrix:
    return operator_matrix(lambda s: clifford6(u, s), Spinor6)


def clifford7_matrix(u: ExteriorForm) -> DomainMatrix:
    return operator_matrix(lambda s: clifford7(u, s), Spinor7)


def form_action6_matrix(a: ExteriorForm) -> DomainMatrix:
    return operator_matrix(lambda s: form_action6(a, s), Spinor6)


def form_action7_matrix(a: ExteriorForm) -> DomainMatrix:
    return operator_matrix(lambda s: form_action7(a, s), Spinor7)


# Spinor6 slot k corresponds to R^7 generator _SLOT_TO_R7[k]; the h slot is inert.
_SLOT_TO_R7 = {0: 7, 1: 1, 2: 2, 3: 3, 4: 4, 5: 5, 6: 6}


def rho_S(eta: LieElement) -> DomainMatrix:
    """(a dt + v, b) ↦ ((a dt + v)⌟η, 0) on Spinor6 coordinates."""
    M = std_rep(eta).to_sparse().rep
    inv = {r: s for s, r in _SLOT_TO_R7.items()}
    out = {}
    for i, row in M.items():
        for j, x in row.items():
            out[(inv[i + 1], inv[j + 1])] = x
    return sparse_from_dict(out, (8, 8))


def vol_action(s: Spinor6) -> Spinor6:
    """Vol6 acting on (f, v, h) gives (−h, Jv, f)."""
    return Spinor6(-gq(s.h), apply_J(s.v) if s.v else s.v, gq(s.f))


@lru_cache(maxsize=1)
def vol_matrix() -> DomainMatrix:
    return operator_matrix(vol_action, Spinor6)


def rho_S_tilde(eta: LieElement) -> DomainMatrix:
    """Vol⁻¹ ρ_S(η) Vol, using Vol⁻¹ = −Vol."""
    V = vol_matrix()
    return -(V * rho_S(eta) * V)


@lru_cache(maxsize=1)
def re_omega_matrix() -> DomainMatrix:
    return form_action6_matrix(STD.Omega_re)


def apply(M: DomainMatrix, s):
    """Apply an 8x8 matrix to a spinor dataclass."""
    col = DomainMatrix([[gq(x)] for x in s.coords()], (8, 1), M.domain)
    return type(s).from_coords([row[0] for row in (M * col).to_dense().to_list()])
