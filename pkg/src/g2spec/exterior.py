"""Exact complex exterior algebra on R^6 and R^7.

Forms are stored as maps from strictly increasing index tuples to Gaussian
rationals. Generators are e^1..e^n, and on R^7 the last generator e^7 plays
the role of dt. All operations return new objects.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .exact import ZERO, I, conj, format_scalar, gq, parse_scalar

__all__ = [
    "ExteriorForm",
    "e",
    "wedge",
    "contract",
    "contract_form",
    "right_contract",
    "hodge",
    "form_inner",
    "form_dot",
    "apply_J",
    "proj_10",
    "proj_01",
    "StructureConstants",
    "STD",
]


def _merge_sign(a: tuple, b: tuple) -> int:
    """Sign of sorting the concatenation a+b, or 0 if they share an index."""
    inversions = 0
    for x in a:
        for y in b:
            if x == y:
                return 0
            if x > y:
                inversions += 1
    return -1 if inversions & 1 else 1


class ExteriorForm:
    """A (possibly inhomogeneous) complex form on R^dim, dim in {6, 7}."""

    __slots__ = ("dim", "_terms")

    def __init__(self, dim: int, terms: dict | None = None):
        if dim not in (6, 7):
            raise ValueError(f"ambient dimension must be 6 or 7, got {dim}")
        clean = {}
        for idx, c in (terms or {}).items():
            idx = tuple(idx)
            if any(k < 1 or k > dim for k in idx) or any(
                idx[t] >= idx[t + 1] for t in range(len(idx) - 1)
            ):
                raise ValueError(f"bad index tuple {idx} for dimension {dim}")
            c = gq(c)
            if c:
                clean[idx] = c
        self.dim = dim
        self._terms = clean

    @classmethod
    def _raw(cls, dim: int, terms: dict) -> "ExteriorForm":
        obj = cls.__new__(cls)
        obj.dim = dim
        obj._terms = {k: v for k, v in terms.items() if v}
        return obj

    @classmethod
    def scalar(cls, dim: int, c=1) -> "ExteriorForm":
        return cls(dim, {(): c})

    @classmethod
    def zero(cls, dim: int) -> "ExteriorForm":
        return cls._raw(dim, {})

    @classmethod
    def vector(cls, dim: int, coords) -> "ExteriorForm":
        """Grade-1 form with coefficients ``coords[k-1]`` on e^k."""
        if len(coords) != dim:
            raise ValueError("coordinate count must equal the dimension")
        return cls(dim, {(k + 1,): c for k, c in enumerate(coords)})

    # -- inspection ---------------------------------------------------------

    def items(self):
        return self._terms.items()

    def coefficient(self, idx) -> object:
        return self._terms.get(tuple(idx), ZERO)

    def __bool__(self) -> bool:
        return bool(self._terms)

    @property
    def grades(self) -> set[int]:
        return {len(k) for k in self._terms}

    @property
    def grade(self) -> int | None:
        """The grade of a homogeneous nonzero form, else None."""
        g = self.grades
        return next(iter(g)) if len(g) == 1 else None

    def part(self, k: int) -> "ExteriorForm":
        return ExteriorForm._raw(self.dim, {i: c for i, c in self._terms.items() if len(i) == k})

    def coords(self) -> list:
        """Coefficients of a grade-1 form, ordered e^1..e^dim."""
        if self and self.grade != 1:
            raise ValueError("coords() needs a grade-1 form")
        return [self.coefficient((k,)) for k in range(1, self.dim + 1)]

    def lift(self, dim: int = 7) -> "ExteriorForm":
        """Regard a form on R^6 as a form on R^7 (no dt component)."""
        if dim < self.dim:
            raise ValueError("can only lift to a larger dimension")
        return ExteriorForm._raw(dim, dict(self._terms))

    def restrict(self, dim: int = 6) -> "ExteriorForm":
        """Drop every monomial that involves a generator beyond ``dim``."""
        return ExteriorForm._raw(
            dim, {i: c for i, c in self._terms.items() if all(k <= dim for k in i)}
        )

    def conjugate(self) -> "ExteriorForm":
        return ExteriorForm._raw(self.dim, {i: conj(c) for i, c in self._terms.items()})

    # -- arithmetic ---------------------------------------------------------

    def _check(self, other: "ExteriorForm") -> None:
        if not isinstance(other, ExteriorForm):
            raise TypeError("expected an ExteriorForm")
        if other.dim != self.dim:
            raise ValueError(f"dimension mismatch: {self.dim} vs {other.dim}")

    def __add__(self, other):
        self._check(other)
        out = dict(self._terms)
        for i, c in other._terms.items():
            out[i] = out.get(i, ZERO) + c
        return ExteriorForm._raw(self.dim, out)

    def __neg__(self):
        return ExteriorForm._raw(self.dim, {i: -c for i, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, c):
        if isinstance(c, ExteriorForm):
            return wedge(self, c)
        c = gq(c)
        return ExteriorForm._raw(self.dim, {i: c * v for i, v in self._terms.items()})

    def __rmul__(self, c):
        return self.__mul__(c)

    def __truediv__(self, c):
        c = gq(c)
        return ExteriorForm._raw(self.dim, {i: v / c for i, v in self._terms.items()})

    def __xor__(self, other):
        return wedge(self, other)

    def __eq__(self, other):
        if isinstance(other, ExteriorForm):
            return self.dim == other.dim and not (self - other)._terms
        if other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self):
        return hash((self.dim, frozenset((k, (v.x, v.y)) for k, v in self._terms.items())))

    # -- text ---------------------------------------------------------------

    def to_string(self) -> str:
        """Signed monomial list such as ``+1 e135 -1 e146``; ``0`` if empty."""
        if not self._terms:
            return "0"
        parts = []
        for idx in sorted(self._terms, key=lambda t: (len(t), t)):
            c = self._terms[idx]
            label = "e" + "".join(str(k) for k in idx)
            text = format_scalar(c)
            if c.y and c.x:
                parts.append(f"+({text}) {label}")
            elif text.startswith("-"):
                parts.append(f"{text} {label}")
            else:
                parts.append(f"+{text} {label}")
        return " ".join(parts)

    @classmethod
    def from_string(cls, dim: int, text: str) -> "ExteriorForm":
        tokens = text.split()
        if tokens == ["0"]:
            return cls.zero(dim)
        if len(tokens) % 2:
            raise ValueError(f"malformed form string {text!r}")
        terms: dict = {}
        for coeff, label in zip(tokens[::2], tokens[1::2]):
            if not label.startswith("e"):
                raise ValueError(f"bad monomial label {label!r}")
            idx = tuple(int(ch) for ch in label[1:])
            body = coeff.lstrip("+")
            if body.startswith("(") and body.endswith(")"):
                body = body[1:-1]
            terms[idx] = terms.get(idx, ZERO) + parse_scalar(body)
        return cls(dim, terms)

    def __repr__(self):
        return f"ExteriorForm({self.dim}, {self.to_string()!r})"


def e(dim: int, *indices: int) -> ExteriorForm:
    """The monomial e^{i1 i2 ...}; indices need not be sorted."""
    order = sorted(indices)
    if len(set(order)) != len(order):
        return ExteriorForm.zero(dim)
    sign = 1
    idx = list(indices)
    for a in range(len(idx)):
        for b in range(a + 1, len(idx)):
            if idx[a] > idx[b]:
                sign = -sign
    return ExteriorForm(dim, {tuple(order): sign})


def wedge(*forms: ExteriorForm) -> ExteriorForm:
    if not forms:
        raise ValueError("wedge needs at least one form")
    acc = forms[0]
    for b in forms[1:]:
        acc._check(b)
        out: dict = {}
        for i, x in acc._terms.items():
            for j, y in b._terms.items():
                s = _merge_sign(i, j)
                if s:
                    k = tuple(sorted(i + j))
                    out[k] = out.get(k, ZERO) + (x * y if s > 0 else -(x * y))
        acc = ExteriorForm._raw(acc.dim, out)
    return acc


def contract(v: ExteriorForm, a: ExteriorForm) -> ExteriorForm:
    """Interior product v⌟a of a grade-1 form into any form.

    This is the antiderivation with ``e^k ⌟ e^{i1..ip} = (-1)^(s) e^{..î..}``
    where s is the position of k, and it is complex bilinear.
    """
    v._check(a)
    if v and v.grade != 1:
        raise ValueError("contract() needs a grade-1 first argument")
    out: dict = {}
    for (k,), c in v._terms.items():
        for idx, x in a._terms.items():
            if k in idx:
                pos = idx.index(k)
                rest = idx[:pos] + idx[pos + 1 :]
                val = c * x
                out[rest] = out.get(rest, ZERO) + (-val if pos & 1 else val)
    return ExteriorForm._raw(a.dim, out)


def contract_form(A: ExteriorForm, eta: ExteriorForm) -> ExteriorForm:
    """Left contraction A⌟eta, the bilinear adjoint of wedging on the left by A.

    ``<A⌟eta, g> = <eta, A∧g>``; for a 2-form this gives
    ``(u∧v)⌟eta = v⌟(u⌟eta)``.
    """
    A._check(eta)
    out: dict = {}
    for i, x in A._terms.items():
        si = set(i)
        for k, y in eta._terms.items():
            if si.issubset(k):
                rest = tuple(t for t in k if t not in si)
                s = _merge_sign(i, rest)
                out[rest] = out.get(rest, ZERO) + (x * y if s > 0 else -(x * y))
    return ExteriorForm._raw(eta.dim, out)


def right_contract(eta: ExteriorForm, A: ExteriorForm) -> ExteriorForm:
    """Right contraction eta⌞A, adjoint of wedging on the right by A."""
    A._check(eta)
    out: dict = {}
    for i, x in A._terms.items():
        si = set(i)
        for k, y in eta._terms.items():
            if si.issubset(k):
                rest = tuple(t for t in k if t not in si)
                s = _merge_sign(rest, i)
                out[rest] = out.get(rest, ZERO) + (x * y if s > 0 else -(x * y))
    return ExteriorForm._raw(eta.dim, out)


def hodge(a: ExteriorForm) -> ExteriorForm:
    """Complex-linear Hodge star with ``a ∧ *b = form_dot(a, b) Vol``."""
    full = tuple(range(1, a.dim + 1))
    out: dict = {}
    for idx, c in a._terms.items():
        comp = tuple(k for k in full if k not in idx)
        s = _merge_sign(idx, comp)
        out[comp] = c if s > 0 else -c
    return ExteriorForm._raw(a.dim, out)


def form_dot(a: ExteriorForm, b: ExteriorForm):
    """Complex-bilinear extension of the Euclidean inner product."""
    a._check(b)
    total = ZERO
    small, big = (a, b) if len(a._terms) <= len(b._terms) else (b, a)
    for idx, x in small._terms.items():
        y = big._terms.get(idx)
        if y is not None:
            total += x * y
    return total


def form_inner(a: ExteriorForm, b: ExteriorForm):
    """Hermitian inner product, conjugate-linear in the first slot."""
    return form_dot(a.conjugate(), b)


def apply_J(v: ExteriorForm) -> ExteriorForm:
    """Complex structure on grade-1 forms of R^6: J e^(2k-1) = e^(2k), J e^(2k) = -e^(2k-1)."""
    if v.dim != 6:
        raise ValueError("J acts on forms over R^6")
    if v and v.grade != 1:
        raise ValueError("J acts on grade-1 forms")
    out: dict = {}
    for (k,), c in v._terms.items():
        if k % 2:
            out[(k + 1,)] = c
        else:
            out[(k - 1,)] = -c
    return ExteriorForm._raw(6, out)


def proj_10(v: ExteriorForm) -> ExteriorForm:
    """½(1 + iJ)v, the projection onto Λ^(1,0)."""
    return (v + I * apply_J(v)) / 2


def proj_01(v: ExteriorForm) -> ExteriorForm:
    """½(1 − iJ)v, the projection onto Λ^(0,1)."""
    return (v - I * apply_J(v)) / 2


@dataclass(frozen=True, eq=False)
class StructureConstants:
    phi0: ExteriorForm
    psi0: ExteriorForm
    omega: ExteriorForm
    Omega_re: ExteriorForm
    Omega_im: ExteriorForm
    Omega: ExteriorForm
    Omega_bar: ExteriorForm
    vol6: ExteriorForm
    vol7: ExteriorForm
    dt: ExteriorForm

    @staticmethod
    def J(v: ExteriorForm) -> ExteriorForm:
        return apply_J(v)


def _build_constants() -> StructureConstants:
    omega = e(6, 1, 2) + e(6, 3, 4) + e(6, 5, 6)
    z = [e(6, 1) + I * e(6, 2), e(6, 3) + I * e(6, 4), e(6, 5) + I * e(6, 6)]
    Omega = wedge(*z)
    re_terms = {k: gq(c.x) for k, c in Omega.items()}
    im_terms = {k: gq(c.y) for k, c in Omega.items()}
    Omega_re = ExteriorForm(6, re_terms)
    Omega_im = ExteriorForm(6, im_terms)
    dt = e(7, 7)
    phi0 = wedge(omega.lift(), dt) + Omega_im.lift()
    return StructureConstants(
        phi0=phi0,
        psi0=hodge(phi0),
        omega=omega,
        Omega_re=Omega_re,
        Omega_im=Omega_im,
        Omega=Omega,
        Omega_bar=Omega.conjugate(),
        vol6=e(6, *range(1, 7)),
        vol7=e(7, *range(1, 8)),
        dt=dt,
    )


STD = _build_constants()


def basis_forms(dim: int, k: int) -> list[ExteriorForm]:
    return [ExteriorForm(dim, {idx: 1}) for idx in combinations(range(1, dim + 1), k)]
