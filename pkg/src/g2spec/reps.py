"""Representation labels, characters and the SU(3) ⊂ G2 branching rule.

Weights live in one coordinate system throughout: a weight λ is recorded
by the pair (λ(H1), λ(H2)) for the Cartan pair H1 = e^12 − e^34,
H2 = e^34 − e^56 of su(3) ⊂ g2, read off as eigenvalue/i. Both root
systems are computed from the concrete matrices in :mod:`g2spec.lie`, and
their inner product is the one dual to the Killing metric B.
"""

from __future__ import annotations

import math
import threading
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import sympy as sp

from .exact import I, dm, entries, im_part, to_sympy
from .exterior import contract, e
from .lie import LieElement, build_split

Weight = tuple  # (Fraction, Fraction)


@dataclass(frozen=True, order=True)
class RepLabelG2:
    i: int
    j: int

    def __post_init__(self):
        if self.i < 0 or self.j < 0:
            raise ValueError("labels are nonnegative")

    def __str__(self):
        return f"V({self.i},{self.j})"


@dataclass(frozen=True, order=True)
class RepLabelSU3:
    p: int
    q: int

    def __post_init__(self):
        if self.p < 0 or self.q < 0:
            raise ValueError("labels are nonnegative")

    def dual(self) -> "RepLabelSU3":
        return RepLabelSU3(self.q, self.p)

    def __str__(self):
        return f"W({self.p},{self.q})"


# --- closed formulas --------------------------------------------------------


def casimir_g2(label) -> int:
    i, j = _pair(label)
    return -(i * i + 3 * j * j + 3 * i * j + 5 * i + 9 * j)


def casimir_su3(label) -> int:
    p, q = _pair(label)
    return -(p * p + q * q + p * q + 3 * p + 3 * q)


def dim_g2(label) -> int:
    i, j = _pair(label)
    num = (i + 1) * (j + 1) * (i + j + 2) * (i + 2 * j + 3) * (i + 3 * j + 4) * (2 * i + 3 * j + 5)
    return num // 120


def dim_su3(label) -> int:
    p, q = _pair(label)
    return (p + 1) * (q + 1) * (p + q + 2) // 2


def _pair(label) -> tuple[int, int]:
    if isinstance(label, RepLabelG2):
        return label.i, label.j
    if isinstance(label, RepLabelSU3):
        return label.p, label.q
    a, b = label
    return int(a), int(b)


# --- root systems -----------------------------------------------------------


class RootSystem:
    """A rank-2 root system given by simple roots in weight coordinates."""

    def __init__(self, simple: list, positive: list, gram_inv: list):
        self.simple = [tuple(a) for a in simple]
        self.positive = [tuple(a) for a in positive]
        self._g = gram_inv
        self.fundamental = self._fundamental_weights()
        self.rho = _add(*self.fundamental)
        self._cache: dict = {}
        self._lock = threading.Lock()

    def ip(self, a: Weight, b: Weight) -> Fraction:
        g = self._g
        return sum(a[r] * g[r][s] * b[s] for r in range(2) for s in range(2))

    def pairing(self, mu: Weight, alpha: Weight) -> Fraction:
        return 2 * self.ip(mu, alpha) / self.ip(alpha, alpha)

    def _fundamental_weights(self) -> list:
        # solve <w_k, α_l^∨> = δ_kl
        A = sp.Matrix(
            [[sp.Rational(2) * _r(self._row_g(a)[s]) / _r(self.ip(a, a)) for s in range(2)] for a in self.simple]
        )
        out = []
        for k in range(2):
            rhs = sp.Matrix([1 if k == l else 0 for l in range(2)])
            sol = A.solve(rhs)
            out.append((Fraction(str(sol[0])), Fraction(str(sol[1]))))
        return out

    def _row_g(self, a: Weight) -> list:
        g = self._g
        return [sum(a[r] * g[r][s] for r in range(2)) for s in range(2)]

    def dynkin(self, mu: Weight) -> tuple[int, int]:
        vals = [self.pairing(mu, a) for a in self.simple]
        if any(v.denominator != 1 for v in vals):
            raise ValueError(f"{mu} is not an integral weight")
        return int(vals[0]), int(vals[1])

    def from_dynkin(self, a: int, b: int) -> Weight:
        return _add(_scale(self.fundamental[0], a), _scale(self.fundamental[1], b))

    def weyl_dimension(self, lam: Weight) -> int:
        lr = _add(lam, self.rho)
        num = Fraction(1)
        for alpha in self.positive:
            num *= self.ip(lr, alpha) / self.ip(self.rho, alpha)
        if num.denominator != 1:
            raise ValueError("Weyl dimension is not an integer")
        return int(num)

    def casimir(self, lam: Weight) -> Fraction:
        return -self.ip(lam, _add(lam, _scale(self.rho, 2)))

    def reflect(self, mu: Weight, alpha: Weight) -> Weight:
        return _sub(mu, _scale(alpha, self.pairing(mu, alpha)))

    def lowest_weight(self, lam: Weight) -> Weight:
        mu = lam
        changed = True
        while changed:
            changed = False
            for a in self.simple:
                if self.pairing(mu, a) > 0:
                    mu = self.reflect(mu, a)
                    changed = True
        return mu

    def character(self, lam: Weight) -> dict:
        """Weight multiplicities of the irreducible with highest weight lam (Freudenthal)."""
        key = tuple(lam)
        with self._lock:
            if key in self._cache:
                return self._cache[key]
        result = self._freudenthal(lam)
        with self._lock:
            self._cache[key] = result
        return result

    def _simple_coords(self, mu: Weight) -> tuple[Fraction, Fraction]:
        a, b = self.simple
        det = a[0] * b[1] - a[1] * b[0]
        x = (mu[0] * b[1] - mu[1] * b[0]) / det
        y = (a[0] * mu[1] - a[1] * mu[0]) / det
        return x, y

    def _freudenthal(self, lam: Weight) -> dict:
        # Work in integer coordinates (k1, k2) of λ − μ on the simple roots, with
        # every inner product scaled to a common denominator; the recursion only
        # ever uses ratios, so the scaling drops out.
        low = self.lowest_weight(lam)
        n1, n2 = self._simple_coords(_sub(lam, low))
        if n1.denominator != 1 or n2.denominator != 1:
            raise ValueError("highest weight is not dominant integral")
        n1, n2 = int(n1), int(n2)
        a1, a2 = self.simple
        lr = _add(lam, self.rho)
        roots = []
        for alpha in self.positive:
            p1, p2 = self._simple_coords(alpha)
            if p1.denominator != 1 or p2.denominator != 1 or p1 < 0 or p2 < 0:
                raise ValueError("positive root is not a nonnegative sum of simple roots")
            roots.append((int(p1), int(p2), self.ip(lam, alpha), self.ip(a1, alpha), self.ip(a2, alpha)))
        quad = (self.ip(lr, a1), self.ip(lr, a2), self.ip(a1, a1), self.ip(a1, a2), self.ip(a2, a2))
        scale = math.lcm(*(x.denominator for r in roots for x in r[2:]), *(x.denominator for x in quad))
        L1, L2, g11, g12, g22 = (int(x * scale) for x in quad)
        iroots = [(p1, p2, int(G * scale), int(A1 * scale), int(A2 * scale)) for p1, p2, G, A1, A2 in roots]
        mult = {(0, 0): 1}
        for depth in range(1, n1 + n2 + 1):
            for k1 in range(max(0, depth - n2), min(n1, depth) + 1):
                k2 = depth - k1
                denom = 2 * (k1 * L1 + k2 * L2) - (k1 * k1 * g11 + 2 * k1 * k2 * g12 + k2 * k2 * g22)
                if denom == 0:
                    continue
                total = 0
                for p1, p2, G, A1, A2 in iroots:
                    c1, c2 = k1 - p1, k2 - p2
                    while c1 >= 0 and c2 >= 0:
                        m = mult.get((c1, c2))
                        if m:
                            total += m * (G - c1 * A1 - c2 * A2)
                        c1 -= p1
                        c2 -= p2
                q, rem = divmod(2 * total, denom)
                if rem or q < 0:
                    raise ArithmeticError(f"Freudenthal produced multiplicity {Fraction(2 * total, denom)}")
                if q:
                    mult[(k1, k2)] = q
        return {_sub(lam, _add(_scale(a1, k1), _scale(a2, k2))): m for (k1, k2), m in mult.items()}


def _r(x: Fraction):
    return sp.Rational(x.numerator, x.denominator)


def _add(*ws) -> Weight:
    return tuple(sum(c) for c in zip(*ws))


def _sub(a, b) -> Weight:
    return tuple(x - y for x, y in zip(a, b))


def _scale(a, k) -> Weight:
    return tuple(x * k for x in a)


# --- weights of concrete representations ------------------------------------


def cartan_pair() -> tuple[LieElement, LieElement]:
    H1 = LieElement((e(6, 1, 2) - e(6, 3, 4)).lift())
    H2 = LieElement((e(6, 3, 4) - e(6, 5, 6)).lift())
    return H1, H2


def _frac(x) -> Fraction:
    x = sp.nsimplify(x)
    return Fraction(int(x.p), int(x.q))


def joint_weights(M1, M2) -> Counter:
    """Multiset of joint eigenvalue pairs (÷ i) of two commuting matrices."""
    A = sp.Matrix([[to_sympy(x) for x in row] for row in entries(M1)])
    B = sp.Matrix([[to_sympy(x) for x in row] for row in entries(M2)])
    if A * B != B * A:
        raise ValueError("Cartan matrices do not commute")
    out: Counter = Counter()
    for val, _, vecs in A.eigenvects():
        P = sp.Matrix.hstack(*vecs)
        R = (P.H * P).inv() * P.H * B * P
        for val2, alg in R.eigenvals().items():
            w = (_frac(sp.simplify(val / sp.I)), _frac(sp.simplify(val2 / sp.I)))
            out[w] += alg
    return out


def _positivity(w: Weight) -> Fraction:
    # generic functional; nonzero on all roots of both systems (checked below)
    return w[0] * 1000 + w[1] * 7


@dataclass(frozen=True, eq=False)
class BranchingData:
    g2: RootSystem
    su3: RootSystem
    g2_fund_order: tuple  # which fundamental weight is label i
    su3_fund_order: tuple


@lru_cache(maxsize=1)
def root_data() -> BranchingData:
    """G2 and SU(3) root systems, labels pinned by dim(1,0)=7, W(1,0)=Λ^(1,0)."""
    data = build_split()
    H1, H2 = cartan_pair()
    ad1, ad2 = data.ad_rep(H1), data.ad_rep(H2)
    g2_roots = [w for w in joint_weights(ad1, ad2) if any(w)]
    su3_block = [[row[6:] for row in entries(M)[6:]] for M in (ad1, ad2)]
    su3_roots = [w for w in joint_weights(dm(su3_block[0]), dm(su3_block[1])) if any(w)]
    if len(g2_roots) != 12 or len(su3_roots) != 6:
        raise ArithmeticError("unexpected root counts")

    # dual inner product from B on the Cartan pair
    BH = [[data.B(X, Y) for Y in (H1, H2)] for X in (H1, H2)]
    G = sp.Matrix([[to_sympy(x) for x in row] for row in BH]).inv()
    gram_inv = [[_frac(G[r, s]) for s in range(2)] for r in range(2)]

    def system(roots):
        if any(_positivity(a) == 0 for a in roots):
            raise ArithmeticError("positivity functional vanishes on a root")
        pos = [a for a in roots if _positivity(a) > 0]
        pos_set = set(pos)
        simple = [a for a in pos if not any(_sub(a, b) in pos_set for b in pos if b != a)]
        return simple, pos

    g_simple, g_pos = system(g2_roots)
    tmp = RootSystem(g_simple, g_pos, gram_inv)
    # order simple roots short first
    g_simple = sorted(g_simple, key=lambda a: tmp.ip(a, a))
    g2 = RootSystem(g_simple, g_pos, gram_inv)
    s_simple, s_pos = system(su3_roots)
    su3 = RootSystem(s_simple, s_pos, gram_inv)

    g_order = (0, 1) if g2.weyl_dimension(g2.fundamental[0]) == 7 else (1, 0)
    if g2.weyl_dimension(g2.fundamental[g_order[0]]) != 7:
        raise ArithmeticError("no fundamental weight gives the 7-dimensional representation")
    if g2.weyl_dimension(g2.fundamental[g_order[1]]) != 14:
        raise ArithmeticError("label (0,1) does not have dimension 14")

    # W(1,0) = Λ^(1,0), spanned by e^(2k-1) + i e^(2k)
    lam10 = lambda10_weights()
    top = max(lam10, key=_positivity)
    if top == su3.fundamental[0]:
        s_order = (0, 1)
    elif top == su3.fundamental[1]:
        s_order = (1, 0)
    else:
        raise ArithmeticError("Λ^(1,0) is not a fundamental representation")
    return BranchingData(g2, su3, g_order, s_order)


def lambda10_weights() -> list:
    """Weights of su(3) on Λ^(1,0), spanned by the eigenvectors e^(2k-1) + i e^(2k)."""
    H1, H2 = cartan_pair()
    out = []
    for k in (1, 3, 5):
        z = (e(6, k) + I * e(6, k + 1)).lift()
        w = []
        for H in (H1, H2):
            image = contract(z, H.as_form)
            c = image.coefficient((k,)) / z.coefficient((k,))
            if image != z * c:
                raise ArithmeticError("Λ^(1,0) basis vector is not a weight vector")
            w.append(im_part(c) if not c.x else None)
        if None in w:
            raise ArithmeticError("non-imaginary eigenvalue on Λ^(1,0)")
        out.append(tuple(w))
    return out


def g2_highest_weight(label) -> Weight:
    rd = root_data()
    i, j = _pair(label)
    f = rd.g2.fundamental
    a, b = rd.g2_fund_order
    return _add(_scale(f[a], i), _scale(f[b], j))


def su3_highest_weight(label) -> Weight:
    rd = root_data()
    p, q = _pair(label)
    f = rd.su3.fundamental
    a, b = rd.su3_fund_order
    return _add(_scale(f[a], p), _scale(f[b], q))


def su3_label(mu: Weight) -> RepLabelSU3:
    rd = root_data()
    d = rd.su3.dynkin(mu)
    a, b = rd.su3_fund_order
    return RepLabelSU3(d[a], d[b])


def g2_character(label) -> dict:
    return root_data().g2.character(g2_highest_weight(label))


def su3_character(label) -> dict:
    return root_data().su3.character(su3_highest_weight(label))


@dataclass(frozen=True)
class Branching:
    source: object
    parts: tuple  # ((RepLabelSU3, multiplicity), ...) sorted

    def multiplicity(self, label) -> int:
        label = label if isinstance(label, RepLabelSU3) else RepLabelSU3(*label)
        return dict(self.parts).get(label, 0)

    def dimension(self) -> int:
        return sum(m * dim_su3(l) for l, m in self.parts)

    def as_dict(self) -> dict:
        return {str(l): m for l, m in self.parts}

    def pretty(self) -> str:
        """Group dual pairs as [[W(p,q)]] with p > q."""
        seen = set()
        out = []
        counts = dict(self.parts)
        for l, m in sorted(self.parts, key=lambda t: (-dim_su3(t[0]), -t[0].p, t[0].q)):
            if l in seen:
                continue
            d = l.dual()
            if d != l and counts.get(d) == m:
                seen.update({l, d})
                hi = l if l.p > l.q else d
                body = f"[[W({hi.p},{hi.q})]]"
            else:
                seen.add(l)
                body = str(l)
            out.append(body if m == 1 else f"{m}{body}")
        return " + ".join(out)


def decompose_su3(char: dict) -> Branching:
    """Peel SU(3) irreducibles off a character by repeated highest-weight removal."""
    rd = root_data()
    remaining = Counter({w: m for w, m in char.items() if m})
    parts: Counter = Counter()
    while remaining:
        top = max(remaining, key=_positivity)
        m = remaining[top]
        label = su3_label(top)
        parts[label] += m
        for w, k in rd.su3.character(top).items():
            remaining[w] -= m * k
            if remaining[w] < 0:
                raise ArithmeticError("negative multiplicity while peeling; projection is inconsistent")
            if remaining[w] == 0:
                del remaining[w]
    return Branching(None, tuple(sorted(parts.items())))


def branch_g2_to_su3(label) -> Branching:
    label = label if isinstance(label, RepLabelG2) else RepLabelG2(*label)
    b = decompose_su3(g2_character(label))
    if b.dimension() != dim_g2(label):
        raise ArithmeticError("branching does not preserve dimension")
    return Branching(label, b.parts)


def tensor_character(*chars: dict) -> dict:
    acc = {(Fraction(0), Fraction(0)): 1}
    for ch in chars:
        nxt: Counter = Counter()
        for w1, m1 in acc.items():
            for w2, m2 in ch.items():
                nxt[_add(w1, w2)] += m1 * m2
        acc = dict(nxt)
    return acc


def sum_character(*pairs) -> dict:
    """Σ n_k · character(label_k) for (label, n) pairs of SU(3) labels."""
    out: Counter = Counter()
    for label, n in pairs:
        for w, m in su3_character(label).items():
            out[w] += n * m
    return dict(out)


def spinor_su3() -> dict:
    """S = 2W(0,0) + W(1,0) + W(0,1) as a character."""
    return sum_character(((0, 0), 2), ((1, 0), 1), ((0, 1), 1))


def g2_su3() -> dict:
    return sum_character(((1, 1), 1), ((1, 0), 1), ((0, 1), 1))


@lru_cache(maxsize=1)
def hom_target() -> Branching:
    """S ⊗ (g2)_C decomposed into SU(3) irreducibles."""
    return decompose_su3(tensor_character(spinor_su3(), g2_su3()))


def hom_multiplicity(gamma, target: Branching | None = None) -> int:
    """dim Hom(V_γ, target)_SU(3) by Frobenius reciprocity."""
    target = hom_target() if target is None else target
    b = branch_g2_to_su3(gamma)
    return sum(m * target.multiplicity(l) for l, m in b.parts)
