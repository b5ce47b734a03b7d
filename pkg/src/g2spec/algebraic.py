"""Real quadratic surds a + b·√d with exact ordering, plus charpoly roots."""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering

import numpy as np
import sympy as sp

from .exact import im_part, re_part


def _squarefree_split(n: int) -> tuple[int, int]:
    """n = k²·d with d squarefree; returns (k, d)."""
    if n < 0:
        raise ValueError("negative radicand")
    if n == 0:
        return 0, 1
    k, d = 1, 1
    for p, e in sp.factorint(n).items():
        k *= p ** (e // 2)
        if e % 2:
            d *= p
    return k, d


@total_ordering
@dataclass(frozen=True, eq=False)
class QuadraticSurd:
    """The real number a + b√d, normalised so d is squarefree and b = 0 when d = 1."""

    a: Fraction
    b: Fraction = Fraction(0)
    d: int = 1

    def __post_init__(self):
        a, b, d = Fraction(self.a), Fraction(self.b), int(self.d)
        if d < 0:
            raise ValueError("only real surds are supported")
        k, d = _squarefree_split(d)
        b *= k
        if d == 1 or b == 0:
            a, b, d = a + b, Fraction(0), 1
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "d", d)

    @classmethod
    def sqrt(cls, q) -> "QuadraticSurd":
        """√q for a nonnegative rational q."""
        q = Fraction(q)
        if q < 0:
            raise ValueError("square root of a negative number")
        k, d = _squarefree_split(q.numerator * q.denominator)
        return cls(Fraction(0), Fraction(k, q.denominator), d)

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    def sign(self) -> int:
        a, b = self.a, self.b
        sa = (a > 0) - (a < 0)
        sb = (b > 0) - (b < 0)
        if sb == 0:
            return sa
        if sa == 0 or sa == sb:
            return sb
        # opposite signs: compare a² with b²d
        lhs, rhs = a * a, b * b * self.d
        if lhs == rhs:
            return 0
        return sa if lhs > rhs else sb

    def _coerce(self, other) -> "QuadraticSurd":
        if isinstance(other, QuadraticSurd):
            return other
        if isinstance(other, (int, Fraction)):
            return QuadraticSurd(Fraction(other))
        if isinstance(other, float):
            return QuadraticSurd(Fraction(repr(other)))
        raise TypeError(f"cannot compare with {type(other).__name__}")

    def __add__(self, other):
        o = self._coerce(other)
        if o.b and self.b and o.d != self.d:
            raise ValueError("sum of surds with different radicands is not quadratic")
        d = self.d if self.b else o.d
        return QuadraticSurd(self.a + o.a, self.b + o.b, d)

    __radd__ = __add__

    def __neg__(self):
        return QuadraticSurd(-self.a, -self.b, self.d)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o.b and self.b and o.d != self.d:
            raise ValueError("product of surds with different radicands")
        d = self.d if self.b else o.d
        return QuadraticSurd(self.a * o.a + self.b * o.b * d, self.a * o.b + self.b * o.a, d)

    __rmul__ = __mul__

    def __eq__(self, other):
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        if o.b and self.b and o.d != self.d:
            # 1, √d1, √d2 are linearly independent over Q
            return False
        return (self - o).sign() == 0

    def __lt__(self, other):
        o = self._coerce(other)
        if o.b and self.b and o.d != self.d:
            return _exact_lt(self, o)
        return (self - o).sign() < 0

    def __hash__(self):
        return hash((self.a, self.b, self.d))

    def __float__(self):
        return float(self.a) + float(self.b) * math.sqrt(self.d)

    def conjugate_root(self) -> "QuadraticSurd":
        return QuadraticSurd(self.a, -self.b, self.d)

    def minimal_polynomial(self) -> tuple[Fraction, ...]:
        """Monic coefficients, highest degree first."""
        if self.is_rational:
            return (Fraction(1), -self.a)
        return (Fraction(1), -2 * self.a, self.a * self.a - self.b * self.b * self.d)

    def to_sympy(self):
        return sp.Rational(self.a.numerator, self.a.denominator) + sp.Rational(
            self.b.numerator, self.b.denominator
        ) * sp.sqrt(self.d)

    def __str__(self):
        a = _fmt(self.a)
        if self.is_rational:
            return a
        bmag = abs(self.b)
        sign = "-" if self.b < 0 else "+"
        body = f"sqrt({self.d})" if bmag == 1 else f"{_fmt(bmag)}*sqrt({self.d})"
        if self.a == 0:
            return ("-" if self.b < 0 else "") + body
        return f"{a} {sign} {body}"

    def __repr__(self):
        return f"QuadraticSurd({self})"

    @classmethod
    def parse(cls, text: str) -> "QuadraticSurd":
        text = re.sub(r"√\s*(\d+)", r"sqrt(\1)", text).replace("√", "sqrt")
        expr = sp.nsimplify(sp.sympify(text))
        return cls.from_sympy(expr)

    @classmethod
    def from_sympy(cls, expr) -> "QuadraticSurd":
        expr = sp.nsimplify(sp.expand(expr))
        a = Fraction(0)
        b = Fraction(0)
        d = 1
        for term in sp.Add.make_args(expr):
            coeff, rest = term.as_coeff_Mul()
            if rest == 1:
                a += Fraction(int(coeff.p), int(coeff.q))
                continue
            if not (rest.is_Pow and rest.exp == sp.Rational(1, 2) and rest.base.is_Integer):
                raise ValueError(f"{expr} is not a quadratic surd")
            if d != 1 and int(rest.base) != d:
                raise ValueError("mixed radicands")
            d = int(rest.base)
            b += Fraction(int(coeff.p), int(coeff.q))
        return cls(a, b, d)


def _exact_lt(x: QuadraticSurd, y: QuadraticSurd) -> bool:
    diff = sp.nsimplify(x.to_sympy() - y.to_sympy())
    return bool(diff < 0)


def _fmt(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


@dataclass(frozen=True)
class NumericRoot:
    """Fallback for roots of irreducible factors of degree > 2."""

    value: float
    error: float

    def __float__(self):
        return self.value

    def __str__(self):
        return f"{self.value:.12g}"


def roots_of_charpoly(coeffs) -> list[tuple[object, int]]:
    """Roots with multiplicity of a polynomial with Gaussian-rational coefficients.

    Linear and quadratic rational factors give exact roots. Higher-degree
    irreducible factors fall back to numerical roots with an error bound.
    Raises ``ArithmeticError`` if a coefficient is non-real or a root is
    not real, since every operator here is self-adjoint.
    """
    if any(im_part(c) for c in coeffs):
        raise ArithmeticError("characteristic polynomial has non-real coefficients")
    x = sp.Symbol("x")
    poly = sp.Poly([sp.Rational(re_part(c).numerator, re_part(c).denominator) for c in coeffs], x)
    _, factors = sp.factor_list(poly)
    out: dict = {}
    for fac, mult in factors:
        deg = fac.degree()
        if deg <= 2:
            for r in sp.roots(fac, x).keys():
                if not r.is_real:
                    raise ArithmeticError(f"non-real eigenvalue {r}")
                q = QuadraticSurd.from_sympy(r)
                out[q] = out.get(q, 0) + mult
        else:
            num = np.roots([float(c) for c in fac.all_coeffs()])
            for r in num:
                if abs(r.imag) > 1e-9:
                    raise ArithmeticError(f"non-real eigenvalue {r}")
                root = NumericRoot(float(r.real), 1e-9)
                out[root] = out.get(root, 0) + mult
    return sorted(out.items(), key=lambda t: float(t[0]))
