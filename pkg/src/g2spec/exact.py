"""Exact Gaussian-rational scalars and small sparse-matrix helpers.

Everything downstream is built on sympy's ``QQ_I`` domain. The helpers here
hide its quirks: ``QQ_I(0) == 0`` is False, so zero tests use ``bool``, and
elements have no ``conjugate`` method.
"""

from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational

import numpy as np
from sympy import QQ, QQ_I, nsimplify, sympify
from sympy.polys.matrices import DomainMatrix

ZERO = QQ_I(0, 0)
ONE = QQ_I(1, 0)
I = QQ_I(0, 1)


def gq(x) -> "QQ_I.dtype":
    """Coerce ``x`` into a Gaussian rational.

    Accepts ints, ``Fraction``, complex numbers with integral parts, strings
    like ``"3/2"`` or ``"-i/4"``, sympy numbers and existing ``QQ_I``
    elements. Floats are rejected unless they are integral, to keep silent
    rounding out of exact code paths.
    """
    if isinstance(x, QQ_I.dtype):
        return x
    if isinstance(x, bool):
        return QQ_I(int(x), 0)
    if isinstance(x, int):
        return QQ_I(x, 0)
    if isinstance(x, Fraction):
        return QQ_I(QQ(x.numerator, x.denominator), 0)
    if isinstance(x, Rational):
        return QQ_I(QQ(int(x.numerator), int(x.denominator)), 0)
    if isinstance(x, float):
        if x.is_integer():
            return QQ_I(int(x), 0)
        raise TypeError(f"refusing to coerce non-integral float {x!r}")
    if isinstance(x, complex):
        return gq(x.real) + gq(x.imag) * I
    if isinstance(x, str):
        return parse_scalar(x)
    return QQ_I.from_sympy(sympify(x))


def conj(x) -> "QQ_I.dtype":
    x = gq(x)
    return QQ_I(x.x, -x.y)


def re_part(x) -> Fraction:
    return Fraction(int(x.x.numerator), int(x.x.denominator))


def im_part(x) -> Fraction:
    return Fraction(int(x.y.numerator), int(x.y.denominator))


def to_complex(x) -> complex:
    return complex(float(re_part(x)), float(im_part(x)))


def _frac_str(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def format_scalar(x) -> str:
    """Canonical text for a Gaussian rational: ``3``, ``-i/4``, ``1/2+3*i/2``."""
    x = gq(x)
    a, b = re_part(x), im_part(x)
    if b == 0:
        return _frac_str(a)

    def imag(q: Fraction) -> str:
        mag = abs(q)
        if mag == 1:
            body = "i"
        elif mag.denominator == 1:
            body = f"{mag.numerator}*i"
        elif mag.numerator == 1:
            body = f"i/{mag.denominator}"
        else:
            body = f"{mag.numerator}*i/{mag.denominator}"
        return body, q < 0

    body, neg = imag(b)
    if a == 0:
        return ("-" if neg else "") + body
    return _frac_str(a) + ("-" if neg else "+") + body


_TERM = re.compile(r"([+-]?)([^+-]+)")


def parse_scalar(text: str) -> "QQ_I.dtype":
    """Inverse of :func:`format_scalar`."""
    s = text.replace(" ", "").replace("I", "i").replace("j", "i")
    if not s:
        raise ValueError("empty scalar")
    total = ZERO
    for sign, body in _TERM.findall(s):
        factor = -1 if sign == "-" else 1
        if "i" in body:
            rest = body.replace("*", "").replace("i", "", 1)
            if rest == "":
                coeff = Fraction(1)
            elif rest.startswith("/"):
                coeff = Fraction(1, int(rest[1:]))
            else:
                coeff = Fraction(rest)
            total += gq(factor * coeff) * I
        else:
            total += gq(factor * Fraction(body))
    return total


def scalar_from_pair(pair) -> "QQ_I.dtype":
    re_, im_ = pair
    return gq(Fraction(re_)) + gq(Fraction(im_)) * I


def scalar_to_pair(x) -> list[str]:
    x = gq(x)
    return [_frac_str(re_part(x)), _frac_str(im_part(x))]


def to_sympy(x):
    return QQ_I.to_sympy(gq(x))


def rational_from_any(x) -> Fraction:
    """Exact rational from an int, Fraction, decimal string or float.

    Floats are converted through their shortest decimal representation, so
    ``-1.5`` becomes ``-3/2`` rather than a binary approximation.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, float):
        return Fraction(repr(x))
    if isinstance(x, str):
        return Fraction(x.strip())
    if isinstance(x, Rational):
        return Fraction(int(x.numerator), int(x.denominator))
    value = nsimplify(x, rational=True)
    return Fraction(int(value.p), int(value.q))


# --- matrices -------------------------------------------------------------


def dm(rows) -> DomainMatrix:
    """Dense DomainMatrix over QQ_I from nested lists of coercible scalars."""
    data = [[gq(v) for v in row] for row in rows]
    n = len(data)
    m = len(data[0]) if data else 0
    return DomainMatrix(data, (n, m), QQ_I)


def zeros(n: int, m: int) -> DomainMatrix:
    return DomainMatrix.zeros((n, m), QQ_I)


def eye(n: int) -> DomainMatrix:
    return DomainMatrix.eye(n, QQ_I)


def sparse_from_dict(entries: dict, shape) -> DomainMatrix:
    """DomainMatrix in sparse format from ``{(i, j): value}``."""
    rows: dict = {}
    for (i, j), v in entries.items():
        v = gq(v)
        if v:
            rows.setdefault(i, {})[j] = v
    return DomainMatrix(rows, shape, QQ_I)


def entries(M: DomainMatrix) -> list[list]:
    return M.to_dense().to_list()


def is_zero(M: DomainMatrix) -> bool:
    return M.is_zero_matrix


def kron(A: DomainMatrix, B: DomainMatrix) -> DomainMatrix:
    """Kronecker product preserving sparsity."""
    a = A.to_sparse().rep
    b = B.to_sparse().rep
    n1, m1 = A.shape
    n2, m2 = B.shape
    out: dict = {}
    for i, row in a.items():
        for j, x in row.items():
            for k, brow in b.items():
                target = out.setdefault(i * n2 + k, {})
                for l, y in brow.items():
                    target[j * m2 + l] = x * y
    return DomainMatrix(out, (n1 * n2, m1 * m2), QQ_I)


def dagger(M: DomainMatrix) -> DomainMatrix:
    rep = M.to_sparse().rep
    n, m = M.shape
    out: dict = {}
    for i, row in rep.items():
        for j, v in row.items():
            out.setdefault(j, {})[i] = conj(v)
    return DomainMatrix(out, (m, n), QQ_I)


def trace(M: DomainMatrix):
    rep = M.to_sparse().rep
    total = ZERO
    for i, row in rep.items():
        if i in row:
            total += row[i]
    return total


def flatten(M: DomainMatrix) -> list:
    """Row-major list of entries; used to treat maps as vectors."""
    return [v for row in entries(M) for v in row]


def solve_in_span(vectors: list[list], target: list):
    """Exact coefficients ``c`` with ``sum c_k vectors[k] == target``.

    Raises ``ValueError`` if ``target`` is not in the span or the vectors are
    dependent.
    """
    k = len(vectors)
    n = len(target)
    cols = {}
    for idx, vec in enumerate(vectors):
        for r, v in enumerate(vec):
            if v:
                cols.setdefault(r, {})[idx] = v
    for r, v in enumerate(target):
        v = gq(v)
        if v:
            cols.setdefault(r, {})[k] = v
    aug = DomainMatrix(cols, (n, k + 1), QQ_I).to_field()
    red, pivots = aug.rref()
    if k in pivots:
        raise ValueError("target is not in the span")
    if len(pivots) != k:
        raise ValueError("spanning vectors are linearly dependent")
    red = red.to_sparse().rep
    coeffs = [ZERO] * k
    for row_idx, p in enumerate(pivots):
        coeffs[p] = red.get(row_idx, {}).get(k, ZERO)
    return coeffs


def to_numpy(M: DomainMatrix) -> np.ndarray:
    return np.array([[to_complex(v) for v in row] for row in entries(M)], dtype=complex)


def equal(A: DomainMatrix, B: DomainMatrix) -> bool:
    if A.shape != B.shape:
        return False
    return all(not (a - b) for a, b in zip(flatten(A), flatten(B)))
