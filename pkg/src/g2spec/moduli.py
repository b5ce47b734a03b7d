"""Critical weights, index jumps and the virtual dimension of the moduli space.

The link spectrum enters only through the eigenvalues of D⁰ in (−2, 2),
i.e. the certified window [0, 2) and its mirror image. A rate μ is
critical for the deformation operator when μ + 2 is an eigenvalue.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .algebraic import QuadraticSurd
from .dirac import UncertifiedInterval, compute_all, is_symmetric_spectrum, spectrum_in_interval
from .exact import rational_from_any


class CriticalWeightError(ValueError):
    """The requested rate is itself a critical weight."""


def as_weight(x) -> QuadraticSurd:
    """Exact weight from an int, Fraction, float (via its repr) or a surd."""
    if isinstance(x, QuadraticSurd):
        return x
    return QuadraticSurd(rational_from_any(x))


def critical_weights(spec, shift: int) -> list:
    """{λ − shift : λ ∈ spec}, sorted; ``spec`` holds (eigenvalue, multiplicity) pairs."""
    if shift not in (2, 3):
        raise ValueError("shift is 2 (deformation rates) or 3 (cone critical weights)")
    return sorted({as_weight(v) - shift for v, _ in spec}, key=float)


@dataclass(frozen=True)
class WeightLedger:
    """Spectrum of D⁰ on (−2, 2) with total multiplicities, and what follows from it."""

    spectrum: tuple  # ((QuadraticSurd, multiplicity), ...)
    lo: QuadraticSurd = QuadraticSurd(-2)
    hi: QuadraticSurd = QuadraticSurd(2)

    def multiplicity(self, lam) -> int:
        lam = as_weight(lam)
        if not (self.lo < lam and lam < self.hi):
            raise UncertifiedInterval(f"eigenvalue {lam} lies outside the certified window ({self.lo}, {self.hi})")
        return dict(self.spectrum).get(lam, 0)

    @property
    def W(self) -> list:
        return critical_weights(self.spectrum, 2)

    @property
    def W_crit(self) -> list:
        return critical_weights(self.spectrum, 3)

    def k(self, nu) -> int:
        """Jump of the index at ν: the multiplicity of ν + 2 (log terms do not occur)."""
        return self.multiplicity(as_weight(nu) + 2)

    def _check_rate(self, mu: QuadraticSurd) -> None:
        if not (self.lo - 2 < mu and mu < self.hi - 2):
            raise UncertifiedInterval(f"rate {mu} is outside the certified range ({self.lo - 2}, {self.hi - 2})")
        if self.multiplicity(mu + 2):
            raise CriticalWeightError(f"{mu} is a critical weight")

    def index_change(self, mu, mu_prime) -> int:
        """ind_{μ′} − ind_μ = Σ k(ν) over critical ν strictly between them."""
        a, b = as_weight(mu), as_weight(mu_prime)
        if b < a:
            raise ValueError("need mu <= mu_prime")
        self._check_rate(a)
        self._check_rate(b)
        return sum(self.k(nu) for nu in self.W if a < nu and nu < b)

    def virtual_dim(self, mu) -> int:
        """½ dim ker D⁰ at the self-dual rate −2, plus the jumps crossed up to μ."""
        m = as_weight(mu)
        if not (QuadraticSurd(-2) < m and m < QuadraticSurd(0)):
            raise ValueError(f"rate {m} is outside (-2, 0)")
        self._check_rate(m)
        kernel = self.k(-2)
        if kernel % 2:
            raise ArithmeticError("kernel dimension at the self-dual rate is odd")
        return kernel // 2 + sum(self.k(nu) for nu in self.W if QuadraticSurd(-2) < nu and nu < m)

    def is_symmetric(self) -> bool:
        """W symmetric about −2 with matching jumps."""
        ws = set(self.W)
        return all((-4 - w) in ws and self.k(w) == self.k(-4 - w) for w in ws)


@lru_cache(maxsize=1)
def certified_ledger() -> WeightLedger:
    """Ledger over (−2, 2), mirroring the certified [0, 2) part by spectral symmetry."""
    for res in compute_all():
        if not is_symmetric_spectrum(list(res.spectrum)):
            raise ArithmeticError(f"{res.gamma}: spectrum is not symmetric")
    half = spectrum_in_interval(0, 2)
    full = dict(half)
    for v, m in half:
        if v:
            full[-v] = m
    return WeightLedger(tuple(sorted(full.items(), key=lambda t: float(t[0]))))


def k_of(nu) -> int:
    return certified_ledger().k(nu)


def index_change(mu, mu_prime) -> int:
    return certified_ledger().index_change(mu, mu_prime)


def virtual_dim(mu) -> int:
    return certified_ledger().virtual_dim(mu)


def laplacian_critical_rates(e) -> tuple:
    """Roots of λ(λ + 5) = e, as exact surds (λ−, λ+)."""
    e = rational_from_any(e)
    if e < 0:
        raise ValueError("the eigenvalue e must be nonnegative")
    root = QuadraticSurd.sqrt(25 + 4 * e)
    half = Fraction(1, 2)
    return ((root * -1 - 5) * half, (root - 5) * half)


def laplacian_gap_holds(e) -> bool:
    """No root of λ(λ + 5) = e lies in (−5, 0)."""
    lo, hi = laplacian_critical_rates(e)
    inside = QuadraticSurd(-5)
    return not (inside < lo and lo < 0) and not (inside < hi and hi < 0)
