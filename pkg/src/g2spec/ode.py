"""The G2-invariant instanton equation r f′ = 2(f̄² − f) and its superpotential.

Identifying x·Id + y·J with f = x + iy, the equation is the gradient flow
of W(z) = ⅓(z³ + z̄³) − |z|² in s = log r: df/ds = 2 ∂W/∂z̄.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np
import sympy as sp
from scipy.integrate import solve_ivp

ZETA = cmath.exp(2j * math.pi / 3)
CUBE_ROOTS = (1 + 0j, ZETA, ZETA**2)


class IntegrationError(RuntimeError):
    """The adaptive integrator gave up (typically step-size underflow)."""


@dataclass(frozen=True)
class FlowState:
    r: float
    f: complex

    def __post_init__(self):
        if not self.r > 0:
            raise ValueError("r must be positive")


def superpotential(z: complex) -> float:
    z = complex(z)
    return (2.0 / 3.0) * (z**3).real - abs(z) ** 2


def grad(z: complex) -> complex:
    """∂W/∂z̄ = z̄² − z."""
    z = complex(z)
    return z.conjugate() ** 2 - z


def rhs(f: complex) -> complex:
    """df/ds with s = log r."""
    return 2 * grad(f)


def critical_points_exact() -> list:
    """Solutions of z̄² = z, from the real system in z = x + iy."""
    x, y = sp.symbols("x y", real=True)
    z = x + sp.I * y
    eq = sp.expand(sp.conjugate(z) ** 2 - z)
    sols = sp.solve([sp.re(eq), sp.im(eq)], [x, y], dict=True)
    pts = [sp.nsimplify(s[x] + sp.I * s[y]) for s in sols]
    return sorted(pts, key=lambda p: (float(sp.re(p)), float(sp.im(p))))


def critical_points() -> list[complex]:
    return [complex(p) for p in critical_points_exact()]


def nk_invariant_solutions() -> list[complex]:
    """Fixed points: 0 and the cube roots of unity."""
    return critical_points()


def closed_form(C: float, r):
    """f(r) = 1/(C r² + 1); extends smoothly over the origin."""
    if not C > 0:
        raise ValueError("C must be positive")
    r = np.asarray(r, dtype=float)
    if np.any(r <= 0):
        raise ValueError("r must be positive")
    return 1.0 / (C * r**2 + 1.0)


def closed_form_residual():
    """r f′ − 2(f̄² − f) for the closed form, simplified symbolically."""
    C, r = sp.symbols("C r", positive=True)
    f = 1 / (C * r**2 + 1)
    return sp.simplify(r * sp.diff(f, r) - 2 * (sp.conjugate(f) ** 2 - f))


def z3_residual():
    """ζ·(f̄² − f) − ((ζf)‾² − ζf) for ζ = e^{2πi/3}, as a symbolic expression."""
    a, b = sp.symbols("a b", real=True)
    f = a + sp.I * b
    zeta = sp.exp(2 * sp.pi * sp.I / 3)
    g = zeta * f
    expr = zeta * (sp.conjugate(f) ** 2 - f) - (sp.conjugate(g) ** 2 - g)
    return sp.simplify(sp.expand_complex(expr))


@dataclass(frozen=True)
class Trajectory:
    r: np.ndarray
    f: np.ndarray  # complex

    @property
    def W(self) -> np.ndarray:
        z = self.f
        return (2.0 / 3.0) * (z**3).real - np.abs(z) ** 2

    def rows(self):
        for r, f, w in zip(self.r, self.f, self.W):
            yield float(r), float(f.real), float(f.imag), float(w)


def _anchor(f0: complex) -> complex:
    """Nearest fixed point to f0, or 0 when f0 is not close to one."""
    c = min(CUBE_ROOTS, key=lambda z: abs(z - f0))
    return c if abs(c - f0) < 0.5 else 0j


def integrate_from(f0: complex, r0: float, r1: float, tol: float = 1e-9, samples: int = 401) -> Trajectory:
    """Integrate df/ds = 2(f̄² − f) in s = log r with an embedded 8(5,3) pair.

    The unknown is the offset g = f − c from the nearest fixed point c. Near
    the origin f sits exponentially close to c, and a tolerance relative to
    |f| would swamp the O(r²) signal that fixes the solution.
    """
    if not (0 < r0 < r1):
        raise ValueError("need 0 < r0 < r1")
    if not tol > 0:
        raise ValueError("tol must be positive")
    f0 = complex(f0)
    c = _anchor(f0)
    g0 = f0 - c

    def field(_s, y):
        d = rhs(c + complex(y[0], y[1]))
        return [d.real, d.imag]

    s0, s1 = math.log(r0), math.log(r1)
    s_eval = np.linspace(s0, s1, samples)
    atol = max(abs(g0), 1e-300) * tol * 1e-3
    sol = solve_ivp(field, (s0, s1), [g0.real, g0.imag], method="DOP853", t_eval=s_eval, rtol=tol, atol=atol)
    if not sol.success:
        raise IntegrationError(sol.message)
    return Trajectory(np.exp(sol.t), c + sol.y[0] + 1j * sol.y[1])


def integrate(C: float, r0: float, r1: float, tol: float = 1e-9, samples: int = 401) -> Trajectory:
    """Numerical trajectory started from the closed form at r0."""
    return integrate_from(complex(closed_form(C, r0)), r0, r1, tol, samples)


def max_deviation(traj: Trajectory, C: float) -> float:
    return float(np.max(np.abs(traj.f - closed_form(C, traj.r))))


def shoot(C: float, r0: float, r1: float, tol: float = 1e-9, samples: int = 401) -> Trajectory:
    """Start from the regular series 1 − C r0² + C² r0⁴ instead of the exact value."""
    f0 = 1 - C * r0**2 + (C * r0**2) ** 2
    return integrate_from(complex(f0), r0, r1, tol, samples)


def rotate(traj: Trajectory, zeta: complex) -> Trajectory:
    return Trajectory(traj.r, zeta * traj.f)


def z3_numeric_residual(C: float, r0: float, r1: float, tol: float = 1e-9) -> float:
    """max |ζ·f − f_ζ| over both nontrivial ζ, f_ζ integrated from ζ·f(r0)."""
    base = integrate(C, r0, r1, tol)
    worst = 0.0
    for zeta in CUBE_ROOTS[1:]:
        moved = integrate_from(zeta * complex(closed_form(C, r0)), r0, r1, tol)
        worst = max(worst, float(np.max(np.abs(moved.f - zeta * base.f))))
    return worst


@dataclass(frozen=True)
class BoundaryReport:
    ratios: dict  # condition -> |·|/r at the sampled small radii
    slopes: dict  # fitted exponent of the ratio in r
    origin_limit: complex
    passed: bool


_CONDITIONS = ("fbar2_minus_f", "fbarf_minus_1", "f_prime")


def boundary_diagnostics(r, f, window: int = 8) -> BoundaryReport:
    """Check |f̄² − f|, |f̄f − 1| and |f′| are O(r) as r → 0.

    Each quantity is divided by r on the ``window`` smallest radii and a
    power law is fitted in log r; a ratio that blows up (exponent below
    −½) fails, a bounded one passes.
    """
    r = np.asarray(r, dtype=float)
    f = np.asarray(f, dtype=complex)
    order = np.argsort(r)
    r, f = r[order], f[order]
    if np.allclose(f, f[0]):
        fp = np.zeros_like(r)
    else:
        fp = np.abs(np.gradient(f, r, edge_order=2))
    q = {
        "fbar2_minus_f": np.abs(np.conj(f) ** 2 - f),
        "fbarf_minus_1": np.abs(np.conj(f) * f - 1),
        "f_prime": fp,
    }
    ratios, slopes = {}, {}
    ok = True
    for name in _CONDITIONS:
        vals = q[name][:window] / r[:window]
        ratios[name] = vals
        if np.all(vals < 1e-300):
            slopes[name] = math.inf
            continue
        y = np.log(np.maximum(vals, 1e-300))
        slope = float(np.polyfit(np.log(r[:window]), y, 1)[0])
        slopes[name] = slope
        if slope < -0.5:
            ok = False
    limit = complex(f[0])
    near = min(CUBE_ROOTS, key=lambda z: abs(z - limit))
    return BoundaryReport(ratios, slopes, near, ok and abs(near - limit) < 1e-3)


def is_monotone(traj: Trajectory, tol: float = 1e-10) -> bool:
    """W(f) never decreases along the flow in log r: dW/ds = 4|∂W/∂z̄|²."""
    return bool(np.all(np.diff(traj.W) >= -tol))


def superpotential_grid(n: int, extent: float = 1.5):
    """(x, y, W) on an n × n grid of [−extent, extent]²."""
    if n < 2:
        raise ValueError("grid needs n >= 2")
    xs = np.linspace(-extent, extent, n)
    for x in xs:
        for y in xs:
            yield float(x), float(y), superpotential(complex(x, y))
