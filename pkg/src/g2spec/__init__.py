"""Exact algebra and numerics for deformations of a G2-instanton on a cone.

Submodules: ``exterior`` (forms on R^6, R^7), ``lie`` (the split g2 = su(3) + m),
``spinors``, ``reps`` (weights and branching), ``dirac`` (equivariant maps and
the twisted Dirac operator), ``moduli`` (critical weights and the virtual
dimension), ``ode`` (the invariant instanton equation) and ``verify``.
"""

__version__ = "0.1.0"
