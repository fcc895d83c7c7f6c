"""Generalized trigonometric functions with certified error estimates.

The forward functions (``arcsin_p``, ``arctan_p``, ...) are evaluated by a
Gauss hypergeometric series or by adaptive quadrature of their defining
integrals; both paths return an :class:`Eval` carrying an error bound.
The inverses, the constants ``pi_p``, ``b_p`` and ``pi_{p,q}``, and the
p-Laplacian eigenpairs build on them, and :mod:`gentrig.analysis` checks
the Turan-type and convexity properties of the families on grids.
"""

from .core import (
    PQ,
    AccuracyError,
    ConfigurationError,
    ConsistencyError,
    ConvergenceError,
    DivergenceError,
    DomainError,
    Eval,
    EvalOptions,
    EvalPath,
    FamilyId,
    GenTrigError,
    IllConditionedError,
)
from .inverse import (
    cos_p,
    eigenfunction,
    eigenvalue,
    invert,
    ode_residual,
    sin_p,
    sinh_p,
    tan_p,
    tanh_p,
)
from .ptrig import (
    a_p,
    arccos_p,
    arcsin_p,
    arcsin_pq,
    arcsinh_p,
    arcsinh_pq,
    arctan_p,
    arctanh_p,
    b_p,
    evaluate,
    pi_p,
    pi_pq,
)

__version__ = "0.1.0"

__all__ = [
    "PQ", "Eval", "EvalOptions", "EvalPath", "FamilyId",
    "GenTrigError", "DomainError", "DivergenceError", "ConvergenceError", "AccuracyError",
    "IllConditionedError", "ConsistencyError", "ConfigurationError",
    "arcsin_p", "arccos_p", "arctan_p", "arcsinh_p", "arctanh_p", "arcsin_pq", "arcsinh_pq",
    "pi_p", "a_p", "b_p", "pi_pq", "evaluate",
    "sin_p", "cos_p", "tan_p", "sinh_p", "tanh_p", "invert",
    "eigenvalue", "eigenfunction", "ode_residual",
    "__version__",
]
