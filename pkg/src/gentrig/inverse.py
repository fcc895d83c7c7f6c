"""Inverse functions sin_p, cos_p, tan_p, sinh_p, tanh_p and p-Laplacian eigenpairs.

The inverses are obtained by bracketing root finding on the (strictly
increasing) forward functions of :mod:`gentrig.ptrig`.  Brackets come from
the kernel bounds: the arcsin_p and arctanh_p kernels are >= 1, so their
inverses satisfy ``x <= y``; the arctan_p and arcsinh_p kernels are <= 1,
so theirs satisfy ``x >= y``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from scipy.optimize import brentq

from . import ptrig
from .core import (
    DEFAULT_OPTIONS,
    PQ,
    ConvergenceError,
    DomainError,
    Eval,
    EvalOptions,
    EvalPath,
    FamilyId,
    IllConditionedError,
)

__all__ = [
    "InverseDomain",
    "EigenPair",
    "inverse_domain",
    "invert",
    "sin_p",
    "cos_p",
    "tan_p",
    "sinh_p",
    "tanh_p",
    "sin_p_extended",
    "eigenvalue",
    "eigenfunction",
    "eigenfunction_derivative",
    "ode_residual",
]

EPS = 2.220446049250313e-16
RESIDUAL_TOL = 1e-12
MAX_ITER = 200
_BELOW_ONE = math.nextafter(1.0, 0.0)


@dataclass(frozen=True)
class InverseDomain:
    """Invertible range ``[0, y_max]`` of a forward function on its x-domain."""

    family: FamilyId
    p: float
    y_max: float


@dataclass(frozen=True)
class EigenPair:
    """Dirichlet eigenpair of the 1-D p-Laplacian on [0, 1].

    ``lam`` is the eigenvalue ``(p - 1) (n pi_p)^p`` and ``half_period``
    is ``pi_p``.
    """

    n: int
    p: float
    lam: float
    half_period: float


def inverse_domain(family: FamilyId, p: float) -> InverseDomain:
    """Range of the forward function whose inverse is ``family``.

    For ``p <= 1`` the arcsin_p integral diverges at 1, so sin_p and cos_p
    are defined on the whole half-line.
    """
    family = FamilyId.parse(family)
    if not (math.isfinite(p) and p > 0):
        raise DomainError(f"p must be a finite positive real, got {p!r}")
    if family in (FamilyId.SinP, FamilyId.CosP):
        y_max = ptrig.a_p(p).value if p > 1 else math.inf
    elif family is FamilyId.TanP:
        y_max = ptrig.b_p(p).value
    elif family is FamilyId.SinhP:
        y_max = ptrig.arcsinh_p(1.0, p).value
    elif family is FamilyId.TanhP:
        y_max = math.inf
    else:
        raise DomainError(f"{family} is not an inverse-function family")
    return InverseDomain(family, p, y_max)


def _forward_setup(family: FamilyId, p: float, opts: EvalOptions):
    """Forward function, its derivative, and the bracket rule for ``family``."""
    if family in (FamilyId.SinP, FamilyId.CosP):
        fwd = lambda x: ptrig.arcsin_p(x, p, opts=opts)
        slope = lambda x: (1.0 - x**p) ** (-1.0 / p) if x < 1 else math.inf
        top = 1.0 if p > 1 else _BELOW_ONE
        return fwd, slope, lambda y: (0.0, min(y, top))
    if family is FamilyId.TanP:
        fwd = lambda x: ptrig.arctan_p(x, p, opts=opts)
        return fwd, lambda x: 1.0 / (1.0 + x**p), lambda y: (min(y, 1.0), 1.0)
    if family is FamilyId.SinhP:
        fwd = lambda x: ptrig.arcsinh_p(x, p, opts=opts)
        return fwd, lambda x: (1.0 + x**p) ** (-1.0 / p), lambda y: (min(y, 1.0), 1.0)
    if family is FamilyId.TanhP:
        fwd = lambda x: ptrig.arctanh_p(x, p, opts=opts)
        slope = lambda x: 1.0 / (1.0 - x**p)
        return fwd, slope, lambda y: (0.0, min(y, _BELOW_ONE))
    raise DomainError(f"{family} is not an inverse-function family")


def _solve(family: FamilyId, y: float, p: float, opts: EvalOptions) -> Eval:
    dom = inverse_domain(family, p)
    if not (0.0 <= y <= dom.y_max) or math.isnan(y):
        raise DomainError(f"{family} needs y in [0, {dom.y_max}], got {y!r}")
    if y == 0.0:
        return Eval(0.0, 0.0, EvalPath.CLOSED_FORM)
    if y == dom.y_max:
        return Eval(1.0, 0.0, EvalPath.CLOSED_FORM)
    fwd, slope, bracket = _forward_setup(family, p, opts)
    lo, hi = bracket(y)
    if fwd(hi).value <= y:
        if hi == _BELOW_ONE:
            # past double resolution of the asymptote x -> 1
            return Eval(hi, 1.0 - hi, EvalPath.ROOT_FIND)
        # y within rounding of the finite right end
        x = hi
    elif fwd(lo).value >= y:
        x = lo
    else:
        try:
            x, info = brentq(lambda t: fwd(t).value - y, lo, hi, xtol=1e-300,
                             rtol=4.5 * EPS, maxiter=MAX_ITER, full_output=True,
                             disp=False)
        except (RuntimeError, ValueError) as exc:  # pragma: no cover - defensive
            raise ConvergenceError(f"root finding for {family}({y}) failed: {exc}") from exc
        if not info.converged:
            raise ConvergenceError(f"root finding for {family}({y}) did not converge", x)
    fx = fwd(x)
    residual = abs(fx.value - y)
    k = slope(x)
    # the residual target is relaxed only by the resolution of x itself
    allowed = RESIDUAL_TOL * max(1.0, y) + fx.err + 4 * EPS * max(x, EPS) * k
    if residual > allowed:
        raise ConvergenceError(
            f"{family}({y}, p={p}): residual {residual:.3g} exceeds {allowed:.3g}", x
        )
    err = (residual + fx.err) / k + 2 * EPS * x if math.isfinite(k) else 2 * EPS
    return Eval(x, err, EvalPath.ROOT_FIND)


def invert(family: FamilyId, y: float, p: float, opts: EvalOptions = DEFAULT_OPTIONS) -> Eval:
    """Evaluate an inverse family at ``y`` with an error estimate."""
    family = FamilyId.parse(family)
    if family is FamilyId.CosP:
        s = _solve(FamilyId.SinP, y, p, opts)
        base = 1.0 - s.value**p
        value = max(base, 0.0) ** (1.0 / p)
        if value > 0:
            # d/ds (1 - s^p)^(1/p) = -s^(p-1) (1 - s^p)^(1/p - 1)
            err = s.err * s.value ** (p - 1) * value / base + 2 * EPS * value
        else:
            err = s.err ** (1.0 / p) if s.err > 0 else 0.0
        return Eval(value, err, s.path)
    return _solve(family, y, p, opts)


def sin_p(y: float, p: float, opts: EvalOptions = DEFAULT_OPTIONS) -> float:
    """Inverse of arcsin_p on ``[0, a_p]`` (on ``[0, inf)`` when ``p <= 1``)."""
    return invert(FamilyId.SinP, y, p, opts).value


def cos_p(y: float, p: float, opts: EvalOptions = DEFAULT_OPTIONS) -> float:
    """``(1 - sin_p(y)^p)^(1/p)``; the inverse of arccos_p."""
    return invert(FamilyId.CosP, y, p, opts).value


def tan_p(y: float, p: float, opts: EvalOptions = DEFAULT_OPTIONS) -> float:
    """Inverse of arctan_p on ``[0, b_p]``."""
    return invert(FamilyId.TanP, y, p, opts).value


def sinh_p(y: float, p: float, opts: EvalOptions = DEFAULT_OPTIONS) -> float:
    """Inverse of arcsinh_p on ``[0, arcsinh_p(1)]``."""
    return invert(FamilyId.SinhP, y, p, opts).value


def tanh_p(y: float, p: float, opts: EvalOptions = DEFAULT_OPTIONS) -> float:
    """Inverse of arctanh_p on ``[0, inf)``; always strictly below 1."""
    return invert(FamilyId.TanhP, y, p, opts).value


# --------------------------------------------------------------------------
# p-Laplacian eigenpairs
# --------------------------------------------------------------------------

def _check_mode(n: int, p: float) -> None:
    if not isinstance(n, int) or n < 1:
        raise DomainError(f"mode index n must be a positive integer, got {n!r}")
    if not (math.isfinite(p) and p > 1):
        raise DomainError(f"eigenpairs need p > 1, got {p!r}")


def eigenvalue(n: int, p: float) -> EigenPair:
    """``lambda_n = (p - 1) (n pi_p)^p``."""
    _check_mode(n, p)
    half = ptrig.pi_p(p).value
    return EigenPair(n, p, (p - 1.0) * (n * half) ** p, half)


def _phase(w: float, p: float, opts: EvalOptions):
    """sin_p and cos_p extended, at ``w`` half-periods (``y = w pi_p``)."""
    k = math.floor(w)
    frac = w - k
    sign = -1.0 if k % 2 else 1.0
    half = ptrig.pi_p(p).value
    quarter = 0.5 * half
    if frac <= 0.5:
        y, c_sign = min(frac * half, quarter), 1.0
    else:
        y, c_sign = min((1.0 - frac) * half, quarter), -1.0
    s = sin_p(y, p, opts)
    c = (max(1.0 - s**p, 0.0)) ** (1.0 / p)
    return sign * s, sign * c_sign * c


def sin_p_extended(y: float, p: float, opts: EvalOptions = DEFAULT_OPTIONS) -> float:
    """sin_p continued to the real line.

    Uses ``sin_p(pi_p - y) = sin_p(y)`` on ``[a_p, pi_p]``, oddness, and
    period ``2 pi_p``.
    """
    _check_mode(1, p)
    w = y / ptrig.pi_p(p).value
    if w < 0:
        return -_phase(-w, p, opts)[0]
    return _phase(w, p, opts)[0]


def eigenfunction(n: int, p: float, t: float, opts: EvalOptions = DEFAULT_OPTIONS) -> float:
    """``u(t) = sin_p(n pi_p t)`` on [0, 1]; ``u(0) = u(1) = 0`` exactly."""
    _check_mode(n, p)
    if not 0.0 <= t <= 1.0:
        raise DomainError(f"eigenfunction needs t in [0, 1], got {t!r}")
    return _phase(n * t, p, opts)[0]


def eigenfunction_derivative(n: int, p: float, t: float,
                             opts: EvalOptions = DEFAULT_OPTIONS) -> float:
    """``u'(t) = n pi_p cos_p(n pi_p t)`` (extended), from ``sin_p' = cos_p``."""
    _check_mode(n, p)
    return n * ptrig.pi_p(p).value * _phase(n * t, p, opts)[1]


def ode_residual(n: int, p: float, t: float, h: float,
                 opts: EvalOptions = DEFAULT_OPTIONS) -> float:
    """Relative defect of ``-(|u'|^(p-2) u')' = lambda_n |u|^(p-2) u`` at ``t``.

    The flux ``|u'|^(p-2) u'`` is differentiated by a central difference
    of step ``h``; ``u'`` itself comes from the exact identity
    ``sin_p' = cos_p``.  The result is normalized by ``lambda_n |u|^(p-1)``.
    Points closer than ``10 h`` to a zero of ``u'`` (``t = (2k+1)/(2n)``)
    raise :class:`IllConditionedError`.
    """
    _check_mode(n, p)
    if not h > 0:
        raise DomainError(f"step h must be positive, got {h!r}")
    if not h < t < 1.0 - h:
        raise DomainError(f"t must lie in (h, 1 - h), got t={t!r}, h={h!r}")
    nearest = (math.floor(n * t) + 0.5) / n
    if abs(t - nearest) < 10 * h:
        raise IllConditionedError(
            f"t={t} is within 10h of the derivative zero at t={nearest}"
        )
    lam = eigenvalue(n, p).lam

    def flux(s):
        d = eigenfunction_derivative(n, p, s, opts)
        return abs(d) ** (p - 2.0) * d

    u = eigenfunction(n, p, t, opts)
    lhs = -(flux(t + h) - flux(t - h)) / (2.0 * h)
    rhs = lam * abs(u) ** (p - 2.0) * u
    return (lhs - rhs) / (lam * abs(u) ** (p - 1.0))
