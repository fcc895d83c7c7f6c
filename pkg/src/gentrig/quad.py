"""Adaptive Gauss-Kronrod (7/15) quadrature with algebraic endpoint singularities.

An :class:`Integrand` may declare a singular point ``s`` at or beyond one
end of the integration interval where it behaves like ``C |s - t|^(-alpha)``
with ``0 <= alpha < 1``.  The substitution ``t = s -/+ u^m`` with
``m = 1/(1 - alpha)`` cancels the singularity exactly; when the integrand
also supplies ``f_dist`` (its value as a function of the distance ``|s - t|``)
the transformed integrand is evaluated without forming ``s - u^m``, which
keeps full relative accuracy next to the singular point.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from typing import Callable, Optional

from .core import (
    DEFAULT_OPTIONS,
    AccuracyError,
    DomainError,
    DivergenceError,
    Eval,
    EvalOptions,
    EvalPath,
    FamilyId,
    PQ,
)

__all__ = ["Integrand", "integrate", "integrate_param", "family_integrand"]

EPS = 2.220446049250313e-16
MAX_INTERVALS = 4000

# QUADPACK qk15 abscissae and weights on [-1, 1].
_XGK = (
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
)
_WGK = (
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
)
_WG = (
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
)


@dataclass(frozen=True)
class Integrand:
    """A real integrand with optional singular-point metadata.

    ``singular_at`` must lie at or outside the integration interval (on
    either side).  ``alpha = 0`` is allowed and simply reparametrizes by
    distance, which is useful together with ``f_dist``.
    """

    f: Callable[[float], float]
    singular_at: Optional[float] = None
    alpha: float = 0.0
    f_dist: Optional[Callable[[float], float]] = None

    def __post_init__(self):
        if self.singular_at is not None and not 0.0 <= self.alpha < 1.0:
            raise DomainError(
                f"singular exponent must satisfy 0 <= alpha < 1 for integrability, got {self.alpha}"
            )


def _gk15(f, lo, hi):
    center = 0.5 * (lo + hi)
    half = 0.5 * (hi - lo)
    fc = f(center)
    resk = _WGK[7] * fc
    resg = _WG[3] * fc
    resabs = _WGK[7] * abs(fc)
    for j in range(7):
        dx = half * _XGK[j]
        f1 = f(center - dx)
        f2 = f(center + dx)
        resk += _WGK[j] * (f1 + f2)
        resabs += _WGK[j] * (abs(f1) + abs(f2))
        if j % 2 == 1:
            resg += _WG[j // 2] * (f1 + f2)
    value = resk * half
    if not math.isfinite(value):
        raise DomainError(f"integrand is not finite on [{lo}, {hi}]")
    return value, abs(resk - resg) * abs(half), resabs * abs(half)


def _adaptive(f, lo, hi, opts):
    value, err, resabs = _gk15(f, lo, hi)
    width = hi - lo
    heap = [(-err, 0, lo, hi, value, err, resabs, 0)]
    tot_val, tot_err, tot_abs = value, err, resabs
    counter = 1
    while heap and counter < 2 * MAX_INTERVALS:
        if tot_err + 50 * EPS * tot_abs <= opts.target(tot_val):
            break
        _, _, l, r, v, e, ra, depth = heapq.heappop(heap)
        budget = opts.target(tot_val) * (r - l) / width
        if e <= 50 * EPS * ra or (depth >= opts.max_depth and e <= budget):
            # no further improvement possible or needed here
            continue
        if depth >= opts.max_depth:
            raise AccuracyError(
                f"quadrature on [{lo}, {hi}] exceeded max_depth={opts.max_depth}",
                Eval(tot_val, tot_err, EvalPath.QUADRATURE),
            )
        tot_val -= v
        tot_err -= e
        tot_abs -= ra
        mid = 0.5 * (l + r)
        for a, b in ((l, mid), (mid, r)):
            v2, e2, ra2 = _gk15(f, a, b)
            heapq.heappush(heap, (-e2, counter, a, b, v2, e2, ra2, depth + 1))
            counter += 1
            tot_val += v2
            tot_err += e2
            tot_abs += ra2
    value = tot_val
    err = max(tot_err, 0.0) + 50 * EPS * tot_abs
    if err > opts.target(value) and err > 100 * EPS * tot_abs:
        raise AccuracyError(
            f"quadrature on [{lo}, {hi}] did not reach tolerance (err={err:.3g})",
            Eval(value, err, EvalPath.QUADRATURE),
        )
    return value, err


def integrate(f, a: float, b: float, opts: EvalOptions = DEFAULT_OPTIONS) -> Eval:
    """Integrate ``f`` over ``[a, b]``.

    Parameters
    ----------
    f : Integrand or callable
        Plain callables are treated as regular integrands.
    a, b : float
        Interval with ``a < b`` (``a == b`` returns zero).

    Returns
    -------
    Eval
        ``err`` is the summed Kronrod-Gauss difference plus a rounding
        allowance.
    """
    if not isinstance(f, Integrand):
        f = Integrand(f)
    if a == b:
        return Eval(0.0, 0.0, EvalPath.QUADRATURE)
    if not a < b:
        raise DomainError(f"integrate requires a < b, got [{a}, {b}]")
    s = f.singular_at
    if s is None:
        value, err = _adaptive(f.f, a, b, opts)
        return Eval(value, err, EvalPath.QUADRATURE)

    m = 1.0 / (1.0 - f.alpha)
    if s >= b:
        u_lo, u_hi = (s - b) ** (1.0 / m), (s - a) ** (1.0 / m)
        point = lambda d: s - d
    elif s <= a:
        u_lo, u_hi = (a - s) ** (1.0 / m), (b - s) ** (1.0 / m)
        point = lambda d: s + d
    else:
        raise DomainError(f"declared singular point {s} lies inside ({a}, {b})")
    base = f.f_dist if f.f_dist is not None else (lambda d: f.f(point(d)))

    def g(u):
        if u == 0.0:
            return 0.0 if m > 1.0 else base(0.0)
        return base(u**m) * m * u ** (m - 1.0)

    value, err = _adaptive(g, u_lo, u_hi, opts)
    return Eval(value, err, EvalPath.QUADRATURE)


def _one_minus_pow_complement(d, q):
    """``1 - (1 - d)^q`` without cancellation for small ``d``."""
    if d >= 1.0:
        return 1.0
    return -math.expm1(q * math.log1p(-d))


def family_integrand(family: FamilyId, params: PQ) -> Integrand:
    """Kernel of the defining integral of ``family`` with singularity metadata."""
    family = FamilyId.parse(family)
    p, q = params.p, params.q
    if family in (FamilyId.ArcsinP, FamilyId.ArccosP):
        q = p
    if family in (FamilyId.ArcsinP, FamilyId.ArccosP, FamilyId.ArcsinPQ):
        f = lambda t: (1.0 - t**q) ** (-1.0 / p)
        fd = lambda d: _one_minus_pow_complement(d, q) ** (-1.0 / p)
        if p > 1.0:
            return Integrand(f, singular_at=1.0, alpha=1.0 / p, f_dist=fd)
        return Integrand(f, f_dist=fd)
    if family is FamilyId.ArctanP:
        return Integrand(lambda t: 1.0 / (1.0 + t**p))
    if family is FamilyId.ArcsinhP:
        return Integrand(lambda t: (1.0 + t**p) ** (-1.0 / p))
    if family is FamilyId.ArcsinhPQ:
        return Integrand(lambda t: (1.0 + t**q) ** (-1.0 / p))
    if family is FamilyId.ArctanhP:
        return Integrand(lambda t: 1.0 / (1.0 - t**p))
    raise DomainError(f"family {family} has no integral kernel")


def _arctanh_regular_part(p):
    """``1/(1 - t^p) - 1/(p (1 - t))`` as a function of ``d = 1 - t``."""

    def g(d):
        if d >= 1.0:
            return 1.0 - 1.0 / p
        a = _one_minus_pow_complement(d, p)
        return (p * d - a) / (a * p * d)

    return Integrand(lambda t: g(1.0 - t), singular_at=1.0, alpha=0.0, f_dist=g)


def _graded_to_one(f_dist, x, opts):
    """Integrate over ``[0, x]`` in the distance ``d = 1 - t`` on doubling panels.

    Used when the kernel grows without an integrable bound at ``t = 1``;
    each panel ``[d, 2d]`` keeps the kernel's variation bounded.
    """
    d = 1.0 - x
    edges = [d]
    while edges[-1] < 0.5:
        edges.append(2.0 * edges[-1])
    edges[-1] = 1.0
    value = err = 0.0
    for lo, hi in zip(edges, edges[1:]):
        v, e = _adaptive(f_dist, lo, hi, opts)
        value += v
        err += e
    return Eval(value, err, EvalPath.QUADRATURE)


def integrate_param(family: FamilyId, x: float, params: PQ,
                    opts: EvalOptions = DEFAULT_OPTIONS) -> Eval:
    """Quadrature of ``family``'s defining integral over ``[0, x]``.

    ``ArccosP`` integrates the arcsin kernel up to ``(1 - x^p)^(1/p)``.
    ``ArctanhP`` close to 1 subtracts the logarithmic singularity
    ``1/(p (1 - t))`` analytically and integrates the bounded remainder.
    Arcsin-type kernels with ``p <= 1`` are not integrable up to 1; close
    to 1 they are integrated on doubling panels in ``1 - t``.
    """
    family = FamilyId.parse(family)
    p = params.p
    if family is FamilyId.ArccosP:
        if not 0.0 <= x <= 1.0:
            raise DomainError(f"arccos_p needs x in [0, 1], got {x}")
        x = (1.0 - x**p) ** (1.0 / p)
    if not 0.0 <= x <= 1.0:
        raise DomainError(f"{family} quadrature needs x in [0, 1], got {x}")
    if family is FamilyId.ArctanhP:
        if x >= 1.0:
            raise DivergenceError("arctanh_p diverges at x = 1")
        if x > 0.9:
            reg = integrate(_arctanh_regular_part(p), 0.0, x, opts)
            log_part = -math.log1p(-x) / p
            value = log_part + reg.value
            return Eval(value, reg.err + 2 * EPS * abs(log_part), EvalPath.QUADRATURE)
    if x == 1.0 and family in (FamilyId.ArcsinP, FamilyId.ArccosP, FamilyId.ArcsinPQ) and p <= 1.0:
        raise DivergenceError(f"{family} diverges at x = 1 for p <= 1 (p = {p})")
    kernel = family_integrand(family, params)
    if kernel.singular_at is None and kernel.f_dist is not None and x > 0.9:
        return _graded_to_one(kernel.f_dist, x, opts)
    if kernel.singular_at is not None and x < 0.5:
        # far from the singular point; the substitution would only cost
        # relative accuracy through the cancellation in 1 - u^m
        kernel = Integrand(kernel.f)
    return integrate(kernel, 0.0, x, opts)
