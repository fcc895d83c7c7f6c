"""Generalized inverse trigonometric / hyperbolic functions and their constants.

Every forward function has a hypergeometric-series path and a quadrature
path over its defining integral::

    arcsin_p(x)      = int_0^x (1 - t^p)^(-1/p) dt = x F(1/p, 1/p; 1+1/p; x^p)
    arctan_p(x)      = int_0^x (1 + t^p)^(-1)   dt = x F(1, 1/p; 1+1/p; -x^p)
    arcsinh_p(x)     = int_0^x (1 + t^p)^(-1/p) dt = x F(1/p, 1/p; 1+1/p; -x^p)
    arctanh_p(x)     = int_0^x (1 - t^p)^(-1)   dt = x F(1, 1/p; 1+1/p; x^p)
    arcsin_{p,q}(x)  = int_0^x (1 - t^q)^(-1/p) dt = x F(1/p, 1/q; 1+1/q; x^q)
    arcsinh_{p,q}(x) = int_0^x (1 + t^q)^(-1/p) dt = x F(1/p, 1/q; 1+1/q; -x^q)

The automatic path uses the series unless its argument exceeds 0.9, where
the term ratio approaches 1 and the quadrature is cheaper.  Negative
series arguments always go through the series (the Pfaff transform keeps
them fast).  Values at ``x = 1`` come from closed forms.
"""

from __future__ import annotations

import math
from typing import Dict, Optional, Union

from . import specfun
from .core import (
    DEFAULT_OPTIONS,
    PQ,
    ConsistencyError,
    DivergenceError,
    DomainError,
    Eval,
    EvalOptions,
    EvalPath,
    FamilyId,
)
from .quad import integrate_param

__all__ = [
    "PQ",
    "FamilyId",
    "arcsin_p",
    "arccos_p",
    "arctan_p",
    "arcsinh_p",
    "arctanh_p",
    "arcsin_pq",
    "arcsinh_pq",
    "pi_p",
    "a_p",
    "b_p",
    "pi_pq",
    "pi_p_paths",
    "b_p_paths",
    "pi_pq_paths",
    "evaluate",
]

EPS = 2.220446049250313e-16
SERIES_LIMIT = 0.9
PathArg = Optional[Union[str, EvalPath]]


def _parse_path(path: PathArg) -> Optional[EvalPath]:
    if path is None or path == "auto":
        return None
    if isinstance(path, EvalPath):
        return path
    aliases = {"quad": EvalPath.QUADRATURE, "closed": EvalPath.CLOSED_FORM}
    if path in aliases:
        return aliases[path]
    try:
        return EvalPath(path)
    except ValueError:
        raise DomainError(f"unknown evaluation path {path!r}") from None


def _check_positive(name: str, v: float) -> None:
    if not (math.isfinite(v) and v > 0):
        raise DomainError(f"{name} must be a finite positive real, got {v!r}")


def _check_unit(name: str, x: float) -> None:
    if not 0.0 <= x <= 1.0:
        raise DomainError(f"{name} requires x in [0, 1], got {x!r}")


def _series_params(family: FamilyId, x: float, pq: PQ):
    p, q = pq.p, pq.q
    if family is FamilyId.ArcsinP:
        return 1 / p, 1 / p, 1 + 1 / p, x**p
    if family is FamilyId.ArctanP:
        return 1.0, 1 / p, 1 + 1 / p, -(x**p)
    if family is FamilyId.ArcsinhP:
        return 1 / p, 1 / p, 1 + 1 / p, -(x**p)
    if family is FamilyId.ArctanhP:
        return 1.0, 1 / p, 1 + 1 / p, x**p
    if family is FamilyId.ArcsinPQ:
        return 1 / p, 1 / q, 1 + 1 / q, x**q
    if family is FamilyId.ArcsinhPQ:
        return 1 / p, 1 / q, 1 + 1 / q, -(x**q)
    raise DomainError(f"{family} has no series representation")


def _forward(family: FamilyId, x: float, pq: PQ, path: PathArg, opts: EvalOptions) -> Eval:
    chosen = _parse_path(path)
    if x == 0.0:
        return Eval(0.0, 0.0, EvalPath.CLOSED_FORM)
    a, b, c, z = _series_params(family, x, pq)
    if chosen is None:
        chosen = EvalPath.SERIES if z <= SERIES_LIMIT else EvalPath.QUADRATURE
    if chosen is EvalPath.SERIES:
        f = specfun.hyp2f1(a, b, c, z, opts)
        value = x * f.value
        return Eval(value, x * f.err + EPS * abs(value), EvalPath.SERIES)
    if chosen is EvalPath.QUADRATURE:
        return integrate_param(family, x, pq, opts)
    raise DomainError(f"path {chosen} is not available for {family} at x = {x}")


def _at_one_arcsin(p: float, q: float, path: PathArg, opts: EvalOptions) -> Eval:
    if p <= 1.0:
        raise DivergenceError(f"arcsin_(p,q)(1) diverges for p <= 1 (p = {p})")
    chosen = _parse_path(path)
    if chosen is None or chosen is EvalPath.CLOSED_FORM:
        value = specfun.beta(1.0 / q, 1.0 - 1.0 / p) / q
        return Eval(value, 8 * EPS * value, EvalPath.CLOSED_FORM)
    if chosen is EvalPath.QUADRATURE:
        return integrate_param(FamilyId.ArcsinPQ, 1.0, PQ(p, q), opts)
    raise DomainError("the series path does not converge at x = 1; use quadrature or closed_form")


def arcsin_p(x: float, p: float, path: PathArg = None,
             opts: EvalOptions = DEFAULT_OPTIONS) -> Eval:
    """``int_0^x (1 - t^p)^(-1/p) dt`` for ``x`` in [0, 1].

    At ``x = 1`` the automatic path returns ``a_p = pi_p / 2``; this
    requires ``p > 1``.
    """
    _check_positive("p", p)
    _check_unit("arcsin_p", x)
    if x == 1.0:
        if p <= 1.0:
            raise DivergenceError(f"arcsin_p(1) diverges for p <= 1 (p = {p})")
        if _parse_path(path) is None:
            return a_p(p)
        return _at_one_arcsin(p, p, path, opts)
    return _forward(FamilyId.ArcsinP, x, PQ.single(p), path, opts)


def arccos_p(x: float, p: float, path: PathArg = None,
             opts: EvalOptions = DEFAULT_OPTIONS) -> Eval:
    """``arcsin_p((1 - x^p)^(1/p))``."""
    _check_positive("p", p)
    _check_unit("arccos_p", x)
    return arcsin_p((1.0 - x**p) ** (1.0 / p), p, path, opts)


def arctan_p(x: float, p: float, path: PathArg = None,
             opts: EvalOptions = DEFAULT_OPTIONS) -> Eval:
    """``int_0^x (1 + t^p)^(-1) dt`` for ``x`` in [0, 1]; ``arctan_p(1) = b_p``."""
    _check_positive("p", p)
    _check_unit("arctan_p", x)
    if x == 1.0 and _parse_path(path) is None:
        return b_p(p)
    return _forward(FamilyId.ArctanP, x, PQ.single(p), path, opts)


def arcsinh_p(x: float, p: float, path: PathArg = None,
              opts: EvalOptions = DEFAULT_OPTIONS) -> Eval:
    """``int_0^x (1 + t^p)^(-1/p) dt`` for ``x`` in [0, 1]."""
    _check_positive("p", p)
    _check_unit("arcsinh_p", x)
    return _forward(FamilyId.ArcsinhP, x, PQ.single(p), path, opts)


def arctanh_p(x: float, p: float, path: PathArg = None,
              opts: EvalOptions = DEFAULT_OPTIONS) -> Eval:
    """``int_0^x (1 - t^p)^(-1) dt`` for ``x`` in [0, 1)."""
    _check_positive("p", p)
    if x == 1.0:
        raise DivergenceError("arctanh_p diverges at x = 1")
    _check_unit("arctanh_p", x)
    return _forward(FamilyId.ArctanhP, x, PQ.single(p), path, opts)


def arcsin_pq(x: float, pq: PQ, path: PathArg = None,
              opts: EvalOptions = DEFAULT_OPTIONS) -> Eval:
    """``int_0^x (1 - t^q)^(-1/p) dt``; ``x = 1`` requires ``p > 1``."""
    _check_unit("arcsin_pq", x)
    if x == 1.0:
        return _at_one_arcsin(pq.p, pq.q, path, opts)
    return _forward(FamilyId.ArcsinPQ, x, pq, path, opts)


def arcsinh_pq(x: float, pq: PQ, path: PathArg = None,
               opts: EvalOptions = DEFAULT_OPTIONS) -> Eval:
    """``int_0^x (1 + t^q)^(-1/p) dt`` for ``x`` in [0, 1]."""
    _check_unit("arcsinh_pq", x)
    return _forward(FamilyId.ArcsinhPQ, x, pq, path, opts)


# --------------------------------------------------------------------------
# constants
# --------------------------------------------------------------------------

def _require_p_gt_one(name: str, p: float) -> None:
    _check_positive("p", p)
    if p <= 1.0:
        raise DivergenceError(f"{name} diverges for p <= 1 (p = {p})")


def _agree(name: str, paths: Dict[str, Eval], rel_slack: float = 1e-13) -> None:
    items = list(paths.items())
    for i, (n1, e1) in enumerate(items):
        for n2, e2 in items[i + 1:]:
            budget = e1.err + e2.err + rel_slack * max(abs(e1.value), abs(e2.value))
            if abs(e1.value - e2.value) > budget:
                raise ConsistencyError(
                    f"{name}: {n1}={e1.value!r} and {n2}={e2.value!r} differ by "
                    f"{abs(e1.value - e2.value):.3g} > {budget:.3g}"
                )


def pi_p_paths(p: float, opts: EvalOptions = DEFAULT_OPTIONS) -> Dict[str, Eval]:
    """The three independent evaluations of ``pi_p``."""
    _require_p_gt_one("pi_p", p)
    sine = 2.0 * math.pi / (p * math.sin(math.pi / p))
    beta = 2.0 / p * specfun.beta(1.0 - 1.0 / p, 1.0 / p)
    quad = _at_one_arcsin(p, p, EvalPath.QUADRATURE, opts).scaled(2.0)
    return {
        "sine": Eval(sine, 4 * EPS * sine, EvalPath.CLOSED_FORM),
        "beta": Eval(beta, 16 * EPS * beta, EvalPath.CLOSED_FORM),
        "quadrature": quad,
    }


def pi_p(p: float, verify: bool = False, opts: EvalOptions = DEFAULT_OPTIONS) -> Eval:
    """``pi_p = 2 pi / (p sin(pi/p))`` for ``p > 1``.

    With ``verify=True`` the beta-function form and twice the singular
    quadrature of ``arcsin_p(1)`` are computed as well and a
    :class:`ConsistencyError` is raised if any pair disagrees beyond the
    summed error bounds.
    """
    if verify:
        paths = pi_p_paths(p, opts)
        _agree(f"pi_p({p})", paths)
        return paths["sine"]
    _require_p_gt_one("pi_p", p)
    value = 2.0 * math.pi / (p * math.sin(math.pi / p))
    return Eval(value, 4 * EPS * value, EvalPath.CLOSED_FORM)


def a_p(p: float, verify: bool = False, opts: EvalOptions = DEFAULT_OPTIONS) -> Eval:
    """``a_p = pi_p / 2 = arcsin_p(1)``."""
    return pi_p(p, verify, opts).scaled(0.5)


def _b_digamma(p: float) -> Eval:
    psi_hi = specfun.digamma((1.0 + p) / (2.0 * p))
    psi_lo = specfun.digamma(1.0 / (2.0 * p))
    value = (psi_hi - psi_lo) / (2.0 * p)
    err = 8 * EPS * (abs(psi_hi) + abs(psi_lo)) / (2.0 * p) + 2 * EPS * abs(value)
    return Eval(value, err, EvalPath.CLOSED_FORM)


def b_p_paths(p: float, opts: EvalOptions = DEFAULT_OPTIONS) -> Dict[str, Eval]:
    """Digamma, hypergeometric and quadrature evaluations of ``b_p``."""
    _check_positive("p", p)
    scale = 2.0 ** (-1.0 / p)
    f = specfun.hyp2f1(1.0 / p, 1.0 / p, 1.0 + 1.0 / p, 0.5, opts)
    return {
        "digamma": _b_digamma(p),
        "hypergeometric": Eval(scale * f.value, scale * f.err + EPS * scale * f.value,
                               EvalPath.SERIES),
        "quadrature": integrate_param(FamilyId.ArctanP, 1.0, PQ.single(p), opts),
    }


def b_p(p: float, verify: bool = False, opts: EvalOptions = DEFAULT_OPTIONS) -> Eval:
    """``b_p = arctan_p(1)`` from the digamma formula.

    ``b_p = (psi((1+p)/(2p)) - psi(1/(2p))) / (2p)``; ``verify=True``
    cross-checks against ``2^(-1/p) F(1/p, 1/p; 1+1/p; 1/2)`` and the
    quadrature of ``(1 + t^p)^(-1)`` over [0, 1].
    """
    if verify:
        paths = b_p_paths(p, opts)
        _agree(f"b_p({p})", paths)
        return paths["digamma"]
    _check_positive("p", p)
    return _b_digamma(p)


def pi_pq_paths(pq: PQ, opts: EvalOptions = DEFAULT_OPTIONS) -> Dict[str, Eval]:
    """Quadrature and beta-function evaluations of ``pi_{p,q}``."""
    _require_p_gt_one("pi_pq", pq.p)
    return {
        "quadrature": _at_one_arcsin(pq.p, pq.q, EvalPath.QUADRATURE, opts).scaled(2.0),
        "beta": _at_one_arcsin(pq.p, pq.q, EvalPath.CLOSED_FORM, opts).scaled(2.0),
    }


def pi_pq(pq: PQ, verify: bool = True, opts: EvalOptions = DEFAULT_OPTIONS) -> Eval:
    """``pi_{p,q} = 2 arcsin_{p,q}(1)`` for ``p > 1``.

    The quadrature value is returned.  By default it is checked against
    ``(2/q) B(1/q, 1 - 1/p)``, which is the full ``pi_{p,q}`` (not half of it).
    """
    paths = pi_pq_paths(pq, opts)
    if verify:
        _agree(f"pi_pq({pq.p}, {pq.q})", paths)
    return paths["quadrature"]


def evaluate(family: Union[str, FamilyId], x: Optional[float], pq: PQ,
             path: PathArg = None, opts: EvalOptions = DEFAULT_OPTIONS) -> Eval:
    """Dispatch a forward function or constant by family name."""
    family = FamilyId.parse(family)
    p = pq.p
    if family is FamilyId.PiP:
        return pi_p(p, opts=opts)
    if family is FamilyId.BP:
        return b_p(p, opts=opts)
    if family is FamilyId.PiPQ:
        return pi_pq(pq, verify=False, opts=opts)
    if x is None:
        raise DomainError(f"{family} needs an argument x")
    funcs = {
        FamilyId.ArcsinP: arcsin_p,
        FamilyId.ArccosP: arccos_p,
        FamilyId.ArctanP: arctan_p,
        FamilyId.ArcsinhP: arcsinh_p,
        FamilyId.ArctanhP: arctanh_p,
    }
    if family in funcs:
        return funcs[family](x, p, path, opts)
    if family is FamilyId.ArcsinPQ:
        return arcsin_pq(x, pq, path, opts)
    if family is FamilyId.ArcsinhPQ:
        return arcsinh_pq(x, pq, path, opts)
    raise DomainError(f"{family} is an inverse function; see gentrig.inverse")
