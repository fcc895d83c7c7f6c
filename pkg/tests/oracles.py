"""Independent mpmath evaluations of every family, used as test oracles."""

import mpmath

from gentrig.core import FamilyId

mp = mpmath.mp


def _kernel(family, p, q):
    p, q = mpmath.mpf(p), mpmath.mpf(q)
    return {
        FamilyId.ArcsinP: lambda t: (1 - t**p) ** (-1 / p),
        FamilyId.ArcsinPQ: lambda t: (1 - t**q) ** (-1 / p),
        FamilyId.ArctanP: lambda t: 1 / (1 + t**p),
        FamilyId.ArcsinhP: lambda t: (1 + t**p) ** (-1 / p),
        FamilyId.ArcsinhPQ: lambda t: (1 + t**q) ** (-1 / p),
        FamilyId.ArctanhP: lambda t: 1 / (1 - t**p),
    }[family]


def _integral(family, x, p, q):
    x = mpmath.mpf(x)
    if x == 1 and family in (FamilyId.ArcsinP, FamilyId.ArcsinPQ):
        # t = 1 - u^m with m = p/(p-1) removes the endpoint singularity
        p, q = mpmath.mpf(p), mpmath.mpf(q)
        m = p / (p - 1)
        g = lambda u: (-mpmath.expm1(q * mpmath.log1p(-u**m)) / u**m) ** (-1 / p) * m \
            if u > 0 else q ** (-1 / p) * m
        return mpmath.quad(g, [0, 1])
    pts = [0] + [1 - mpmath.mpf(10) ** -k for k in range(1, 12) if 1 - mpmath.mpf(10) ** -k < x]
    f = _kernel(family, p, q)
    # the arcsin kernels are singular at t = 1, a null set for the integral
    return mpmath.quad(lambda t: f(t) if t < 1 else 0, pts + [x])


_FORWARD_OF = {
    FamilyId.SinP: FamilyId.ArcsinP,
    FamilyId.CosP: FamilyId.ArcsinP,
    FamilyId.TanP: FamilyId.ArctanP,
    FamilyId.SinhP: FamilyId.ArcsinhP,
    FamilyId.TanhP: FamilyId.ArctanhP,
}


def value(family, x, p, q=None):
    """mpmath value of ``family``; constants ignore ``x``; ``inf`` where divergent."""
    family = FamilyId.parse(family)
    q = p if q is None else q
    with mpmath.workdps(25):
        if family is FamilyId.PiP:
            return mpmath.inf if p <= 1 else 2 * _integral(FamilyId.ArcsinP, 1, p, p)
        if family is FamilyId.PiPQ:
            return mpmath.inf if p <= 1 else 2 * _integral(FamilyId.ArcsinPQ, 1, p, q)
        if family is FamilyId.BP:
            return _integral(FamilyId.ArctanP, 1, p, p)
        if family in _FORWARD_OF:
            fwd = _FORWARD_OF[family]
            y = mpmath.mpf(x)
            s = mpmath.findroot(lambda t: _integral(fwd, t, p, p) - y,
                                (mpmath.mpf("1e-30"), 1 - mpmath.mpf("1e-20")),
                                solver="anderson")
            if family is FamilyId.CosP:
                return (1 - s**p) ** (1 / mpmath.mpf(p))
            return s
        return _integral(family, x, p, q)
