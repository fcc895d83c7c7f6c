"""Gamma-family kernels and the real-argument Gauss hypergeometric series.

Gamma and log-gamma are thin wrappers around :mod:`math`; digamma and the
low-order polygammas use upward recurrence followed by the Bernoulli
asymptotic expansion.  ``hyp2f1`` sums the power series with a rigorous
geometric tail bound and switches to the Pfaff transformation on the
negative half of the unit interval.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .core import DEFAULT_OPTIONS, ConvergenceError, DomainError, Eval, EvalOptions, EvalPath

__all__ = [
    "gamma",
    "ln_gamma",
    "digamma",
    "polygamma",
    "beta",
    "pochhammer",
    "hyp2f1",
]

EPS = 2.220446049250313e-16

# B_2, B_4, ..., B_16
_BERNOULLI_EVEN = [
    Fraction(1, 6), Fraction(-1, 30), Fraction(1, 42), Fraction(-1, 30),
    Fraction(5, 66), Fraction(-691, 2730), Fraction(7, 6), Fraction(-3617, 510),
]
_ASYMPTOTIC_FROM = 10.0


def _require_positive(name, x):
    if not x > 0:
        raise DomainError(f"{name} requires a positive argument, got {x!r}")


def gamma(x: float) -> float:
    """Gamma function for ``x > 0``."""
    _require_positive("gamma", x)
    return math.gamma(x)


def ln_gamma(x: float) -> float:
    """Natural log of the gamma function for ``x > 0``."""
    _require_positive("ln_gamma", x)
    return math.lgamma(x)


def digamma(x: float) -> float:
    """Logarithmic derivative of the gamma function for ``x > 0``.

    The argument is raised with ``psi(x) = psi(x + 1) - 1/x`` until it
    reaches 10, where the asymptotic series through ``B_16`` is accurate
    to well below double precision.
    """
    _require_positive("digamma", x)
    shift = 0.0
    while x < _ASYMPTOTIC_FROM:
        shift -= 1.0 / x
        x += 1.0
    inv2 = 1.0 / (x * x)
    series = 0.0
    power = inv2
    for k, b in enumerate(_BERNOULLI_EVEN, start=1):
        series += float(b) / (2 * k) * power
        power *= inv2
    return shift + math.log(x) - 0.5 / x - series


def polygamma(k: int, x: float) -> float:
    """k-th derivative of digamma, for ``k`` in {1, 2, 3} and ``x > 0``."""
    if k not in (1, 2, 3):
        raise DomainError(f"polygamma supports k in {{1, 2, 3}}, got {k!r}")
    _require_positive("polygamma", x)
    sign = -1.0 if k % 2 == 0 else 1.0  # (-1)**(k+1)
    kfact = math.factorial(k)
    shift = 0.0
    while x < _ASYMPTOTIC_FROM:
        shift += 1.0 / x ** (k + 1)
        x += 1.0
    # psi^(k)(x) = psi^(k)(x+N) - (-1)^k k! sum 1/(x+i)^(k+1)
    shift *= sign * kfact
    total = math.factorial(k - 1) / x**k + kfact / (2.0 * x ** (k + 1))
    for j, b in enumerate(_BERNOULLI_EVEN, start=1):
        coeff = float(b) * math.factorial(2 * j + k - 1) / math.factorial(2 * j)
        total += coeff / x ** (2 * j + k)
    return sign * total + shift


def beta(x: float, y: float) -> float:
    """Euler beta function ``Gamma(x)Gamma(y)/Gamma(x+y)``.

    Uses the gamma product while it is representable and log-gamma
    otherwise.  Both forms are symmetric in the arguments.
    """
    _require_positive("beta", x)
    _require_positive("beta", y)
    s = x + y
    if s < 170.0 and x > 1e-300 and y > 1e-300:
        return math.gamma(x) * math.gamma(y) / math.gamma(s)
    return math.exp(math.lgamma(x) + math.lgamma(y) - math.lgamma(s))


def pochhammer(a: float, n: int) -> float:
    """Shifted factorial ``(a, n) = a (a+1) ... (a+n-1)`` with ``(a, 0) = 1``."""
    if not isinstance(n, int) or n < 0:
        raise DomainError(f"pochhammer requires a nonnegative integer n, got {n!r}")
    out = 1.0
    for i in range(n):
        out *= a + i
    return out


def _is_nonpositive_integer(v: float) -> bool:
    return v <= 0 and v == math.floor(v)


def _series(a, b, c, z, opts):
    """Sum the 2F1 power series; returns ``(value, err, n_terms)``."""
    total = 0.0
    abs_total = 0.0
    term = 1.0
    for n in range(opts.max_terms):
        total += term
        abs_total += abs(term)
        if term == 0.0:
            return total, 6 * (n + 1) * EPS * abs_total, n + 1
        # Beyond n the term ratio is bounded by rho because (a+m)/(m+1) and
        # (b+m)/(c+m) are monotone in m once a+n, b+n, c+n > 0.
        if a + n > 0 and b + n > 0 and c + n > 0:
            rho = abs(z) * max(1.0, (a + n) / (n + 1)) * max(1.0, (b + n) / (c + n))
            if rho < 1.0:
                tail = abs(term) * rho / (1.0 - rho)
                if tail <= 0.01 * opts.target(total):
                    err = tail + 6 * (n + 1) * EPS * abs_total
                    return total, err, n + 1
        term *= (a + n) * (b + n) / ((c + n) * (n + 1)) * z
    raise ConvergenceError(
        f"2F1({a}, {b}; {c}; {z}) did not converge in {opts.max_terms} terms", total
    )


def hyp2f1(a: float, b: float, c: float, z: float,
           opts: EvalOptions = DEFAULT_OPTIONS) -> Eval:
    """Gauss hypergeometric function for real ``z`` in [-1, 1).

    Parameters
    ----------
    a, b, c : float
        Series parameters; ``c`` must not be a nonpositive integer.
    z : float
        Argument with ``-1 <= z < 1``.  For ``z <= -1/2`` the Pfaff
        transformation ``(1-z)^(-a) F(a, c-b; c; z/(z-1))`` is summed
        instead, which keeps the term ratio at or below 1/2.

    Returns
    -------
    Eval
        Partial sum with ``err`` = geometric tail bound plus a rounding
        allowance.
    """
    if _is_nonpositive_integer(c):
        raise DomainError(f"2F1 has a pole at c = {c!r}")
    if not -1.0 <= z < 1.0:
        raise DomainError(f"2F1 series needs -1 <= z < 1, got z = {z!r}")
    if z <= -0.5:
        w = z / (z - 1.0)
        scale = (1.0 - z) ** (-a)
        value, err, _ = _series(a, c - b, c, w, opts)
        value *= scale
        return Eval(value, err * scale + 2 * EPS * abs(value), EvalPath.SERIES)
    value, err, _ = _series(a, b, c, z, opts)
    return Eval(value, err, EvalPath.SERIES)
