"""Adaptive Gauss-Kronrod quadrature with endpoint singularities."""

import math

import mpmath
import pytest
from hypothesis import given, settings, strategies as st

from gentrig import quad
from gentrig.core import (AccuracyError, DivergenceError, DomainError, EvalOptions, EvalPath,
                          FamilyId, PQ)


def test_smooth_integral():
    e = quad.integrate(math.exp, 0.0, 1.0)
    assert e.path is EvalPath.QUADRATURE
    assert abs(e.value - (math.e - 1)) <= e.err
    assert e.value == pytest.approx(math.e - 1, rel=1e-14)


def test_empty_interval_and_reversed():
    assert quad.integrate(math.sin, 1.0, 1.0).value == 0.0
    with pytest.raises(DomainError):
        quad.integrate(math.sin, 1.0, 0.0)


def test_inverse_sqrt_singularity():
    f = quad.Integrand(lambda t: 1 / math.sqrt(1 - t), singular_at=1.0, alpha=0.5)
    e = quad.integrate(f, 0.0, 1.0)
    assert e.value == pytest.approx(2.0, rel=1e-13)


def test_left_singularity():
    f = quad.Integrand(lambda t: t ** -0.75, singular_at=0.0, alpha=0.75)
    assert quad.integrate(f, 0.0, 1.0).value == pytest.approx(4.0, rel=1e-12)


def test_singularity_inside_rejected():
    f = quad.Integrand(lambda t: abs(t - 0.5) ** -0.5, singular_at=0.5, alpha=0.5)
    with pytest.raises(DomainError):
        quad.integrate(f, 0.0, 1.0)


def test_non_integrable_exponent_rejected():
    with pytest.raises(DomainError):
        quad.Integrand(lambda t: 1 / (1 - t), singular_at=1.0, alpha=1.0)


def test_accuracy_error_carries_estimate():
    f = lambda t: math.sin(1 / t) / t if t > 0 else 0.0
    with pytest.raises(AccuracyError) as info:
        quad.integrate(f, 0.0, 1.0, EvalOptions(max_depth=6, abs_tol=1e-15, rel_tol=1e-15))
    assert info.value.estimate is not None


@pytest.mark.parametrize("p", [1.5, 2.0, 3.0, 5.0, 10.0])
def test_arcsin_kernel_at_one(p):
    # 2 * int_0^1 (1 - t^p)^(-1/p) dt = 2 pi / (p sin(pi/p))
    e = quad.integrate_param(FamilyId.ArcsinP, 1.0, PQ.single(p))
    assert 2 * e.value == pytest.approx(2 * math.pi / (p * math.sin(math.pi / p)), rel=1e-12)


def test_arctanh_log_split_matches_mpmath():
    x, p = 0.999, 2.5
    e = quad.integrate_param(FamilyId.ArctanhP, x, PQ.single(p))
    exact = mpmath.quad(lambda t: 1 / (1 - t**p), [0, 0.9, 0.99, x])
    assert e.value == pytest.approx(float(exact), rel=1e-12)


def test_divergent_endpoints():
    with pytest.raises(DivergenceError):
        quad.integrate_param(FamilyId.ArctanhP, 1.0, PQ.single(2.0))
    with pytest.raises(DivergenceError):
        quad.integrate_param(FamilyId.ArcsinP, 1.0, PQ.single(0.8))


@given(st.floats(min_value=0.01, max_value=0.99), st.floats(min_value=0.3, max_value=8.0))
@settings(max_examples=40, deadline=None)
def test_arcsinh_kernel_against_mpmath(x, p):
    e = quad.integrate_param(FamilyId.ArcsinhP, x, PQ.single(p))
    exact = float(mpmath.quad(lambda t: (1 + t**p) ** (-1 / p), [0, x]))
    assert abs(e.value - exact) <= e.err + 1e-15


@given(st.floats(min_value=0.0, max_value=0.9), st.floats(min_value=0.05, max_value=0.95))
@settings(max_examples=40, deadline=None)
def test_additivity(a, frac):
    b = a + frac * (1 - a)
    f = quad.Integrand(lambda t: (1 - t**3) ** (-1 / 3), singular_at=1.0, alpha=1 / 3)
    whole = quad.integrate(f, 0.0, b)
    parts = quad.integrate(f, 0.0, a).value + quad.integrate(f, a, b).value
    assert whole.value == pytest.approx(parts, rel=1e-12, abs=1e-14)


@pytest.mark.parametrize("x,p,q", [(0.999, 0.7, 0.7), (0.9999999, 0.5, 0.5), (0.97, 0.6, 2.0)])
def test_graded_panels_near_nonintegrable_end(x, p, q):
    e = quad.integrate_param(FamilyId.ArcsinPQ, x, PQ(p, q))
    pts = [0, 0.9, 0.99, 0.999, 0.9999, 0.99999, 0.999999]
    exact = mpmath.quad(lambda t: (1 - t**q) ** (-1 / mpmath.mpf(p)), [t for t in pts if t < x] + [x])
    assert abs(e.value - float(exact)) <= e.err
