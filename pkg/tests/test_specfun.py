"""Gamma-family kernels and the 2F1 series against frozen mpmath values."""

import math

import mpmath
import pytest
from hypothesis import given, settings, strategies as st

from gentrig import specfun
from gentrig.core import ConvergenceError, DomainError, EvalOptions, EvalPath

# mpmath at 30 digits
DIGAMMA = {0.3: -3.502524222200132989, 7.25: 1.9104535268837360284}
POLYGAMMA = {(1, 0.4): 7.2753565905295974375, (2, 2.5): -0.236204051641727403,
             (3, 12.0): 0.0013100932310708259704}
HYP2F1 = {
    (0.5, 0.5, 1.5, 0.81): 1.2441883499984824297,
    (0.25, 0.25, 1.25, -0.9): 0.96478491845700504483,
    (2.0, 2.0, 3.0, 0.5): 2.4548225555204375247,
    (1 / 3, 1 / 3, 4 / 3, -1.0): 0.93770699057533886072,
}


@pytest.mark.parametrize("x,expected", DIGAMMA.items())
def test_digamma_frozen(x, expected):
    assert specfun.digamma(x) == pytest.approx(expected, rel=1e-14)


@pytest.mark.parametrize("key,expected", POLYGAMMA.items())
def test_polygamma_frozen(key, expected):
    assert specfun.polygamma(*key) == pytest.approx(expected, rel=1e-13)


def test_digamma_at_one_is_minus_euler_gamma():
    assert specfun.digamma(1.0) == pytest.approx(-0.5772156649015329, abs=1e-15)


def test_gamma_and_beta_basics():
    assert specfun.gamma(5.0) == 24.0
    assert specfun.ln_gamma(10.0) == pytest.approx(math.log(362880.0), rel=1e-15)
    assert specfun.beta(0.3, 2.2) == pytest.approx(2.4795140443957648473, rel=1e-14)
    assert specfun.beta(0.5, 0.5) == pytest.approx(math.pi, rel=1e-15)
    # log-gamma branch
    assert specfun.beta(100.0, 90.0) == pytest.approx(
        float(mpmath.beta(100, 90)), rel=1e-12)


def test_pochhammer():
    assert specfun.pochhammer(0.5, 0) == 1.0
    assert specfun.pochhammer(3.0, 4) == 3 * 4 * 5 * 6
    with pytest.raises(DomainError):
        specfun.pochhammer(1.0, -1)
    with pytest.raises(DomainError):
        specfun.pochhammer(1.0, 2.5)


@pytest.mark.parametrize("bad", [0.0, -1.0, float("nan")])
def test_positive_argument_required(bad):
    for f in (specfun.gamma, specfun.ln_gamma, specfun.digamma):
        with pytest.raises(DomainError):
            f(bad)
    with pytest.raises(DomainError):
        specfun.polygamma(1, bad)


def test_polygamma_order_restricted():
    with pytest.raises(DomainError):
        specfun.polygamma(4, 1.0)


@pytest.mark.parametrize("args,expected", HYP2F1.items())
def test_hyp2f1_frozen(args, expected):
    e = specfun.hyp2f1(*args)
    assert e.path is EvalPath.SERIES
    assert abs(e.value - expected) <= max(e.err, 1e-15) + 1e-15
    assert e.value == pytest.approx(expected, rel=1e-12)


def test_hyp2f1_classical_arcsin():
    # x 2F1(1/2, 1/2; 3/2; x^2) = arcsin x
    x = 0.6
    assert x * specfun.hyp2f1(0.5, 0.5, 1.5, x * x).value == pytest.approx(math.asin(x), rel=1e-14)


def test_hyp2f1_domain():
    with pytest.raises(DomainError):
        specfun.hyp2f1(1.0, 1.0, -2.0, 0.5)
    with pytest.raises(DomainError):
        specfun.hyp2f1(1.0, 1.0, 2.0, 1.0)
    with pytest.raises(DomainError):
        specfun.hyp2f1(1.0, 1.0, 2.0, -1.5)


def test_hyp2f1_reports_nonconvergence():
    with pytest.raises(ConvergenceError) as info:
        specfun.hyp2f1(0.5, 0.5, 1.5, 0.999999, EvalOptions(max_terms=50))
    assert info.value.estimate is not None


def test_digamma_recurrence_matches_mpmath_on_grid():
    for x in (0.01, 0.5, 1.7, 9.99, 10.0, 55.0):
        assert specfun.digamma(x) == pytest.approx(float(mpmath.digamma(x)), rel=1e-13, abs=1e-15)


@given(st.floats(min_value=1e-3, max_value=50.0))
def test_digamma_functional_equation(x):
    assert specfun.digamma(x + 1) - specfun.digamma(x) == pytest.approx(1 / x, rel=1e-11)


@given(st.floats(min_value=0.05, max_value=30.0), st.floats(min_value=0.05, max_value=30.0))
def test_beta_symmetric(x, y):
    assert specfun.beta(x, y) == specfun.beta(y, x)


@given(st.floats(min_value=0.1, max_value=3.0), st.floats(min_value=0.1, max_value=3.0),
       st.floats(min_value=0.2, max_value=4.0), st.floats(min_value=-1.0, max_value=0.9))
@settings(max_examples=60, deadline=None)
def test_hyp2f1_error_bound_is_honest(a, b, c, z):
    e = specfun.hyp2f1(a, b, c, z)
    exact = float(mpmath.hyp2f1(a, b, c, z))
    assert abs(e.value - exact) <= e.err + 4e-16 * abs(exact)
