import math

import mpmath
import pytest
from hypothesis import assume, given, strategies as st

from stablelaw import special
from stablelaw.errors import DomainError

reals = st.floats(-20.0, 20.0, allow_nan=False)


def off_pole(r):
    return round(r) > 0 or abs(r - round(r)) > 1e-6


@given(reals)
def test_gamma_matches_mpmath(r):
    assume(off_pole(r))
    ref = float(mpmath.gamma(r))
    assert special.gamma(r) == pytest.approx(ref, rel=1e-12)


@given(st.floats(-8.0, 8.0))
def test_reflection(r):
    assume(abs(r - round(r)) > 1e-4)
    assert special.gamma(r) * special.gamma(1 - r) * special.sinpi(r) == pytest.approx(math.pi, rel=1e-11)


@given(st.floats(-8.0, 8.0))
def test_recursion(r):
    assume(abs(r - round(r)) > 1e-4 and abs(r + 1 - round(r + 1)) > 1e-4)
    assert special.gamma(r + 1) == pytest.approx(r * special.gamma(r), rel=1e-12)


def test_gamma_examples():
    assert special.gamma(1.0) == pytest.approx(1.0, rel=1e-15)
    assert special.gamma(0.5) == pytest.approx(math.sqrt(math.pi), rel=1e-14)
    assert special.gamma(-0.5) == pytest.approx(-2 * math.sqrt(math.pi), rel=1e-14)
    assert special.gamma(171.5) == pytest.approx(float(mpmath.gamma(171.5)), rel=1e-12)


@pytest.mark.parametrize("r", [0.0, -1.0, -2.0, -7.0, -3.0 + 1e-13])
def test_gamma_poles(r):
    with pytest.raises(DomainError, match=str(round(r))):
        special.gamma(r)


@pytest.mark.parametrize("r", [math.nan, math.inf])
def test_gamma_nonfinite(r):
    with pytest.raises(DomainError):
        special.gamma(r)


@given(st.integers(-1000, 1000))
def test_sinpi_exact_zeros(n):
    assert special.sinpi(float(n)) == 0.0
    assert special.cospi(n + 0.5) == 0.0


@given(st.floats(-50.0, 50.0))
def test_sinpi_cospi_match_mpmath(x):
    assert special.sinpi(x) == pytest.approx(float(mpmath.sinpi(x)), abs=1e-15)
    assert special.cospi(x) == pytest.approx(float(mpmath.cospi(x)), abs=1e-15)


def test_k_alpha_examples():
    assert special.k_alpha(1.0) == pytest.approx(math.pi / 2, rel=1e-15)
    assert special.k_alpha(0.5) == pytest.approx(math.sqrt(2 * math.pi), rel=1e-14)
    for d in (1e-8, -1e-8, 1e-7, -1e-5):
        assert abs(special.k_alpha(1 + d) - math.pi / 2) <= 1e-7 + 2 * abs(d)


@given(st.floats(1e-3, 1.999))
def test_k_alpha_positive_and_matches_mpmath(a):
    assume(abs(a - 1) > 1e-6)
    ref = float(-mpmath.gamma(-a) * mpmath.cos(mpmath.pi * a / 2))
    k = special.k_alpha(a)
    assert k > 0
    assert k == pytest.approx(ref, rel=1e-11)


@pytest.mark.parametrize("a", [0.0, 2.0, -0.1, 2.5])
def test_k_alpha_domain(a):
    with pytest.raises(DomainError):
        special.k_alpha(a)


def test_c_s_examples():
    assert special.s_kappa(1.0) == pytest.approx(math.pi / 2, rel=1e-15)
    assert special.c_kappa(0.5) == pytest.approx(math.sqrt(math.pi / 2), rel=1e-14)
    assert special.s_kappa(0.5) == pytest.approx(math.sqrt(math.pi / 2), rel=1e-14)
    assert special.c_kappa(2.0) == pytest.approx(-math.pi / 2, rel=1e-14)


@given(st.floats(0.01, 6.0))
def test_c_over_s_is_tan(k):
    assume(abs(k - round(k)) > 1e-4)
    ratio = special.c_kappa(k) / special.s_kappa(k)
    assert ratio == pytest.approx(math.tan(math.pi * k / 2), rel=1e-10)


@given(st.floats(0.01, 6.0))
def test_c_s_match_gamma_forms(k):
    assume(abs(k - round(k)) > 1e-4)
    g = mpmath.gamma(1 - k)
    assert special.c_kappa(k) == pytest.approx(float(g * mpmath.sin(mpmath.pi * k / 2)), rel=1e-10)
    assert special.s_kappa(k) == pytest.approx(float(g * mpmath.cos(mpmath.pi * k / 2)), rel=1e-10)


def test_c_s_excluded():
    for k in (1.0, 3.0, 5.0):
        with pytest.raises(DomainError):
            special.c_kappa(k)
    for k in (2.0, 4.0):
        with pytest.raises(DomainError):
            special.s_kappa(k)
    with pytest.raises(DomainError):
        special.c_kappa(0.0)


def test_omega():
    for t in (0.1, 1.0, 5.0):
        assert special.omega(2.0, t) == 0.0
        assert special.omega(0.5, t) == pytest.approx(1.0, rel=1e-15)
    assert special.omega(1.0, 1.0) == 0.0
    assert special.omega(1.0, math.e) == pytest.approx(-2 / math.pi)
    with pytest.raises(DomainError):
        special.omega(1.0, 0.0)
    with pytest.raises(DomainError):
        special.omega(2.5)
