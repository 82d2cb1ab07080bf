import math

import mpmath
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from fracorder.errors import GammaPoleError
from fracorder.specfun import (
    _binom_gamma,
    _binom_trig,
    gamma,
    gen_binom,
    lgamma_abs,
    pochhammer,
    rgamma,
    sinc,
    sinpi,
)

SQRT_PI = math.sqrt(math.pi)


def rel(a, b):
    return abs(a - b) / max(abs(b), 1e-300)


@pytest.mark.parametrize("x, expected", [(1.0, 1.0), (5.0, 24.0), (0.5, SQRT_PI)])
def test_gamma_examples(x, expected):
    assert gamma(x) == pytest.approx(expected, rel=1e-14)


def test_gamma_half_matches_integral_of_definition():
    # integral of x**-0.5 e**-x over (0, inf) with x = u**2, independent of any Gamma code
    integral = 2 * mpmath.quad(lambda u: mpmath.e ** (-u * u), [0, 1, mpmath.inf])
    assert gamma(0.5) == pytest.approx(float(integral), rel=1e-13)


@pytest.mark.parametrize("x", [0.0, -1.0, -2.0, -17.0, -3.0 + 5e-13])
def test_gamma_pole_raises(x):
    with pytest.raises(GammaPoleError):
        gamma(x)


def test_gamma_overflow_raises():
    with pytest.raises(OverflowError):
        gamma(180.0)


@settings(max_examples=500, deadline=None)
@given(st.floats(min_value=-170.0, max_value=170.0))
def test_gamma_twelve_digits(x):
    assume(round(x) > 0 or abs(x - round(x)) > 1e-9)
    ref = mpmath.gamma(mpmath.mpf(x))
    assert rel(gamma(x), float(ref)) < 1e-12


def test_lgamma_abs_matches_math():
    for x in (0.3, 2.5, 50.0, 300.0, -4.5, -100.25):
        assert lgamma_abs(x) == pytest.approx(math.lgamma(x), rel=1e-13, abs=1e-13)


@pytest.mark.parametrize("x, expected", [(-3.0, 0.0), (1.0, 1.0), (0.5, 1.0 / SQRT_PI), (0.0, 0.0)])
def test_rgamma_examples(x, expected):
    assert rgamma(x) == pytest.approx(expected, rel=1e-14, abs=0.0)


def test_rgamma_exact_zero_at_poles():
    for k in range(0, 60):
        assert rgamma(-float(k)) == 0.0


def test_rgamma_continuous_through_pole():
    # 1/Gamma(-2 + e) ~ 2 e near the pole at -2
    for eps in (1e-4, 1e-8, 1e-12):
        assert rgamma(-2.0 + eps) == pytest.approx(2.0 * eps, rel=1e-3)
        assert rgamma(-2.0 - eps) == pytest.approx(-2.0 * eps, rel=1e-3)


def test_rgamma_large_arguments():
    assert rgamma(200.0) == pytest.approx(float(mpmath.rgamma(200)), rel=1e-12)
    assert rgamma(-180.5) == pytest.approx(float(mpmath.rgamma(-180.5)), rel=1e-12)


@settings(max_examples=300, deadline=None)
@given(st.floats(min_value=-160.0, max_value=160.0))
def test_rgamma_times_gamma_is_one(x):
    assume(round(x) > 0 or abs(x - round(x)) > 1e-9)
    assert abs(rgamma(x) * gamma(x) - 1.0) < 1e-12


@pytest.mark.parametrize("x, expected", [(0.0, 1.0), (1.0, 0.0), (0.5, 2.0 / math.pi), (-0.5, 2.0 / math.pi)])
def test_sinc_examples(x, expected):
    assert sinc(x) == pytest.approx(expected, rel=1e-15, abs=1e-16)


def test_sinc_series_branch_continuity():
    for x in (1e-9, 9.99e-9, 1.0001e-8, 3e-8):
        direct = math.sin(math.pi * x) / (math.pi * x)
        assert abs(sinc(x) - direct) <= 1e-14


@settings(max_examples=300, deadline=None)
@given(st.floats(min_value=1e-8, max_value=1e6))
def test_sinc_relative_accuracy(x):
    assume(abs(x - round(x)) > 1e-6)
    ref = mpmath.sinpi(mpmath.mpf(x)) / (mpmath.pi * x)
    assert rel(sinc(x), float(ref)) <= 1e-14 * max(1.0, 1e-6 / abs(x - round(x)))


def test_sinpi_exact_at_integers():
    for k in range(-50, 51):
        assert sinpi(float(k)) == 0.0
    assert sinpi(0.5) == 1.0
    assert sinpi(-1.5) == 1.0


@pytest.mark.parametrize("z, n, expected", [(1.0, 4, 24.0), (3.7, 0, 1.0), (0.5, 2, 0.75)])
def test_pochhammer_examples(z, n, expected):
    assert pochhammer(z, n) == expected


@pytest.mark.parametrize("z", [0.1, 0.5, 1.3, 2.7])
@pytest.mark.parametrize("n", range(11))
def test_pochhammer_gamma_relation(z, n):
    assert rel(gamma(z + n), pochhammer(z, n) * gamma(z)) < 1e-10


@pytest.mark.parametrize("n, alpha, expected", [(4, 2.0, 6.0), (3, -1.0, 0.0)])
def test_gen_binom_integer_examples(n, alpha, expected):
    assert gen_binom(n, alpha) == expected


def test_gen_binom_half_order():
    # hand-evaluated trigonometric form 2 sin(pi/2) / (pi 0.5 (0.5)(1.5))
    assert gen_binom(2, 0.5) == pytest.approx(16.0 / (3.0 * math.pi), rel=1e-14)
    assert _binom_gamma(2, 0.5) == pytest.approx(_binom_trig(2, 0.5), rel=1e-14)


@pytest.mark.parametrize("n", [0, 1, 2, 5, 10, 20])
def test_gen_binom_integer_values(n):
    for k in range(-5, n + 6):
        assert gen_binom(n, float(k)) == pytest.approx(math.comb(n, k) if 0 <= k <= n else 0.0, abs=1e-9)


@pytest.mark.parametrize("n", [0, 1, 3, 7, 12, 30])
def test_gen_binom_branches_agree_on_overlap(n):
    worst = 0.0
    for i in range(200):
        a = n + 1 + 0.0173 * i
        for alpha in (a, -a):
            trig = _binom_trig(n, alpha)
            if trig != 0.0:
                worst = max(worst, rel(_binom_gamma(n, alpha), trig))
    assert worst < 1e-10


@settings(max_examples=300, deadline=None)
@given(st.integers(min_value=0, max_value=12), st.floats(min_value=-30.0, max_value=30.0))
def test_gen_binom_matches_mpmath(n, alpha):
    ref = float(mpmath.binomial(n, mpmath.mpf(alpha)))
    assert abs(gen_binom(n, alpha) - ref) <= 1e-10 * max(abs(ref), 1e-12) + 1e-15


@settings(max_examples=300, deadline=None)
@given(st.floats(min_value=-5.0, max_value=5.0))
def test_reflection_formula(alpha):
    assume(abs(alpha - round(alpha)) > 1e-6)
    assert rel(gamma(1 + alpha) * gamma(1 - alpha) * sinc(alpha), 1.0) < 1e-10


@pytest.mark.parametrize("alpha", [float(k) for k in range(-5, 6)])
def test_reflection_pole_safe_at_integers(alpha):
    assert rgamma(1 + alpha) * rgamma(1 - alpha) == pytest.approx(sinc(alpha), abs=1e-15)


@settings(max_examples=300, deadline=None)
@given(st.integers(min_value=0, max_value=15), st.floats(min_value=-25.0, max_value=25.0))
def test_binomial_symmetry(n, alpha):
    # the mirrored argument must be exact, or rounding can land it on an integer zero
    assume(n - (n - alpha) == alpha)
    a, b = gen_binom(n, alpha), gen_binom(n, n - alpha)
    assert abs(a - b) <= 1e-10 * max(abs(a), abs(b), 1e-300)


@settings(max_examples=300, deadline=None)
@given(st.integers(min_value=1, max_value=15), st.floats(min_value=-25.0, max_value=25.0))
def test_binomial_recurrence(n, alpha):
    left = gen_binom(n - 1, alpha)
    right = gen_binom(n - 1, alpha - 1)
    total = gen_binom(n, alpha)
    # relative to the summands: the sum itself may cancel near a zero
    assert abs(total - (left + right)) <= 1e-10 * max(abs(left) + abs(right), 1e-300)
