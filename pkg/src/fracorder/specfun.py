r"""Real special functions used by the order-integration machinery.

Gamma is evaluated with a Lanczos approximation (g = 7, nine terms) and the
reflection formula below 1/2.  Every formula that has Gamma in a denominator
goes through :func:`rgamma`, which is entire and vanishes exactly at the
nonpositive integers, so sampling integer orders never produces ``nan``.

The generalized binomial coefficient has two evaluation routes:

.. math::

    \binom{n}{\alpha} = \frac{n!}{\Gamma(n+1-\alpha)\Gamma(1+\alpha)}
                      = \frac{n!\,\sin(\pi\alpha)}{\pi\alpha\,(1-\alpha)_n},

the second obtained from the reflection formula and the Pochhammer relation.
It is used for :math:`|\alpha| > n + 1`, where the Gamma route would overflow.
"""

from __future__ import annotations

import math

from .errors import GammaPoleError

__all__ = [
    "gamma",
    "rgamma",
    "lgamma_abs",
    "sinpi",
    "sinc",
    "pochhammer",
    "gen_binom",
]

_LANCZOS_G = 7.0
_LANCZOS_COEFFS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)
_SQRT_2PI = math.sqrt(2.0 * math.pi)
_LOG_SQRT_2PI = 0.5 * math.log(2.0 * math.pi)
_POLE_TOL = 1e-12
# Gamma overflows a double just above 171.62
_GAMMA_MAX_ARG = 171.6


def sinpi(x: float) -> float:
    """Return sin(pi*x), exact at integers and accurate for large |x|."""
    if not math.isfinite(x):
        return math.nan
    # reduce to [-1, 1]; both steps are exact in binary floating point
    r = x - 2.0 * round(0.5 * x)
    if r > 0.5:
        r = 1.0 - r
    elif r < -0.5:
        r = -1.0 - r
    return math.sin(math.pi * r)


def _lanczos_sum(z: float) -> float:
    acc = _LANCZOS_COEFFS[0]
    for i in range(1, len(_LANCZOS_COEFFS)):
        acc += _LANCZOS_COEFFS[i] / (z + i)
    return acc


def _gamma_right(x: float) -> float:
    # x >= 0.5
    z = x - 1.0
    t = z + _LANCZOS_G + 0.5
    # split the power so t**(z + 0.5) cannot overflow before exp(-t) scales it
    half = t ** (0.5 * (z + 0.5))
    return _SQRT_2PI * (half * math.exp(-t)) * half * _lanczos_sum(z)


def _lgamma_right(x: float) -> float:
    z = x - 1.0
    t = z + _LANCZOS_G + 0.5
    return _LOG_SQRT_2PI + (z + 0.5) * math.log(t) - t + math.log(_lanczos_sum(z))


def _near_pole(x: float) -> bool:
    if x > 0.5:
        return False
    return abs(x - round(x)) <= _POLE_TOL


def gamma(x: float) -> float:
    """Euler's Gamma function for real ``x``.

    Raises :class:`GammaPoleError` at nonpositive integers and
    :class:`OverflowError` when the result exceeds the double range.
    """
    x = float(x)
    if _near_pole(x):
        raise GammaPoleError(f"Gamma has a pole at x = {x!r}")
    if x >= 0.5:
        if x > _GAMMA_MAX_ARG:
            raise OverflowError(f"Gamma({x!r}) overflows")
        if x == math.floor(x):
            return float(math.factorial(int(x) - 1))
        return _gamma_right(x)
    # reflection: Gamma(x) Gamma(1 - x) = pi / sin(pi x)
    s = sinpi(x)
    if 1.0 - x > _GAMMA_MAX_ARG:
        return math.copysign(math.exp(math.log(math.pi) - math.log(abs(s)) - _lgamma_right(1.0 - x)), s)
    return math.pi / (s * _gamma_right(1.0 - x))


def lgamma_abs(x: float) -> float:
    """Return log|Gamma(x)|; raises at the poles like :func:`gamma`."""
    x = float(x)
    if _near_pole(x):
        raise GammaPoleError(f"Gamma has a pole at x = {x!r}")
    if x >= 0.5:
        return _lgamma_right(x)
    return math.log(math.pi) - math.log(abs(sinpi(x))) - _lgamma_right(1.0 - x)


def rgamma(x: float) -> float:
    """Reciprocal Gamma ``1/Gamma(x)``; an entire function, zero at 0, -1, -2, ..."""
    x = float(x)
    if x <= 0.0 and x == math.floor(x):
        return 0.0
    if x >= 0.5:
        if x > _GAMMA_MAX_ARG:
            return math.exp(-_lgamma_right(x))
        if x == math.floor(x):
            return 1.0 / math.factorial(int(x) - 1)
        return 1.0 / _gamma_right(x)
    s = sinpi(x)
    if 1.0 - x > _GAMMA_MAX_ARG:
        log_mag = math.log(abs(s)) + _lgamma_right(1.0 - x) - math.log(math.pi)
        if log_mag > 709.0:
            return math.copysign(math.inf, s)
        return math.copysign(math.exp(log_mag), s)
    return s * _gamma_right(1.0 - x) / math.pi


def sinc(x: float) -> float:
    """Normalized cardinal sine sin(pi x)/(pi x), with sinc(0) = 1."""
    x = float(x)
    if abs(x) < 1e-8:
        px = math.pi * x
        return 1.0 - px * px / 6.0
    return sinpi(x) / (math.pi * x)


def pochhammer(z: float, n: int) -> float:
    """Rising factorial (z)_n = z (z + 1) ... (z + n - 1); (z)_0 = 1."""
    if n < 0:
        raise ValueError("pochhammer requires n >= 0")
    acc = 1.0
    for i in range(n):
        acc *= z + i
    return acc


def _binom_gamma(n: int, alpha: float) -> float:
    return float(math.factorial(n)) * rgamma(n + 1.0 - alpha) * rgamma(1.0 + alpha)


def _binom_trig(n: int, alpha: float) -> float:
    s = sinpi(alpha)
    if s == 0.0:
        return 0.0
    return float(math.factorial(n)) * s / (math.pi * alpha * pochhammer(1.0 - alpha, n))


def gen_binom(n: int, alpha: float) -> float:
    """Binomial coefficient C(n, alpha) for integer ``n >= 0`` and real ``alpha``.

    Equals the usual binomial coefficient at integer ``alpha`` and decays like
    ``|alpha|**-(n+1)`` as ``|alpha|`` grows.
    """
    if n < 0:
        raise ValueError("gen_binom requires n >= 0")
    alpha = float(alpha)
    if alpha == math.floor(alpha):
        k = int(alpha)
        return float(math.comb(n, k)) if 0 <= k <= n else 0.0
    if abs(alpha) > n + 1:
        return _binom_trig(n, alpha)
    return _binom_gamma(n, alpha)
