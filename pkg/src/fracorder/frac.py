r"""Riemann-Liouville fractional integrals and derivatives.

Closed forms act on shifted powers and power series,

.. math::

    D_a^\alpha (t-a)^{\beta-1} = \frac{\Gamma(\beta)}{\Gamma(\beta-\alpha)}(t-a)^{\beta-\alpha-1},

and are defined for every real order through the reciprocal Gamma (for
negative orders they coincide with the fractional integral of order
``-alpha``).  :func:`rl_integral_numeric` and :func:`rl_deriv_numeric` evaluate
the defining integral directly and exist only to cross-check the closed forms.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

from . import gauss
from .errors import DomainError
from .specfun import gamma, rgamma

__all__ = [
    "ShiftedPower",
    "PowerSeries",
    "FracOrder",
    "rl_deriv_power",
    "rl_deriv_series",
    "rl_integral_numeric",
    "rl_deriv_numeric",
]


@dataclass(frozen=True)
class ShiftedPower:
    """The function t -> (t - a)**(beta - 1)."""

    a: float
    beta: float

    def __post_init__(self):
        if not self.beta > 0:
            raise DomainError(f"ShiftedPower needs beta > 0, got {self.beta}")

    def __call__(self, t: float) -> float:
        return (t - self.a) ** (self.beta - 1.0)


@dataclass(frozen=True)
class PowerSeries:
    """Truncated Taylor series sum(c_k t**k, k = 0..K) about the origin.

    ``tail`` optionally maps k -> c_k for k > K.  It is only consulted by
    :meth:`remainder_bound`, which reports the truncation error; series built
    from an explicit polynomial leave it unset and have no remainder.
    """

    coeffs: tuple[float, ...]
    radius: float = math.inf
    tail: Optional[Callable[[int], float]] = field(default=None, compare=False)

    def __post_init__(self):
        coeffs = tuple(float(c) for c in self.coeffs)
        if not coeffs:
            raise DomainError("PowerSeries needs at least one coefficient")
        if not all(math.isfinite(c) for c in coeffs):
            raise DomainError("PowerSeries coefficients must be finite")
        if not self.radius > 0:
            raise DomainError(f"radius must be positive, got {self.radius}")
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def from_function(cls, coeff: Callable[[int], float], order: int, radius: float = math.inf):
        """Truncate the series with coefficient function ``coeff`` after ``order``."""
        return cls(tuple(coeff(k) for k in range(order + 1)), radius, coeff)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, t: float) -> float:
        acc = 0.0
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def scaled(self, factor: float) -> "PowerSeries":
        """Series of s -> f(factor * s)."""
        coeffs = tuple(c * factor**k for k, c in enumerate(self.coeffs))
        tail = None
        if self.tail is not None:
            base = self.tail
            tail = lambda k: base(k) * factor**k  # noqa: E731
        radius = math.inf if factor == 0 else self.radius / abs(factor)
        return PowerSeries(coeffs, radius, tail)

    def __add__(self, other: "PowerSeries") -> "PowerSeries":
        size = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0.0,) * (size - len(self.coeffs))
        b = other.coeffs + (0.0,) * (size - len(other.coeffs))
        return PowerSeries(tuple(x + y for x, y in zip(a, b)), min(self.radius, other.radius))

    def __rmul__(self, c: float) -> "PowerSeries":
        tail = None
        if self.tail is not None:
            base = self.tail
            tail = lambda k: c * base(k)  # noqa: E731
        return PowerSeries(tuple(c * x for x in self.coeffs), self.radius, tail)

    def remainder_bound(self, t: float, max_terms: int = 100_000) -> float:
        """Return sum(|c_k| |t|**k, k > K), or 0 when no tail is attached."""
        if self.tail is None or t == 0:
            return 0.0
        if abs(t) >= self.radius:
            return math.inf
        total = 0.0
        small = 0
        k = self.order + 1
        power = abs(t) ** k
        for _ in range(max_terms):
            term = abs(self.tail(k)) * power
            total += term
            # sin-type series have zero coefficients every other k
            small = small + 1 if term <= 1e-18 * total else 0
            if small >= 3 or power == 0.0:
                break
            k += 1
            power *= abs(t)
        return total


@dataclass(frozen=True)
class FracOrder:
    """Derivative order alpha with its integer ceiling m (m - 1 < alpha < m)."""

    alpha: float

    @property
    def m(self) -> int:
        return max(1, math.ceil(self.alpha))


def rl_deriv_power(p: ShiftedPower, alpha: float, t: float) -> float:
    """D_a^alpha of (t - a)**(beta - 1); exactly zero when beta - alpha is a pole of Gamma."""
    if not t > p.a:
        raise DomainError(f"need t > a, got t={t}, a={p.a}")
    r = rgamma(p.beta - alpha)
    if r == 0.0:
        return 0.0
    return gamma(p.beta) * r * (t - p.a) ** (p.beta - alpha - 1.0)


def rl_deriv_series(f: PowerSeries, alpha: float, t: float) -> float:
    """Term-wise D^alpha of a power series at ``t`` (lower limit 0)."""
    if not 0.0 < t < f.radius:
        raise DomainError(f"need 0 < t < {f.radius}, got t={t}")
    terms = []
    for k, c in enumerate(f.coeffs):
        if c == 0.0:
            continue
        r = rgamma(k + 1.0 - alpha)
        if r == 0.0:
            continue
        terms.append(c * math.factorial(k) * r * t ** (k - alpha))
    return math.fsum(terms)


def rl_integral_numeric(
    f: Callable[[float], float],
    alpha: float,
    t: float,
    tol: float = 1e-10,
    max_depth: int = 50,
) -> float:
    """J^alpha f(t) by quadrature of the defining convolution integral.

    The kernel singularity is removed with tau = t - u**(1/alpha), giving
    J^alpha f(t) = 1/Gamma(alpha + 1) * integral of f(t - u**(1/alpha)) over
    u in [0, t**alpha].
    """
    if not alpha > 0:
        raise DomainError(f"need alpha > 0, got {alpha}")
    if not t > 0:
        raise DomainError(f"need t > 0, got {t}")
    inv = 1.0 / alpha
    scale = gamma(alpha + 1.0)
    upper = t**alpha
    value = gauss.adaptive(
        lambda u: f(max(t - u**inv, 0.0)), 0.0, upper, tol * scale, max_depth=max_depth
    )
    return value / scale


def _central_difference(u: Callable[[float], float], t: float, m: int, h: float) -> float:
    # m-th central difference on the half-step stencil t + (m/2 - k) h
    terms = [
        (-1) ** k * math.comb(m, k) * u(t + (0.5 * m - k) * h) for k in range(m + 1)
    ]
    return math.fsum(terms) / h**m


def rl_deriv_numeric(
    f: Callable[[float], float],
    order: FracOrder,
    t: float,
    h: float = 1e-3,
    tol: float = 1e-10,
) -> float:
    """D^alpha f(t) as the m-th finite difference of J^(m - alpha) f.

    An oracle only: accuracy is O(h**2) plus quadrature noise of order tol/h**m.
    """
    alpha = order.alpha
    if not alpha > 0 or alpha == math.floor(alpha):
        raise DomainError(f"numeric derivative needs non-integer alpha > 0, got {alpha}")
    m = order.m
    if not t - m * h > 0:
        raise DomainError(f"stencil leaves the domain: t={t}, m={m}, h={h}")
    return _central_difference(lambda s: rl_integral_numeric(f, m - alpha, s, tol), t, m, h)


def power_series(coeffs: Sequence[float], radius: float = math.inf) -> PowerSeries:
    """Convenience constructor for an exact polynomial."""
    return PowerSeries(tuple(coeffs), radius)
