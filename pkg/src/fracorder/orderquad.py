r"""Integrals over the derivative order alpha on the whole real line.

The integrands have the form ``sin(pi*alpha) * R(alpha)`` with ``R`` decaying
like ``|alpha|**-d``.  The real line is cut into unit panels with integer
endpoints, where ``sin(pi*alpha)`` vanishes, so each panel is single-signed far
from the origin.  Panels are grouped into *periods*: with symmetric (principal
value) pairing, period ``k`` is ``[k, k+1]`` together with ``[-k-1, -k]``.
The period sums form an alternating series.  For ``d = 1`` (``sinc``) that
series converges only conditionally, so its tail is summed with the Euler
transformation.

The central identity evaluated here is

.. math::

    \int_{-\infty}^{\infty} \frac{t^\alpha}{\Gamma(1+\alpha)} D^\alpha t^{n-1}\,d\alpha
        = t^{n-1}\int_{-\infty}^{\infty}\binom{n-1}{\alpha}\,d\alpha = (2t)^{n-1}.

For a power series ``f``, ``D^alpha f(t/2)`` is read as the derivative of the
composite ``s -> f(s/2)`` evaluated at ``s = t``.  Term by term the identity
above then gives ``sum c_k 2**-k t**k 2**k = f(t)``.  Reading it as
``(D^alpha f)(t/2)`` instead leaves a factor ``2**alpha`` in the integrand and
the integral diverges.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Callable, Sequence

from . import gauss
from .errors import DomainError
from .frac import PowerSeries, ShiftedPower, rl_deriv_power
from .specfun import gen_binom, rgamma, sinc, sinpi

__all__ = [
    "QuadratureConfig",
    "OrderIntegralResult",
    "euler_sum",
    "accelerated_partial_sums",
    "period_sums",
    "raw_partial_sum",
    "tail_bound",
    "integrate_order",
    "lemma_integrand",
    "lemma_integral",
    "binom_integral",
    "main_identity_eval",
]

_EPS = 2.220446049250313e-16


@dataclass(frozen=True)
class QuadratureConfig:
    panel_order: int = 16
    max_periods: int = 10_000
    accel_terms: int = 24
    abs_tol: float = 1e-10
    pv_symmetric: bool = True

    def __post_init__(self):
        if self.panel_order < 4:
            raise ValueError(f"panel_order must be >= 4, got {self.panel_order}")
        if self.accel_terms < 4:
            raise ValueError(f"accel_terms must be >= 4, got {self.accel_terms}")
        if not self.abs_tol > 0:
            raise ValueError(f"abs_tol must be positive, got {self.abs_tol}")
        if self.max_periods < self.accel_terms + 1:
            raise ValueError("max_periods must exceed accel_terms")


@dataclass
class OrderIntegralResult:
    value: float
    err_estimate: float
    periods_used: int
    converged: bool
    used_acceleration: bool
    # truncation error of a power series, reported separately by main_identity_eval
    series_remainder: float = 0.0


def euler_sum(terms: Sequence[float]) -> tuple[float, float]:
    """Sum an alternating series from its leading terms by the Euler transformation.

    With ``terms[j] = (-1)**j * b_j`` the sum is rewritten as
    ``sum_p (-1)**p * Delta^p b_0 / 2**(p+1)``.  Returns the transformed sum and
    the magnitude of its last retained correction.
    """
    b = [(-1) ** j * x for j, x in enumerate(terms)]
    acc = []
    sign = 1.0
    scale = 0.5
    last = 0.0
    while b:
        last = sign * b[0] * scale
        acc.append(last)
        b = [b[i + 1] - b[i] for i in range(len(b) - 1)]
        sign = -sign
        scale *= 0.5
    return math.fsum(acc), abs(last)


def accelerated_partial_sums(terms: Sequence[float], accel_terms: int) -> list[float]:
    """Accelerated estimate of the full sum after each prefix of ``terms``.

    The prefix of length P is split into ``P - accel_terms`` plainly summed
    terms followed by an Euler-transformed window of at most ``accel_terms``.
    """
    out = []
    for p in range(1, len(terms) + 1):
        split = max(0, p - accel_terms)
        head = math.fsum(terms[:split])
        tail, _ = euler_sum(terms[split:p])
        out.append(head + tail)
    return out


def _panel(g: Callable[[float], float], m: int, order: int) -> float:
    return gauss.fixed(g, float(m), float(m + 1), order)


def period_sums(
    g: Callable[[float], float], start: int, count: int, cfg: QuadratureConfig
) -> list[float]:
    """Integrals of ``g`` over periods ``start .. start+count-1`` (symmetric pairs)."""
    return [
        _panel(g, k, cfg.panel_order) + _panel(g, -k - 1, cfg.panel_order)
        for k in range(start, start + count)
    ]


def _half_line_sums(
    g: Callable[[float], float], start: int, count: int, cfg: QuadratureConfig, side: int
) -> list[float]:
    if side > 0:
        return [_panel(g, k, cfg.panel_order) for k in range(start, start + count)]
    return [_panel(g, -k - 1, cfg.panel_order) for k in range(start, start + count)]


def raw_partial_sum(g: Callable[[float], float], periods: int, cfg: QuadratureConfig) -> float:
    """Unaccelerated integral of ``g`` over [-periods, periods]."""
    return math.fsum(period_sums(g, 0, periods, cfg))


def tail_bound(g: Callable[[float], float], decay_exponent: int, cutoff: float) -> float:
    """Estimate of the integral of |g| beyond |alpha| = cutoff.

    Uses |R(alpha)| <= C |alpha|**-d with C sampled at the panel midpoints just
    past the cutoff, where |sin(pi*alpha)| = 1.  Infinite for d = 1.
    """
    if decay_exponent <= 1:
        return math.inf
    a = cutoff + 0.5
    c = max(abs(g(a) / sinpi(a)), abs(g(-a) / sinpi(-a))) * a**decay_exponent
    return 2.0 * c / ((decay_exponent - 1) * cutoff ** (decay_exponent - 1))


def _alternates(xs: Sequence[float]) -> bool:
    return all(x * y < 0.0 for x, y in zip(xs, xs[1:]))


class _SeriesCache:
    """Lazily extended list of period sums for one integrand."""

    def __init__(self, produce: Callable[[int, int], list[float]]):
        self._produce = produce
        self.terms: list[float] = []

    def upto(self, count: int) -> list[float]:
        if count > len(self.terms):
            self.terms.extend(self._produce(len(self.terms), count - len(self.terms)))
        return self.terms[:count]


def _roundoff(terms: Sequence[float]) -> float:
    return 8.0 * _EPS * math.fsum(abs(x) for x in terms)


def _accelerate(cache: _SeriesCache, start: int, cfg: QuadratureConfig) -> tuple[float, float, float, int] | None:
    # plain head over [0, start), Euler on the next accel_terms periods
    span = start + cfg.accel_terms
    terms = cache.upto(span)
    window = terms[start:]
    if not _alternates(window):
        return None
    tail, correction = euler_sum(window)
    head = math.fsum(terms[:start])
    roundoff = _roundoff(terms)
    return head + tail, correction + roundoff, roundoff, span


def _sum_series(
    cache: _SeriesCache,
    g: Callable[[float], float],
    decay_exponent: int,
    cfg: QuadratureConfig,
    start: int,
) -> OrderIntegralResult:
    best: OrderIntegralResult | None = None
    while start + cfg.accel_terms <= cfg.max_periods:
        attempt = _accelerate(cache, start, cfg)
        if attempt is not None:
            value, err, roundoff, used = attempt
            result = OrderIntegralResult(value, err, used, err <= cfg.abs_tol, True)
            if result.converged:
                return result
            if best is None or err < best.err_estimate:
                best = result
            if roundoff > cfg.abs_tol:
                # more periods cannot beat rounding in the head sum
                return best
        start *= 2
    if decay_exponent >= 2:
        # terms never settled into alternation: plain summation with tail bound
        count = min(cfg.max_periods, max(len(cache.terms), 16))
        while True:
            terms = cache.upto(count)
            bound = tail_bound(g, decay_exponent, count)
            err = bound + _roundoff(terms)
            if err <= cfg.abs_tol or count >= cfg.max_periods:
                plain = OrderIntegralResult(math.fsum(terms), err, count, err <= cfg.abs_tol, False)
                break
            count = min(cfg.max_periods, 2 * count)
        if plain.converged or best is None or plain.err_estimate < best.err_estimate:
            return plain
    if best is None:
        total = math.fsum(cache.upto(min(cfg.max_periods, len(cache.terms) or 1)))
        return OrderIntegralResult(total, math.inf, len(cache.terms), False, False)
    return best


def integrate_order(
    g: Callable[[float], float],
    decay_exponent: int,
    cfg: QuadratureConfig | None = None,
    start: int | None = None,
) -> OrderIntegralResult:
    """Integrate ``g(alpha) = sin(pi*alpha) R(alpha)`` over the whole real line.

    ``decay_exponent`` is d in ``|R(alpha)| = O(|alpha|**-d)``.  Periods
    ``0 .. start-1`` are summed plainly and the tail is Euler-transformed; if
    the error estimate exceeds ``cfg.abs_tol`` the plain head is doubled until
    ``cfg.max_periods`` would be exceeded, in which case the best estimate is
    returned with ``converged=False``.
    """
    cfg = cfg or QuadratureConfig()
    if decay_exponent < 1:
        raise DomainError("decay_exponent must be >= 1")
    if start is None:
        start = max(8, decay_exponent + 2)
    if cfg.pv_symmetric:
        cache = _SeriesCache(lambda s, c: period_sums(g, s, c, cfg))
        return _sum_series(cache, g, decay_exponent, cfg, start)
    # one-sided: each half line converges on its own for the integrands here
    halves = []
    for side in (1, -1):
        cache = _SeriesCache(lambda s, c, side=side: _half_line_sums(g, s, c, cfg, side))
        halves.append(_sum_series(cache, g, decay_exponent, cfg, start))
    err = sum(h.err_estimate for h in halves)
    return OrderIntegralResult(
        halves[0].value + halves[1].value,
        err,
        max(h.periods_used for h in halves),
        err <= cfg.abs_tol,
        any(h.used_acceleration for h in halves),
    )


def lemma_integrand(n: int, t: float, alpha: float) -> float:
    """t**alpha / Gamma(1 + alpha) * D^alpha t**(n-1).

    For |alpha| <= n + 1 this is evaluated literally from the closed-form
    derivative.  Beyond that, t**alpha and t**(n-1-alpha) cancel to t**(n-1),
    and the remaining Gamma ratio is C(n-1, alpha), evaluated in its
    trigonometric form.  The literal powers would overflow there.
    """
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    if not t > 0:
        raise DomainError(f"t must be positive, got {t}")
    if abs(alpha) > n + 1:
        return t ** (n - 1) * gen_binom(n - 1, alpha)
    return t**alpha * rgamma(1.0 + alpha) * rl_deriv_power(ShiftedPower(0.0, n), alpha, t)


def lemma_integral(n: int, t: float, cfg: QuadratureConfig | None = None) -> OrderIntegralResult:
    """Order-integral of :func:`lemma_integrand`; should equal (2t)**(n-1)."""
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    if not t > 0:
        raise DomainError(f"t must be positive, got {t}")
    return integrate_order(lambda a: lemma_integrand(n, t, a), n, cfg)


def binom_integral(n: int, cfg: QuadratureConfig | None = None) -> OrderIntegralResult:
    """Order-integral of C(n, alpha); should equal 2**n."""
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    return integrate_order(lambda a: gen_binom(n, a), n + 1, cfg)


def main_identity_eval(
    f: PowerSeries, t: float, cfg: QuadratureConfig | None = None
) -> OrderIntegralResult:
    """Order-integral of t**alpha/Gamma(1+alpha) D^alpha[f(s/2)](t), term by term.

    Term k contributes c_k 2**-k t**k times the order-integral of C(k, alpha);
    k = 0 is the sinc integral.  ``err_estimate`` adds the weighted quadrature
    errors and the series remainder, which is also reported on its own in
    ``series_remainder``.
    """
    cfg = cfg or QuadratureConfig()
    if not 0.0 <= t < f.radius:
        raise DomainError(f"need 0 <= t < {f.radius}, got t={t}")
    values = []
    errors = []
    periods = 0
    all_converged = True
    weights = [c * 0.5**k * t**k for k, c in enumerate(f.coeffs)]
    active = sum(w != 0.0 for w in weights)
    for k, weight in enumerate(weights):
        if weight == 0.0:
            continue
        # each term gets an equal share of abs_tol after weighting
        term_cfg = replace(cfg, abs_tol=max(cfg.abs_tol, cfg.abs_tol / (abs(weight) * active)))
        part = integrate_order(sinc, 1, term_cfg) if k == 0 else binom_integral(k, term_cfg)
        values.append(weight * part.value)
        errors.append(abs(weight) * part.err_estimate)
        periods += part.periods_used
        all_converged = all_converged and part.converged
    remainder = f.remainder_bound(t)
    err = math.fsum(errors) + remainder
    return OrderIntegralResult(
        math.fsum(values),
        err,
        periods,
        all_converged and err <= cfg.abs_tol,
        True,
        remainder,
    )
