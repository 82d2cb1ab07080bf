r"""Exact residue oracle for the indented integral of sin(pi x)/(x (1-x)_n).

With ``Q(z) = z (1-z)(2-z)...(n-z)`` every zero is real and simple, so

.. math::

    \mathrm{P.V.}\int_{-\infty}^{\infty}\frac{\sin \pi x}{Q(x)}\,dx
        = \mathrm{Im}\Big(\pi i \sum_{j=0}^{n} \mathrm{Res}_{z=j}\frac{e^{i\pi z}}{Q(z)}\Big).

Residues are computed as ``e^{i pi j} / Q'(j)`` from the linear factors of
``Q`` in exact rational arithmetic.  They are not looked up from the binomial
closed form, which is checked against them instead.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

__all__ = [
    "Rational",
    "ResidueTerm",
    "residue_at",
    "residue_terms",
    "closed_form_coeff",
    "indented_integral_value",
]

Rational = Fraction


@dataclass(frozen=True)
class ResidueTerm:
    pole: int
    value: Fraction

    def __post_init__(self):
        if self.value.denominator <= 0:
            raise ValueError("denominator must be positive")


def _factors(n: int) -> list[tuple[int, int]]:
    # Q(z) = prod(a + b z): z, then (k - z) for k = 1..n
    return [(0, 1)] + [(k, -1) for k in range(1, n + 1)]


def _exp_i_pi(j: int) -> tuple[int, int]:
    # e^{i pi j} = cos(pi j) + i sin(pi j), exactly (+-1, 0) at integers
    return (1 if j % 2 == 0 else -1, 0)


def _residue_complex(n: int, j: int) -> tuple[Fraction, Fraction]:
    derivative = None
    rest = 1
    for a, b in _factors(n):
        value = a + b * j
        if value == 0:
            if derivative is not None:
                raise ValueError(f"pole at {j} is not simple")
            derivative = b
        else:
            rest *= value
    if derivative is None:
        raise ValueError(f"{j} is not a zero of Q")
    re, im = _exp_i_pi(j)
    q_prime = derivative * rest
    return Fraction(re, q_prime), Fraction(im, q_prime)


def residue_at(n: int, j: int) -> Fraction:
    """Residue of e^{i pi z} / (z (1-z)...(n-z)) at z = j (real for this family)."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if not 0 <= j <= n:
        raise ValueError(f"j must lie in 0..{n}, got {j}")
    re, im = _residue_complex(n, j)
    if im != 0:
        raise AssertionError("residue at a real integer pole must be real")
    return re


def residue_terms(n: int) -> list[ResidueTerm]:
    return [ResidueTerm(j, residue_at(n, j)) for j in range(n + 1)]


def closed_form_coeff(n: int) -> Fraction:
    """Exact sum of the residues, the coefficient of pi in the integral (2**n / n!)."""
    return sum((term.value for term in residue_terms(n)), Fraction(0))


def indented_integral_value(n: int) -> float:
    """Value of the integral of sin(pi x)/(x (1-x)_n) over the real line.

    No poles lie in the upper half plane, so only the half-weight real-pole
    sum remains: Im(pi i S) = pi Re(S) for the residue sum S.
    """
    coeff = closed_form_coeff(n)
    return math.pi * float(coeff)
