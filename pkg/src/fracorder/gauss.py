"""Gauss-Legendre rules on the unit interval and a bisecting adaptive integrator."""

from __future__ import annotations

import math
from functools import lru_cache
from typing import Callable

import numpy as np

from .errors import NonConvergenceError


@lru_cache(maxsize=None)
def unit_rule(order: int) -> tuple[tuple[float, ...], tuple[float, ...]]:
    """Nodes and weights of the ``order``-point Gauss-Legendre rule on [0, 1]."""
    x, w = np.polynomial.legendre.leggauss(order)
    return tuple(0.5 * (x + 1.0)), tuple(0.5 * w)


def fixed(f: Callable[[float], float], a: float, b: float, order: int = 16) -> float:
    """Apply one Gauss-Legendre panel to [a, b]."""
    nodes, weights = unit_rule(order)
    h = b - a
    return h * math.fsum(w * f(a + h * x) for x, w in zip(nodes, weights))


def adaptive(
    f: Callable[[float], float],
    a: float,
    b: float,
    tol: float,
    order: int = 10,
    max_depth: int = 50,
) -> float:
    """Integrate ``f`` over [a, b] to absolute accuracy ``tol`` by panel bisection.

    A panel is accepted when its single-rule value agrees with the sum over its
    two halves to within its share of ``tol``, proportional to panel width.
    """
    if b == a:
        return 0.0
    width = b - a
    pieces: list[float] = []
    stack = [(a, b, fixed(f, a, b, order), 0)]
    while stack:
        lo, hi, whole, depth = stack.pop()
        mid = 0.5 * (lo + hi)
        left = fixed(f, lo, mid, order)
        right = fixed(f, mid, hi, order)
        local_tol = tol * (hi - lo) / width
        if abs(left + right - whole) <= local_tol:
            pieces.append(left + right)
            continue
        if depth >= max_depth:
            raise NonConvergenceError(
                f"adaptive quadrature exceeded depth {max_depth} on [{lo}, {hi}]"
            )
        stack.append((mid, hi, right, depth + 1))
        stack.append((lo, mid, left, depth + 1))
    return math.fsum(pieces)
