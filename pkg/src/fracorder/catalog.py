"""Built-in test functions for the main identity.

Each entry pairs a truncated Taylor series with a direct evaluation that does
not go through the series at all (library ``exp``/``sin``, Horner on the exact
polynomial, the closed form of the geometric series).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from .frac import PowerSeries


@dataclass(frozen=True)
class CatalogFunction:
    name: str
    series: PowerSeries
    direct: Callable[[float], float]

    @property
    def radius(self) -> float:
        return self.series.radius


def _exp_coeff(k: int) -> float:
    return 1.0 / math.factorial(k)


def _sin_coeff(k: int) -> float:
    if k % 2 == 0:
        return 0.0
    return (-1.0) ** ((k - 1) // 2) / math.factorial(k)


def _geom_coeff(k: int) -> float:
    return 1.0


def _horner(coeffs: tuple[float, ...]) -> Callable[[float], float]:
    def evaluate(t: float) -> float:
        acc = 0.0
        for c in reversed(coeffs):
            acc = acc * t + c
        return acc

    return evaluate


def parse_poly(spec: str) -> tuple[float, ...]:
    body = spec.split(":", 1)[1] if ":" in spec else spec
    try:
        coeffs = tuple(float(x) for x in body.split(",") if x.strip())
    except ValueError as exc:
        raise ValueError(f"bad polynomial coefficients in {spec!r}") from exc
    if not coeffs:
        raise ValueError(f"polynomial {spec!r} has no coefficients")
    return coeffs


def lookup(function_id: str, series_k: int) -> CatalogFunction:
    """Resolve ``exp``, ``sin``, ``geom`` or ``poly:c0,c1,...``."""
    if series_k < 0:
        raise ValueError("series order must be >= 0")
    if function_id == "exp":
        return CatalogFunction("exp", PowerSeries.from_function(_exp_coeff, series_k), math.exp)
    if function_id == "sin":
        return CatalogFunction("sin", PowerSeries.from_function(_sin_coeff, series_k), math.sin)
    if function_id == "geom":
        return CatalogFunction(
            "geom",
            PowerSeries.from_function(_geom_coeff, series_k, radius=1.0),
            lambda t: 1.0 / (1.0 - t),
        )
    if function_id.startswith("poly"):
        coeffs = parse_poly(function_id)
        return CatalogFunction(
            "poly:" + ",".join(repr(c) for c in coeffs), PowerSeries(coeffs), _horner(coeffs)
        )
    raise ValueError(f"unknown function {function_id!r}; expected exp, sin, geom or poly:c0,c1,...")


def default_points(radius: float) -> list[float]:
    """Sample points 0, 0.1, 0.5 and 0.9 of the radius (of 1 for entire functions)."""
    return [0.0, 0.1, 0.5, 0.9 * min(radius, 1.0)]
