"""Parametric region families with closed-form membership and extremal bounds."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from ._search import golden_section_min
from .geom import (ConvexPolygon, Cone, DegenerateRegionError, Disk, DomainError, Interval, Points,
                   Rectangle, Trapezoid, as_point)

SQRT2 = math.sqrt(2.0)
INTERVAL_MAX_RATIO = 3.0 + 2.0 * SQRT2
TRAPEZOID_T_MAX = SQRT2 - 1.0

# computed by icecream_tstar(1e-10) and frozen here as the reference value
ICECREAM_TSTAR = 1.64071542


class RatioPoint(NamedTuple):
    """``b / a = x + iy`` for a two-point set {a, b}."""

    x: float
    y: float


@dataclass(frozen=True)
class BoundResult:
    value: float
    formula_id: str
    inputs: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"value": self.value, "formula": self.formula_id, "inputs": dict(self.inputs)}


def two_point_region_contains(x: float, y: float = 0.0) -> bool:
    """Exact right-angle membership test for {a, b} with b/a = x + iy.

    The region lies between the parabola ``y^2 = 4x`` and, for ``x < 1/4``,
    its inversion in the unit circle (a cissoid of Diocles).  The same test
    decides the segment [a, b].
    """
    if isinstance(x, RatioPoint):
        x, y = x
    if x < 0:
        return False
    if abs(y) > 2.0 * math.sqrt(x):
        return False
    if x < 0.25:
        return abs(y) <= 2.0 * x ** 1.5 / math.sqrt(1.0 - 4.0 * x)
    return True


def interval_max_ratio() -> float:
    return INTERVAL_MAX_RATIO


def interval_in_b2(a: float, b: float) -> bool:
    if not 0 < a <= b:
        raise DomainError("need 0 < a <= b")
    return b / a <= INTERVAL_MAX_RATIO


def rectangle_max_halfheight(M: float, L: float) -> BoundResult:
    """Sufficient half-height ``N = 2 M^(3/2) / sqrt(L + 24 M)``.

    Every rectangle ``M <= x <= M+L, |y| <= N`` with N at or below this value
    is certified; the bound is not a membership frontier.
    """
    if not (M > 0 and L > 0):
        raise DomainError("rectangle bound needs M > 0 and L > 0")
    return BoundResult(2.0 * M ** 1.5 / math.sqrt(L + 24.0 * M), "rectangle-halfheight",
                       {"M": M, "L": L})


def trapezoid_max_long_side(M: float, t: float) -> BoundResult:
    """Sufficient far edge L for the trapezoid ``M <= x <= L, |y| <= t x``.

    Valid for ``0 < t < sqrt(2) - 1``; behaves like ``M / t`` as t -> 0.
    """
    if not M > 0:
        raise DomainError("trapezoid bound needs M > 0")
    if not 0 < t < TRAPEZOID_T_MAX:
        raise DomainError(f"trapezoid bound needs 0 < t < sqrt(2)-1, got t={t}")
    s = t * t + 1.0 / (t * t)
    inner = (s - 4.0 + (1.0 / t - t) * math.sqrt(s - 6.0)) / 2.0
    return BoundResult(M * math.sqrt(inner), "trapezoid-long-side", {"M": M, "t": t})


def icecream_t_of_phi(phi: float) -> float:
    """Largest apex offset t allowed by the disk point at parameter ``phi``."""
    s, c = math.sin(phi), math.cos(phi)
    rad = 6.0 * SQRT2 * s - 2.0 * SQRT2 * c - math.sin(2.0 * phi) - math.cos(2.0 * phi) + 9.0
    if rad < 0:
        raise DomainError("negative radicand")
    return 2.0 + SQRT2 * s - SQRT2 / 2.0 * c + math.sqrt(rad)


def icecream_argmin(tol: float = 1e-8, grid: int = 1024) -> tuple:
    """(phi*, t*) minimising :func:`icecream_t_of_phi` over one period."""
    if not tol > 0:
        raise DomainError("tol must be positive")
    phis = 2.0 * np.pi * np.arange(grid) / grid
    vals = np.array([icecream_t_of_phi(p) for p in phis])
    k = int(np.argmin(vals))
    step = 2.0 * np.pi / grid
    return golden_section_min(icecream_t_of_phi, phis[k] - step, phis[k] + step, tol)


def icecream_tstar(tol: float = 1e-8) -> float:
    """Optimal apex offset: hull of |z-1| <= 1/2 and 1 + t* lies in B2."""
    return icecream_argmin(tol)[1]


def necessary_box(a) -> tuple:
    """Bounds ``(1/K, K)`` on ``Re(b)/Re(a)`` for {1, a, b} in A2.

    ``K = (|1+a| + 1 + Re a)^2 / (Im a)^2``.  Raises for real ``a`` and flags
    ``Re a <= 0`` as degenerate, where the ratio is undefined.
    """
    a = as_point(a, nonzero=True)
    a1, a2 = a.real, a.imag
    if a2 == 0:
        raise DomainError("necessary box needs a non-real point")
    if a1 <= 0:
        raise DegenerateRegionError("Re(a) <= 0: the ratio Re(b)/Re(a) is undefined")
    K = (abs(1.0 + a) + 1.0 + a1) ** 2 / a2 ** 2
    return 1.0 / K, K


BUILTIN_NAMES = ("barvinok-disk", "example-quadrilateral", "icecream-cone", "rectangle", "trapezoid",
                 "interval", "two-point")


def builtin_region(name: str, **params):
    """Named regions with their default parameters.

    ``rectangle`` and ``trapezoid`` default the free side to the sufficient
    bound; ``two-point`` is ``Points(1, x+iy)``.
    """
    if name == "barvinok-disk":
        return Disk(1.0, 0.5)
    if name == "example-quadrilateral":
        return ConvexPolygon((0.5, 1 - 0.5j, 1.5 + SQRT2, 1 + 0.5j))
    if name == "icecream-cone":
        return Cone(1.0, 0.5, 1.0 + params.get("t", ICECREAM_TSTAR))
    if name == "rectangle":
        M, L = params.get("M", 1.0), params.get("L", 1.0)
        N = params.get("N") or rectangle_max_halfheight(M, L).value
        return Rectangle(M, L, N)
    if name == "trapezoid":
        M, t = params.get("M", 1.0), params.get("t", 0.2)
        L = params.get("L") or trapezoid_max_long_side(M, t).value
        return Trapezoid(M, L, t)
    if name == "interval":
        return Interval(params.get("a", 1.0), params.get("b", INTERVAL_MAX_RATIO))
    if name == "two-point":
        return Points((1.0, complex(params.get("x", 1.0), params.get("y", 0.0))))
    raise DomainError(f"unknown builtin region {name!r}; choose from {', '.join(BUILTIN_NAMES)}")
