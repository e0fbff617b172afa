"""Membership criteria for angle-restricted sets and certification sweeps.

The closed forms cover the right-angle case: the quadruple criterion
``F <= 0`` characterises A2 (maps z -> (az+b)/(cz+d) sending the closed right
half-plane into itself) and the pair criteria ``G1, G2 <= 0`` characterise
the smaller class B2.  For other opening angles the only general tool is the
numeric Moebius oracle :func:`mobius_arg_sup`.

A certified vertex set of a convex polygon certifies the whole polygon: A2 is
closed under convex hulls, and a convex A2 set is angle-restricted, hence a
zero-free region for the permanent.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from ._backend import kernels
from .geom import DomainError, angle_between, as_point, to_rotated

DEFAULT_TOL = 1e-9
RIGHT = math.pi / 2

# logarithmic radius grid of the oracle
ORACLE_GRID = 256
ORACLE_RMIN = 1e-6
ORACLE_RMAX = 1e6


@dataclass(frozen=True)
class AngleParams:
    theta: float
    phi: float

    def __post_init__(self):
        for name in ("theta", "phi"):
            v = getattr(self, name)
            if not 0.0 < v < 2.0 * math.pi / 3.0:
                raise DomainError(f"{name}={v} outside (0, 2*pi/3)")


@dataclass
class CertificationReport:
    verdict: str
    criterion: str
    worst_value: float
    witness: tuple
    tolerance: float
    tuples_checked: int
    notes: list = field(default_factory=list)

    @property
    def certified(self) -> bool:
        return self.verdict == "certified"

    def to_json(self) -> dict:
        worst = self.worst_value
        return {
            "verdict": self.verdict,
            "criterion": self.criterion,
            "worst": worst if math.isfinite(worst) else str(worst),
            "witness": [[z.real, z.imag] for z in self.witness],
            "tol": self.tolerance,
            "checked": self.tuples_checked,
        }


def _report(criterion, worst, witness, tol, checked, notes=()):
    verdict = "certified" if worst <= tol else "refuted"
    return CertificationReport(verdict, criterion, float(worst), tuple(complex(w) for w in witness), tol, int(checked), list(notes))


def _f_real(ar, ai, br, bi, cr, ci, dr, di):
    # same operation order as the sweep kernels, so results agree bit for bit
    s = (ai * dr - ar * di) - (bi * cr - br * ci)
    return s * s - 4.0 * (ar * cr + ai * ci) * (br * dr + bi * di)


def f_criterion(a, b, c, d) -> float:
    """``Im(a conj d - b conj c)^2 - 4 Re(a conj c) Re(b conj d)``."""
    a, b, c, d = (as_point(z) for z in (a, b, c, d))
    return _f_real(a.real, a.imag, b.real, b.imag, c.real, c.imag, d.real, d.imag)


def g_criteria(a, b) -> tuple:
    """Pair criteria (G1, G2) in coordinates rotated by pi/4."""
    a1, a2 = to_rotated(a)
    b1, b2 = to_rotated(b)
    return (a2 - b2) ** 2 - 4.0 * a1 * b1, (a1 - b1) ** 2 - 4.0 * a2 * b2


def pair_prefilter(a, b, angles: AngleParams) -> bool:
    """Necessary condition for {a, b} to be (theta, phi)-restricted."""
    alpha = angle_between(a, b)
    return alpha < math.pi - angles.theta and alpha <= angles.phi


def _points(points: Sequence) -> np.ndarray:
    pts = [as_point(p, nonzero=True) for p in points]
    if not pts:
        raise DomainError("cannot certify an empty point set")
    return np.array(pts, dtype=np.complex128)


def f_max(points: Sequence):
    """Max of F over all quadruples drawn from ``points``.

    Returns ``(value, witness, checked)`` where ``checked`` counts symmetry
    orbits of ordered quadruples.
    """
    z = _points(points)
    best, i, j, k, l, checked = kernels.f_sweep_max(np.ascontiguousarray(z.real), np.ascontiguousarray(z.imag))
    return float(best), (z[i], z[j], z[k], z[l]), int(checked)


def certify_a2(points: Sequence, tol: float = DEFAULT_TOL) -> CertificationReport:
    """Certify that ``points`` lies in A2 for the right angle.

    Every ordered quadruple with repetition is checked, one representative
    per orbit of the symmetry group of F.  For the vertex list of a convex
    polygon a certified verdict covers the whole polygon.
    """
    if tol < 0:
        raise DomainError("tolerance must be nonnegative")
    worst, witness, checked = f_max(points)
    return _report("F", worst, witness, tol, checked)


def certify_b2(points: Sequence, tol: float = DEFAULT_TOL) -> CertificationReport:
    """Certify B2 membership: every |arg| <= pi/4, every pair has G1, G2 <= 0.

    The reported worst value is the largest of the G values and the
    argument excess ``|arg z| - pi/4``.
    """
    if tol < 0:
        raise DomainError("tolerance must be nonnegative")
    z = _points(points)
    w = np.exp(0.25j * np.pi) * z
    x, y = w.real, w.imag
    g1 = (y[:, None] - y[None, :]) ** 2 - 4.0 * x[:, None] * x[None, :]
    g2 = (x[:, None] - x[None, :]) ** 2 - 4.0 * y[:, None] * y[None, :]
    g = np.maximum(g1, g2)
    iu = np.triu_indices(len(z))
    flat = int(np.argmax(g[iu]))
    gi, gj = iu[0][flat], iu[1][flat]
    excess = np.abs(np.angle(z)) - np.pi / 4
    ai = int(np.argmax(excess))
    if excess[ai] > g[gi, gj]:
        worst, witness = excess[ai], (z[ai],)
    else:
        worst, witness = g[gi, gj], (z[gi], z[gj])
    return _report("G", worst, witness, tol, len(iu[0]))


def two_point_theta(a, b, theta: float) -> bool:
    """Exact test for {a, b} in A2 with angles (theta, pi/2)."""
    a = as_point(a, nonzero=True)
    b = as_point(b, nonzero=True)
    if not 0.0 < theta < 2.0 * math.pi / 3.0:
        raise DomainError(f"theta={theta} outside (0, 2*pi/3)")
    s, c = math.sin(theta), math.cos(theta)
    if abs(c) < 1e-15:
        c = 0.0

    def parabola(r: complex) -> bool:
        x, y = r.real, r.imag
        return x >= 0 and abs(y) * s <= 2.0 * math.sqrt(x) + (x + 1.0) * c

    r = b / a
    if not (parabola(r) and parabola(a / b)):
        return False
    if theta > math.pi / 2:
        return (r.real + 1.0 / c) ** 2 + r.imag ** 2 <= math.tan(theta) ** 2
    return True


def _oracle_grid(grid: int):
    if grid < 16:
        raise DomainError("oracle grid needs at least 16 points")
    log_r = np.linspace(math.log(ORACLE_RMIN), math.log(ORACLE_RMAX), grid)
    width = 2.0 * (log_r[1] - log_r[0])
    n_iter = int(math.ceil(math.log(1e-10 / width) / math.log((math.sqrt(5.0) - 1.0) / 2.0)))
    return log_r, n_iter


def mobius_arg_sup_batch(a, b, c, d, theta: float = RIGHT, grid: int = ORACLE_GRID) -> np.ndarray:
    """Vectorised :func:`mobius_arg_sup` over equal-length arrays."""
    arrs = [np.ascontiguousarray(np.asarray(v, dtype=np.complex128).ravel()) for v in (a, b, c, d)]
    log_r, n_iter = _oracle_grid(grid)
    return kernels.mobius_sup_batch(*arrs, float(theta), log_r, n_iter)


def mobius_arg_sup(a, b, c, d, theta: float = RIGHT, grid: int = ORACLE_GRID) -> float:
    """Numeric sup of |arg((az+b)/(cz+d))| over the closed angle |arg z| <= theta.

    The sup of this harmonic quantity is reached on the two boundary rays or
    in the limits z -> 0, z -> infinity, so the rays are scanned on a
    logarithmic radius grid and the best bracket refined by golden-section
    search.  A zero or pole of the map inside the closed angle gives ``inf``
    (0 and infinity are admitted only as limits).  A degenerate (constant)
    map returns the argument of its constant value.
    """
    vals = [as_point(z, nonzero=True) for z in (a, b, c, d)]
    return float(mobius_arg_sup_batch(*([v] for v in vals), theta=theta, grid=grid)[0])


def canonical_quadruples(m: int) -> list:
    """One index quadruple per orbit of F's symmetry group."""
    out = []
    for t in itertools.product(range(m), repeat=4):
        i, j, k, l = t
        if t <= (j, i, l, k) and t <= (k, l, i, j) and t <= (l, k, j, i):
            out.append(t)
    return out


def certify_oracle(points: Sequence, angles: AngleParams | None = None, tol: float = DEFAULT_TOL,
                   grid: int = ORACLE_GRID) -> CertificationReport:
    """Certify A2 for general angles with the numeric oracle.

    Pairs are prefiltered first; then every quadruple orbit must have
    ``sup |arg| <= phi + tol``.  Worst value reported is ``sup - phi``.
    Cost is one oracle call per orbit, so keep the point set small.
    """
    angles = angles or AngleParams(RIGHT, RIGHT)
    z = _points(points)
    for p, q in itertools.combinations_with_replacement(z, 2):
        if not pair_prefilter(p, q, angles):
            return _report("oracle", math.inf, (p, q), tol, 0, ["pair prefilter failed"])
    quads = np.array(canonical_quadruples(len(z)), dtype=np.int64)
    sup = mobius_arg_sup_batch(z[quads[:, 0]], z[quads[:, 1]], z[quads[:, 2]], z[quads[:, 3]],
                               theta=angles.theta, grid=grid)
    k = int(np.argmax(sup))
    return _report("oracle", sup[k] - angles.phi, tuple(z[quads[k]]), tol, len(quads))
