"""Exact permanents and randomized nonvanishing checks for certified regions."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ._backend import kernels
from .geom import (ConvexPolygon, Cone, Disk, DomainError, Interval, Points, bounding_box, region_contains,
                   to_polygon)

MAX_N = 14
ZERO_REL = 1e-12


class CostGuardError(DomainError):
    pass


def as_square_matrix(m) -> np.ndarray:
    A = np.asarray(m, dtype=np.complex128)
    if A.ndim != 2 or A.shape[0] != A.shape[1] or A.shape[0] < 1:
        raise DomainError(f"expected a nonempty square matrix, got shape {A.shape}")
    if not np.all(np.isfinite(A)):
        raise DomainError("matrix has non-finite entries")
    return A


def permanent_exact(m) -> complex:
    """Permanent via Ryser's inclusion-exclusion, O(n 2^n); n <= 14."""
    A = as_square_matrix(m)
    n = A.shape[0]
    if n > MAX_N:
        raise CostGuardError(f"n={n} exceeds the cost guard n <= {MAX_N}")
    return complex(kernels.ryser(np.ascontiguousarray(A)))


def zero_threshold(A: np.ndarray) -> float:
    n = A.shape[0]
    return ZERO_REL * math.factorial(n) * float(np.max(np.abs(A))) ** n


def sample_entries(region, rng: np.random.Generator, size: int) -> np.ndarray:
    """``size`` i.i.d. points uniform over ``region``.

    Areas use rejection from the bounding box, intervals and segments are
    uniform in the parameter, point sets uniform over their elements.
    """
    if isinstance(region, Points):
        vals = np.array(region.values, dtype=np.complex128)
        return vals[rng.integers(0, len(vals), size)]
    if isinstance(region, Interval):
        return rng.uniform(region.a, region.b, size).astype(np.complex128)
    if not isinstance(region, (Disk, Cone)):
        poly = to_polygon(region)
        if poly.is_point:
            return np.full(size, poly.vertices[0], dtype=np.complex128)
        if poly.is_segment:
            a, b = poly.vertices
            return a + (b - a) * rng.uniform(0.0, 1.0, size)
        region = poly
    x0, x1, y0, y1 = bounding_box(region)
    out = np.empty(size, dtype=np.complex128)
    filled = 0
    while filled < size:
        batch = max(16, 2 * (size - filled))
        z = rng.uniform(x0, x1, batch) + 1j * rng.uniform(y0, y1, batch)
        if isinstance(region, Disk):
            ok = np.abs(z - region.center) <= region.radius
        else:
            ok = np.array([region_contains(region, w, 0.0) for w in z])
        z = z[ok][: size - filled]
        out[filled: filled + len(z)] = z
        filled += len(z)
    return out


@dataclass
class SampleStats:
    count: int
    n_range: tuple
    min_abs_perm: float
    argmin_matrix: np.ndarray
    zeros_found: int
    rng_seed: int
    zero_witness: np.ndarray | None = None

    def to_json(self) -> dict:
        def mat(A):
            if A is None:
                return None
            return {"n": int(A.shape[0]), "entries": [[z.real, z.imag] for z in A.ravel()]}

        return {
            "count": self.count,
            "n_range": list(self.n_range),
            "min_abs_perm": self.min_abs_perm,
            "argmin_matrix": mat(self.argmin_matrix),
            "zeros_found": self.zeros_found,
            "rng_seed": self.rng_seed,
            "zero_witness": mat(self.zero_witness),
        }


def sample_and_verify(region, n_range=(2, 8), count: int = 1000, seed: int = 0) -> SampleStats:
    """Draw random matrices with entries in ``region`` and check their permanents.

    Matrix ``k`` uses its own generator spawned from ``seed``, so results do
    not depend on evaluation order.  A permanent counts as zero when
    ``|per| <= 1e-12 * n! * max|entry|^n``.
    """
    nmin, nmax = int(n_range[0]), int(n_range[1])
    if not 1 <= nmin <= nmax <= MAX_N:
        raise DomainError(f"need 1 <= nmin <= nmax <= {MAX_N}")
    if count < 1:
        raise DomainError("count must be positive")
    streams = np.random.SeedSequence(seed).spawn(count)
    best = math.inf
    best_A = None
    zeros = 0
    witness = None
    for ss in streams:
        rng = np.random.default_rng(ss)
        n = int(rng.integers(nmin, nmax + 1))
        A = sample_entries(region, rng, n * n).reshape(n, n)
        p = abs(permanent_exact(A))
        if p <= zero_threshold(A):
            zeros += 1
            if witness is None:
                witness = A
        if p < best:
            best, best_A = p, A
    return SampleStats(count, (nmin, nmax), best, best_A, zeros, seed, witness)
