"""Complex-plane and convex-geometry primitives.

Points of the punctured plane are plain Python ``complex`` values.  Regions
are small frozen dataclasses; :class:`ConvexPolygon` is the canonical form
every other region reduces to for certification.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import NamedTuple, Sequence, Union

import numpy as np

COLLINEAR_TOL = 1e-12
_ROT = cmath.exp(0.25j * math.pi)


class DomainError(ValueError):
    """Input outside the domain where an operation is defined."""


class DegenerateRegionError(DomainError):
    pass


def as_point(z, *, nonzero: bool = False) -> complex:
    """Coerce a number or an ``[re, im]`` pair to a finite complex."""
    if isinstance(z, (list, tuple, np.ndarray)) and len(z) == 2:
        z = complex(float(z[0]), float(z[1]))
    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise DomainError(f"non-finite complex value {z!r}")
    if nonzero and z == 0:
        raise DomainError("zero is not a point of C*")
    return z


def angle_between(u, v) -> float:
    """Angle in [0, pi] between the rays through ``u`` and ``v``."""
    u = as_point(u, nonzero=True)
    v = as_point(v, nonzero=True)
    w = u * v.conjugate()
    return abs(math.atan2(w.imag, w.real))


class RotatedCoords(NamedTuple):
    c1: float
    c2: float


def to_rotated(z) -> RotatedCoords:
    """Real and imaginary parts of ``exp(i*pi/4) * z``."""
    w = _ROT * as_point(z)
    return RotatedCoords(w.real, w.imag)


def _cross(o: complex, a: complex, b: complex) -> float:
    return (a.real - o.real) * (b.imag - o.imag) - (a.imag - o.imag) * (b.real - o.real)


@dataclass(frozen=True)
class ConvexPolygon:
    """Strictly convex polygon, vertices counterclockwise.

    One vertex is a point, two vertices a segment.  The closed polygon must
    not contain 0.
    """

    vertices: tuple

    def __post_init__(self):
        vs = tuple(as_point(v) for v in self.vertices)
        object.__setattr__(self, "vertices", vs)
        if not vs:
            raise DomainError("polygon needs at least one vertex")
        m = len(vs)
        if m >= 3:
            eps = COLLINEAR_TOL * self.scale ** 2
            for i in range(m):
                if _cross(vs[i - 1], vs[i], vs[(i + 1) % m]) <= eps:
                    raise DomainError("vertices are not strictly convex and counterclockwise")
        elif m == 2 and vs[0] == vs[1]:
            raise DomainError("repeated vertex")
        if self.contains(0j):
            raise DomainError("polygon contains the origin")

    @property
    def scale(self) -> float:
        return max(abs(v) for v in self.vertices)

    @property
    def is_point(self) -> bool:
        return len(self.vertices) == 1

    @property
    def is_segment(self) -> bool:
        return len(self.vertices) == 2

    def __len__(self):
        return len(self.vertices)

    def as_array(self) -> np.ndarray:
        return np.array(self.vertices, dtype=np.complex128)

    def area(self) -> float:
        vs = self.vertices
        if len(vs) < 3:
            return 0.0
        s = 0.0
        for i in range(len(vs)):
            a, b = vs[i], vs[(i + 1) % len(vs)]
            s += a.real * b.imag - b.real * a.imag
        return 0.5 * s

    def diameter(self) -> float:
        vs = self.vertices
        return max((abs(a - b) for a in vs for b in vs), default=0.0)

    def side(self, i: int) -> tuple:
        m = len(self.vertices)
        if m < 2:
            raise DegenerateRegionError("a single point has no sides")
        return self.vertices[i % m], self.vertices[(i + 1) % m]

    def n_sides(self) -> int:
        m = len(self.vertices)
        return 0 if m < 2 else m

    def outward_normal(self, i: int) -> complex:
        a, b = self.side(i)
        e = b - a
        # counterclockwise boundary: the exterior lies to the right
        return -1j * e / abs(e)

    def contains(self, z, tol: float = 1e-12) -> bool:
        """Closed-set membership with a scale-relative slack ``tol``."""
        z = complex(z)
        vs = self.vertices
        sc = max(self.scale, abs(z), 1e-300)
        if len(vs) == 1:
            return abs(z - vs[0]) <= tol * sc
        if len(vs) == 2:
            a, b = vs
            e = b - a
            t = ((z - a) * e.conjugate()).real / abs(e) ** 2
            t = min(1.0, max(0.0, t))
            return abs(a + t * e - z) <= tol * sc
        for i in range(len(vs)):
            a, b = vs[i], vs[(i + 1) % len(vs)]
            if _cross(a, b, z) < -tol * sc * abs(b - a):
                return False
        return True


def convex_hull(points: Sequence) -> ConvexPolygon:
    """Andrew's monotone chain, dropping collinear and duplicate points."""
    pts = sorted({(p.real, p.imag) for p in (as_point(q) for q in points)})
    if not pts:
        raise DomainError("convex hull of an empty set")
    zs = [complex(x, y) for x, y in pts]
    if len(zs) == 1:
        return ConvexPolygon((zs[0],))
    scale = max(abs(z) for z in zs)
    spread = max(abs(z - zs[0]) for z in zs)
    eps = COLLINEAR_TOL * max(scale, spread) ** 2

    def chain(seq):
        out = []
        for p in seq:
            while len(out) >= 2 and _cross(out[-2], out[-1], p) <= eps:
                out.pop()
            out.append(p)
        return out

    lower = chain(zs)
    upper = chain(reversed(zs))
    hull = lower[:-1] + upper[:-1]
    # the seam between the two chains is never tested inside chain()
    changed = True
    while changed and len(hull) >= 3:
        changed = False
        for i in range(len(hull)):
            if _cross(hull[i - 1], hull[i], hull[(i + 1) % len(hull)]) <= eps:
                del hull[i]
                changed = True
                break
    if len(hull) <= 2:
        # collinear input: keep the two extreme points
        return ConvexPolygon((zs[0], zs[-1]))
    return ConvexPolygon(tuple(hull))


# --- regions -----------------------------------------------------------------

@dataclass(frozen=True)
class Disk:
    center: complex
    radius: float

    def __post_init__(self):
        object.__setattr__(self, "center", as_point(self.center))
        if not self.radius > 0:
            raise DomainError("disk radius must be positive")
        if abs(self.center) <= self.radius:
            raise DomainError("disk contains the origin")


@dataclass(frozen=True)
class Cone:
    """Convex hull of a disk and an apex outside it."""

    center: complex
    radius: float
    apex: complex

    def __post_init__(self):
        Disk(self.center, self.radius)
        object.__setattr__(self, "center", as_point(self.center))
        object.__setattr__(self, "apex", as_point(self.apex, nonzero=True))
        if abs(self.apex - self.center) <= self.radius:
            raise DomainError("cone apex must lie outside the disk")

    @property
    def disk(self) -> Disk:
        return Disk(self.center, self.radius)

    def tangent_points(self) -> tuple:
        """Tangency points of the two lines from the apex, clockwise one first."""
        v = self.apex - self.center
        dist = abs(v)
        half = math.acos(self.radius / dist)
        base = cmath.phase(v)
        return (self.center + self.radius * cmath.exp(1j * (base - half)),
                self.center + self.radius * cmath.exp(1j * (base + half)))


@dataclass(frozen=True)
class Rectangle:
    """``M <= x <= M + L, |y| <= N``."""

    M: float
    L: float
    N: float

    def __post_init__(self):
        if not (self.M > 0 and self.L > 0 and self.N > 0):
            raise DomainError("rectangle parameters must be positive")

    def polygon(self) -> ConvexPolygon:
        M, L, N = self.M, self.L, self.N
        return ConvexPolygon((complex(M, -N), complex(M + L, -N), complex(M + L, N), complex(M, N)))


@dataclass(frozen=True)
class Trapezoid:
    """``M <= x <= L, |y| <= t x``."""

    M: float
    L: float
    t: float

    def __post_init__(self):
        if not (self.M > 0 and self.L > self.M and self.t > 0):
            raise DomainError("trapezoid needs 0 < M < L and t > 0")

    def polygon(self) -> ConvexPolygon:
        M, L, t = self.M, self.L, self.t
        return ConvexPolygon((complex(M, -t * M), complex(L, -t * L), complex(L, t * L), complex(M, t * M)))


@dataclass(frozen=True)
class Interval:
    a: float
    b: float

    def __post_init__(self):
        if not (self.a > 0 and self.b >= self.a):
            raise DomainError("interval needs 0 < a <= b")

    def polygon(self) -> ConvexPolygon:
        return convex_hull([complex(self.a), complex(self.b)])


@dataclass(frozen=True)
class Points:
    values: tuple

    def __post_init__(self):
        vals = tuple(as_point(v, nonzero=True) for v in self.values)
        if not vals:
            raise DomainError("empty point set")
        object.__setattr__(self, "values", vals)


Region = Union[ConvexPolygon, Disk, Cone, Rectangle, Trapezoid, Interval, Points]


def to_polygon(region) -> ConvexPolygon:
    """Exact polygon for polygonal regions; hull for point sets."""
    if isinstance(region, ConvexPolygon):
        return region
    if isinstance(region, (Rectangle, Trapezoid, Interval)):
        return region.polygon()
    if isinstance(region, Points):
        return convex_hull(region.values)
    raise DomainError(f"{type(region).__name__} is not polygonal")


def _polygon_boundary(poly: ConvexPolygon, n: int) -> list:
    vs = list(poly.vertices)
    if len(vs) == 1:
        raise DegenerateRegionError("cannot discretize the boundary of a single point")
    if n <= len(vs):
        return vs
    sides = [(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]
    if len(vs) == 2:
        sides = sides[:1]
        extra_total = n - 2
    else:
        extra_total = n - len(vs)
    lengths = np.array([abs(b - a) for a, b in sides])
    # largest-remainder allocation of the extra points by side length
    raw = extra_total * lengths / lengths.sum()
    extra = np.floor(raw).astype(int)
    for idx in np.argsort(-(raw - extra), kind="stable")[: extra_total - extra.sum()]:
        extra[idx] += 1
    out = []
    for (a, b), k in zip(sides, extra):
        out.extend(a + (b - a) * s for s in np.arange(k + 1) / (k + 1))
    if len(vs) == 2:
        out.append(vs[1])
    return out


def boundary_discretize(region, n: int) -> list:
    """``n`` points on the boundary of ``region``.

    Polygon vertices are always included (so fewer than ``n`` points come
    back only if the polygon has more than ``n`` vertices).  Smooth pieces
    are sampled uniformly in arc length; a disk starts at angle 0.
    """
    if isinstance(region, Interval):
        if n < 2:
            raise DomainError("need n >= 2 for an interval")
        return [complex(x) for x in np.linspace(region.a, region.b, n)]
    if n < 3:
        raise DomainError("need n >= 3 boundary points")
    if isinstance(region, Disk):
        ang = 2.0 * np.pi * np.arange(n) / n
        return [region.center + region.radius * complex(math.cos(t), math.sin(t)) for t in ang]
    if isinstance(region, Cone):
        return _cone_boundary(region, n)
    return _polygon_boundary(to_polygon(region), n)


def _cone_boundary(cone: Cone, n: int) -> list:
    t_cw, t_ccw = cone.tangent_points()
    c, r = cone.center, cone.radius
    a0 = cmath.phase(t_ccw - c)
    a1 = cmath.phase(t_cw - c)
    sweep = (a1 - a0) % (2 * math.pi)
    arc_len = r * sweep
    seg_len = abs(cone.apex - t_cw)
    total = arc_len + 2 * seg_len
    # apex and both tangent points are fixed; split the rest by length
    rest = n - 3
    k_arc = int(round(rest * arc_len / total))
    k_seg = rest - k_arc
    k1 = k_seg // 2
    k2 = k_seg - k1
    out = [cone.apex]
    out += [cone.apex + (t_ccw - cone.apex) * s for s in (np.arange(1, k1 + 1) / (k1 + 1))]
    out += [c + r * cmath.exp(1j * (a0 + sweep * s)) for s in np.arange(k_arc + 2) / (k_arc + 1)]
    out += [t_cw + (cone.apex - t_cw) * s for s in (np.arange(1, k2 + 1) / (k2 + 1))]
    return out


def cone_contains(cone: Cone, z: complex, tol: float = 1e-12) -> bool:
    p = cone.apex
    if abs(z - p) <= tol:
        return True
    e = z - p
    s = max(1.0, ((cone.center - p) * e.conjugate()).real / abs(e) ** 2)
    return abs(p + s * e - cone.center) <= cone.radius * (1 + tol)


def region_contains(region, z, tol: float = 1e-12) -> bool:
    z = complex(z)
    if isinstance(region, Disk):
        return abs(z - region.center) <= region.radius * (1 + tol)
    if isinstance(region, Cone):
        return cone_contains(region, z, tol)
    return to_polygon(region).contains(z, tol)


def certification_points(region, n: int = 128) -> list:
    """Finite point set whose certificate stands for ``region``.

    Polygonal regions give their vertices (exact reduction).  Disks and cones
    give ``n`` boundary samples plus the four axis-extreme points of the disk;
    this certifies the inscribed polygon, not the curved region itself.
    """
    if isinstance(region, Points):
        return list(region.values)
    if isinstance(region, (Disk, Cone)):
        c, r = region.center, region.radius
        # exact axis points first so they survive deduplication
        pts = [c + r, c + 1j * r, c - r, c - 1j * r] + boundary_discretize(Disk(c, r), n)
        if isinstance(region, Cone):
            pts.append(region.apex)
        return _dedupe(pts)
    return list(to_polygon(region).vertices)


def _dedupe(pts, tol=1e-14):
    out = []
    for p in pts:
        if all(abs(p - q) > tol * max(1.0, abs(p)) for q in out):
            out.append(p)
    return out


def bounding_box(region) -> tuple:
    """(re_min, re_max, im_min, im_max)."""
    if isinstance(region, Disk):
        c, r = region.center, region.radius
        return c.real - r, c.real + r, c.imag - r, c.imag + r
    if isinstance(region, Cone):
        pts = boundary_discretize(region.disk, 64) + [region.apex]
    else:
        pts = list(to_polygon(region).vertices)
    re = [p.real for p in pts]
    im = [p.imag for p in pts]
    if isinstance(region, Cone):
        c, r = region.center, region.radius
        re += [c.real - r, c.real + r]
        im += [c.imag - r, c.imag + r]
    return min(re), max(re), min(im), max(im)
