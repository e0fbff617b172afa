"""Boundary slack of certified regions and a push-out polygon grower.

For a certified set S the slack at a boundary point a is

    mu_S(a) = max over b, c, d in S of F(a, b, c, d)  (<= 0).

S is maximal at a when mu_S(a) = 0; where mu_S(a) < 0 the boundary can be
pushed outward.  F is convex in each argument, so for a polygon the inner max
only needs the vertices, and certifying a polygon is a finite vertex check.
That makes growing polygons by repeated push-outs cheap.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from ._backend import kernels
from .criteria import DEFAULT_TOL, certify_a2, certify_b2
from .geom import (ConvexPolygon, Cone, DegenerateRegionError, Disk, DomainError, Points, as_point,
                   boundary_discretize, certification_points, convex_hull, to_polygon)
from .regions import necessary_box

MIN_PUSH = 1e-6
INNER_SAMPLES = 128


class UncertifiedRegionError(DomainError):
    """The region fails its certificate, so slack is meaningless."""


def _vertices(poly) -> np.ndarray:
    if isinstance(poly, ConvexPolygon):
        return poly.as_array()
    return np.array([as_point(p) for p in poly], dtype=np.complex128)


def mu_many(poly, probes: Sequence) -> tuple:
    """Slack at each probe and the maximising vertex triple indices."""
    z = _vertices(poly)
    if len(z) == 0:
        raise DegenerateRegionError("empty vertex set")
    a = np.array([as_point(p) for p in probes], dtype=np.complex128)
    vals, arg = kernels.mu_many(np.ascontiguousarray(a.real), np.ascontiguousarray(a.imag),
                                np.ascontiguousarray(z.real), np.ascontiguousarray(z.imag))
    return vals, arg


def mu(poly, a) -> float:
    """Slack ``max F(a, b, c, d)`` over vertex triples of ``poly``."""
    return float(mu_many(poly, [a])[0][0])


def mu_witness(poly, a) -> tuple:
    """``(mu, (a, b, c, d))`` with the maximising quadruple."""
    z = _vertices(poly)
    vals, arg = mu_many(z, [a])
    j, k, l = arg[0]
    return float(vals[0]), (complex(a), complex(z[j]), complex(z[k]), complex(z[l]))


def g_slack(points, probes) -> np.ndarray:
    """B2 analogue of the slack: max over b of max(G1(a, b), G2(a, b))."""
    z = np.asarray(_vertices(points)) * np.exp(0.25j * np.pi)
    a = np.array([as_point(p) for p in probes], dtype=np.complex128) * np.exp(0.25j * np.pi)
    g1 = (a.imag[:, None] - z.imag[None, :]) ** 2 - 4.0 * a.real[:, None] * z.real[None, :]
    g2 = (a.real[:, None] - z.real[None, :]) ** 2 - 4.0 * a.imag[:, None] * z.imag[None, :]
    return np.maximum(g1, g2).max(axis=1)


@dataclass
class MaximalityProfile:
    points: list
    mu: np.ndarray
    mu_g: np.ndarray
    tol: float

    @property
    def labels(self) -> list:
        return ["maximal-at" if m >= -self.tol else "pushable" for m in self.mu]

    @property
    def labels_g(self) -> list:
        return ["maximal-at" if m >= -self.tol else "pushable" for m in self.mu_g]

    def maximal_points(self, use_g: bool = False) -> list:
        labels = self.labels_g if use_g else self.labels
        return [p for p, lab in zip(self.points, labels) if lab == "maximal-at"]

    def to_json(self) -> dict:
        return {
            "points": [[p.real, p.imag] for p in self.points],
            "mu": [float(v) for v in self.mu],
            "mu_g": [float(v) for v in self.mu_g],
            "labels": self.labels,
            "labels_g": self.labels_g,
            "tol": self.tol,
        }


def boundary_scan(region, n: int = 256, tol: float = DEFAULT_TOL, inner: int = INNER_SAMPLES) -> MaximalityProfile:
    """Slack at ``n`` boundary points of a certified convex region.

    The inner maximum runs over the polygon vertices, or for disks and cones
    over ``inner`` boundary samples; that underestimates the true slack.  Both
    the F-based slack and its G-based (B2) counterpart are reported, under
    separate labels.
    """
    if isinstance(region, (Disk, Cone)):
        inner_pts = certification_points(region, inner)
    else:
        inner_pts = list(to_polygon(region).vertices)
    if len(inner_pts) == 1:
        probes = inner_pts
    else:
        if n < 8:
            raise DomainError("boundary scan needs n >= 8")
        probes = boundary_discretize(region, n)
    rep = certify_a2(inner_pts, tol)
    if not rep.certified:
        raise UncertifiedRegionError(f"region is not certified: max F = {rep.worst_value:.3g}")
    vals, _ = mu_many(inner_pts, probes)
    return MaximalityProfile(list(probes), vals, g_slack(inner_pts, probes), tol)


def _box_cap(verts: np.ndarray, anchor: complex, direction: complex) -> float:
    """Largest push allowed by the necessary box over all vertex pairs."""
    cap = math.inf
    for u in verts:
        for v in verts:
            a = v / u
            if abs(a.imag) <= 1e-9 * abs(a) or a.real <= 0:
                continue
            lo, hi = necessary_box(a)
            ra, rd = (anchor / u).real, (direction / u).real
            if rd > 0:
                cap = min(cap, (hi * a.real - ra) / rd)
            elif rd < 0:
                cap = min(cap, (ra - lo * a.real) / -rd)
    return max(cap, 0.0)


def _site(poly: ConvexPolygon, site: int, kind: str):
    m = len(poly)
    if kind == "side":
        a, b = poly.side(site)
        return 0.5 * (a + b), poly.outward_normal(site)
    if kind == "vertex":
        v = poly.vertices[site % m]
        if m == 1:
            return v, v / abs(v)
        n1 = poly.outward_normal(site - 1)
        n2 = poly.outward_normal(site)
        nn = n1 + n2
        if abs(nn) < 1e-12:
            nn = n2
        return v, nn / abs(nn)
    raise DomainError(f"unknown site kind {kind!r}")


def _is_outward(poly: ConvexPolygon, site: int, kind: str, direction: complex) -> bool:
    m = len(poly)
    if m == 1:
        return True
    if kind == "side":
        normals = [poly.outward_normal(site)]
    elif m == 2:
        # a segment endpoint: anything not pointing along the segment inward
        v = poly.vertices[site % m]
        w = poly.vertices[(site + 1) % m]
        e = (w - v) / abs(w - v)
        return not (abs((direction * e.conjugate()).imag) < 1e-12 and (direction * e.conjugate()).real > 0)
    else:
        normals = [poly.outward_normal(site - 1), poly.outward_normal(site)]
    return any((direction * n.conjugate()).real > 1e-12 for n in normals)


def _point_slack(verts: np.ndarray, p: complex, criterion: str) -> float:
    pts = np.append(verts, p)
    if criterion == "a2":
        return mu(pts, p)
    excess = abs(math.atan2(p.imag, p.real)) - math.pi / 4
    return max(excess, float(g_slack(pts, [p])[0]))


def push_out_step(polygon: ConvexPolygon, site: int, direction=None, tol: float = DEFAULT_TOL,
                  kind: str = "side", criterion: str = "a2") -> tuple:
    """Push a boundary site of a certified polygon outward as far as possible.

    A new point ``anchor + d * direction`` is added, where the anchor is the
    midpoint of side ``site`` (``kind="side"``) or the vertex itself
    (``kind="vertex"``) and the direction defaults to the outward normal.  The
    feasible pushes form an interval [0, d*] because the hull of a certified
    set stays certified, so d* is found by bisection.  Only quadruples that
    involve the new point need checking.

    Returns ``(new_polygon, d)``; d may be 0 when the site is already maximal.
    """
    if criterion not in ("a2", "b2"):
        raise DomainError("criterion must be 'a2' or 'b2'")
    if kind == "side" and polygon.is_point:
        raise DegenerateRegionError("a single point has no sides to push")
    anchor, normal = _site(polygon, site, kind)
    direction = normal if direction is None else as_point(direction, nonzero=True)
    direction = direction / abs(direction)
    if not _is_outward(polygon, site, kind, direction):
        raise DomainError("push direction does not point out of the polygon")
    verts = polygon.as_array()
    scale = polygon.scale

    def feasible(d: float) -> bool:
        p = anchor + d * direction
        if abs(p) <= 1e-12 * scale:
            return False
        if _point_slack(verts, p, criterion) > tol:
            return False
        return not _hull_has_origin(verts, p)

    cap = _box_cap(verts, anchor, direction)
    hi = polygon.diameter() if len(polygon) > 1 else 0.5 * abs(anchor)
    hi = min(hi, cap)
    if hi <= 0:
        return polygon, 0.0
    lo = 0.0
    limit = min(cap, 1e3 * scale)
    while feasible(hi):
        lo = hi
        if hi >= limit:
            break
        hi = min(2.0 * hi, limit)
    if lo < hi:
        eps = 1e-13 * (1.0 + scale)
        while hi - lo > eps:
            mid = 0.5 * (lo + hi)
            if feasible(mid):
                lo = mid
            else:
                hi = mid
    if lo <= 0.0:
        return polygon, 0.0
    new = convex_hull(list(polygon.vertices) + [anchor + lo * direction])
    return new, lo


def _hull_has_origin(verts: np.ndarray, p: complex) -> bool:
    try:
        convex_hull(list(verts) + [p])
    except DomainError:
        return True
    return False


@dataclass(frozen=True)
class StepRecord:
    site: int
    distance: float
    worst_f: float
    site_mu: float

    def to_json(self) -> dict:
        return {"site": self.site, "d": self.distance, "worstF": self.worst_f, "mu": self.site_mu}


@dataclass
class GrowthTrace:
    polygons: list
    steps: list = field(default_factory=list)
    tol: float = DEFAULT_TOL

    @property
    def final(self) -> ConvexPolygon:
        return self.polygons[-1]

    def to_json(self) -> dict:
        return {
            "polygons": [[[v.real, v.imag] for v in p.vertices] for p in self.polygons],
            "steps": [s.to_json() for s in self.steps],
        }


def _certified(points, tol, criterion) -> bool:
    check = certify_a2 if criterion == "a2" else certify_b2
    return check(list(points), tol).certified


def _site_slack(poly: ConvexPolygon, anchors, criterion: str) -> np.ndarray:
    if criterion == "a2":
        return mu_many(poly, anchors)[0]
    return g_slack(poly, anchors)


def grow(seed, steps: int, schedule: str = "round-robin", tol: float = DEFAULT_TOL,
         criterion: str = "a2") -> GrowthTrace:
    """Grow a certified polygon by repeated side push-outs.

    ``round-robin`` walks the sides in order; ``max-slack`` always pushes the
    side whose midpoint has the most negative slack (lowest index on ties).
    Stops early once a full sweep of sides moves less than ``MIN_PUSH``.  The
    trace keeps every distinct polygon, so consecutive entries are strictly
    nested; ``steps`` records every attempted push.
    """
    if schedule not in ("round-robin", "max-slack"):
        raise DomainError(f"unknown schedule {schedule!r}")
    poly = seed if isinstance(seed, ConvexPolygon) else to_polygon(seed)
    if not _certified(poly.vertices, tol, criterion):
        raise UncertifiedRegionError("seed polygon is not certified")
    trace = GrowthTrace([poly], tol=tol)
    if steps <= 0:
        return trace
    if poly.is_point:
        raise DegenerateRegionError("cannot grow from a single point")
    cursor = 0
    quiet = 0
    for _ in range(steps):
        n_sides = poly.n_sides()
        mids = [0.5 * sum(poly.side(i)) for i in range(n_sides)]
        slack = _site_slack(poly, mids, criterion)
        if schedule == "max-slack":
            site = int(np.argmin(slack))
        else:
            site = cursor % n_sides
        new, d = push_out_step(poly, site, tol=tol, criterion=criterion)
        p = mids[site] + d * poly.outward_normal(site)
        worst = _point_slack(new.as_array(), p, criterion) if d > 0 else float(slack[site])
        trace.steps.append(StepRecord(site, d, worst, float(slack[site])))
        quiet = quiet + 1 if d < MIN_PUSH else 0
        if new.vertices != poly.vertices:
            poly = new
            trace.polygons.append(poly)
            idx = int(np.argmin(np.abs(poly.as_array() - p)))
            cursor = idx + 1 if abs(poly.vertices[idx] - p) < 1e-12 * (1 + abs(p)) else site + 1
        else:
            cursor = site + 1
        if quiet >= poly.n_sides():
            break
    return trace


def disk_H(u: float, v: float) -> float:
    """G1 for the pair 1 + e^{i(u - pi/4)}/2, 1 + e^{i(v - pi/4)}/2 of disk points."""
    return 0.25 * (math.sin(u) - math.sin(v)) ** 2 - (math.sqrt(2.0) + math.cos(u)) * (math.sqrt(2.0) + math.cos(v))
