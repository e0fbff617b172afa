"""JSON forms of regions and matrices."""
from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from .geom import (ConvexPolygon, Cone, Disk, DomainError, Interval, Points, Rectangle, Trapezoid, as_point,
                   convex_hull)


def pair(z: complex) -> list:
    return [z.real, z.imag]


def _point(v) -> complex:
    if not (isinstance(v, (list, tuple)) and len(v) == 2):
        raise DomainError(f"expected [re, im], got {v!r}")
    return as_point(v)


def region_from_json(obj: dict):
    """Build a region from its JSON object; polygons are re-hulled."""
    try:
        kind = obj["type"]
        if kind == "polygon":
            pts = [_point(v) for v in obj["vertices"]]
            poly = convex_hull(pts)
            if len(poly) != len(pts):
                raise DomainError("polygon vertices are not in strictly convex position")
            return poly
        if kind == "disk":
            return Disk(_point(obj["center"]), float(obj["radius"]))
        if kind == "cone":
            return Cone(_point(obj["center"]), float(obj["radius"]), _point(obj["apex"]))
        if kind == "rectangle":
            return Rectangle(float(obj["M"]), float(obj["L"]), float(obj["N"]))
        if kind == "trapezoid":
            return Trapezoid(float(obj["M"]), float(obj["L"]), float(obj["t"]))
        if kind == "interval":
            return Interval(float(obj["a"]), float(obj["b"]))
        if kind == "points":
            return Points(tuple(_point(v) for v in obj["values"]))
    except KeyError as exc:
        raise DomainError(f"region JSON missing field {exc}") from None
    raise DomainError(f"unknown region type {obj.get('type')!r}")


def region_to_json(region) -> dict:
    if isinstance(region, ConvexPolygon):
        return {"type": "polygon", "vertices": [pair(v) for v in region.vertices]}
    if isinstance(region, Disk):
        return {"type": "disk", "center": pair(region.center), "radius": region.radius}
    if isinstance(region, Cone):
        return {"type": "cone", "center": pair(region.center), "radius": region.radius, "apex": pair(region.apex)}
    if isinstance(region, Rectangle):
        return {"type": "rectangle", "M": region.M, "L": region.L, "N": region.N}
    if isinstance(region, Trapezoid):
        return {"type": "trapezoid", "M": region.M, "L": region.L, "t": region.t}
    if isinstance(region, Interval):
        return {"type": "interval", "a": region.a, "b": region.b}
    if isinstance(region, Points):
        return {"type": "points", "values": [pair(v) for v in region.values]}
    raise DomainError(f"cannot serialise {type(region).__name__}")


def load_region(path) -> object:
    return region_from_json(json.loads(Path(path).read_text()))


def matrix_from_json(obj: dict) -> np.ndarray:
    n = int(obj["n"])
    entries = [_point(v) for v in obj["entries"]]
    if len(entries) != n * n:
        raise DomainError(f"matrix of size {n} needs {n * n} entries, got {len(entries)}")
    return np.array(entries, dtype=np.complex128).reshape(n, n)


def matrix_to_json(A: np.ndarray) -> dict:
    return {"n": int(A.shape[0]), "entries": [pair(complex(z)) for z in np.asarray(A).ravel()]}
