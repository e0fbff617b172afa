"""Static SVG and CSV output of region outlines."""
from __future__ import annotations

import math

from .geom import ConvexPolygon, Cone, Disk, Interval, Points, boundary_discretize, to_polygon


def outline(region, n: int = 256) -> list:
    """Boundary points for drawing; exact vertices for polygonal regions."""
    if isinstance(region, (Disk, Cone)):
        return boundary_discretize(region, n)
    if isinstance(region, Interval):
        return [complex(region.a), complex(region.b)]
    if isinstance(region, Points):
        return list(region.values)
    return list(to_polygon(region).vertices)


def to_csv(region, n: int = 256) -> str:
    rows = ["re,im"]
    rows += [f"{z.real!r},{z.imag!r}" for z in outline(region, n)]
    return "\n".join(rows) + "\n"


def _ticks(lo: float, hi: float) -> list:
    span = hi - lo
    step = 10 ** math.floor(math.log10(span / 4)) if span > 0 else 1.0
    for m in (1, 2, 5, 10):
        if span / (m * step) <= 6:
            step *= m
            break
    first = math.ceil(lo / step) * step
    out = []
    v = first
    while v <= hi + 1e-12:
        out.append(round(v, 12))
        v += step
    return out


def to_svg(region, marks=(), n: int = 256, size: int = 480) -> str:
    """Outline of ``region`` plus optional marked points, with axis ticks."""
    pts = outline(region, n)
    allpts = pts + list(marks) + [0j]
    x0 = min(p.real for p in allpts)
    x1 = max(p.real for p in allpts)
    y0 = min(p.imag for p in allpts)
    y1 = max(p.imag for p in allpts)
    pad = 0.08 * max(x1 - x0, y1 - y0, 1e-9)
    x0, x1, y0, y1 = x0 - pad, x1 + pad, y0 - pad, y1 + pad
    s = (size - 40) / max(x1 - x0, y1 - y0)

    def X(z):
        return 30 + (z.real - x0) * s

    def Y(z):
        return size - 30 - (z.imag - y0) * s

    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" viewBox="0 0 {size} {size}">',
           '<rect width="100%" height="100%" fill="white"/>']
    # axes through the origin
    out.append(f'<line x1="{X(complex(x0, 0)):.2f}" y1="{Y(0j):.2f}" x2="{X(complex(x1, 0)):.2f}" '
               f'y2="{Y(0j):.2f}" stroke="#999" stroke-width="0.8"/>')
    out.append(f'<line x1="{X(0j):.2f}" y1="{Y(complex(0, y0)):.2f}" x2="{X(0j):.2f}" '
               f'y2="{Y(complex(0, y1)):.2f}" stroke="#999" stroke-width="0.8"/>')
    for t in _ticks(x0, x1):
        z = complex(t, 0)
        out.append(f'<line x1="{X(z):.2f}" y1="{Y(z) - 3:.2f}" x2="{X(z):.2f}" y2="{Y(z) + 3:.2f}" stroke="#666"/>')
        out.append(f'<text x="{X(z):.2f}" y="{Y(z) + 14:.2f}" font-size="9" text-anchor="middle">{t:g}</text>')
    for t in _ticks(y0, y1):
        z = complex(0, t)
        out.append(f'<line x1="{X(z) - 3:.2f}" y1="{Y(z):.2f}" x2="{X(z) + 3:.2f}" y2="{Y(z):.2f}" stroke="#666"/>')
        out.append(f'<text x="{X(z) - 5:.2f}" y="{Y(z) + 3:.2f}" font-size="9" text-anchor="end">{t:g}</text>')
    if isinstance(region, Points):
        for p in pts:
            out.append(f'<circle cx="{X(p):.2f}" cy="{Y(p):.2f}" r="3" fill="#1f4e9c"/>')
    else:
        closed = pts + pts[:1] if not isinstance(region, Interval) else pts
        coords = " ".join(f"{X(p):.2f},{Y(p):.2f}" for p in closed)
        out.append(f'<polyline points="{coords}" fill="#cfe0f7" fill-opacity="0.6" stroke="#1f4e9c" stroke-width="1.5"/>')
    for p in marks:
        out.append(f'<circle cx="{X(p):.2f}" cy="{Y(p):.2f}" r="3.5" fill="#c0392b"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def distinguished_points(region) -> list:
    if isinstance(region, ConvexPolygon):
        return list(region.vertices)
    if isinstance(region, (Disk, Cone)):
        c, r = region.center, region.radius
        pts = [c - r, c + 1j * r, c - 1j * r]
        if isinstance(region, Cone):
            pts.append(region.apex)
        return pts
    return []
