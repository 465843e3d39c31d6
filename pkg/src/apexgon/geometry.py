"""Planar primitives: convex polygons, orientation, distances and angles.

Points are plain ``(x, y)`` float tuples.  A :class:`ConvexPolygon` is an
immutable, strictly convex, counter-clockwise vertex sequence whose first
vertex is the lexicographically smallest one, so that vertex indices are
reproducible between runs.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .exceptions import (
    DegenerateApex,
    DegenerateSegment,
    DuplicateVertex,
    NotConvex,
    TooFewVertices,
)

Point = tuple[float, float]

# relative threshold on |cross| / (|q - p| |r - p|)
COLLINEAR_TOL = 1e-12


def _cross(p, q, r) -> float:
    return (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])


def orientation(p: Sequence[float], q: Sequence[float], r: Sequence[float]) -> int:
    """Sign of the turn p -> q -> r: +1 left, -1 right, 0 collinear."""
    c = _cross(p, q, r)
    scale = math.hypot(q[0] - p[0], q[1] - p[1]) * math.hypot(r[0] - p[0], r[1] - p[1])
    if abs(c) <= COLLINEAR_TOL * scale:
        return 0
    return 1 if c > 0 else -1


def between(p: int, u: int, q: int, n: int, strict: bool = True) -> bool:
    """Cyclic order test on vertex indices modulo ``n``.

    With ``strict`` this is ``p < u < q`` walking counter-clockwise from
    ``p``; otherwise both endpoints may coincide with ``u``.
    """
    ou = (u - p) % n
    oq = (q - p) % n
    if strict:
        return 0 < ou < oq
    return ou <= oq


def point_segment_distance(v: Sequence[float], s: Sequence[float], t: Sequence[float]) -> float:
    dx, dy = t[0] - s[0], t[1] - s[1]
    ll = dx * dx + dy * dy
    if ll == 0.0:
        raise DegenerateSegment(f"segment endpoints coincide at {tuple(s)}")
    wx, wy = v[0] - s[0], v[1] - s[1]
    lam = (wx * dx + wy * dy) / ll
    if lam <= 0.0:
        return math.hypot(wx, wy)
    if lam >= 1.0:
        return math.hypot(v[0] - t[0], v[1] - t[1])
    # distance to the supporting line; avoids cancellation in the foot point
    return abs(dx * wy - dy * wx) / math.sqrt(ll)


def angle_at(v: Sequence[float], s: Sequence[float], t: Sequence[float]) -> float:
    """Angle s-v-t at apex ``v`` in radians."""
    ax, ay = s[0] - v[0], s[1] - v[1]
    bx, by = t[0] - v[0], t[1] - v[1]
    if (ax == 0.0 and ay == 0.0) or (bx == 0.0 and by == 0.0):
        raise DegenerateApex(f"apex {tuple(v)} coincides with an endpoint")
    return math.atan2(abs(ax * by - ay * bx), ax * bx + ay * by)


@dataclass(frozen=True)
class ConvexPolygon:
    """Strictly convex polygon, CCW, starting at the lexicographic minimum.

    Build instances with :func:`validate_polygon`; the constructor does not
    check anything.
    """

    vertices: tuple[Point, ...]

    def __len__(self) -> int:
        return len(self.vertices)

    def __getitem__(self, i: int) -> Point:
        return self.vertices[i % len(self.vertices)]

    def __iter__(self):
        return iter(self.vertices)

    @property
    def n(self) -> int:
        return len(self.vertices)

    @cached_property
    def array(self) -> np.ndarray:
        a = np.array(self.vertices, dtype=float)
        a.setflags(write=False)
        return a

    @cached_property
    def scale(self) -> float:
        a = self.array
        return float(np.max(np.ptp(a, axis=0)))

    def subpolygon(self, indices: Iterable[int]) -> "ConvexPolygon":
        """Convex hull of the chosen vertices (indices into this polygon)."""
        idx = sorted(set(int(i) for i in indices))
        return validate_polygon([self.vertices[i] for i in idx])

    def contains(self, x: Sequence[float]) -> bool:
        """Closed point membership, boundary included."""
        tol = COLLINEAR_TOL * max(self.scale, 1e-300)
        v = self.vertices
        n = len(v)
        for i in range(n):
            p, q = v[i], v[(i + 1) % n]
            c = _cross(p, q, x)
            if c < -tol * math.hypot(q[0] - p[0], q[1] - p[1]):
                return False
        return True

    def scaled(self, factor: float) -> "ConvexPolygon":
        return ConvexPolygon(tuple((x * factor, y * factor) for x, y in self.vertices))

    def mirrored(self) -> "ConvexPolygon":
        """Reflection across the y axis, re-canonicalized."""
        return validate_polygon([(-x, y) for x, y in self.vertices])


def validate_polygon(points: Iterable[Sequence[float]]) -> ConvexPolygon:
    """Check and canonicalize a vertex list into a :class:`ConvexPolygon`.

    Clockwise input is reversed.  Raises :class:`TooFewVertices`,
    :class:`DuplicateVertex` or :class:`NotConvex`.
    """
    pts = [(float(p[0]), float(p[1])) for p in points]
    for p in pts:
        if not (math.isfinite(p[0]) and math.isfinite(p[1])):
            raise ValueError(f"non-finite coordinate in {p}")
    n = len(pts)
    if n < 3:
        raise TooFewVertices(f"need at least 3 vertices, got {n}")
    if len(set(pts)) != n:
        raise DuplicateVertex("polygon has repeated vertices")

    area2 = sum(pts[i][0] * pts[(i + 1) % n][1] - pts[(i + 1) % n][0] * pts[i][1]
                for i in range(n))
    if area2 < 0:
        pts.reverse()

    turning = 0.0
    for i in range(n):
        p, q, r = pts[i - 1], pts[i], pts[(i + 1) % n]
        if orientation(p, q, r) <= 0:
            raise NotConvex(f"vertex {i} at {q} is not a strict left turn")
        ex, ey = q[0] - p[0], q[1] - p[1]
        fx, fy = r[0] - q[0], r[1] - q[1]
        turning += math.atan2(ex * fy - ey * fx, ex * fx + ey * fy)
    # all left turns but winding more than once: a star polygon
    if abs(turning - 2 * math.pi) > 1e-6:
        raise NotConvex("vertex sequence winds more than once")

    start = min(range(n), key=lambda i: pts[i])
    return ConvexPolygon(tuple(pts[start:] + pts[:start]))


def regular_polygon(n: int, circumradius: float = 1.0, phase: float = 0.0) -> ConvexPolygon:
    """Regular n-gon centred at the origin, first vertex at angle ``phase``."""
    if n < 3:
        raise TooFewVertices(f"need at least 3 vertices, got {n}")
    pts = [(circumradius * math.cos(phase + 2 * math.pi * i / n),
            circumradius * math.sin(phase + 2 * math.pi * i / n)) for i in range(n)]
    return validate_polygon(pts)


def perimeter(P: ConvexPolygon) -> float:
    v = P.vertices
    return math.fsum(math.dist(v[i], v[(i + 1) % len(v)]) for i in range(len(v)))


def aperture_angle(x: Sequence[float], Q: ConvexPolygon) -> float:
    """Angle of the smallest cone with apex ``x`` containing ``Q``.

    Points inside ``Q`` or on its boundary get pi.
    """
    if Q.contains(x):
        return math.pi
    c = Q.array.mean(axis=0)
    dx, dy = c[0] - x[0], c[1] - x[1]
    lo, hi = math.inf, -math.inf
    # the polygon lies in an open half-plane as seen from x, so relative
    # angles to the centroid direction stay inside (-pi, pi)
    for vx, vy in Q.vertices:
        ax, ay = vx - x[0], vy - x[1]
        a = math.atan2(dx * ay - dy * ax, dx * ax + dy * ay)
        lo = min(lo, a)
        hi = max(hi, a)
    return hi - lo


def point_polygon_distance(x: Sequence[float], Q: ConvexPolygon) -> float:
    if Q.contains(x):
        return 0.0
    v = Q.vertices
    return min(point_segment_distance(x, v[i], v[(i + 1) % len(v)]) for i in range(len(v)))


def hausdorff_distance(A: ConvexPolygon, B: ConvexPolygon) -> float:
    """Hausdorff distance of two convex polygons (attained at vertices)."""
    ab = max(point_polygon_distance(p, B) for p in A.vertices)
    ba = max(point_polygon_distance(q, A) for q in B.vertices)
    return max(ab, ba)
