"""Compact convex bodies: inscribed sampling, tangent walk, refinement.

Smooth bodies (disk, ellipse) are sampled uniformly in their boundary
parameter.  Polygonal bodies are sampled proportionally to arc length
starting at vertex 0; collinear samples are dropped, so an inscribed
sample of a polygonal body is the hull of the samples.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .exceptions import Degenerate
from .geometry import ConvexPolygon, aperture_angle, point_segment_distance, regular_polygon, validate_polygon
from .measures import ErrorMeasure
from .optimize import optimal_subpolygon


class ConvexBody:
    """Base class; subclasses map a parameter in [0, 2pi) to the boundary."""

    corners: ConvexPolygon | None = None

    def point(self, theta: float) -> tuple[float, float]:
        raise NotImplementedError

    def boundary_points(self, n: int) -> np.ndarray:
        """``n`` counter-clockwise boundary points (corners always included)."""
        th = 2 * math.pi * np.arange(n) / n
        return np.array([self.point(t) for t in th])

    def boundary_residual(self, x) -> float:
        raise NotImplementedError

    @property
    def scale(self) -> float:
        pts = self.boundary_points(64)
        return float(np.max(np.ptp(pts, axis=0)))

    def to_dict(self) -> dict:
        raise NotImplementedError


@dataclass(frozen=True)
class Disk(ConvexBody):
    radius: float = 1.0

    def point(self, theta):
        return (self.radius * math.cos(theta), self.radius * math.sin(theta))

    def boundary_residual(self, x):
        return abs(math.hypot(x[0], x[1]) - self.radius)

    def to_dict(self):
        return {"kind": "disk", "radius": self.radius}


@dataclass(frozen=True)
class Ellipse(ConvexBody):
    a: float = 2.0
    b: float = 1.0

    def point(self, theta):
        return (self.a * math.cos(theta), self.b * math.sin(theta))

    def boundary_residual(self, x):
        # algebraic residual scaled to length units
        return abs((x[0] / self.a) ** 2 + (x[1] / self.b) ** 2 - 1.0) * min(self.a, self.b) / 2

    def to_dict(self):
        return {"kind": "ellipse", "a": self.a, "b": self.b}


class _Polygonal(ConvexBody):

    def _edges(self):
        v = self.corners.array
        w = np.roll(v, -1, axis=0)
        lens = np.hypot(*(w - v).T)
        return v, w, lens

    def point(self, theta):
        v, w, lens = self._edges()
        s = (theta % (2 * math.pi)) / (2 * math.pi) * lens.sum()
        cum = np.concatenate(([0.0], np.cumsum(lens)))
        i = min(int(np.searchsorted(cum, s, side="right")) - 1, len(lens) - 1)
        f = (s - cum[i]) / lens[i]
        return tuple(v[i] + f * (w[i] - v[i]))

    def boundary_points(self, n):
        v, w, lens = self._edges()
        counts = np.maximum(1, np.round(n * lens / lens.sum()).astype(int))
        out = []
        for i, c in enumerate(counts):
            f = np.arange(c)[:, None] / c
            out.append(v[i] + f * (w[i] - v[i]))
        return np.concatenate(out)

    def boundary_residual(self, x):
        P = self.corners
        return min(point_segment_distance(x, P[i], P[i + 1]) for i in range(P.n))


@dataclass(frozen=True)
class RegularGon(_Polygonal):
    m: int
    circumradius: float = 1.0

    @cached_property
    def corners(self) -> ConvexPolygon:
        return regular_polygon(self.m, self.circumradius)

    def to_dict(self):
        return {"kind": "regular", "m": self.m, "circumradius": self.circumradius}


@dataclass(frozen=True)
class PolygonBody(_Polygonal):
    polygon: ConvexPolygon

    @property
    def corners(self) -> ConvexPolygon:
        return self.polygon

    def to_dict(self):
        return {"kind": "polygon", "vertices": [list(p) for p in self.polygon.vertices]}


def _drop_collinear(pts: np.ndarray) -> np.ndarray:
    keep = []
    n = len(pts)
    for i in range(n):
        a, b, c = pts[i - 1], pts[i], pts[(i + 1) % n]
        cr = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
        if cr > 1e-12 * math.dist(a, b) * math.dist(a, c):
            keep.append(i)
    return pts[keep]


def sample_boundary(body: ConvexBody, n: int) -> ConvexPolygon:
    """Inscribed polygon through ``n`` boundary samples."""
    if n < 3:
        raise ValueError("need n >= 3 samples")
    if isinstance(body, _Polygonal):
        if n == body.corners.n:
            return body.corners
        th = 2 * math.pi * np.arange(n) / n
        pts = _drop_collinear(np.array([body.point(t) for t in th]))
    else:
        pts = body.boundary_points(n)
    gaps = np.hypot(*(np.roll(pts, -1, axis=0) - pts).T)
    if len(pts) < 3 or gaps.min() <= 1e-12 * body.scale:
        raise Degenerate(f"sampling {body.to_dict()['kind']} at n={n} collapses points")
    return validate_polygon(pts)


def tangent_walk_kgon(body: ConvexBody, k: int, dense_n: int = 4096) -> ConvexPolygon:
    """Inscribed polygon with a vertex each time the tangent turns 2pi/k.

    Walks the dense boundary sample; the turn is accumulated from exterior
    angles and includes the turn at the candidate vertex itself.  Polygonal
    bodies with at most ``k`` corners are returned unchanged.
    """
    if k < 3:
        raise ValueError("k must be at least 3")
    if body.corners is not None and body.corners.n <= k:
        return body.corners
    pts = body.boundary_points(dense_n)
    edges = np.roll(pts, -1, axis=0) - pts
    heading = np.unwrap(np.arctan2(edges[:, 1], edges[:, 0]))
    step = 2 * math.pi / k
    emitted = [0]
    for j in range(1, len(pts)):
        if heading[j] - heading[emitted[-1]] >= step - 1e-12:
            emitted.append(j)
    turn = np.diff(heading, prepend=heading[-1] - 2 * math.pi)
    while len(emitted) < 3:
        # extra vertices never shrink the aperture; only real corners
        # (positive turn) are eligible so the result stays strictly convex
        free = [j for j in range(len(pts)) if turn[j] > 1e-12 and j not in emitted]
        mid = heading[emitted[-1]] + (heading[0] + 2 * math.pi - heading[emitted[-1]]) / 2
        if len(emitted) == 2:
            a, b = emitted
            gaps = [(heading[b] - heading[a], a, b), (heading[a] + 2 * math.pi - heading[b], b, a)]
            _, a, b = max(gaps)
            mid = heading[a] + ((heading[b] - heading[a]) % (2 * math.pi)) / 2
        j = min(free, key=lambda j: abs((heading[j] - mid + math.pi) % (2 * math.pi) - math.pi))
        emitted = sorted(emitted + [j])
    return validate_polygon(pts[emitted])


def min_boundary_aperture(body: ConvexBody, Q: ConvexPolygon, dense_n: int = 4096) -> float:
    """Smallest aperture of Q seen from the dense boundary sample."""
    return min(aperture_angle(x, Q) for x in body.boundary_points(dense_n))


@dataclass(frozen=True)
class RefinementTrace:
    k: int
    samples_n: list[int]
    alpha_estimates: list[float]
    certificates: list[float]
    chosen: list[list[int]]

    def to_dict(self) -> dict:
        return {"k": self.k, "samples_n": self.samples_n,
                "alpha_estimates": self.alpha_estimates,
                "alpha_degrees": [math.degrees(a) for a in self.alpha_estimates],
                "certificates": self.certificates, "chosen": self.chosen}


def estimate_alpha_Ck(body: ConvexBody, k: int, n_schedule, dense_n: int = 4096) -> RefinementTrace:
    """Best aperture of inscribed k-gons over refining inscribed samples.

    For each ``n`` the optimal subpolygon of the ``n``-sample gives the
    estimate; the same k-gon evaluated on the dense boundary sample gives
    the certificate for the continuous body.
    """
    if k < 3:
        raise ValueError("k must be at least 3")
    ns, est, cert, chosen = [], [], [], []
    for n in n_schedule:
        Pn = sample_boundary(body, int(n))
        res = optimal_subpolygon(Pn, ErrorMeasure.APERTURE_COMPLEMENT, k)
        ns.append(int(n))
        est.append(math.pi - res.error)
        chosen.append(list(res.chosen))
        Q = Pn.subpolygon(res.chosen)
        cert.append(min_boundary_aperture(body, Q, dense_n))
    return RefinementTrace(k, ns, est, cert, chosen)
