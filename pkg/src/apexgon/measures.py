"""Monotone vertex error functions and the aggregate subpolygon error.

Two error measures are supported.  ``HAUSDORFF`` charges an excluded vertex
its distance to the bracketing segment; ``APERTURE_COMPLEMENT`` charges
``pi`` minus the angle the bracketing segment subtends at the vertex.

The module also holds the disk-cap regions used to reason about the
aperture measure: ``D_sigma(p, q)`` is the set of points right of the
oriented line ``pq`` that see ``pq`` under an angle of at least
``pi - sigma``.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple, Sequence

import numpy as np

from .exceptions import DegenerateInput, InvalidSubset, PreconditionViolated
from .geometry import ConvexPolygon, Point, _cross, angle_at, point_segment_distance

# absolute slack for every "psi <= sigma" decision
SLACK = 1e-12


class ErrorMeasure(enum.Enum):
    HAUSDORFF = "hausdorff"
    APERTURE_COMPLEMENT = "aperture"

    @classmethod
    def parse(cls, value) -> "ErrorMeasure":
        if isinstance(value, cls):
            return value
        v = str(value).lower()
        if v in ("aperture", "aperture_complement", "aperturecomplement"):
            return cls.APERTURE_COMPLEMENT
        if v == "hausdorff":
            return cls.HAUSDORFF
        raise ValueError(f"unknown error measure {value!r}")


HAUSDORFF = ErrorMeasure.HAUSDORFF
APERTURE = ErrorMeasure.APERTURE_COMPLEMENT


def psi(measure: ErrorMeasure, v: Sequence[float], s: Sequence[float], t: Sequence[float]) -> float:
    """Error of vertex ``v`` when it is cut off by the segment ``st``."""
    if tuple(v) == tuple(s) or tuple(v) == tuple(t) or tuple(s) == tuple(t):
        raise DegenerateInput("psi needs three distinct points")
    if measure is ErrorMeasure.HAUSDORFF:
        return point_segment_distance(v, s, t)
    return max(0.0, math.pi - angle_at(v, s, t))


def _check_subset(n: int, indices) -> list[int]:
    idx = [int(i) for i in indices]
    if any(i < 0 or i >= n for i in idx):
        raise InvalidSubset(f"index out of range for n={n}: {idx}")
    if len(set(idx)) != len(idx):
        raise InvalidSubset(f"duplicated indices: {idx}")
    if len(idx) < 2:
        raise InvalidSubset("a subpolygon needs at least two vertices")
    return sorted(idx)


def phi(measure: ErrorMeasure, P: ConvexPolygon, Q_indices) -> tuple[float, int | None]:
    """Approximation error of ``P`` by the subpolygon on ``Q_indices``.

    Every excluded vertex is charged ``psi`` against the two consecutive
    chosen vertices that bracket it.  Returns ``(value, witness)`` where the
    witness is the index of the worst vertex, or ``None`` when nothing is
    excluded.
    """
    n = P.n
    idx = _check_subset(n, Q_indices)
    best, witness = 0.0, None
    for j, s in enumerate(idx):
        t = idx[(j + 1) % len(idx)]
        gap = (t - s) % n or n
        for step in range(1, gap):
            v = (s + step) % n
            e = psi(measure, P[v], P[s], P[t])
            if witness is None or e > best:
                best, witness = e, v
    return best, witness


# ---------------------------------------------------------------------------
# vectorised tables shared by the optimisers


@lru_cache(maxsize=64)
def between_mask(n: int) -> np.ndarray:
    """``mask[s, t, v]`` is true iff ``s < v < t`` in cyclic CCW order."""
    r = np.arange(n)
    ov = (r[None, None, :] - r[:, None, None]) % n
    ot = (r[None, :, None] - r[:, None, None]) % n
    m = (ov > 0) & (ov < ot)
    m.setflags(write=False)
    return m


def psi_table_from_points(measure: ErrorMeasure, pts: np.ndarray) -> np.ndarray:
    """``table[v, s, t] = psi(v, s, t)``; NaN where points coincide."""
    V = pts[:, None, None, :]
    S = pts[None, :, None, :]
    T = pts[None, None, :, :]
    with np.errstate(invalid="ignore", divide="ignore"):
        if measure is ErrorMeasure.HAUSDORFF:
            d = T - S
            w = V - S
            ll = np.sum(d * d, axis=-1)
            lam = np.sum(w * d, axis=-1) / ll
            line = np.abs(d[..., 0] * w[..., 1] - d[..., 1] * w[..., 0]) / np.sqrt(ll)
            to_s = np.hypot(w[..., 0], w[..., 1])
            wt = V - T
            to_t = np.hypot(wt[..., 0], wt[..., 1])
            out = np.where(lam <= 0.0, to_s, np.where(lam >= 1.0, to_t, line))
        else:
            a = S - V
            b = T - V
            cr = np.abs(a[..., 0] * b[..., 1] - a[..., 1] * b[..., 0])
            dt = np.sum(a * b, axis=-1)
            out = np.maximum(0.0, np.pi - np.arctan2(cr, dt))
    n = len(pts)
    r = np.arange(n)
    out = np.array(out, dtype=float)
    out[r, r, :] = np.nan
    out[r, :, r] = np.nan
    out[:, r, r] = np.nan
    return out


@lru_cache(maxsize=256)
def psi_table(P: ConvexPolygon, measure: ErrorMeasure) -> np.ndarray:
    t = psi_table_from_points(measure, P.array)
    t.setflags(write=False)
    return t


def diagonal_errors(table: np.ndarray) -> np.ndarray:
    """``D[s, t]`` = worst psi over vertices strictly between s and t.

    Zero for polygon edges and on the diagonal.
    """
    n = table.shape[0]
    mask = between_mask(n)
    vals = np.transpose(table, (1, 2, 0))  # [s, t, v]
    D = np.max(np.where(mask, vals, -np.inf), axis=2)
    D[~np.isfinite(D)] = 0.0
    return D


# ---------------------------------------------------------------------------
# disk-cap regions


@dataclass(frozen=True)
class DSigmaRegion:
    """Points right of ``p -> q`` seeing ``pq`` at an angle >= pi - sigma."""

    p: Point
    q: Point
    sigma: float

    def __post_init__(self):
        if not 0.0 < self.sigma < math.pi:
            raise ValueError(f"sigma must lie in (0, pi), got {self.sigma}")
        if tuple(self.p) == tuple(self.q):
            raise DegenerateInput("region needs p != q")

    @property
    def radius(self) -> float:
        return math.dist(self.p, self.q) / (2.0 * math.sin(self.sigma))

    @property
    def center(self) -> Point:
        (px, py), (qx, qy) = self.p, self.q
        d = math.dist(self.p, self.q)
        # left unit normal of p -> q; negative offset once sigma > pi/2
        nx, ny = -(qy - py) / d, (qx - px) / d
        h = self.radius * math.cos(self.sigma)
        return ((px + qx) / 2 + h * nx, (py + qy) / 2 + h * ny)


def d_sigma_contains(region: DSigmaRegion, x: Sequence[float]) -> bool:
    """Closed membership via the supporting disk and half-plane."""
    p, q = region.p, region.q
    scale = math.dist(p, q)
    if _cross(p, q, x) > SLACK * scale * max(scale, math.dist(p, x)):
        return False
    c = region.center
    r = region.radius
    return math.dist(c, x) <= r * (1.0 + 1e-12)


class Circle(NamedTuple):
    center: Point
    radius: float


def _chord_interval(c: Circle, a, b):
    """Parameter interval of the line a->b (unit speed from a) inside c."""
    d = math.dist(a, b)
    ux, uy = (b[0] - a[0]) / d, (b[1] - a[1]) / d
    cx, cy = c.center[0] - a[0], c.center[1] - a[1]
    t0 = cx * ux + cy * uy
    h = cx * uy - cy * ux
    if abs(h) > c.radius:
        return None
    w = math.sqrt(c.radius ** 2 - h ** 2)
    return t0 - w, t0 + w


def stick_out_radius_check(D: Circle, Dp: Circle, ell: tuple[Point, Point], p: Point) -> bool:
    """Compare radii of two disks when ``Dp`` sticks out of ``D`` below ``ell``.

    Preconditions: both centres strictly left of the oriented line ``ell``,
    ``Dp`` meets ``ell`` inside ``D`` and ``p`` lies in ``Dp`` but not in
    ``D``, strictly right of ``ell``.  Raises :class:`PreconditionViolated`
    otherwise.  Returns whether the radius of ``Dp`` is smaller.
    """
    D, Dp = Circle(*D), Circle(*Dp)
    a, b = ell
    if _cross(a, b, D.center) <= 0 or _cross(a, b, Dp.center) <= 0:
        raise PreconditionViolated("disk centres must lie left of the line")
    if _cross(a, b, p) >= 0:
        raise PreconditionViolated("p must lie strictly right of the line")
    if math.dist(p, Dp.center) > Dp.radius or math.dist(p, D.center) <= D.radius:
        raise PreconditionViolated("p must lie in D' but not in D")
    ip = _chord_interval(Dp, a, b)
    if ip is not None:
        i = _chord_interval(D, a, b)
        if i is None or ip[0] < i[0] or ip[1] > i[1]:
            raise PreconditionViolated("D' cap on the line is not inside D")
    return Dp.radius < D.radius
