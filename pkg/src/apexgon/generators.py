"""Seeded convex polygon generators."""
from __future__ import annotations

import enum
import math

import numpy as np

from .exceptions import ApexgonError
from .geometry import ConvexPolygon, perimeter, regular_polygon, validate_polygon

MAX_TRIES = 1000


class Generator(enum.Enum):
    REGULAR_EXACT = "regular"
    REGULAR_PERTURBED = "perturbed"
    RANDOM_CONVEX = "random"
    COCIRCULAR = "cocircular"

    @classmethod
    def parse(cls, value) -> "Generator":
        if isinstance(value, cls):
            return value
        v = str(value).lower().replace("_", "").replace("-", "")
        aliases = {"regular": cls.REGULAR_EXACT, "regularexact": cls.REGULAR_EXACT,
                   "perturbed": cls.REGULAR_PERTURBED, "regularperturbed": cls.REGULAR_PERTURBED,
                   "random": cls.RANDOM_CONVEX, "randomconvex": cls.RANDOM_CONVEX,
                   "cocircular": cls.COCIRCULAR}
        if v not in aliases:
            raise ValueError(f"unknown generator {value!r}")
        return aliases[v]


def _retry(make, rng):
    for _ in range(MAX_TRIES):
        try:
            return validate_polygon(make(rng))
        except ApexgonError:
            continue
    raise RuntimeError("could not draw a strictly convex polygon")


def _chain_steps(values: np.ndarray, rng) -> list[float]:
    lo, hi = values[0], values[-1]
    steps = []
    last_a = last_b = lo
    for v in values[1:-1]:
        if rng.random() < 0.5:
            steps.append(v - last_a)
            last_a = v
        else:
            steps.append(last_b - v)
            last_b = v
    steps.append(hi - last_a)
    steps.append(last_b - hi)
    return steps


def random_convex(n: int, rng: np.random.Generator) -> ConvexPolygon:
    """Uniform-ish random convex n-gon (Valtr's construction)."""
    def make(rng):
        xs = np.sort(rng.random(n))
        ys = np.sort(rng.random(n))
        dx = _chain_steps(xs, rng)
        dy = _chain_steps(ys, rng)
        rng.shuffle(dy)
        vec = sorted(zip(dx, dy), key=lambda d: math.atan2(d[1], d[0]))
        pts = np.cumsum(np.array(vec), axis=0)
        return pts - pts.mean(axis=0)
    return _retry(make, rng)


def regular_perturbed(n: int, rng: np.random.Generator, jitter: float = 0.3,
                      radial: float = 0.2) -> ConvexPolygon:
    """Regular n-gon with angular jitter (fraction of half a step) and radial
    noise (fraction of the sagitta ``1 - cos(2pi/n)``, so it stays convex-ish
    for large n)."""
    def make(rng):
        step = 2 * math.pi / n
        ang = step * np.arange(n) + rng.uniform(-jitter, jitter, n) * step / 2
        amp = radial * (1 - math.cos(step))
        rad = 1.0 + rng.uniform(-amp, amp, n)
        return np.column_stack((rad * np.cos(ang), rad * np.sin(ang)))
    return _retry(make, rng)


def cocircular(n: int, rng: np.random.Generator) -> ConvexPolygon:
    """n points on the unit circle at uniformly random angles."""
    def make(rng):
        ang = np.sort(rng.uniform(0, 2 * math.pi, n))
        gaps = np.diff(np.concatenate((ang, [ang[0] + 2 * math.pi])))
        if gaps.min() < 1e-3:
            raise ApexgonError("angles too close")
        return np.column_stack((np.cos(ang), np.sin(ang)))
    return _retry(make, rng)


def generate(generator: Generator, n: int, rng: np.random.Generator) -> ConvexPolygon:
    generator = Generator.parse(generator)
    if generator is Generator.REGULAR_EXACT:
        return regular_polygon(n)
    if generator is Generator.REGULAR_PERTURBED:
        return regular_perturbed(n, rng)
    if generator is Generator.COCIRCULAR:
        return cocircular(n, rng)
    return random_convex(n, rng)


def unit_perimeter(P: ConvexPolygon) -> ConvexPolygon:
    return P.scaled(1.0 / perimeter(P))
