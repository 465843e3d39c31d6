"""Worst-approximable polygons, family scans and the perimeter bound.

A polygon is worst-approximable for ``k`` when every proper subpolygon has
a strictly smaller ``phi_k``.  Deciding this exactly means looking at every
proper vertex subset with more than ``k`` vertices; smaller ones have
``phi_k = 0``.  Subsets are visited from the largest size down, so a
blocking subpolygon usually shows up among the first few deletions.
"""
from __future__ import annotations

import itertools
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from ._tables import ErrorTables, tables_for
from .exceptions import PreconditionViolated, SizeLimit, ZeroError
from .generators import Generator, generate
from .geometry import ConvexPolygon, perimeter
from .measures import SLACK, ErrorMeasure, phi
from .optimize import optimal_subpolygon

WORST_MAX_N = 16


@dataclass(frozen=True)
class WorstApproxVerdict:
    """Outcome of :func:`is_worst_approximable`.

    ``max_proper_phi_k`` is exact when ``is_worst`` holds or the check ran
    exhaustively; after an early exit it is the largest value seen, which
    already reaches ``phi_k_P``.
    """

    is_worst: bool
    phi_k_P: float
    max_proper_phi_k: float
    blocking_subpolygon: tuple[int, ...] | None
    subsets_checked: int


def _proper_subsets(n: int, k: int):
    for size in range(n - 1, k, -1):
        yield from itertools.combinations(range(n), size)


def is_worst_approximable(P: ConvexPolygon, measure: ErrorMeasure, k: int,
                          max_n: int = WORST_MAX_N, exhaustive: bool = False) -> WorstApproxVerdict:
    if k < 3:
        raise ValueError(f"k must be at least 3, got {k}")
    measure = ErrorMeasure.parse(measure)
    n = P.n
    if n > max_n:
        raise SizeLimit(f"exhaustive subpolygon check limited to n <= {max_n}, got {n}")
    tables = tables_for(P, measure)
    phi_P, _ = tables.phi_k(k)
    if n <= k or phi_P == 0.0:
        return WorstApproxVerdict(False, phi_P, 0.0, None, 0)

    worst_seen, blocking, checked = 0.0, None, 0
    for R in _proper_subsets(n, k):
        value, _ = ErrorTables.restrict(tables, R).phi_k(k)
        checked += 1
        if value > worst_seen:
            worst_seen = value
        if blocking is None and value >= phi_P - SLACK:
            blocking = R
            if not exhaustive:
                break
    is_worst = blocking is None
    return WorstApproxVerdict(is_worst, phi_P, worst_seen, blocking, checked)


# ---------------------------------------------------------------------------
# family scans


@dataclass(frozen=True)
class ScanConfig:
    k: int
    n_range: tuple[int, int]
    instances: int
    generator: Generator = Generator.RANDOM_CONVEX
    seed: int = 0
    measure: ErrorMeasure = ErrorMeasure.HAUSDORFF

    def __post_init__(self):
        object.__setattr__(self, "generator", Generator.parse(self.generator))
        object.__setattr__(self, "measure", ErrorMeasure.parse(self.measure))
        lo, hi = self.n_range
        if self.k < 3:
            raise ValueError("k must be at least 3")
        if lo < 3 or hi < lo:
            raise ValueError(f"bad n range {self.n_range}")
        if hi > WORST_MAX_N:
            raise SizeLimit(f"n range exceeds exhaustive budget n <= {WORST_MAX_N}")

    def polygon(self, n: int, index: int) -> ConvexPolygon:
        rng = np.random.default_rng([self.seed, n, index])
        return generate(self.generator, n, rng)

    def to_dict(self) -> dict:
        return {"k": self.k, "n_range": list(self.n_range), "instances": self.instances,
                "generator": self.generator.value, "seed": self.seed,
                "measure": self.measure.value}


@dataclass
class ScanOutcome:
    config: ScanConfig
    per_n: dict[int, dict[str, int]] = field(default_factory=dict)
    counterexamples: list[dict] = field(default_factory=list)
    worst: list[tuple[ConvexPolygon, WorstApproxVerdict]] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {"config": self.config.to_dict(),
                "per_n": {str(n): c for n, c in sorted(self.per_n.items())},
                "counterexamples": self.counterexamples}


def _scan_one(args):
    config, n, index = args
    P = config.polygon(n, index)
    return n, index, P, is_worst_approximable(P, config.measure, config.k)


def run_scan(config: ScanConfig, jobs: int = 1) -> ScanOutcome:
    """Check every generated instance; keep worst ones and counterexamples."""
    lo, hi = config.n_range
    tasks = [(config, n, i) for n in range(lo, hi + 1) for i in range(config.instances)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_scan_one, tasks, chunksize=8))
    else:
        results = [_scan_one(t) for t in tasks]
    results.sort(key=lambda r: (r[0], r[1]))

    out = ScanOutcome(config)
    for n, index, P, verdict in results:
        tally = out.per_n.setdefault(n, {"instances": 0, "worst": 0, "counterexamples": 0})
        tally["instances"] += 1
        if not verdict.is_worst:
            continue
        tally["worst"] += 1
        out.worst.append((P, verdict))
        if n > config.k + 1:
            tally["counterexamples"] += 1
            out.counterexamples.append({
                "n": n, "index": index, "k": config.k,
                "measure": config.measure.value,
                "vertices": [list(v) for v in P.vertices],
                "phi_k": verdict.phi_k_P,
                "max_proper_phi_k": verdict.max_proper_phi_k,
            })
    return out


def scan_family(config: ScanConfig, jobs: int = 1) -> list[dict]:
    """Worst-approximable instances with more than k + 1 vertices."""
    return run_scan(config, jobs).counterexamples


# ---------------------------------------------------------------------------
# perimeter bound for (k+1)-gons


@dataclass(frozen=True)
class PerimeterCheck:
    perimeter: float
    bound: float
    holds: bool


def perimeter_bound_check(P: ConvexPolygon, k: int, tol: float = 1e-9) -> PerimeterCheck:
    """Perimeter of ``P`` rescaled to Hausdorff ``phi_k = 1`` against n / sin(pi / n)."""
    n = P.n
    if n != k + 1:
        raise PreconditionViolated(f"expected a {k + 1}-gon, got n = {n}")
    err = optimal_subpolygon(P, ErrorMeasure.HAUSDORFF, k).error
    if err == 0.0:
        raise ZeroError("phi_k is zero; cannot rescale")
    peri = perimeter(P) / err
    bound = n / math.sin(math.pi / n)
    return PerimeterCheck(peri, bound, peri >= bound - tol)


@dataclass(frozen=True)
class EdgeIdentityReport:
    precondition_ok: bool
    delete_one_errors: list[float]
    gammas: list[float]
    gamma_sum: float
    edge_residuals: list[float]
    holds: bool


def edge_length_identity_check(P: ConvexPolygon, tol: float = 1e-9,
                               precondition_tol: float = 5e-3) -> EdgeIdentityReport:
    """Edge lengths against 1 / sin(gamma_i / 2) for an equalized polygon.

    ``gamma_i`` is the turn from diagonal ``v[i-1] v[i+1]`` to diagonal
    ``v[i] v[i+2]``.  The identity needs every delete-one Hausdorff error
    equal to 1; if not, the report says so instead of raising.
    """
    v = P.vertices
    n = P.n
    if n < 4:
        raise PreconditionViolated("need at least four vertices")
    errs = [phi(ErrorMeasure.HAUSDORFF, P, [j for j in range(n) if j != i])[0] for i in range(n)]
    pre_ok = all(abs(e - 1.0) <= precondition_tol for e in errs)
    gammas, residuals = [], []
    for i in range(n):
        a, b = v[i - 1], v[(i + 1) % n]
        c, d = v[i], v[(i + 2) % n]
        ux, uy = b[0] - a[0], b[1] - a[1]
        wx, wy = d[0] - c[0], d[1] - c[1]
        g = math.atan2(ux * wy - uy * wx, ux * wx + uy * wy)
        gammas.append(g)
        residuals.append(abs(math.dist(c, b) - 1.0 / math.sin(g / 2)))
    total = math.fsum(gammas)
    holds = (pre_ok and max(residuals) <= tol and abs(total - 2 * math.pi) <= tol)
    return EdgeIdentityReport(pre_ok, errs, gammas, total, residuals, holds)
