"""Best k-vertex subpolygon approximation.

Two independent routes compute ``phi_k(P)``, the smallest error of a
subpolygon with at most ``k`` vertices:

* :func:`brute_force_opt` evaluates every ``k``-subset with the bracketing
  rule, vectorised over subsets;
* :func:`optimal_subpolygon` binary-searches the sorted candidate error
  values, testing each level with a greedy chord-jumping cover.

The optimum is always one of the candidate values, so both routes land on
the same float.
"""
from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass

import numpy as np

from ._tables import ErrorTables, tables_for
from .exceptions import SizeLimit
from .geometry import ConvexPolygon
from .measures import ErrorMeasure, SLACK

BRUTE_FORCE_MAX_N = 18
SEARCH_MAX_N = 160


class Method(enum.Enum):
    BRUTE_FORCE = "brute"
    CANDIDATE_SEARCH = "search"


@dataclass(frozen=True)
class ApproxResult:
    chosen: tuple[int, ...]
    error: float
    witness: int | None
    method: Method
    measure: ErrorMeasure

    @property
    def aperture(self) -> float | None:
        if self.measure is ErrorMeasure.APERTURE_COMPLEMENT:
            return math.pi - self.error
        return None

    def to_dict(self) -> dict:
        d = {"chosen": list(self.chosen), "error": self.error,
             "witness": self.witness, "method": self.method.value,
             "measure": self.measure.value}
        if self.aperture is not None:
            d["aperture"] = self.aperture
            d["aperture_degrees"] = math.degrees(self.aperture)
        return d


def _check_k(k: int):
    if k < 3:
        raise ValueError(f"k must be at least 3, got {k}")


def candidate_errors(P: ConvexPolygon, measure: ErrorMeasure) -> np.ndarray:
    """Sorted distinct ``psi(v_b; v_a, v_c)`` over triples ``a < b < c``.

    Only triples whose outer pair spans between 2 and ``n - 2`` steps are
    used: those are the pairs that can be consecutive in a subpolygon with
    at least three vertices.  Values closer than 1e-12 are merged.
    """
    return tables_for(P, ErrorMeasure.parse(measure)).candidates.copy()


def feasible_cover(P: ConvexPolygon, measure: ErrorMeasure, k: int, sigma: float) -> tuple[int, ...] | None:
    """A subset of at most ``k`` vertices with error <= sigma, or None."""
    _check_k(k)
    return tables_for(P, ErrorMeasure.parse(measure)).cover(k, sigma)


def greedy_wrap(P: ConvexPolygon, measure: ErrorMeasure, start: int, sigma: float) -> list[int]:
    """Vertices visited by chord jumps from ``start`` until the loop closes."""
    return tables_for(P, ErrorMeasure.parse(measure)).greedy_wrap(start % P.n, sigma)


def _subset_errors(psi: np.ndarray, combos: np.ndarray) -> np.ndarray:
    """Bracketing-rule error of every row of ``combos`` (sorted index sets)."""
    n = psi.shape[0]
    k = combos.shape[1]
    verts = np.arange(n)
    pos = (combos[:, :, None] < verts[None, None, :]).sum(axis=1)  # (C, n)
    rows = np.arange(len(combos))[:, None]
    s = combos[rows, (pos - 1) % k]
    t = combos[rows, pos % k]
    chosen = np.zeros((len(combos), n), dtype=bool)
    chosen[rows, combos] = True
    vals = psi[verts[None, :], s, t]
    vals = np.where(chosen, 0.0, vals)
    return vals.max(axis=1)


def brute_force_opt(P: ConvexPolygon, measure: ErrorMeasure, k: int,
                    max_n: int = BRUTE_FORCE_MAX_N) -> ApproxResult:
    """Exact optimum by enumerating every ``min(k, n)``-subset.

    Ties within 1e-12 go to the lexicographically smallest subset.
    """
    _check_k(k)
    measure = ErrorMeasure.parse(measure)
    n = P.n
    if n <= k:
        return ApproxResult(tuple(range(n)), 0.0, None, Method.BRUTE_FORCE, measure)
    if n > max_n:
        raise SizeLimit(f"brute force limited to n <= {max_n}, got n = {n}")
    tables = tables_for(P, measure)
    # chunks keep the (subsets x n) work arrays small near the size limit
    it = itertools.combinations(range(n), k)
    errs = []
    while chunk := list(itertools.islice(it, 8192)):
        errs.append(_subset_errors(tables.psi, np.array(chunk, dtype=int)))
    errs = np.concatenate(errs)
    first = int(np.flatnonzero(errs <= errs.min() + SLACK)[0])
    best = next(itertools.islice(itertools.combinations(range(n), k), first, None))
    err, witness = tables.phi(best)
    return ApproxResult(best, err, witness, Method.BRUTE_FORCE, measure)


def optimal_subpolygon(P: ConvexPolygon, measure: ErrorMeasure, k: int,
                       max_n: int = SEARCH_MAX_N) -> ApproxResult:
    """Optimum by binary search over candidate errors with greedy covers."""
    _check_k(k)
    measure = ErrorMeasure.parse(measure)
    n = P.n
    if n <= k:
        return ApproxResult(tuple(range(n)), 0.0, None, Method.CANDIDATE_SEARCH, measure)
    if n > max_n:
        raise SizeLimit(f"candidate search limited to n <= {max_n}, got n = {n}")
    tables = tables_for(P, measure)
    return _search(tables, k, measure)


def _search(tables: ErrorTables, k: int, measure: ErrorMeasure) -> ApproxResult:
    _, chosen = tables.phi_k(k)
    err, witness = tables.phi(chosen)
    return ApproxResult(tuple(chosen), err, witness, Method.CANDIDATE_SEARCH, measure)


def phi_k(P: ConvexPolygon, measure: ErrorMeasure, k: int) -> float:
    return optimal_subpolygon(P, measure, k).error
