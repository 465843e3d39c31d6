"""Precomputed error tables for one polygon (or one subpolygon of it).

Everything combinatorial in the package (feasibility, chords, greedy covers,
the candidate search for the optimum) reads from the same ``psi`` table, so
the optimiser and the brute-force oracle compare identical floats.
"""
from __future__ import annotations

from functools import cached_property, lru_cache

import numpy as np

from .geometry import ConvexPolygon
from .measures import SLACK, ErrorMeasure, between_mask, diagonal_errors, psi_table

MERGE_TOL = 1e-12


class ErrorTables:
    """psi values, diagonal errors and cover search for an ``n``-gon."""

    def __init__(self, table: np.ndarray):
        self.psi = table
        self.n = table.shape[0]
        self.D = diagonal_errors(table)
        r = np.arange(self.n)
        # by_len[p, l] = D[p, p + l]
        self.by_len = self.D[r[:, None], (r[:, None] + r[None, :]) % self.n]

    @classmethod
    def restrict(cls, parent: "ErrorTables", indices) -> "ErrorTables":
        idx = np.asarray(indices, dtype=int)
        return cls(parent.psi[np.ix_(idx, idx, idx)])

    @cached_property
    def candidates(self) -> np.ndarray:
        """Sorted distinct psi values of triples usable by >= 3-vertex covers."""
        n = self.n
        mask = between_mask(n)
        r = np.arange(n)
        span = (r[None, :] - r[:, None]) % n
        mask = mask & ((span >= 2) & (span <= n - 2))[:, :, None]
        vals = np.transpose(self.psi, (1, 2, 0))[mask]
        if vals.size == 0:
            return vals
        u = np.unique(vals)
        keep = np.concatenate(([True], np.diff(u) > MERGE_TOL))
        return u[keep]

    def feasible(self, p: int, q: int, sigma: float) -> bool:
        return bool(self.D[p % self.n, q % self.n] <= sigma + SLACK)

    def chord_lengths(self, sigma: float) -> np.ndarray:
        """Longest feasible cyclic length from every vertex (always >= 1)."""
        ok = self.by_len <= sigma + SLACK
        ok[:, 0] = False
        ok[:, 1] = True
        lens = np.where(ok, np.arange(self.n)[None, :], 0)
        return lens.max(axis=1)

    def witnesses(self, s: int, t: int, sigma: float) -> list[int]:
        n = self.n
        s, t = s % n, t % n
        gap = (t - s) % n or n
        out = []
        for step in range(1, gap):
            v = (s + step) % n
            if self.psi[v, s, t] > sigma + SLACK:
                out.append(v)
        return out

    def greedy_wrap(self, start: int, sigma: float, lengths=None, limit=None) -> list[int] | None:
        """Jump along chords from ``start`` until the walk can close.

        Returns the visited vertices, or ``None`` once more than ``limit``
        vertices would be needed.
        """
        n = self.n
        L = self.chord_lengths(sigma) if lengths is None else lengths
        cur, travelled = start, 0
        verts = [start]
        while True:
            step = int(L[cur])
            if travelled + step >= n:
                assert self.D[cur, start] <= sigma + SLACK, "feasibility not prefix-closed"
                return verts
            cur = (cur + step) % n
            travelled += step
            verts.append(cur)
            if limit is not None and len(verts) > limit:
                return None

    def cover(self, k: int, sigma: float) -> tuple[int, ...] | None:
        """Lexicographically smallest greedy cover, padded to ``min(k, n)`` vertices."""
        n = self.n
        L = self.chord_lengths(sigma)
        best = None
        for start in range(n):
            verts = self.greedy_wrap(start, sigma, L, limit=k)
            if verts is None:
                continue
            chosen = set(verts)
            # pad with the lowest free indices; by monotonicity of psi a
            # larger subpolygon never has a larger error
            fill = 0
            while len(chosen) < min(k, n):
                if fill not in chosen:
                    chosen.add(fill)
                fill += 1
            cand = tuple(sorted(chosen))
            if best is None or cand < best:
                best = cand
        return best

    def phi(self, chosen) -> tuple[float, int | None]:
        """Bracketing-rule error of ``chosen`` read from the psi table."""
        n = self.n
        idx = sorted(chosen)
        best, witness = 0.0, None
        for j, s in enumerate(idx):
            t = idx[(j + 1) % len(idx)]
            gap = (t - s) % n or n
            for step in range(1, gap):
                v = (s + step) % n
                e = float(self.psi[v, s, t])
                if witness is None or e > best:
                    best, witness = e, v
        return best, witness

    def phi_k(self, k: int) -> tuple[float, tuple[int, ...]]:
        """Optimal error and cover by binary search over candidate values."""
        n = self.n
        if n <= k:
            return 0.0, tuple(range(n))
        cands = self.candidates
        lo, hi = 0, len(cands) - 1
        best = self.cover(k, float(cands[hi]))
        if best is None:
            raise RuntimeError("largest candidate admits no cover")
        while lo < hi:
            mid = (lo + hi) // 2
            c = self.cover(k, float(cands[mid]))
            if c is None:
                lo = mid + 1
            else:
                hi, best = mid, c
        return self.phi(best)[0], best


@lru_cache(maxsize=128)
def tables_for(P: ConvexPolygon, measure: ErrorMeasure) -> ErrorTables:
    return ErrorTables(psi_table(P, measure))
