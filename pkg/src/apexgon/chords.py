"""Feasible diagonals, chords, the chord graph, bases and witnesses.

At an error level ``sigma`` a diagonal ``(p, q)`` is feasible when every
vertex strictly between ``p`` and ``q`` (counter-clockwise) has error at
most ``sigma`` against the segment ``pq``.  The chord from ``p`` is the
feasible diagonal of largest cyclic length.  Lengths are counted in
vertex steps, never in Euclidean length.

:func:`audit_structure` rebuilds, for every deleted vertex ``u``, the
``k``-gon made of ``k - 1`` chords plus one base edge, and evaluates the
structural facts that hold for worst-approximable polygons.  It returns
data on any input so it can be used for exploratory scans.
"""
from __future__ import annotations

import warnings
from dataclasses import asdict, dataclass, field
from typing import NamedTuple

import numpy as np

from ._tables import ErrorTables, tables_for
from .exceptions import HypothesisNotEstablished
from .geometry import ConvexPolygon, between
from .measures import ErrorMeasure


class Diagonal(NamedTuple):
    p: int
    q: int

    def length(self, n: int) -> int:
        return (self.q - self.p) % n


@dataclass(frozen=True)
class ChordGraph:
    sigma: float
    successor: tuple[int, ...]
    lengths: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.successor)

    def in_degrees(self) -> list[int]:
        deg = [0] * self.n
        for q in self.successor:
            deg[q] += 1
        return deg


class Base(NamedTuple):
    s: int
    t: int
    witnesses: tuple[int, ...]

    @property
    def witness(self) -> int | None:
        return self.witnesses[0] if len(self.witnesses) == 1 else None


def is_feasible(P: ConvexPolygon, measure: ErrorMeasure, d, sigma: float) -> bool:
    p, q = d
    if p % P.n == q % P.n:
        raise ValueError("a diagonal needs two distinct endpoints")
    return tables_for(P, ErrorMeasure.parse(measure)).feasible(p, q, sigma)


def chord_from(P: ConvexPolygon, measure: ErrorMeasure, p: int, sigma: float) -> Diagonal:
    L = tables_for(P, ErrorMeasure.parse(measure)).chord_lengths(sigma)
    p %= P.n
    return Diagonal(p, (p + int(L[p])) % P.n)


def build_chord_graph(P: ConvexPolygon, measure: ErrorMeasure, sigma: float) -> ChordGraph:
    L = tables_for(P, ErrorMeasure.parse(measure)).chord_lengths(sigma)
    n = P.n
    return ChordGraph(float(sigma),
                      tuple((i + int(L[i])) % n for i in range(n)),
                      tuple(int(x) for x in L))


def find_witnesses(P: ConvexPolygon, measure: ErrorMeasure, s: int, t: int, sigma: float) -> list[int]:
    """Vertices strictly between ``s`` and ``t`` whose error exceeds sigma."""
    if s % P.n == t % P.n:
        raise ValueError("s and t must differ")
    return tables_for(P, ErrorMeasure.parse(measure)).witnesses(s, t, sigma)


# ---------------------------------------------------------------------------
# structural audit


@dataclass
class StructureReport:
    measure: str
    n: int
    k: int
    sigma: float
    established: bool
    phi_k_exceeds_sigma: bool
    successor: list[int]
    in_degrees: list[int]
    chord_length_m: int | None
    bases: list[tuple[int, int, list[int]]]
    base_length: int | None
    n_eq_km_plus_1: bool
    t_bijective: bool
    nested_base_violations: list[tuple[tuple[int, int], tuple[int, int]]]
    near_witness_holds: bool
    r_shift: int | None = None
    r_orientation: str | None = None
    three_r_gt_m_plus_1: bool | None = None
    base_order_violations: list = field(default_factory=list)

    @property
    def degrees_one(self) -> bool:
        return all(d == 1 for d in self.in_degrees)

    @property
    def all_hold(self) -> bool:
        ok = (self.degrees_one
              and self.chord_length_m is not None
              and self.base_length == self.chord_length_m + 1
              and self.n_eq_km_plus_1
              and self.t_bijective
              and not self.nested_base_violations
              and self.near_witness_holds)
        if self.measure == ErrorMeasure.HAUSDORFF.value:
            ok = ok and (self.r_shift is not None
                         and 0 < self.r_shift <= self.chord_length_m
                         and bool(self.three_r_gt_m_plus_1)
                         and not self.base_order_violations)
        return ok

    def to_dict(self) -> dict:
        d = asdict(self)
        d["degrees_one"] = self.degrees_one
        d["all_hold"] = self.all_hold
        return d


def _bases(tables: ErrorTables, L: np.ndarray, k: int, sigma: float) -> list[Base | None]:
    """Base of the k-gon reached by walking k-1 chords from every vertex t."""
    n = tables.n
    out: list[Base | None] = []
    for t in range(n):
        cur, travelled = t, 0
        for _ in range(k - 1):
            travelled += int(L[cur])
            cur = (cur + int(L[cur])) % n
        if travelled >= n:
            out.append(None)
            continue
        out.append(Base(cur, t, tuple(tables.witnesses(cur, t, sigma))))
    return out


def _shift_map(bases: list[Base | None], n: int) -> dict[int, Base] | None:
    """Witness -> base, when every base has a unique, distinct witness."""
    if any(b is None or b.witness is None for b in bases):
        return None
    by_witness = {b.witness: b for b in bases}
    if len(by_witness) != n:
        return None
    return by_witness


def _uniform(values) -> int | None:
    vals = set(values)
    return vals.pop() if len(vals) == 1 else None


def _r_shift(by_witness: dict[int, Base], n: int) -> int | None:
    return _uniform((u - b.s) % n for u, b in by_witness.items())


def audit_structure(P: ConvexPolygon, measure: ErrorMeasure, k: int, sigma: float,
                    established: bool = False) -> StructureReport:
    """Evaluate the chord-graph and base structure of ``P`` at level ``sigma``.

    ``established`` tells the audit that the caller has verified the
    worst-approximable regime (``phi_k(P) > sigma`` and ``phi_k(R) <= sigma``
    for every proper subpolygon ``R``); otherwise a
    :class:`HypothesisNotEstablished` warning is issued and the report is
    exploratory.
    """
    if k < 3:
        raise ValueError("structural audit needs k >= 3")
    measure = ErrorMeasure.parse(measure)
    if not established:
        warnings.warn("audit run without an established worst-approximable context",
                      HypothesisNotEstablished, stacklevel=2)
    tables = tables_for(P, measure)
    n = P.n
    L = tables.chord_lengths(sigma)
    succ = [(i + int(L[i])) % n for i in range(n)]
    in_deg = [0] * n
    for q in succ:
        in_deg[q] += 1
    m = _uniform(int(x) for x in L)

    bases = _bases(tables, L, k, sigma)
    valid = [b for b in bases if b is not None]
    base_len = _uniform((b.t - b.s) % n for b in valid) if len(valid) == n else None
    by_witness = _shift_map(bases, n)

    nested = []
    for b1 in valid:
        span = (b1.t - b1.s) % n
        for b2 in valid:
            if b2[:2] == b1[:2]:
                continue
            o_s = (b2.s - b1.s) % n
            o_t = (b2.t - b1.s) % n
            if o_s < o_t <= span:
                nested.append(((b1.s, b1.t), (b2.s, b2.t)))

    if n <= k + 1:
        # the near-witness statement only speaks about n > k + 1
        near = True
    elif m is None or by_witness is None:
        near = False
    else:
        near = True
        for i in range(n):
            w1 = tables.witnesses(i - m - 1, i, sigma)
            w2 = tables.witnesses(i, i + m + 1, sigma)
            if len(w1) != 1 or len(w2) != 1:
                near = False
                break
            b = by_witness[i]
            if not (between(b.s, w1[0], b.t, n) or between(b.s, w2[0], b.t, n)):
                near = False
                break

    report = StructureReport(
        measure=measure.value, n=n, k=k, sigma=float(sigma), established=established,
        phi_k_exceeds_sigma=tables.cover(k, sigma) is None,
        successor=succ, in_degrees=in_deg, chord_length_m=m,
        bases=[(b.s, b.t, list(b.witnesses)) for b in valid],
        base_length=base_len,
        n_eq_km_plus_1=m is not None and n == k * m + 1,
        t_bijective=by_witness is not None,
        nested_base_violations=nested,
        near_witness_holds=near,
    )
    if measure is ErrorMeasure.HAUSDORFF:
        _audit_hausdorff(report, P, tables, by_witness, k, sigma)
    return report


def _audit_hausdorff(report: StructureReport, P, tables, by_witness, k, sigma):
    n, m = report.n, report.chord_length_m
    if by_witness is not None:
        wit = [b for b in by_witness.values()]
        for b1 in wit:
            for b2 in wit:
                if b1 is b2:
                    continue
                # forbidden order s < s' < w' < w < t < t'
                seq = [b2.s, b2.witness, b1.witness, b1.t, b2.t]
                offs = [(x - b1.s) % n for x in seq]
                if 0 < offs[0] and all(a < b for a, b in zip(offs, offs[1:])):
                    report.base_order_violations.append(
                        ((b1.s, b1.t, b1.witness), (b2.s, b2.t, b2.witness)))
        r = _r_shift(by_witness, n)
    else:
        r = None
    if r is None or m is None:
        return
    orientation = "original"
    if r > m / 2:
        # mirror image: the roles of s and t swap
        Pm = P.mirrored()
        tm = tables_for(Pm, ErrorMeasure.HAUSDORFF)
        Lm = tm.chord_lengths(sigma)
        bm = _shift_map(_bases(tm, Lm, k, sigma), n)
        rm = _r_shift(bm, n) if bm is not None else None
        if rm is not None:
            r, orientation = rm, "mirrored"
    report.r_shift = r
    report.r_orientation = orientation
    report.three_r_gt_m_plus_1 = 3 * r > m + 1
